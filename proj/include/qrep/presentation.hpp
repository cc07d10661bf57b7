#ifndef QREP_PRESENTATION_HPP
#define QREP_PRESENTATION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "qrep/matrix.hpp"

namespace qrep {

struct DimVector {
    std::array<int, 4> d{0, 0, 0, 0};

    DimVector() = default;
    DimVector(int d1, int d2, int d3, int d4) : d{d1, d2, d3, d4} {}

    int operator[](int i) const { return d[i]; }
    int& operator[](int i) { return d[i]; }
    int total() const { return d[0] + d[1] + d[2] + d[3]; }
    bool is_zero() const { return total() == 0; }

    friend DimVector operator+(const DimVector& a, const DimVector& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    }
    bool operator==(const DimVector& o) const { return d == o.d; }
    bool operator!=(const DimVector& o) const { return !(*this == o); }
    std::string to_string() const;
};

/// Four operator blocks of a representation of the four-vertex quiver:
/// alpha: 3->1, beta: 3->2, gamma: 4->1, delta: 4->2. In the two-by-two
/// stripe picture A sits at (1,3), G at (1,4), B at (2,3), D at (2,4).
struct Presentation {
    FieldSpec field;
    Mat A, B, G, D;

    Presentation() : field(FieldSpec::gf(2)) {}
    Presentation(const FieldSpec& f, Mat a, Mat b, Mat g, Mat dd);

    static Presentation zero(const FieldSpec& f, const DimVector& d);

    DimVector dims() const {
        return {A.rows(), B.rows(), A.cols(), G.cols()};
    }
    void validate() const;

    bool operator==(const Presentation& o) const {
        return field == o.field && A == o.A && B == o.B && G == o.G && D == o.D;
    }
    bool operator!=(const Presentation& o) const { return !(*this == o); }

    std::string to_string() const;  // the stripe picture as a text grid
};

long long tits_q(const DimVector& d);

enum class RootClass { real, imaginary, none };
RootClass root_class(const DimVector& d);

Presentation direct_sum(const Presentation& v, const Presentation& w);

/// Element of the order-8 symmetry group: an optional transpose (duality
/// realized inside the category via the vertex relabeling 1234 -> 3412)
/// followed by optional vertical and horizontal stripe swaps.
struct SymmetryElem {
    bool swap12 = false;
    bool swap34 = false;
    bool transpose = false;

    static SymmetryElem identity() { return {}; }
    static SymmetryElem s12() { return {true, false, false}; }
    static SymmetryElem s34() { return {false, true, false}; }
    static SymmetryElem s12s34() { return {true, true, false}; }
    static SymmetryElem tr() { return {false, false, true}; }

    /// group composition: (a then b) == compose(b, a), i.e. b after a
    friend SymmetryElem compose(const SymmetryElem& b, const SymmetryElem& a);
    SymmetryElem inverse() const;
    bool is_identity() const { return !swap12 && !swap34 && !transpose; }
    bool operator==(const SymmetryElem& o) const {
        return swap12 == o.swap12 && swap34 == o.swap34 && transpose == o.transpose;
    }
    std::string to_string() const;

    static std::array<SymmetryElem, 8> all();
    static std::array<SymmetryElem, 4> swaps();  // the stripe-swap subgroup
};

Presentation apply_symmetry(const SymmetryElem& s, const Presentation& v);

/// Morphism from V to W: four maps intertwining the operator blocks,
/// L1 A_V = A_W L3, L2 B_V = B_W L3, L1 G_V = G_W L4, L2 D_V = D_W L4.
struct Morphism {
    Mat L1, L2, L3, L4;
};

bool morphism_valid(const Presentation& v, const Presentation& w, const Morphism& m);
Morphism identity_morphism(const Presentation& v);
Morphism compose(const Morphism& second, const Morphism& first);
Morphism morphism_add(const Morphism& a, const Morphism& b);
Morphism morphism_scale(const Scalar& s, const Morphism& a);

/// Basis of Hom(V, W), solved as one exact linear system with the variable
/// order L1, L2, L3, L4 (row-major within each block); basis vectors come
/// from the reduced echelon form of the stacked system.
std::vector<Morphism> hom_space(const Presentation& v, const Presentation& w);

/// Applies `steps` pseudo-random admissible row/column operations drawn
/// from a seeded generator; the result is equivalent to the input.
Presentation random_admissible_shuffle(const Presentation& v, std::uint64_t seed, int steps);

/// Equivalence data: P1, P2 act on the two horizontal stripes, Q3, Q4 on
/// the two vertical ones; apply() gives (P1 A Q3, P2 B Q3, P1 G Q4, P2 D Q4).
struct PresWitness {
    Mat P1, P2, Q3, Q4;

    static PresWitness identity(const FieldSpec& f, const DimVector& d);
    Presentation apply(const Presentation& v) const;
    /// witness of "first v-transform, then this": (*this) o (inner)
    PresWitness after(const PresWitness& inner) const;
};

}  // namespace qrep

#endif
