#ifndef QREP_CATALOGUE_HPP
#define QREP_CATALOGUE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrep/presentation.hpp"

namespace qrep {

/// Canonical indecomposable families. TIIIs/TIVs are the starred (dual)
/// partners of TIII/TIV.
enum class DType { T0, TI, TII, TIII, TIIIs, TIV, TIVs };

/// Stripe-swap orientation of a canonical form. Only some orientations are
/// canonical per type: swaps that fold back onto another orientation via
/// explicit base changes are excluded:
///   T0           -> {e}                       (swaps transform the polynomial)
///   TI, TII      -> all four                  (the four classes are distinct)
///   TIII, TIIIs  -> {e, s12}                  (s34 folds via reversals)
///   TIV, TIVs    -> {e, s34}                  (s12 folds via reversals)
enum class Variant { e, s12, s34, s12s34 };

std::string dtype_name(DType t);
std::string variant_name(Variant v);
std::vector<Variant> variants_of(DType t);
SymmetryElem variant_sym(Variant v);
Variant variant_of_sym(const SymmetryElem& s);  // requires a pure stripe swap

/// Label of one indecomposable: family, size, orientation, and for T0 the
/// primary polynomial p with exponent s (n = s deg p).
struct Descriptor {
    DType type = DType::TI;
    int n = 1;
    Poly p;                     // T0 only
    int s = 1;                  // T0 only
    Variant variant = Variant::e;
    bool primary_exact = true;  // T0 over Q: false when only the invariant factor is known

    static Descriptor plain(DType t, int n, Variant v = Variant::e);
    static Descriptor t0(const Poly& p, int s, bool primary_exact = true);

    std::string to_string() const;
};

bool descriptor_eq(const Descriptor& a, const Descriptor& b);
bool descriptor_less(const Descriptor& a, const Descriptor& b);

void validate_descriptor(const Descriptor& d, const FieldSpec& f);

DimVector dim_of(const Descriptor& d);

/// The catalogue matrix presentation of a descriptor, with its orientation
/// applied as a stripe swap of the base form.
Presentation generate(const Descriptor& d, const FieldSpec& f);

/// Endomorphism ring shape: k[t]/(modulus) or the base field itself.
struct RingDescriptor {
    enum class Kind { quotient_poly, base_field };
    Kind kind = Kind::base_field;
    Poly modulus;
    int dimension(const FieldSpec& f) const;
    std::string to_string() const;
};
RingDescriptor endo_ring_of(const Descriptor& d, const FieldSpec& f);

enum class Mark { dash, bar };

/// Two-symbol block diagram determining a non-T0 indecomposable together
/// with its size; blocks indexed 0..3 as 11, 12, 21, 22.
struct GraphicalInvariant {
    DType type = DType::TI;
    int n = 1;
    std::vector<std::pair<int, Mark>> marks;
};

GraphicalInvariant graphical_of(const Descriptor& d);

/// Swaps the two mark symbols: the diagram of the dual type.
GraphicalInvariant dual_diagram(const GraphicalInvariant& g);
DType diagram_type(const std::vector<std::pair<int, Mark>>& marks);

/// Rebuilds a presentation of the given type and size by walking the
/// spiral placement over the signed grid; the output is equivalent (not
/// always equal) to generate(). Requires n >= 1.
Presentation from_graphical(const GraphicalInvariant& g, const FieldSpec& f);

/// Extension correspondence: the class obtained by attaching one coupled
/// unit to the canonical form (TI->TII same n, TII->TI at n+1, TIII->TIV
/// same n, TIV->TIII at n+1); orientation carried through and refolded.
Descriptor restore(const Descriptor& d);

/// Image of a canonical class under a symmetry of the quiver.
Descriptor symmetry_act(const SymmetryElem& s, const Descriptor& d);

/// Invertible morphism between equivalent presentations, as a stripe
/// witness; searches the hom space (intended for indecomposables).
std::optional<PresWitness> iso_witness(const Presentation& x, const Presentation& y);

/// desc' = symmetry_act(s, d) together with an exact witness taking
/// apply_symmetry(s, generate(d)) to generate(desc').
std::pair<Descriptor, PresWitness> symmetry_act_witness(const SymmetryElem& s,
                                                        const Descriptor& d,
                                                        const FieldSpec& f);

}  // namespace qrep

#endif
