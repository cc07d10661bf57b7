#ifndef QREP_CANONICAL_HPP
#define QREP_CANONICAL_HPP

#include <utility>
#include <vector>

#include "qrep/matrix.hpp"

namespace qrep {

/// Monic least-degree annihilator; the unit polynomial for order 0.
Poly minimal_polynomial(const Mat& m);

/// Local annihilator of a column vector v under m.
Poly local_annihilator(const Mat& m, const Mat& v);

/// Similarity invariants of a square matrix.
struct SimilarityClass {
    std::vector<Poly> invariant_factors;            // f_1 | f_2 | ... | f_k
    std::vector<std::pair<Poly, int>> primary_parts;  // (p, s), canonical order
    bool has_primary = false;                         // false over the rationals
};
SimilarityClass similarity_class(const Mat& m);

/// P * m * Q = companion(f_1) (+) ... (+) companion(f_k), ascending
/// divisibility, Q = P^{-1}.
struct InvariantFactorDecomposition {
    std::vector<Poly> factors;
    TransformWitness w;
};
InvariantFactorDecomposition invariant_factor_decompose(const Mat& m);

/// P * m * Q = companion(p_1^{s_1}) (+) ... , parts sorted by
/// (deg p, coefficients, s). Prime fields only.
struct PrimaryDecomposition {
    std::vector<std::pair<Poly, int>> parts;
    TransformWitness w;
};
PrimaryDecomposition primary_decompose(const Mat& m);

/// P * m * Q = nilpotent_block (+) invertible_block, Q = P^{-1}.
struct FittingDecomposition {
    Mat nilpotent;
    Mat invertible;
    TransformWitness w;
};
FittingDecomposition fitting_decompose(const Mat& m);

}  // namespace qrep

#endif
