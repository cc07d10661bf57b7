#ifndef QREP_KRONECKER_HPP
#define QREP_KRONECKER_HPP

#include "qrep/decompose.hpp"

namespace qrep {

/// Two maps with a common domain and codomain, classified up to
/// simultaneous row and column changes.
struct Pencil {
    Mat A, C;
    Pencil(Mat a, Mat c);
};

/// Two maps in opposite directions; (A, D) ~ (X A Y, Y^-1 D X^-1).
struct ContraPair {
    Mat A, D;
    ContraPair(Mat a, Mat d);
};

enum class PencilTag {
    t0,       // (I_n, F) with F a companion cell, n >= 1
    jordan_right,  // (I_n, J_n(0)), n >= 1
    jordan_left,   // (J_n(0), I_n), n >= 1
    down_up,  // (I_down, I_up), sizes (n+1) x n, n >= 0
    right_left,  // (I_right, I_left), sizes n x (n+1), n >= 0
};

struct PencilBlock {
    PencilTag tag = PencilTag::t0;
    int n = 0;
    Poly p;  // t0 only
    int s = 1;
};

enum class ContraTag {
    t0,           // (I_n, F-related), n >= 1
    jordan_in_a,  // (J_n(0), I_n), n >= 1
    jordan_in_d,  // (I_n, J_n(0)), n >= 1
    up_right,     // (I_up, I_right), n >= 0
    right_up,     // (I_right, I_up), n >= 0
};

struct ContraBlock {
    ContraTag tag = ContraTag::t0;
    int n = 0;
    Poly p;
    int s = 1;
};

/// dims (m, n, n, n): beta and delta become identities.
Presentation embed_kronecker(const Pencil& p);
/// dims (m, n, n, m): beta and gamma become identities.
Presentation embed_contragredient(const ContraPair& c);

std::vector<PencilBlock> kronecker_decompose(const Pencil& p);
std::vector<ContraBlock> contragredient_decompose(const ContraPair& c);

/// Canonical pair of matrices for a block (used to rebuild pencils/pairs).
Pencil pencil_of_block(const PencilBlock& b, const FieldSpec& f);
ContraPair contra_of_block(const ContraBlock& b, const FieldSpec& f);

bool pencil_block_eq(const PencilBlock& a, const PencilBlock& b);
bool contra_block_eq(const ContraBlock& a, const ContraBlock& b);
std::string pencil_block_name(const PencilBlock& b);
std::string contra_block_name(const ContraBlock& b);

}  // namespace qrep

#endif
