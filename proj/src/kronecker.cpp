#include "qrep/kronecker.hpp"

#include <algorithm>

namespace qrep {

Pencil::Pencil(Mat a, Mat c) : A(std::move(a)), C(std::move(c)) {
    if (A.field() != C.field() || A.rows() != C.rows() || A.cols() != C.cols())
        throw std::invalid_argument("a pencil needs two equal-shaped matrices over one field");
}

ContraPair::ContraPair(Mat a, Mat d) : A(std::move(a)), D(std::move(d)) {
    if (A.field() != D.field() || A.rows() != D.cols() || A.cols() != D.rows())
        throw std::invalid_argument("a contragredient pair needs transposed shapes");
}

Presentation embed_kronecker(const Pencil& p) {
    const FieldSpec& f = p.A.field();
    int n = p.A.cols();
    return Presentation(f, p.A, Mat::identity(f, n), p.C, Mat::identity(f, n));
}

Presentation embed_contragredient(const ContraPair& c) {
    const FieldSpec& f = c.A.field();
    int m = c.A.rows(), n = c.A.cols();
    return Presentation(f, c.A, Mat::identity(f, n), Mat::identity(f, m), c.D);
}

namespace {

[[noreturn]] void foreign_summand(const Descriptor& d) {
    throw std::logic_error("summand outside the embedded family: " + d.to_string());
}

}  // namespace

std::vector<PencilBlock> kronecker_decompose(const Pencil& p) {
    if (!p.A.field().is_prime_field())
        throw std::invalid_argument("pencil classification needs a prime field");
    Decomposition dec = decompose(embed_kronecker(p), false);
    std::vector<PencilBlock> out;
    for (const Descriptor& d : dec.expanded()) {
        PencilBlock b;
        b.n = d.n;
        if (d.type == DType::T0 && d.variant == Variant::e) {
            b.tag = PencilTag::t0;
            b.p = d.p;
            b.s = d.s;
        } else if (d.type == DType::TI && d.variant == Variant::e) {
            b.tag = PencilTag::jordan_right;
        } else if (d.type == DType::TI && d.variant == Variant::s34) {
            b.tag = PencilTag::jordan_left;
        } else if (d.type == DType::TIII && d.variant == Variant::e) {
            b.tag = PencilTag::down_up;
        } else if (d.type == DType::TIIIs && d.variant == Variant::e) {
            b.tag = PencilTag::right_left;
        } else {
            foreign_summand(d);
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<ContraBlock> contragredient_decompose(const ContraPair& c) {
    if (!c.A.field().is_prime_field())
        throw std::invalid_argument("contragredient classification needs a prime field");
    Decomposition dec = decompose(embed_contragredient(c), false);
    std::vector<ContraBlock> out;
    for (const Descriptor& d : dec.expanded()) {
        ContraBlock b;
        b.n = d.n;
        if (d.type == DType::T0 && d.variant == Variant::e) {
            // the embedding puts the identity in the gamma slot, so the
            // classified cell is inverse to the pair's companion matrix
            b.tag = ContraTag::t0;
            b.p = reciprocal_poly(d.p);
            b.s = d.s;
        } else if (d.type == DType::TI && d.variant == Variant::s34) {
            b.tag = ContraTag::jordan_in_a;
        } else if (d.type == DType::TI && d.variant == Variant::s12) {
            b.tag = ContraTag::jordan_in_d;
        } else if (d.type == DType::TII && d.variant == Variant::s34) {
            b.tag = ContraTag::up_right;
        } else if (d.type == DType::TII && d.variant == Variant::s12) {
            b.tag = ContraTag::right_up;
        } else {
            foreign_summand(d);
        }
        out.push_back(std::move(b));
    }
    return out;
}

Pencil pencil_of_block(const PencilBlock& b, const FieldSpec& f) {
    switch (b.tag) {
        case PencilTag::t0: return {Mat::identity(f, b.n), build_frobenius(b.p, b.s)};
        case PencilTag::jordan_right: return {Mat::identity(f, b.n), build_jordan(f, b.n, true)};
        case PencilTag::jordan_left: return {build_jordan(f, b.n, true), Mat::identity(f, b.n)};
        case PencilTag::down_up: return {build_i_down(f, b.n), build_i_up(f, b.n)};
        case PencilTag::right_left: return {build_i_right(f, b.n), build_i_left(f, b.n)};
    }
    throw std::invalid_argument("bad pencil block");
}

ContraPair contra_of_block(const ContraBlock& b, const FieldSpec& f) {
    switch (b.tag) {
        case ContraTag::t0: return {Mat::identity(f, b.n), build_frobenius(b.p, b.s)};
        case ContraTag::jordan_in_a: return {build_jordan(f, b.n, true), Mat::identity(f, b.n)};
        case ContraTag::jordan_in_d: return {Mat::identity(f, b.n), build_jordan(f, b.n, true)};
        case ContraTag::up_right: return {build_i_up(f, b.n), build_i_right(f, b.n)};
        case ContraTag::right_up: return {build_i_right(f, b.n), build_i_up(f, b.n)};
    }
    throw std::invalid_argument("bad contragredient block");
}

bool pencil_block_eq(const PencilBlock& a, const PencilBlock& b) {
    if (a.tag != b.tag || a.n != b.n) return false;
    if (a.tag != PencilTag::t0) return true;
    return a.p == b.p && a.s == b.s;
}

bool contra_block_eq(const ContraBlock& a, const ContraBlock& b) {
    if (a.tag != b.tag || a.n != b.n) return false;
    if (a.tag != ContraTag::t0) return true;
    return a.p == b.p && a.s == b.s;
}

std::string pencil_block_name(const PencilBlock& b) {
    switch (b.tag) {
        case PencilTag::t0:
            return "type0(p=" + b.p.to_string() + ",s=" + std::to_string(b.s) + ")";
        case PencilTag::jordan_right: return "typeI(I,J) n=" + std::to_string(b.n);
        case PencilTag::jordan_left: return "typeI(J,I) n=" + std::to_string(b.n);
        case PencilTag::down_up: return "typeII(down,up) n=" + std::to_string(b.n);
        case PencilTag::right_left: return "typeIII(right,left) n=" + std::to_string(b.n);
    }
    return "?";
}

std::string contra_block_name(const ContraBlock& b) {
    switch (b.tag) {
        case ContraTag::t0:
            return "type0(p=" + b.p.to_string() + ",s=" + std::to_string(b.s) + ")";
        case ContraTag::jordan_in_a: return "typeI(J,I) n=" + std::to_string(b.n);
        case ContraTag::jordan_in_d: return "typeI(I,J) n=" + std::to_string(b.n);
        case ContraTag::up_right: return "typeII(up,right) n=" + std::to_string(b.n);
        case ContraTag::right_up: return "typeIII(right,up) n=" + std::to_string(b.n);
    }
    return "?";
}

}  // namespace qrep
