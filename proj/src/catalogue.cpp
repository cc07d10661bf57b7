#include "qrep/catalogue.hpp"

#include <algorithm>

namespace qrep {

std::string dtype_name(DType t) {
    switch (t) {
        case DType::T0: return "0";
        case DType::TI: return "I";
        case DType::TII: return "II";
        case DType::TIII: return "III";
        case DType::TIIIs: return "III*";
        case DType::TIV: return "IV";
        case DType::TIVs: return "IV*";
    }
    return "?";
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::e: return "e";
        case Variant::s12: return "swap12";
        case Variant::s34: return "swap34";
        case Variant::s12s34: return "swap1234";
    }
    return "?";
}

std::vector<Variant> variants_of(DType t) {
    switch (t) {
        case DType::T0: return {Variant::e};
        case DType::TI:
        case DType::TII:
            return {Variant::e, Variant::s12, Variant::s34, Variant::s12s34};
        case DType::TIII:
        case DType::TIIIs:
            return {Variant::e, Variant::s12};
        case DType::TIV:
        case DType::TIVs:
            return {Variant::e, Variant::s34};
    }
    return {};
}

SymmetryElem variant_sym(Variant v) {
    switch (v) {
        case Variant::e: return SymmetryElem::identity();
        case Variant::s12: return SymmetryElem::s12();
        case Variant::s34: return SymmetryElem::s34();
        case Variant::s12s34: return SymmetryElem::s12s34();
    }
    return SymmetryElem::identity();
}

Variant variant_of_sym(const SymmetryElem& s) {
    if (s.transpose) throw std::invalid_argument("variant_of_sym: not a stripe swap");
    if (s.swap12 && s.swap34) return Variant::s12s34;
    if (s.swap12) return Variant::s12;
    if (s.swap34) return Variant::s34;
    return Variant::e;
}

Descriptor Descriptor::plain(DType t, int n, Variant v) {
    Descriptor d;
    d.type = t;
    d.n = n;
    d.variant = v;
    return d;
}

Descriptor Descriptor::t0(const Poly& p, int s, bool primary_exact) {
    Descriptor d;
    d.type = DType::T0;
    d.n = p.degree() * s;
    d.p = p;
    d.s = s;
    d.variant = Variant::e;
    d.primary_exact = primary_exact;
    return d;
}

std::string Descriptor::to_string() const {
    std::string r = "type " + dtype_name(type) + " n=" + std::to_string(n);
    if (type == DType::T0) {
        r += " p=" + p.to_string() + " s=" + std::to_string(s);
        if (!primary_exact) r += " (invariant-factor level)";
    }
    if (variant != Variant::e) r += " " + variant_name(variant);
    return r;
}

namespace {

int type_rank(DType t) { return static_cast<int>(t); }
int variant_rank(Variant v) { return static_cast<int>(v); }

}  // namespace

bool descriptor_eq(const Descriptor& a, const Descriptor& b) {
    if (a.type != b.type || a.n != b.n || a.variant != b.variant) return false;
    if (a.type != DType::T0) return true;
    return a.p == b.p && a.s == b.s && a.primary_exact == b.primary_exact;
}

bool descriptor_less(const Descriptor& a, const Descriptor& b) {
    if (a.type != b.type) return type_rank(a.type) < type_rank(b.type);
    if (a.n != b.n) return a.n < b.n;
    if (a.type == DType::T0) {
        if (a.p != b.p) return poly_less(a.p, b.p);
        if (a.s != b.s) return a.s < b.s;
        if (a.primary_exact != b.primary_exact) return a.primary_exact < b.primary_exact;
    }
    return variant_rank(a.variant) < variant_rank(b.variant);
}

void validate_descriptor(const Descriptor& d, const FieldSpec& f) {
    auto vs = variants_of(d.type);
    if (std::find(vs.begin(), vs.end(), d.variant) == vs.end())
        throw std::invalid_argument("descriptor orientation is not canonical for its type");
    if (d.type == DType::T0) {
        if (d.p.field != f) throw std::invalid_argument("descriptor polynomial field mismatch");
        if (!d.p.is_monic() || d.p.degree() < 1 || d.s < 1 || d.n != d.s * d.p.degree())
            throw std::invalid_argument("bad type-0 descriptor parameters");
        if (d.p.coeff(0).is_zero())
            throw std::invalid_argument("type-0 polynomial must have nonzero constant term");
        if (d.primary_exact && f.is_prime_field() && !is_irreducible_gf(d.p))
            throw std::invalid_argument("type-0 polynomial must be irreducible");
    } else if (d.type == DType::TI) {
        if (d.n < 1) throw std::invalid_argument("type I needs n >= 1");
    } else if (d.n < 0) {
        throw std::invalid_argument("size parameter must be >= 0");
    }
}

DimVector dim_of(const Descriptor& d) {
    int n = d.n;
    DimVector base;
    switch (d.type) {
        case DType::T0:
        case DType::TI: base = {n, n, n, n}; break;
        case DType::TII: base = {n + 1, n, n + 1, n}; break;
        case DType::TIII: base = {n + 1, n, n, n}; break;
        case DType::TIIIs: base = {n, n + 1, n + 1, n + 1}; break;
        case DType::TIV: base = {n + 1, n + 1, n + 1, n}; break;
        case DType::TIVs: base = {n, n, n, n + 1}; break;
    }
    SymmetryElem s = variant_sym(d.variant);
    if (s.swap34) std::swap(base[2], base[3]);
    if (s.swap12) std::swap(base[0], base[1]);
    return base;
}

Presentation generate(const Descriptor& d, const FieldSpec& f) {
    validate_descriptor(d, f);
    int n = d.n;
    Presentation base;
    switch (d.type) {
        case DType::T0:
            base = Presentation(f, Mat::identity(f, n), Mat::identity(f, n),
                                build_frobenius(d.p, d.s), Mat::identity(f, n));
            break;
        case DType::TI:
            base = Presentation(f, Mat::identity(f, n), Mat::identity(f, n),
                                build_jordan(f, n, true), Mat::identity(f, n));
            break;
        case DType::TII:
            base = Presentation(f, Mat::identity(f, n + 1), build_i_left(f, n),
                                build_i_down(f, n), Mat::identity(f, n));
            break;
        case DType::TIII:
            base = Presentation(f, build_i_up(f, n), Mat::identity(f, n), build_i_down(f, n),
                                Mat::identity(f, n));
            break;
        case DType::TIIIs:
            base = Presentation(f, build_i_left(f, n), Mat::identity(f, n + 1),
                                build_i_right(f, n), Mat::identity(f, n + 1));
            break;
        case DType::TIV:
            base = Presentation(f, Mat::identity(f, n + 1), Mat::identity(f, n + 1),
                                build_i_up(f, n), build_i_down(f, n));
            break;
        case DType::TIVs:
            base = Presentation(f, Mat::identity(f, n), Mat::identity(f, n),
                                build_i_left(f, n), build_i_right(f, n));
            break;
    }
    return apply_symmetry(variant_sym(d.variant), base);
}

int RingDescriptor::dimension(const FieldSpec&) const {
    return kind == Kind::base_field ? 1 : modulus.degree();
}

std::string RingDescriptor::to_string() const {
    if (kind == Kind::base_field) return "k";
    return "k[t]/(" + modulus.to_string() + ")";
}

RingDescriptor endo_ring_of(const Descriptor& d, const FieldSpec& f) {
    RingDescriptor r;
    switch (d.type) {
        case DType::T0:
            r.kind = RingDescriptor::Kind::quotient_poly;
            r.modulus = poly_pow(d.p, d.s);
            break;
        case DType::TI:
            r.kind = RingDescriptor::Kind::quotient_poly;
            r.modulus = poly_pow(Poly::t(f), d.n);
            break;
        case DType::TII:
            r.kind = RingDescriptor::Kind::quotient_poly;
            r.modulus = poly_pow(Poly::t(f), d.n + 1);
            break;
        default: r.kind = RingDescriptor::Kind::base_field; break;
    }
    return r;
}

// ------------------------------------------------------------- diagrams

GraphicalInvariant graphical_of(const Descriptor& d) {
    if (d.type == DType::T0)
        throw std::invalid_argument("type 0 carries no two-symbol diagram");
    GraphicalInvariant g;
    g.type = d.type;
    g.n = d.n;
    switch (d.type) {
        case DType::TI: g.marks = {{1, Mark::dash}, {1, Mark::bar}}; break;
        case DType::TII: g.marks = {{1, Mark::dash}, {2, Mark::bar}}; break;
        case DType::TIII: g.marks = {{0, Mark::dash}, {1, Mark::dash}}; break;
        case DType::TIIIs: g.marks = {{0, Mark::bar}, {1, Mark::bar}}; break;
        case DType::TIV: g.marks = {{1, Mark::dash}, {3, Mark::dash}}; break;
        case DType::TIVs: g.marks = {{1, Mark::bar}, {3, Mark::bar}}; break;
        default: break;
    }
    return g;
}

GraphicalInvariant dual_diagram(const GraphicalInvariant& g) {
    GraphicalInvariant r = g;
    for (auto& [block, mark] : r.marks) mark = mark == Mark::dash ? Mark::bar : Mark::dash;
    r.type = diagram_type(r.marks);
    return r;
}

DType diagram_type(const std::vector<std::pair<int, Mark>>& marks) {
    // recognized up to permutations of the horizontal and vertical stripes,
    // which act on the two-by-two block grid
    auto block_image = [](int block, bool s12, bool s34) {
        int row = block / 2, col = block % 2;
        if (s12) row = 1 - row;
        if (s34) col = 1 - col;
        return 2 * row + col;
    };
    for (bool s12 : {false, true})
        for (bool s34 : {false, true}) {
            std::vector<std::pair<int, Mark>> sorted;
            for (const auto& [block, mark] : marks)
                sorted.emplace_back(block_image(block, s12, s34), mark);
            std::sort(sorted.begin(), sorted.end());
            auto is = [&](std::vector<std::pair<int, Mark>> want) {
                std::sort(want.begin(), want.end());
                return sorted == want;
            };
            if (is({{1, Mark::dash}, {1, Mark::bar}})) return DType::TI;
            if (is({{1, Mark::dash}, {2, Mark::bar}})) return DType::TII;
            if (is({{0, Mark::dash}, {1, Mark::dash}})) return DType::TIII;
            if (is({{0, Mark::bar}, {1, Mark::bar}})) return DType::TIIIs;
            if (is({{1, Mark::dash}, {3, Mark::dash}})) return DType::TIV;
            if (is({{1, Mark::bar}, {3, Mark::bar}})) return DType::TIVs;
        }
    throw std::invalid_argument("unrecognized mark diagram");
}

// --------------------------------------------- spiral grid reconstruction

namespace {

struct SignedGrid {
    Mat m;
    int top, left;

    SignedGrid(const FieldSpec& f, const DimVector& d)
        : m(f, d[0] + d[1], d[2] + d[3]), top(d[0]), left(d[2]) {}

    // x: signed column offset from the vertical boundary (positive right),
    // y: signed row offset from the horizontal boundary (positive up)
    void put(int x, int y, int val) {
        int col = x > 0 ? left + x - 1 : left + x;
        int row = y > 0 ? top - y : top - y - 1;
        m.at(row, col) = Scalar::of_int(m.field(), val);
    }
};

}  // namespace

Presentation from_graphical(const GraphicalInvariant& g, const FieldSpec& f) {
    if (g.type == DType::T0) throw std::invalid_argument("type 0 has no diagram form");
    if (g.n < 1) throw std::invalid_argument("diagram reconstruction needs n >= 1");
    if (!g.marks.empty() && diagram_type(g.marks) != g.type)
        throw std::invalid_argument("marks disagree with the stated type");

    const DType t = g.type;
    const int n = g.n;
    int num_ones = 0;
    if (t == DType::TI)
        num_ones = 4 * n - 1;
    else if (t == DType::TII)
        num_ones = 4 * n + 1;
    else if (t == DType::TIII || t == DType::TIVs)
        num_ones = 4 * n;
    else
        num_ones = 4 * n + 2;  // TIV and TIIIs

    SignedGrid grid(f, dim_of(Descriptor::plain(t, n)));

    bool starred = t == DType::TIIIs || t == DType::TIVs;
    int factorx_1, factory_1, factorx_3, factory_3, ff_1, fs_2, ff_3, fs_4;
    int vxpos = 1, vypos = 1;
    if (!starred) {
        factorx_1 = -1;
        factory_1 = 1;
        factorx_3 = 1;
        factory_3 = -1;
        ff_1 = 2;
        fs_2 = 4;
        ff_3 = 4;
        fs_4 = 2;
        for (int i = 1; i <= n; ++i) grid.put(i, 1, 0);
    } else {
        factorx_1 = 1;
        factory_1 = -1;
        factorx_3 = -1;
        factory_3 = 1;
        ff_1 = 4;
        fs_2 = 2;
        ff_3 = 2;
        fs_4 = 4;
        for (int j = 1; j <= n; ++j) grid.put(1, j, 0);
    }

    auto fill = [&](int p, int q) {
        if (p == 2 && q == 3) {
            for (int k = 1; k <= vypos - 1; ++k) {
                grid.put(-vxpos, k, 0);
                grid.put(-vxpos, -k, 0);
            }
        } else if (p == 3 && q == 4) {
            for (int k = 1; k <= vxpos - 1; ++k) {
                grid.put(-k, -vypos, 0);
                grid.put(k, -vypos, 0);
            }
        } else if (p == 4 && q == 1) {
            for (int k = 1; k <= vypos - 1; ++k) grid.put(vxpos, -k, 0);
            for (int k = 1; k <= vypos; ++k) grid.put(vxpos, k, 0);
            ++vypos;
        } else if (p == 1 && q == 2) {
            for (int k = 1; k <= vxpos - 1; ++k) grid.put(k, vypos, 0);
            ++vxpos;
            for (int k = 1; k <= vxpos - 1; ++k) grid.put(-k, vypos, 0);
        } else if (p == 4 && q == 3) {
            for (int k = 1; k <= vxpos - 1; ++k) {
                grid.put(k, -vypos, 0);
                grid.put(-k, -vypos, 0);
            }
        } else if (p == 3 && q == 2) {
            for (int k = 1; k <= vypos - 1; ++k) {
                grid.put(-vxpos, -k, 0);
                grid.put(-vxpos, k, 0);
            }
        } else if (p == 2 && q == 1) {
            for (int k = 1; k <= vxpos - 1; ++k) grid.put(-k, vypos, 0);
            for (int k = 1; k <= vxpos; ++k) grid.put(k, vypos, 0);
            ++vxpos;
        } else if (p == 1 && q == 4) {
            for (int k = 1; k <= vypos - 1; ++k) grid.put(vxpos, k, 0);
            ++vypos;
            for (int k = 1; k <= vypos - 1; ++k) grid.put(vxpos, -k, 0);
        } else {
            throw std::logic_error("bad fill quadrants");
        }
    };

    for (int i = 1; i <= num_ones; ++i) {
        switch (i % 4) {
            case 1:
                grid.put(factorx_1 * vxpos, factory_1 * vypos, 1);
                fill(ff_1, 3);
                break;
            case 2:
                grid.put(-vxpos, -vypos, 1);
                fill(3, fs_2);
                break;
            case 3:
                grid.put(factorx_3 * vxpos, factory_3 * vypos, 1);
                fill(ff_3, 1);
                break;
            default:
                grid.put(vxpos, vypos, 1);
                fill(1, fs_4);
                break;
        }
    }

    const Mat& m = grid.m;
    int rows = m.rows(), cols = m.cols();
    return Presentation(f, m.submatrix(0, grid.top, 0, grid.left),
                        m.submatrix(grid.top, rows, 0, grid.left),
                        m.submatrix(0, grid.top, grid.left, cols),
                        m.submatrix(grid.top, rows, grid.left, cols));
}

// ------------------------------------------------------------ restoration

namespace {

Variant fold_variant(DType t, Variant raw) {
    SymmetryElem s = variant_sym(raw);
    switch (t) {
        case DType::T0: return Variant::e;  // polynomial handled by callers
        case DType::TI:
        case DType::TII: return raw;
        case DType::TIII:
        case DType::TIIIs: return s.swap12 ? Variant::s12 : Variant::e;
        case DType::TIV:
        case DType::TIVs: return s.swap34 ? Variant::s34 : Variant::e;
    }
    return raw;
}

}  // namespace

Descriptor restore(const Descriptor& d) {
    Descriptor r = d;
    switch (d.type) {
        case DType::TI: r.type = DType::TII; break;
        case DType::TII:
            r.type = DType::TI;
            r.n = d.n + 1;
            break;
        case DType::TIII: r.type = DType::TIV; break;
        case DType::TIV:
            r.type = DType::TIII;
            r.n = d.n + 1;
            break;
        default:
            throw std::invalid_argument("only types I-IV take part in the restoration");
    }
    r.variant = fold_variant(r.type, d.variant);
    return r;
}

Descriptor symmetry_act(const SymmetryElem& s, const Descriptor& d) {
    Descriptor cur = d;
    if (s.transpose) {
        Variant v = cur.variant;
        switch (cur.type) {
            case DType::T0: break;  // transpose preserves the similarity class
            case DType::TI:
                if (v == Variant::e)
                    cur.variant = Variant::s12s34;
                else if (v == Variant::s12s34)
                    cur.variant = Variant::e;
                break;
            case DType::TII:
                if (v == Variant::s12)
                    cur.variant = Variant::s34;
                else if (v == Variant::s34)
                    cur.variant = Variant::s12;
                break;
            case DType::TIII:
                cur.type = DType::TIVs;
                cur.variant = v == Variant::e ? Variant::s34 : Variant::e;
                break;
            case DType::TIVs:
                cur.type = DType::TIII;
                cur.variant = v == Variant::s34 ? Variant::e : Variant::s12;
                break;
            case DType::TIV:
                cur.type = DType::TIIIs;
                cur.variant = v == Variant::e ? Variant::s12 : Variant::e;
                break;
            case DType::TIIIs:
                cur.type = DType::TIV;
                cur.variant = v == Variant::s12 ? Variant::e : Variant::s34;
                break;
        }
    }
    SymmetryElem swaps{s.swap12, s.swap34, false};
    if (!swaps.is_identity()) {
        SymmetryElem net = compose(swaps, variant_sym(cur.variant));
        if (cur.type == DType::T0) {
            if (net.swap12 != net.swap34) cur.p = reciprocal_poly(cur.p);
            cur.variant = Variant::e;
        } else {
            cur.variant = fold_variant(cur.type, variant_of_sym(net));
        }
    }
    return cur;
}

std::optional<PresWitness> iso_witness(const Presentation& x, const Presentation& y) {
    if (x.field != y.field || x.dims() != y.dims()) return std::nullopt;
    auto homs = hom_space(x, y);
    auto as_witness = [&](const Morphism& h) -> std::optional<PresWitness> {
        if (!is_invertible(h.L1) || !is_invertible(h.L2) || !is_invertible(h.L3) ||
            !is_invertible(h.L4))
            return std::nullopt;
        return PresWitness{h.L1, h.L2, inverse(h.L3), inverse(h.L4)};
    };
    for (const Morphism& h : homs) {
        auto w = as_witness(h);
        if (w) return w;
    }
    for (size_t i = 0; i < homs.size(); ++i)
        for (size_t j = i + 1; j < homs.size(); ++j) {
            auto w = as_witness(morphism_add(homs[i], homs[j]));
            if (w) return w;
        }
    return std::nullopt;
}

std::pair<Descriptor, PresWitness> symmetry_act_witness(const SymmetryElem& s,
                                                        const Descriptor& d,
                                                        const FieldSpec& f) {
    Descriptor image = symmetry_act(s, d);
    Presentation moved = apply_symmetry(s, generate(d, f));
    Presentation target = generate(image, f);
    if (moved == target) return {image, PresWitness::identity(f, moved.dims())};
    auto w = iso_witness(moved, target);
    if (!w) throw std::logic_error("symmetry image is not equivalent to its class form");
    return {image, *w};
}

}  // namespace qrep
