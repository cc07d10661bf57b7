#include "qrep/presentation.hpp"

#include <sstream>

#include "qrep/prng.hpp"

namespace qrep {

std::string DimVector::to_string() const {
    std::ostringstream os;
    os << "(" << d[0] << "," << d[1] << "," << d[2] << "," << d[3] << ")";
    return os.str();
}

Presentation::Presentation(const FieldSpec& f, Mat a, Mat b, Mat g, Mat dd)
    : field(f), A(std::move(a)), B(std::move(b)), G(std::move(g)), D(std::move(dd)) {
    validate();
}

Presentation Presentation::zero(const FieldSpec& f, const DimVector& d) {
    return Presentation(f, Mat(f, d[0], d[2]), Mat(f, d[1], d[2]), Mat(f, d[0], d[3]),
                        Mat(f, d[1], d[3]));
}

void Presentation::validate() const {
    if (A.field() != field || B.field() != field || G.field() != field || D.field() != field)
        throw std::invalid_argument("presentation blocks disagree on the field");
    if (A.rows() != G.rows() || B.rows() != D.rows() || A.cols() != B.cols() ||
        G.cols() != D.cols())
        throw std::invalid_argument("presentation block shapes are inconsistent");
}

std::string Presentation::to_string() const {
    std::ostringstream os;
    DimVector d = dims();
    os << "dims " << d.to_string();
    for (int i = 0; i < d[0] + d[1]; ++i) {
        os << "\n";
        bool top = i < d[0];
        int r = top ? i : i - d[0];
        for (int j = 0; j < d[2]; ++j)
            os << (top ? A.at(r, j) : B.at(r, j)).to_string() << " ";
        os << "|";
        for (int j = 0; j < d[3]; ++j)
            os << " " << (top ? G.at(r, j) : D.at(r, j)).to_string();
        if (i + 1 == d[0] && d[1] > 0) os << "\n--";
    }
    return os.str();
}

long long tits_q(const DimVector& d) {
    long long x1 = d[0], x2 = d[1], x3 = d[2], x4 = d[3];
    return x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 - x3 * x1 - x3 * x2 - x4 * x1 - x4 * x2;
}

RootClass root_class(const DimVector& d) {
    if (d.is_zero()) return RootClass::none;
    long long q = tits_q(d);
    if (q == 1) return RootClass::real;
    if (q == 0) return RootClass::imaginary;
    return RootClass::none;
}

namespace {

Mat diag2(const Mat& a, const Mat& b) { return direct_sum_diag({a, b}, a.field()); }

}  // namespace

Presentation direct_sum(const Presentation& v, const Presentation& w) {
    if (v.field != w.field) throw std::invalid_argument("direct sum field mismatch");
    return Presentation(v.field, diag2(v.A, w.A), diag2(v.B, w.B), diag2(v.G, w.G),
                        diag2(v.D, w.D));
}

SymmetryElem compose(const SymmetryElem& b, const SymmetryElem& a) {
    // normal form: transpose first, then swaps; transposing conjugates 12 <-> 34
    bool a12 = a.swap12, a34 = a.swap34;
    if (b.transpose) std::swap(a12, a34);
    SymmetryElem r;
    r.swap12 = b.swap12 ^ a12;
    r.swap34 = b.swap34 ^ a34;
    r.transpose = b.transpose ^ a.transpose;
    return r;
}

SymmetryElem SymmetryElem::inverse() const {
    SymmetryElem r = *this;
    if (transpose) std::swap(r.swap12, r.swap34);
    return r;
}

std::string SymmetryElem::to_string() const {
    std::string s;
    if (transpose) s += "t";
    if (swap34) s += "v";
    if (swap12) s += "h";
    return s.empty() ? "e" : s;
}

std::array<SymmetryElem, 8> SymmetryElem::all() {
    std::array<SymmetryElem, 8> r;
    int i = 0;
    for (bool t : {false, true})
        for (bool s34 : {false, true})
            for (bool s12 : {false, true}) r[i++] = SymmetryElem{s12, s34, t};
    return r;
}

std::array<SymmetryElem, 4> SymmetryElem::swaps() {
    return {identity(), s12(), s34(), s12s34()};
}

Presentation apply_symmetry(const SymmetryElem& s, const Presentation& v) {
    Mat a = v.A, b = v.B, g = v.G, d = v.D;
    if (s.transpose) {
        Mat na = a.transpose(), nb = g.transpose(), ng = b.transpose(), nd = d.transpose();
        a = na;
        b = nb;
        g = ng;
        d = nd;
    }
    if (s.swap34) {
        std::swap(a, g);
        std::swap(b, d);
    }
    if (s.swap12) {
        std::swap(a, b);
        std::swap(g, d);
    }
    return Presentation(v.field, a, b, g, d);
}

bool morphism_valid(const Presentation& v, const Presentation& w, const Morphism& m) {
    return m.L1 * v.A == w.A * m.L3 && m.L2 * v.B == w.B * m.L3 && m.L1 * v.G == w.G * m.L4 &&
           m.L2 * v.D == w.D * m.L4;
}

Morphism identity_morphism(const Presentation& v) {
    DimVector d = v.dims();
    return {Mat::identity(v.field, d[0]), Mat::identity(v.field, d[1]),
            Mat::identity(v.field, d[2]), Mat::identity(v.field, d[3])};
}

Morphism compose(const Morphism& second, const Morphism& first) {
    return {second.L1 * first.L1, second.L2 * first.L2, second.L3 * first.L3,
            second.L4 * first.L4};
}

Morphism morphism_add(const Morphism& a, const Morphism& b) {
    return {a.L1 + b.L1, a.L2 + b.L2, a.L3 + b.L3, a.L4 + b.L4};
}

Morphism morphism_scale(const Scalar& s, const Morphism& a) {
    Morphism r = a;
    for (Mat* m : {&r.L1, &r.L2, &r.L3, &r.L4})
        for (int i = 0; i < m->rows(); ++i)
            for (int j = 0; j < m->cols(); ++j) m->at(i, j) = s * m->at(i, j);
    return r;
}

std::vector<Morphism> hom_space(const Presentation& v, const Presentation& w) {
    if (v.field != w.field) throw std::invalid_argument("hom space field mismatch");
    const FieldSpec& f = v.field;
    DimVector dv = v.dims(), dw = w.dims();

    // unknowns: L1 (dw1 x dv1), L2, L3, L4, row-major in that order
    int n1 = dw[0] * dv[0], n2 = dw[1] * dv[1], n3 = dw[2] * dv[2];
    int nvars = n1 + n2 + n3 + dw[3] * dv[3];
    int off1 = 0, off2 = n1, off3 = n1 + n2, off4 = n1 + n2 + n3;

    int neq = (dw[0] + dw[1]) * (dv[2] + dv[3]);
    Mat sys(f, neq, nvars);
    int row = 0;

    // one intertwining block: Lp * x = y * Lq, Lq has qcols columns
    auto emit = [&](const Mat& x, const Mat& y, int offp, int offq, int qcols) {
        for (int i = 0; i < y.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) {
                for (int k = 0; k < x.rows(); ++k)
                    sys.at(row, offp + i * x.rows() + k) =
                        sys.at(row, offp + i * x.rows() + k) + x.at(k, j);
                for (int k = 0; k < y.cols(); ++k)
                    sys.at(row, offq + k * qcols + j) =
                        sys.at(row, offq + k * qcols + j) - y.at(i, k);
                ++row;
            }
    };

    emit(v.A, w.A, off1, off3, dv[2]);  // L1 A_V = A_W L3
    emit(v.B, w.B, off2, off3, dv[2]);  // L2 B_V = B_W L3
    emit(v.G, w.G, off1, off4, dv[3]);  // L1 G_V = G_W L4
    emit(v.D, w.D, off2, off4, dv[3]);  // L2 D_V = D_W L4
    if (row != neq) throw std::logic_error("hom system row mismatch");

    auto basis = nullspace(sys);
    std::vector<Morphism> out;
    out.reserve(basis.size());
    for (const Mat& vec : basis) {
        Morphism m{Mat(f, dw[0], dv[0]), Mat(f, dw[1], dv[1]), Mat(f, dw[2], dv[2]),
                   Mat(f, dw[3], dv[3])};
        auto fill = [&](Mat& L, int off) {
            for (int i = 0; i < L.rows(); ++i)
                for (int j = 0; j < L.cols(); ++j) L.at(i, j) = vec.at(off + i * L.cols() + j, 0);
        };
        fill(m.L1, off1);
        fill(m.L2, off2);
        fill(m.L3, off3);
        fill(m.L4, off4);
        out.push_back(std::move(m));
    }
    return out;
}

Presentation random_admissible_shuffle(const Presentation& v, std::uint64_t seed, int steps) {
    if (steps < 0) throw std::invalid_argument("negative step count");
    Prng rng(seed);
    Presentation cur = v;
    DimVector d = v.dims();
    const FieldSpec& f = v.field;
    int done = 0;
    while (done < steps) {
        int stripe = static_cast<int>(rng.below(4));  // rows 1, rows 2, cols 3, cols 4
        int size = d[stripe];
        if (size == 0) {
            if (d.total() == 0) break;
            continue;
        }
        int kind = static_cast<int>(rng.below(3));  // swap, scale, add multiple
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(size)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(size)));
        Scalar s = Scalar::zero(f);
        if (kind != 0) {
            long long val;
            if (f.is_prime_field())
                val = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(f.p - 1)));
            else {
                val = static_cast<long long>(rng.below(6)) - 3;
                if (val == 0) val = 3;
            }
            s = Scalar::of_int(f, val);
        }
        if ((kind == 0 || kind == 2) && i == j) continue;
        auto apply_pair = [&](Mat& x, Mat& y, bool rows_mode) {
            for (Mat* m : {&x, &y}) {
                if (rows_mode) {
                    if (kind == 0)
                        m->row_swap(i, j);
                    else if (kind == 1)
                        m->row_scale(i, s);
                    else
                        m->row_axpy(i, j, s);
                } else {
                    if (kind == 0)
                        m->col_swap(i, j);
                    else if (kind == 1)
                        m->col_scale(i, s);
                    else
                        m->col_axpy(i, j, s);
                }
            }
        };
        switch (stripe) {
            case 0: apply_pair(cur.A, cur.G, true); break;
            case 1: apply_pair(cur.B, cur.D, true); break;
            case 2: apply_pair(cur.A, cur.B, false); break;
            case 3: apply_pair(cur.G, cur.D, false); break;
        }
        ++done;
    }
    return cur;
}

PresWitness PresWitness::identity(const FieldSpec& f, const DimVector& d) {
    return {Mat::identity(f, d[0]), Mat::identity(f, d[1]), Mat::identity(f, d[2]),
            Mat::identity(f, d[3])};
}

Presentation PresWitness::apply(const Presentation& v) const {
    return Presentation(v.field, P1 * v.A * Q3, P2 * v.B * Q3, P1 * v.G * Q4, P2 * v.D * Q4);
}

PresWitness PresWitness::after(const PresWitness& inner) const {
    return {P1 * inner.P1, P2 * inner.P2, inner.Q3 * Q3, inner.Q4 * Q4};
}

}  // namespace qrep
