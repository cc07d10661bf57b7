#include "qrep/canonical.hpp"

#include <algorithm>

namespace qrep {

namespace {

void require_square(const Mat& m, const char* who) {
    if (!m.is_square()) throw std::invalid_argument(std::string(who) + ": non-square input");
}

Mat mat_col(const Mat& m, int j) { return m.submatrix(0, m.rows(), j, j + 1); }

// Krylov matrix [v, m v, ..., m^(d-1) v]
Mat krylov(const Mat& m, const Mat& v, int d) {
    Mat k(m.field(), m.rows(), d);
    Mat cur = v;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < m.rows(); ++i) k.at(i, j) = cur.at(i, 0);
        if (j + 1 < d) cur = m * cur;
    }
    return k;
}

}  // namespace

Poly local_annihilator(const Mat& m, const Mat& v) {
    require_square(m, "local_annihilator");
    const FieldSpec& f = m.field();
    int n = m.rows();
    // grow the Krylov sequence until m^k v depends on the earlier vectors
    std::vector<Mat> seq;
    Mat cur = v;
    for (int k = 0; k <= n; ++k) {
        Mat K(f, n, static_cast<int>(seq.size()));
        for (size_t j = 0; j < seq.size(); ++j)
            for (int i = 0; i < n; ++i) K.at(i, static_cast<int>(j)) = seq[j].at(i, 0);
        Mat x;
        if (solve(K, cur, x)) {
            Poly ann(f);
            ann.c.assign(k + 1, Scalar::zero(f));
            for (int j = 0; j < k; ++j) ann.c[j] = -x.at(j, 0);
            ann.c[k] = Scalar::one(f);
            ann.normalize();
            return ann;
        }
        seq.push_back(cur);
        cur = m * cur;
    }
    throw std::logic_error("annihilator search exceeded the matrix order");
}

Poly minimal_polynomial(const Mat& m) {
    require_square(m, "minimal_polynomial");
    const FieldSpec& f = m.field();
    Poly mu = Poly::one(f);
    for (int i = 0; i < m.rows(); ++i) {
        Mat e(f, m.rows(), 1);
        e.at(i, 0) = Scalar::one(f);
        mu = poly_lcm(mu, local_annihilator(m, e));
        if (mu.degree() == m.rows()) break;
    }
    return mu.monic();
}

namespace {

// vector whose local annihilator is the whole minimal polynomial
Mat cyclic_vector(const Mat& m, const Poly& mu) {
    const FieldSpec& f = m.field();
    int n = m.rows();
    Mat v(f, n, 1);
    v.at(0, 0) = Scalar::one(f);
    Poly a = local_annihilator(m, v);
    for (int i = 1; i < n && a.degree() < mu.degree(); ++i) {
        Mat u(f, n, 1);
        u.at(i, 0) = Scalar::one(f);
        Poly b = local_annihilator(m, u);
        if (poly_mod(a, b).is_zero()) continue;  // contributes nothing new
        auto [a1, b1] = coprime_split(a, b);
        Mat va = poly_at(poly_divmod(a, a1).first, m) * v;
        Mat ub = poly_at(poly_divmod(b, b1).first, m) * u;
        v = va + ub;
        a = (a1 * b1).monic();
    }
    return v;
}

struct CyclicBlock {
    Poly factor;
    Mat basis;  // n x deg(factor), columns are the Krylov basis
};

// Frobenius-style splitting: peel the cyclic subspace of a vector whose
// annihilator equals the minimal polynomial, then recurse on an invariant
// complement cut out by dual functionals.
void cyclic_blocks(const Mat& m, const Mat& space, std::vector<CyclicBlock>& out) {
    // space: n x k basis of an invariant subspace
    int k = space.cols();
    if (k == 0) return;
    const FieldSpec& f = m.field();
    Mat mloc;
    if (!solve(space, m * space, mloc))
        throw std::logic_error("restriction of an invariant subspace failed");
    Poly mu = minimal_polynomial(mloc);
    int d = mu.degree();
    Mat v = cyclic_vector(mloc, mu);
    Mat kry = krylov(mloc, v, d);

    CyclicBlock blk;
    blk.factor = mu;
    blk.basis = space * kry;
    out.push_back(blk);
    if (d == k) return;

    // dual functional y with y (m^j v) = [j == d-1]; the joint kernel of
    // y m^j (j < d) is an invariant complement of the cyclic subspace
    Mat rhs(f, d, 1);
    rhs.at(d - 1, 0) = Scalar::one(f);
    Mat yt;
    if (!solve(kry.transpose(), rhs, yt))
        throw std::logic_error("dual functional construction failed");
    Mat y = yt.transpose();
    Mat conditions(f, d, k);
    Mat row = y;
    for (int j = 0; j < d; ++j) {
        for (int c = 0; c < k; ++c) conditions.at(j, c) = row.at(0, c);
        if (j + 1 < d) row = row * mloc;
    }
    auto comp = nullspace(conditions);
    if (static_cast<int>(comp.size()) != k - d)
        throw std::logic_error("invariant complement has the wrong dimension");
    Mat cb(f, k, k - d);
    for (size_t j = 0; j < comp.size(); ++j)
        for (int i = 0; i < k; ++i) cb.at(i, static_cast<int>(j)) = comp[j].at(i, 0);
    cyclic_blocks(m, space * cb, out);
}

TransformWitness witness_from_basis(const Mat& basis) {
    TransformWitness w;
    w.Q = basis;
    w.P = inverse(basis);
    return w;
}

}  // namespace

InvariantFactorDecomposition invariant_factor_decompose(const Mat& m) {
    require_square(m, "invariant_factor_decompose");
    const FieldSpec& f = m.field();
    std::vector<CyclicBlock> blocks;
    cyclic_blocks(m, Mat::identity(f, m.rows()), blocks);
    std::reverse(blocks.begin(), blocks.end());  // ascending divisibility

    InvariantFactorDecomposition r;
    Mat basis(f, m.rows(), 0);
    for (const CyclicBlock& b : blocks) {
        r.factors.push_back(b.factor);
        basis = hstack(basis, b.basis);
    }
    r.w = witness_from_basis(basis);
    return r;
}

PrimaryDecomposition primary_decompose(const Mat& m) {
    require_square(m, "primary_decompose");
    if (!m.field().is_prime_field())
        throw std::invalid_argument(
            "primary decomposition needs a prime field; invariant factors only over Q");
    const FieldSpec& f = m.field();
    std::vector<CyclicBlock> blocks;
    cyclic_blocks(m, Mat::identity(f, m.rows()), blocks);

    struct Cell {
        Poly p;
        int s;
        Mat basis;
    };
    std::vector<Cell> cells;
    for (const CyclicBlock& b : blocks) {
        auto factors = factor_gf(b.factor);
        Mat v0 = mat_col(b.basis, 0);
        for (const auto& [p, s] : factors) {
            Poly cofactor = poly_divmod(b.factor, poly_pow(p, s)).first;
            Mat v = poly_at(cofactor, m) * v0;
            cells.push_back({p, s, krylov(m, v, p.degree() * s)});
        }
    }
    std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.p != b.p) return poly_less(a.p, b.p);
        return a.s < b.s;
    });

    PrimaryDecomposition r;
    Mat basis(f, m.rows(), 0);
    for (const Cell& c : cells) {
        r.parts.emplace_back(c.p, c.s);
        basis = hstack(basis, c.basis);
    }
    r.w = witness_from_basis(basis);
    return r;
}

SimilarityClass similarity_class(const Mat& m) {
    SimilarityClass sc;
    sc.invariant_factors = invariant_factor_decompose(m).factors;
    if (m.field().is_prime_field()) {
        sc.has_primary = true;
        for (const Poly& fct : sc.invariant_factors)
            for (const auto& [p, s] : factor_gf(fct)) sc.primary_parts.emplace_back(p, s);
        std::stable_sort(sc.primary_parts.begin(), sc.primary_parts.end(),
                         [](const auto& a, const auto& b) {
                             if (a.first != b.first) return poly_less(a.first, b.first);
                             return a.second < b.second;
                         });
    }
    return sc;
}

FittingDecomposition fitting_decompose(const Mat& m) {
    require_square(m, "fitting_decompose");
    const FieldSpec& f = m.field();
    int n = m.rows();
    Mat power = Mat::identity(f, n);
    for (int i = 0; i < n; ++i) power = power * m;

    // kernel basis of m^n
    auto ker = nullspace(power);
    Mat kb(f, n, static_cast<int>(ker.size()));
    for (size_t j = 0; j < ker.size(); ++j)
        for (int i = 0; i < n; ++i) kb.at(i, static_cast<int>(j)) = ker[j].at(i, 0);

    // image basis of m^n: pivot columns of the original matrix
    RowReduction rr = row_reduce(power);
    Mat ib(f, n, rr.rank());
    for (int j = 0; j < rr.rank(); ++j)
        for (int i = 0; i < n; ++i) ib.at(i, j) = power.at(i, rr.pivot_cols[j]);

    Mat basis = hstack(kb, ib);
    FittingDecomposition r;
    r.w = witness_from_basis(basis);
    Mat conj = r.w.P * m * r.w.Q;
    int kn = kb.cols();
    r.nilpotent = conj.submatrix(0, kn, 0, kn);
    r.invertible = conj.submatrix(kn, n, kn, n);
    if (!conj.submatrix(0, kn, kn, n).is_zero() || !conj.submatrix(kn, n, 0, kn).is_zero())
        throw std::logic_error("fitting blocks are not invariant");
    return r;
}

}  // namespace qrep
