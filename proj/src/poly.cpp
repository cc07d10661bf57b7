#include "qrep/poly.hpp"

#include <algorithm>

#include "qrep/prng.hpp"

namespace qrep {

Poly Poly::one(const FieldSpec& f) {
    Poly r(f);
    r.c.push_back(Scalar::one(f));
    return r;
}

Poly Poly::t(const FieldSpec& f) {
    Poly r(f);
    r.c = {Scalar::zero(f), Scalar::one(f)};
    return r;
}

Poly Poly::from_ints(const FieldSpec& f, const std::vector<long long>& coeffs) {
    Poly r(f);
    r.c.reserve(coeffs.size());
    for (long long v : coeffs) r.c.push_back(Scalar::of_int(f, v));
    r.normalize();
    return r;
}

Poly Poly::from_scalars(const FieldSpec& f, std::vector<Scalar> coeffs) {
    Poly r(f);
    r.c = std::move(coeffs);
    for (const Scalar& s : r.c)
        if (s.field() != f) throw std::invalid_argument("coefficient field mismatch");
    r.normalize();
    return r;
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return Scalar::zero(field);
    return c[i];
}

Scalar Poly::leading() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return c.back();
}

void Poly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    Scalar l = leading().inv();
    Poly r(field);
    r.c.reserve(c.size());
    for (const Scalar& s : c) r.c.push_back(l * s);
    return r;
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Poly Poly::derivative() const {
    Poly r(field);
    for (size_t i = 1; i < c.size(); ++i)
        r.c.push_back(Scalar::of_int(field, static_cast<long long>(i)) * c[i]);
    r.normalize();
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.field != b.field) throw std::invalid_argument("polynomial field mismatch");
    Poly r(a.field);
    r.c.resize(std::max(a.c.size(), b.c.size()), Scalar::zero(a.field));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
        if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.normalize();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly nb = Scalar::of_int(b.field, -1) * b;
    return a + nb;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.field != b.field) throw std::invalid_argument("polynomial field mismatch");
    Poly r(a.field);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Scalar::zero(a.field));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.normalize();
    return r;
}

Poly operator*(const Scalar& s, const Poly& a) {
    Poly r(a.field);
    r.c.reserve(a.c.size());
    for (const Scalar& x : a.c) r.c.push_back(s * x);
    r.normalize();
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.field == b.field && a.c == b.c; }

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (a.field != b.field) throw std::invalid_argument("polynomial field mismatch");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(a.field), r = a;
    if (r.degree() < b.degree()) return {q, r};
    q.c.assign(r.degree() - b.degree() + 1, Scalar::zero(a.field));
    Scalar linv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Scalar f = r.leading() * linv;
        q.c[shift] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] = r.c[i + shift] - f * b.c[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_pow(const Poly& base, long long e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = Poly::one(base.field), b = base;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly poly_pow_mod(const Poly& base, BigInt e, const Poly& mod) {
    Poly r = Poly::one(base.field), b = poly_mod(base, mod);
    const BigInt two(2);
    while (!e.is_zero()) {
        if (!(e % two).is_zero()) r = poly_mod(r * b, mod);
        b = poly_mod(b * b, mod);
        e = e / two;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    if (a.field != b.field) throw std::invalid_argument("polynomial field mismatch");
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field);
    Poly g = poly_gcd(a, b);
    return poly_divmod(a * b, g).first.monic();
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    auto key = [](const Scalar& s) {
        if (s.field().is_prime_field()) return std::make_pair(std::string(), s.residue());
        return std::make_pair(s.rational().to_string(), static_cast<std::int64_t>(0));
    };
    for (size_t i = 0; i < a.c.size(); ++i) {
        auto ka = key(a.c[i]), kb = key(b.c[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

std::pair<Poly, Poly> coprime_split(const Poly& a, const Poly& b) {
    Poly g0 = poly_gcd(a, b);
    Poly a1 = poly_divmod(a, g0).first.monic();
    Poly b1 = b.monic();
    // push every prime shared with a1 entirely into a1
    while (true) {
        Poly g = poly_gcd(a1, b1);
        if (g.degree() <= 0) break;
        a1 = (a1 * g).monic();
        b1 = poly_divmod(b1, g).first.monic();
    }
    return {a1, b1};
}

// ------------------------------------------------------------ factorization

namespace {

// f(t) = g(t^p) with g recovered coefficient-wise (Frobenius fixes GF(p))
Poly pth_root(const Poly& f) {
    const std::int64_t p = f.field.p;
    Poly g(f.field);
    for (int i = 0; i * p <= f.degree(); ++i) g.c.push_back(f.coeff(i * static_cast<int>(p)));
    g.normalize();
    return g;
}

// monic squarefree pairwise-coprime parts: f = prod part^mult
void squarefree_decompose(const Poly& f, int outer_mult,
                          std::vector<std::pair<Poly, int>>& out) {
    const std::int64_t p = f.field.p;
    if (f.degree() < 1) return;
    Poly df = f.derivative();
    if (df.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * static_cast<int>(p), out);
        return;
    }
    Poly c = poly_gcd(f, df);
    Poly w = poly_divmod(f, c).first.monic();
    int i = 1;
    while (w.degree() >= 1) {
        Poly y = poly_gcd(w, c);
        Poly z = poly_divmod(w, y).first.monic();
        if (z.degree() >= 1) out.emplace_back(z, i * outer_mult);
        w = y;
        c = poly_divmod(c, y).first.monic();
        ++i;
    }
    if (c.degree() >= 1) squarefree_decompose(pth_root(c), outer_mult * static_cast<int>(p), out);
}

BigInt bigint_pow(std::int64_t base, int e) {
    BigInt r(1), b(base);
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}

// t^(p^k) mod f via k successive p-th powers
Poly frobenius_power(const Poly& f, int k) {
    Poly h = poly_mod(Poly::t(f.field), f);
    for (int i = 0; i < k; ++i) h = poly_pow_mod(h, BigInt(f.field.p), f);
    return h;
}

// distinct-degree: (product of degree-d irreducibles, d)
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly v = f.monic();
    Poly h = poly_mod(Poly::t(f.field), v);
    int d = 0;
    while (v.degree() >= 2 * (d + 1)) {
        ++d;
        h = poly_pow_mod(h, BigInt(f.field.p), v);
        Poly g = poly_gcd(h - Poly::t(f.field), v);
        if (g.degree() >= 1) {
            out.emplace_back(g, d);
            v = poly_divmod(v, g).first.monic();
            h = poly_mod(h, v);
        }
    }
    if (v.degree() >= 1) out.emplace_back(v, v.degree());
    return out;
}

// trace map r + r^2 + ... + r^(2^(d-1)) mod g, used for GF(2) splitting
Poly trace_map_gf2(const Poly& r, int d, const Poly& g) {
    Poly acc = poly_mod(r, g);
    Poly cur = acc;
    for (int i = 1; i < d; ++i) {
        cur = poly_mod(cur * cur, g);
        acc = acc + cur;
    }
    return poly_mod(acc, g);
}

// deterministic enumeration of candidate splitters
Poly nth_poly(const FieldSpec& f, std::uint64_t idx) {
    Poly r(f);
    std::uint64_t v = idx;
    const std::uint64_t p = static_cast<std::uint64_t>(f.p);
    while (v != 0) {
        r.c.push_back(Scalar::of_int(f, static_cast<long long>(v % p)));
        v /= p;
    }
    r.normalize();
    return r;
}

void equal_degree_split(const Poly& g, int d, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const std::int64_t p = g.field.p;
    Poly factor(g.field);
    if (p == 2) {
        for (std::uint64_t idx = 2;; ++idx) {
            Poly r = nth_poly(g.field, idx);
            Poly tr = trace_map_gf2(r, d, g);
            Poly h = poly_gcd(tr, g);
            if (h.degree() >= 1 && h.degree() < g.degree()) {
                factor = h;
                break;
            }
        }
    } else {
        BigInt e = (bigint_pow(p, d) - BigInt(1)) / BigInt(2);
        Prng rng(0x5eedULL + static_cast<std::uint64_t>(g.degree()) * 131 + d);
        while (true) {
            // random candidate of degree < deg g, not constant
            Poly r(g.field);
            for (int i = 0; i < g.degree(); ++i)
                r.c.push_back(Scalar::of_int(g.field, static_cast<long long>(rng.below(p))));
            r.normalize();
            if (r.degree() < 1) continue;
            Poly h = poly_gcd(r, g);
            if (h.degree() >= 1 && h.degree() < g.degree()) {
                factor = h;
                break;
            }
            Poly s = poly_pow_mod(r, e, g);
            h = poly_gcd(s - Poly::one(g.field), g);
            if (h.degree() >= 1 && h.degree() < g.degree()) {
                factor = h;
                break;
            }
        }
    }
    equal_degree_split(factor, d, out);
    equal_degree_split(poly_divmod(g, factor).first.monic(), d, out);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_gf(const Poly& f) {
    if (!f.field.is_prime_field())
        throw std::invalid_argument("factorization is supported over prime fields only");
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("factor_gf needs a monic polynomial of degree >= 1");

    std::vector<std::pair<Poly, int>> squarefree;
    squarefree_decompose(f, 1, squarefree);

    std::vector<std::pair<Poly, int>> out;
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<Poly> irreducibles;
            equal_degree_split(prod, d, irreducibles);
            for (const Poly& q : irreducibles) out.emplace_back(q, mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return poly_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_gf(const Poly& f) {
    if (!f.field.is_prime_field())
        throw std::invalid_argument("irreducibility test needs a prime field");
    int n = f.degree();
    if (n < 1) return false;
    Poly fm = f.monic();
    // Rabin: t^(p^n) = t mod f, and no degree n/q Frobenius fixed part for prime q | n
    Poly h = frobenius_power(fm, n);
    if (!(h - poly_mod(Poly::t(fm.field), fm)).is_zero()) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime(q)) continue;
        Poly hq = frobenius_power(fm, n / q);
        Poly g = poly_gcd(hq - Poly::t(fm.field), fm);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<Poly> enumerate_irreducibles(const FieldSpec& field, int degree, bool exclude_t) {
    if (!field.is_prime_field())
        throw std::invalid_argument("irreducible enumeration needs a prime field");
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<Poly> out;
    const std::int64_t p = field.p;
    std::uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(field);
        std::uint64_t v = idx;
        for (int i = 0; i < degree; ++i) {
            f.c.push_back(Scalar::of_int(field, static_cast<long long>(v % p)));
            v /= p;
        }
        f.c.push_back(Scalar::one(field));
        if (exclude_t && f == Poly::t(field)) continue;
        if (is_irreducible_gf(f)) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

Poly reciprocal_poly(const Poly& f) {
    if (f.is_zero() || f.coeff(0).is_zero())
        throw std::invalid_argument("reciprocal needs a nonzero constant term");
    Poly r(f.field);
    r.c.assign(f.c.rbegin(), f.c.rend());
    r.normalize();
    return r.monic();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        Scalar ci = coeff(i);
        if (ci.is_zero()) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || !ci.is_one()) s += ci.to_string();
        if (i >= 1) {
            if (!ci.is_one()) s += "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace qrep
