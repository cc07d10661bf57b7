#ifndef QREP_POLY_HPP
#define QREP_POLY_HPP

#include <utility>
#include <vector>

#include "qrep/field.hpp"

namespace qrep {

/// Univariate polynomial, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
struct Poly {
    FieldSpec field;
    std::vector<Scalar> c;

    Poly() : field(FieldSpec::gf(2)) {}
    explicit Poly(const FieldSpec& f) : field(f) {}

    static Poly zero(const FieldSpec& f) { return Poly(f); }
    static Poly one(const FieldSpec& f);
    static Poly t(const FieldSpec& f);
    static Poly from_ints(const FieldSpec& f, const std::vector<long long>& coeffs);
    static Poly from_scalars(const FieldSpec& f, std::vector<Scalar> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back().is_one(); }
    Scalar coeff(int i) const;
    Scalar leading() const;

    void normalize();  // drop trailing zeros

    Poly monic() const;
    Scalar eval(const Scalar& x) const;
    Poly derivative() const;
    std::string to_string() const;  // human form, e.g. "t^2+t+1"

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

/// quotient/remainder, divisor nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& base, long long e);
Poly poly_pow_mod(const Poly& base, BigInt e, const Poly& mod);

/// Monic gcd; gcd(f, 0) = monic(f).
Poly poly_gcd(Poly a, Poly b);
Poly poly_lcm(const Poly& a, const Poly& b);

/// Canonical ordering: degree, then coefficient sequence low to high
/// (integer representatives). Total order on canonical-form polynomials.
bool poly_less(const Poly& a, const Poly& b);

/// Splits lcm(a,b) = a1*b1 with a1 | a, b1 | b and gcd(a1,b1) = 1,
/// using gcds only (no factorization). Inputs monic nonzero.
std::pair<Poly, Poly> coprime_split(const Poly& a, const Poly& b);

/// Monic irreducible factors with multiplicities, sorted canonically.
/// Prime fields only; f monic with deg f >= 1.
std::vector<std::pair<Poly, int>> factor_gf(const Poly& f);

bool is_irreducible_gf(const Poly& f);

/// All monic irreducibles of exactly the given degree over GF(p),
/// sorted canonically; optionally excluding p(t) = t.
std::vector<Poly> enumerate_irreducibles(const FieldSpec& field, int degree, bool exclude_t);

/// Monic normalization of t^deg(f) * f(1/t); requires f(0) != 0.
/// This is the minimal polynomial of the inverse of a companion matrix of f.
Poly reciprocal_poly(const Poly& f);

}  // namespace qrep

#endif
