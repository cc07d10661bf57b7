#ifndef QREP_FIELD_HPP
#define QREP_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

/// Base field of all scalar arithmetic: a prime field GF(p) or the rationals.
struct FieldSpec {
    enum class Kind { prime_finite, rational };

    Kind kind = Kind::prime_finite;
    std::int64_t p = 2;  // modulus, meaningful only for prime fields

    static FieldSpec gf(std::int64_t p);
    static FieldSpec rationals();

    bool is_prime_field() const { return kind == Kind::prime_finite; }
    bool is_rational() const { return kind == Kind::rational; }

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind == Kind::rational || p == o.p);
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;
};

bool is_prime(std::int64_t n);

/// Arbitrary-precision signed integer, sign/magnitude with 32-bit limbs.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(const std::string& s);
    std::string to_string() const;

    int signum() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncated division (quotient rounds toward zero).
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    friend BigInt gcd(BigInt a, BigInt b);

  private:
    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // little-endian limbs, no trailing zeros

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    void trim();
};

/// Reduced fraction with positive denominator.
struct Rational {
    BigInt num;
    BigInt den{1};

    Rational() = default;
    Rational(BigInt n, BigInt d);
    Rational(long long n) : num(n), den(1) {}

    void reduce();
    bool is_zero() const { return num.is_zero(); }
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
};

/// Exact field element over GF(p) or Q, always kept in canonical form
/// (value in [0,p) for prime fields, reduced fraction for the rationals).
class Scalar {
  public:
    Scalar() : f_(FieldSpec::gf(2)), v_(0) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(const FieldSpec& f, long long v);
    static Scalar of_rational(Rational r);

    const FieldSpec& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical integer representative, prime fields only.
    std::int64_t residue() const;
    const Rational& rational() const;

    Scalar operator-() const;
    Scalar inv() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

  private:
    FieldSpec f_;
    std::int64_t v_ = 0;  // prime-field value
    Rational q_;          // rational value

    static void require_same_field(const Scalar& a, const Scalar& b);
};

}  // namespace qrep

#endif
