#include "qrep/field.hpp"

#include <algorithm>

namespace qrep {

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::gf(std::int64_t p) {
    if (p < 2 || p >= (1LL << 16) || !is_prime(p))
        throw std::invalid_argument("field modulus must be a prime in [2, 2^16)");
    FieldSpec f;
    f.kind = Kind::prime_finite;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::rationals() {
    FieldSpec f;
    f.kind = Kind::rational;
    f.p = 0;
    return f;
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "Q" : ("GF(" + std::to_string(p) + ")");
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ------------------------------------------------------------------- BigInt

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                                 : 0ULL - static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    return r;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (cur < 0) {
            cur += (1LL << 32);
            borrow = 1;
        }
        r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.size() || carry; ++j) {
            std::uint64_t cur = r[i + j] + carry;
            if (j < b.size()) cur += static_cast<std::uint64_t>(a[i]) * b[j];
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// schoolbook long division on limbs, binary refinement per limb
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (b.empty()) throw std::domain_error("division by zero");
    q.assign(a.size(), 0);
    r.clear();
    // process bits of a from the most significant down, building remainder
    for (size_t limb = a.size(); limb-- > 0;) {
        for (int bit = 31; bit >= 0; --bit) {
            // r = 2r + bit
            std::uint32_t carry = (a[limb] >> bit) & 1u;
            for (size_t i = 0; i < r.size(); ++i) {
                std::uint32_t nc = r[i] >> 31;
                r[i] = (r[i] << 1) | carry;
                carry = nc;
            }
            if (carry) r.push_back(carry);
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[limb] |= (1u << bit);
            }
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.trim();
    return r;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    std::vector<std::uint32_t> q, rem;
    BigInt::divmod_mag(a.mag_, b.mag_, q, rem);
    BigInt r;
    r.mag_ = q;
    r.sign_ = q.empty() ? 0 : a.sign_ * b.sign_;
    r.trim();
    return r;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    std::vector<std::uint32_t> q, rem;
    BigInt::divmod_mag(a.mag_, b.mag_, q, rem);
    BigInt r;
    r.mag_ = rem;
    r.sign_ = rem.empty() ? 0 : a.sign_;
    r.trim();
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = 0;
    int sign = 1;
    if (s[0] == '-' || s[0] == '+') {
        sign = s[0] == '-' ? -1 : 1;
        i = 1;
    }
    if (i >= s.size()) throw std::invalid_argument("bad integer literal: " + s);
    BigInt r;
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
        r = r * ten + BigInt(s[i] - '0');
    }
    if (sign < 0) r = -r;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    const std::vector<std::uint32_t> base = {1000000000u};
    while (!m.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(m, base, q, r);
        std::uint32_t chunk = r.empty() ? 0 : r[0];
        std::string part = std::to_string(chunk);
        if (!q.empty()) part = std::string(9 - part.size(), '0') + part;
        digits = part + digits;
        m = q;
    }
    return (sign_ < 0 ? "-" : "") + digits;
}

// ----------------------------------------------------------------- Rational

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { reduce(); }

void Rational::reduce() {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) {
        den = BigInt(1);
        return;
    }
    if (den.signum() < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = gcd(num, den);
    if (!g.is_one()) {
        num = num / g;
        den = den / g;
    }
}

std::string Rational::to_string() const {
    if (den.is_one()) return num.to_string();
    return num.to_string() + "/" + den.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(a.num * b.den, a.den * b.num);
}
bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

// ------------------------------------------------------------------- Scalar

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    if (a.f_ != b.f_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::zero(const FieldSpec& f) { return of_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long long v) {
    Scalar s;
    s.f_ = f;
    if (f.is_prime_field()) {
        std::int64_t m = static_cast<std::int64_t>(v % f.p);
        if (m < 0) m += f.p;
        s.v_ = m;
    } else {
        s.q_ = Rational(v);
    }
    return s;
}

Scalar Scalar::of_rational(Rational r) {
    Scalar s;
    s.f_ = FieldSpec::rationals();
    s.q_ = std::move(r);
    s.q_.reduce();
    return s;
}

bool Scalar::is_zero() const { return f_.is_prime_field() ? v_ == 0 : q_.is_zero(); }

bool Scalar::is_one() const {
    return f_.is_prime_field() ? v_ == 1 : (q_.num.is_one() && q_.den.is_one());
}

std::int64_t Scalar::residue() const {
    if (!f_.is_prime_field()) throw std::invalid_argument("residue() needs a prime field");
    return v_;
}

const Rational& Scalar::rational() const {
    if (!f_.is_rational()) throw std::invalid_argument("rational() needs the rational field");
    return q_;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (f_.is_prime_field()) {
        if (r.v_ != 0) r.v_ = f_.p - r.v_;
    } else {
        r.q_.num = -r.q_.num;
    }
    return r;
}

static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return t;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r = *this;
    if (f_.is_prime_field())
        r.v_ = mod_inverse(v_, f_.p);
    else
        r.q_ = Rational(q_.den, q_.num);
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    Scalar r = a;
    if (a.f_.is_prime_field()) {
        r.v_ = a.v_ + b.v_;
        if (r.v_ >= a.f_.p) r.v_ -= a.f_.p;
    } else {
        r.q_ = a.q_ + b.q_;
    }
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    Scalar r = a;
    if (a.f_.is_prime_field())
        r.v_ = (a.v_ * b.v_) % a.f_.p;
    else
        r.q_ = a.q_ * b.q_;
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    return a * b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.f_ != b.f_) return false;
    return a.f_.is_prime_field() ? a.v_ == b.v_ : a.q_ == b.q_;
}

std::string Scalar::to_string() const {
    return f_.is_prime_field() ? std::to_string(v_) : q_.to_string();
}

}  // namespace qrep
