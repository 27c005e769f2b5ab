#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "rigidcert/errors.hpp"

namespace rigidcert {

/// Arbitrary-precision rational scalar. Always reduced to lowest terms with
/// a positive denominator; every operation is exact. Wraps GMP's mpq.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "num" or "num/den" (den > 0). Reduces if not in lowest terms.
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// Canonical form: "num" when the denominator is 1, else "num/den".
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

using VecQ = std::vector<Rational>;

bool is_zero_vector(const VecQ& v);

/// Scales a nonzero rational vector to coprime integer entries with the
/// first nonzero entry positive. The canonical representative of its line.
VecQ canonical_direction(const VecQ& v);

} // namespace rigidcert
