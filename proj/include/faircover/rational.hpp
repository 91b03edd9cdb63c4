#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace faircover {

/// Arbitrary-precision rational number, always kept canonical:
/// positive denominator, fraction in lowest terms.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}    // NOLINT: implicit by design
    Rational(long n) : v_(n) {}   // NOLINT
    Rational(long long n);        // NOLINT
    Rational(unsigned long long n);
    Rational(long num, long den);

    /// Parses "p", "-p", "p/q" (optional sign on p; q > 0 after normalization).
    static Rational parse(const std::string& text);

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// *this -= a * b, reusing a scratch value (hot path of the simplex).
    void sub_mul(const Rational& a, const Rational& b);
    void negate() { v_ = -v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// True iff the value lies strictly between 0 and 1.
    bool is_fractional_unit() const { return sign() > 0 && *this < Rational(1); }

    /// Smallest integer >= value. Throws if it does not fit in long.
    long ceil_long() const;

    std::string str() const;
    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace faircover
