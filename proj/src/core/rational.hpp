#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace wfa {

// Exact rational number. Always kept canonical: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);

    // Accepts an optional sign, a decimal integer, and an optional
    // "/" followed by a positive decimal integer ("-3/7", "4").
    static Rational from_string(std::string_view text);

    std::string to_string() const;

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace wfa
