// Exact rational scalar used everywhere set arithmetic needs a number.
// Thin value wrapper over GMP's mpq_class that guarantees canonical form
// (lowest terms, positive denominator) and adds parse/print and mod-1 helpers.
#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace tsl {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // accepts "a" or "a/b" with integer a, positive integer b; no decimals
    static Rational parse(const std::string& text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    BigInt floor() const;
    BigInt ceil() const;
    Rational mod1() const;  // representative in [0,1)
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    double to_double() const { return v_.get_d(); }
    std::string str() const;

    int sign() const { return sgn(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

}  // namespace tsl
