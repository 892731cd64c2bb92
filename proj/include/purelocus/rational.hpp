#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

namespace purelocus {

using Integer = boost::multiprecision::cpp_int;

/* Exact rational number, always stored reduced with a positive denominator.
 * Integers are arbitrary precision so exhaustive sweeps never overflow
 * silently. No floating point is used anywhere in this project. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return v_.is_zero(); }

    // Least integer >= *this.
    Integer ceil() const;
    // Greatest integer <= *this.
    Integer floor() const;

    // Prints "p/q", or just "p" for integral values.
    std::string str() const;
    // Accepts "p/q" or "p"; throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(Rep(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit Rational(Rep v) : v_(std::move(v)) {}
    Rep v_;
};

// rat_ceil / rat_is_integer as free functions, mirroring the library surface.
inline Integer rat_ceil(const Rational& x) { return x.ceil(); }
inline bool rat_is_integer(const Rational& x) { return x.is_integer(); }

}  // namespace purelocus
