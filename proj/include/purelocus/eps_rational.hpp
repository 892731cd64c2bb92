#pragma once

#include "purelocus/rational.hpp"

namespace purelocus {

/* base + eps * e for a single formal infinitesimal e, positive and smaller
 * than every positive rational. e is never assigned a numeric value: ordering
 * is lexicographic on (base, eps) and sums act componentwise. */
struct EpsRational {
    Rational base;
    Rational eps;

    EpsRational() = default;
    EpsRational(Rational b) : base(std::move(b)) {}
    EpsRational(Rational b, Rational e) : base(std::move(b)), eps(std::move(e)) {}

    bool is_zero() const { return base.is_zero() && eps.is_zero(); }

    // "p/q", "p/q + (r/s)e" or "p/q - (r/s)e".
    std::string str() const;
    // Accepts "p/q", "p/q+e", "p/q-e", "p/q+Ne", "p/q-Ne" with N a rational
    // coefficient, optionally parenthesized. Whitespace is ignored.
    static EpsRational parse(std::string_view text);

    friend EpsRational operator+(const EpsRational& a, const EpsRational& b) {
        return EpsRational(a.base + b.base, a.eps + b.eps);
    }
    friend EpsRational operator-(const EpsRational& a, const EpsRational& b) {
        return EpsRational(a.base - b.base, a.eps - b.eps);
    }
    EpsRational operator-() const { return EpsRational(-base, -eps); }
    EpsRational& operator+=(const EpsRational& o) {
        if (!o.base.is_zero()) base += o.base;
        if (!o.eps.is_zero()) eps += o.eps;
        return *this;
    }

    friend bool operator==(const EpsRational& a, const EpsRational& b) {
        return a.base == b.base && a.eps == b.eps;
    }
    friend bool operator!=(const EpsRational& a, const EpsRational& b) { return !(a == b); }
    friend bool operator<(const EpsRational& a, const EpsRational& b) {
        if (a.base != b.base) return a.base < b.base;
        return a.eps < b.eps;
    }
    friend bool operator>(const EpsRational& a, const EpsRational& b) { return b < a; }
    friend bool operator<=(const EpsRational& a, const EpsRational& b) { return !(b < a); }
    friend bool operator>=(const EpsRational& a, const EpsRational& b) { return !(a < b); }
};

// Lexicographic comparison: -1, 0 or +1.
int eps_compare(const EpsRational& a, const EpsRational& b);

}  // namespace purelocus
