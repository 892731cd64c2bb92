#include "purelocus/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace purelocus {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    s = strip(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
    if (digits.empty())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    return Integer(std::string(s));
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    // cpp_rational rejects negative denominators, so normalize the sign here.
    if (den < 0)
        v_ = Rep(-num, -den);
    else
        v_ = Rep(num, den);
}

Integer Rational::ceil() const {
    const Integer n = numerator(), d = denominator();
    Integer q = n / d;  // truncates toward zero
    if (n > 0 && q * d != n) ++q;
    return q;
}

Integer Rational::floor() const {
    const Integer n = numerator(), d = denominator();
    Integer q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (!is_integer()) out += "/" + denominator().str();
    return out;
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = strip(text);
    if (s.empty()) throw std::invalid_argument("malformed rational: empty string");
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    if (s.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    const Integer num = parse_integer(s.substr(0, slash), text);
    const Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("malformed rational: zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_.is_zero()) throw std::domain_error("rational: division by zero");
    return Rational(Rational::Rep(a.v_ / b.v_));
}

}  // namespace purelocus
