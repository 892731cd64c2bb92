#include "purelocus/eps_rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace purelocus {

std::string EpsRational::str() const {
    if (eps.is_zero()) return base.str();
    const bool neg = eps < Rational(0);
    const Rational coeff = neg ? -eps : eps;
    return base.str() + (neg ? " - (" : " + (") + coeff.str() + ")e";
}

EpsRational EpsRational::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("malformed weight: empty string");

    if (s.back() != 'e') return EpsRational(Rational::parse(s));

    // Split "BASE(+|-)COEFFe" at the sign that starts the eps term: the last
    // '+' or '-' that is not a leading sign and does not follow '/' or '('.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size() - 1; i >= 1; --i) {
        const char c = s[i];
        if ((c == '+' || c == '-') && s[i - 1] != '/' && s[i - 1] != '(' && s[i - 1] != '+' && s[i - 1] != '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw std::invalid_argument("malformed weight: '" + std::string(text) + "'");

    const Rational base = Rational::parse(s.substr(0, split));
    const bool neg = s[split] == '-';
    std::string coeff_text = s.substr(split + 1, s.size() - split - 2);  // drop trailing 'e'
    if (coeff_text.size() >= 2 && coeff_text.front() == '(' && coeff_text.back() == ')')
        coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
    const Rational coeff = coeff_text.empty() ? Rational(1) : Rational::parse(coeff_text);
    return EpsRational(base, neg ? -coeff : coeff);
}

int eps_compare(const EpsRational& a, const EpsRational& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

}  // namespace purelocus
