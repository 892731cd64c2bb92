#include "purelocus/cover.hpp"

#include <numeric>
#include <stdexcept>

namespace purelocus {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::DividesN: return "DividesN";
        case Regime::CoprimeNMinus1: return "CoprimeNMinus1";
        case Regime::NeitherRegime: return "NeitherRegime";
    }
    return "?";
}

Regime classify_regime(int n, int d) {
    if (n < 4) throw std::invalid_argument("regime: need n >= 4");
    if (d < 2) throw std::invalid_argument("regime: need d >= 2");
    if (n % d == 0) return Regime::DividesN;
    if (std::gcd(d, n - 1) == 1) return Regime::CoprimeNMinus1;
    return Regime::NeitherRegime;
}

CoverData::CoverData(int n, int d, int k) : n_(n), d_(d) {
    classify_regime(n, d);  // validates n and d
    int kk = k % d;
    if (kk < 0) kk += d;
    if (kk == 0) throw std::invalid_argument("cover: k = 0 mod d is the trivial character");
    k_ = kk;
}

EigenHodgeNumbers eigen_hodge_numbers(const CoverData& c) {
    const Rational q(Integer(c.n()) * c.k(), Integer(c.d()));
    const Rational qbar(Integer(c.n()) * (c.d() - c.k()), Integer(c.d()));
    EigenHodgeNumbers h;
    h.h10 = (q - Rational(1)).ceil().convert_to<long long>();
    h.h01 = (qbar - Rational(1)).ceil().convert_to<long long>();
    return h;
}

std::pair<long long, long long> signature(const CoverData& c) {
    const EigenHodgeNumbers h = eigen_hodge_numbers(c);
    return {h.h10, h.h01};
}

long long genus(int n, int d) {
    if (n < 3) throw std::invalid_argument("genus: need n >= 3");
    if (d < 2) throw std::invalid_argument("genus: need d >= 2");
    const long long prod = static_cast<long long>(d - 1) * (n - 2);
    if (prod % 2 != 0)
        throw std::domain_error("genus: (d-1)(n-2) is odd, no totally ramified cover exists");
    return prod / 2;
}

bool dimension_conservation(int n, int d) {
    if (classify_regime(n, d) == Regime::NeitherRegime)
        throw std::invalid_argument("dimension_conservation: needs an admissible regime");
    long long sum = 0;
    for (int k = 1; k <= d - 1; ++k) {
        const EigenHodgeNumbers h = eigen_hodge_numbers(CoverData(n, d, k));
        sum += h.h10 + h.h01;
    }
    return sum == 2 * genus(n, d);
}

}  // namespace purelocus
