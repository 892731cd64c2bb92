#include "purelocus/spectra.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace purelocus {

namespace {

void require_curve_args(int d, int l) {
    if (d < 2 || l < 2) throw std::invalid_argument("spectra: need d, l >= 2");
}

bool entry_key_less(const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    if (a.eta != b.eta) return a.eta < b.eta;
    return a.weight < b.weight;
}

}  // namespace

BrieskornPham::BrieskornPham(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty())
        throw std::invalid_argument("brieskorn-pham: need at least one exponent");
    for (int l : exponents_)
        if (l < 2) throw std::invalid_argument("brieskorn-pham: exponents must be >= 2");
}

std::vector<ExponentVector> jacobian_basis(const BrieskornPham& f) {
    const auto& ls = f.exponents();
    std::vector<ExponentVector> out;
    ExponentVector beta(ls.size(), 0);
    // Odometer with the last coordinate fastest: lexicographic output order.
    while (true) {
        out.push_back(beta);
        int j = static_cast<int>(ls.size()) - 1;
        while (j >= 0 && beta[j] == ls[j] - 2) beta[j--] = 0;
        if (j < 0) break;
        ++beta[j];
    }
    return out;
}

Integer milnor_number(const BrieskornPham& f) {
    Integer mu = 1;
    for (int l : f.exponents()) mu *= (l - 1);
    return mu;
}

Rational l_of_beta(const ExponentVector& beta, const BrieskornPham& f) {
    const auto& ls = f.exponents();
    if (beta.size() != ls.size())
        throw std::invalid_argument("l_of_beta: exponent vector has wrong length");
    Rational sum;
    for (std::size_t j = 0; j < ls.size(); ++j) {
        if (beta[j] < 0 || beta[j] > ls[j] - 2)
            throw std::invalid_argument("l_of_beta: beta outside the Jacobian basis box");
        sum += Rational(Integer(beta[j] + 1), Integer(ls[j]));
    }
    return sum;
}

long long Eigenspectra::total_multiplicity() const {
    long long total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

Eigenspectra eigenspectra_curve(int d, int l) {
    require_curve_args(d, l);
    std::vector<SpectrumEntry> raw;
    raw.reserve(static_cast<std::size_t>(d - 1) * (l - 1));
    for (int k = 1; k <= d - 1; ++k) {
        const Rational eta{Integer(k), Integer(d)};
        for (int a = 0; a <= l - 2; ++a) {
            SpectrumEntry e;
            e.alpha = Rational(Integer(a + 1), Integer(l)) + eta;
            e.eta = eta;
            e.weight = e.alpha.is_integer() ? 2 : 1;
            e.multiplicity = 1;
            raw.push_back(std::move(e));
        }
    }
    std::sort(raw.begin(), raw.end(), entry_key_less);

    Eigenspectra sp;
    for (auto& e : raw) {
        if (!sp.entries.empty() && sp.entries.back().alpha == e.alpha &&
            sp.entries.back().eta == e.eta && sp.entries.back().weight == e.weight)
            sp.entries.back().multiplicity += e.multiplicity;
        else
            sp.entries.push_back(std::move(e));
    }
    return sp;
}

long long grW_top_dim(int d, int l) {
    require_curve_args(d, l);
    const BrieskornPham f({l, d});
    long long count = 0;
    for (const auto& beta : jacobian_basis(f))
        if (l_of_beta(beta, f).is_integer()) ++count;
    return count;
}

int h11_eigen(int d, int l, int k) {
    require_curve_args(d, l);
    if (k < 1 || k > d - 1) throw std::invalid_argument("h11_eigen: need 1 <= k <= d-1");
    return (static_cast<long long>(k) * l) % d == 0 ? 1 : 0;
}

}  // namespace purelocus
