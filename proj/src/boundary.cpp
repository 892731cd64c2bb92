#include "purelocus/boundary.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace purelocus {

namespace {

constexpr int kMaxEnumeratedPoints = 20;

std::vector<int> members_from_mask(int n, unsigned mask) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) out.push_back(i + 1);
    return out;
}

}  // namespace

BoundaryDivisor BoundaryDivisor::canonicalize(int n, const std::set<int>& members) {
    if (n < 4) throw std::invalid_argument("divisor: need n >= 4");
    for (int i : members)
        if (i < 1 || i > n) throw std::invalid_argument("divisor: member out of 1..n");
    const int m = static_cast<int>(members.size());
    if (m < 2 || m > n - 2)
        throw std::invalid_argument("divisor: need 2 <= |I| <= n - 2");
    const bool take_complement = 2 * m > n || (2 * m == n && members.count(1) == 0);
    std::vector<int> out;
    if (take_complement) {
        for (int i = 1; i <= n; ++i)
            if (members.count(i) == 0) out.push_back(i);
    } else {
        out.assign(members.begin(), members.end());
    }
    return BoundaryDivisor(n, std::move(out));
}

std::string BoundaryDivisor::str() const {
    std::string out;
    for (int i : members_) {
        if (!out.empty()) out += ",";
        out += std::to_string(i);
    }
    return out;
}

bool is_pure_divisor(const BoundaryDivisor& divisor, int d, int k) {
    if (d < 2) throw std::invalid_argument("is_pure_divisor: need d >= 2");
    if (k < 1 || k > d - 1) throw std::invalid_argument("is_pure_divisor: need 1 <= k <= d-1");
    return (static_cast<long long>(k) * divisor.min_side()) % d != 0;
}

long long PureLocusReport::pure_count() const {
    long long total = 0;
    for (const auto& [size, counts] : counts_by_size) total += counts.first;
    return total;
}

long long PureLocusReport::non_pure_count() const {
    long long total = 0;
    for (const auto& [size, counts] : counts_by_size) total += counts.second;
    return total;
}

long long PureLocusReport::total_divisors() const {
    return pure_count() + non_pure_count();
}

PureLocusReport enumerate_pure_locus(int n, int d, int k) {
    if (n < 4) throw std::invalid_argument("pure-locus: need n >= 4");
    if (n > kMaxEnumeratedPoints)
        throw std::invalid_argument("pure-locus: enumeration capped at n <= 20");
    if (d < 2) throw std::invalid_argument("pure-locus: need d >= 2");
    if (k < 1 || k > d - 1) throw std::invalid_argument("pure-locus: need 1 <= k <= d-1");

    PureLocusReport report;
    report.n = n;
    report.d = d;
    report.k = k;
    report.regime = classify_regime(n, d);
    if (report.regime == Regime::NeitherRegime)
        report.warnings.push_back(
            "NeitherRegime: the classification is combinatorial only; no cover "
            "with totally ramified marked points exists for this (n, d)");
    if (n == 4) report.warnings.push_back("n = 4: results are stated for n >= 5");

    for (int size = 2; 2 * size <= n; ++size) report.counts_by_size[size] = {0, 0};

    const unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        const int m = std::popcount(mask);
        if (m < 2 || m > n - 2) continue;
        if (!(2 * m < n || (2 * m == n && (mask & 1u)))) continue;  // canonical reps only
        const bool pure = (static_cast<long long>(k) * m) % d != 0;
        auto& counts = report.counts_by_size[m];
        if (pure) {
            ++counts.first;
        } else {
            ++counts.second;
            report.non_pure.push_back(BoundaryDivisor(n, members_from_mask(n, mask)));
        }
    }
    std::sort(report.non_pure.begin(), report.non_pure.end());
    return report;
}

bool is_compact_type(int n, int d, const BoundaryDivisor& divisor) {
    if (n != divisor.n())
        throw std::invalid_argument("is_compact_type: n disagrees with the divisor");
    if (d < 2) throw std::invalid_argument("is_compact_type: need d >= 2");
    for (int k = 1; k <= d - 1; ++k)
        if (!is_pure_divisor(divisor, d, k)) return false;
    return true;
}

int git_collision_size(const BoundaryDivisor& divisor, Regime regime) {
    switch (regime) {
        case Regime::DividesN:
            return divisor.size();
        case Regime::CoprimeNMinus1: {
            const auto& m = divisor.members();
            const bool has_last = std::binary_search(m.begin(), m.end(), divisor.n());
            // The side containing the distinguished point survives; the other
            // side's points merge.
            return has_last ? divisor.n() - divisor.size() : divisor.size();
        }
        case Regime::NeitherRegime:
            break;
    }
    throw std::invalid_argument("git_collision_size: no GIT reduction in this regime");
}

}  // namespace purelocus
