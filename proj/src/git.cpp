#include "purelocus/git.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace purelocus {

namespace {

constexpr int kMaxSubsetScanPoints = 16;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

WeightVector::WeightVector(std::vector<EpsRational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("weights: empty vector");
    const EpsRational zero, one{Rational(1)};
    for (const auto& w : weights_) {
        if (!(zero < w)) throw std::invalid_argument("weights: every weight must be > 0");
        if (one < w) throw std::invalid_argument("weights: every weight must be <= 1");
        total_ += w;
    }
}

bool WeightVector::is_git_mode() const { return total_ == EpsRational(Rational(2)); }

bool WeightVector::is_hassett_mode() const { return EpsRational(Rational(2)) < total_; }

void WeightVector::require_git_mode() const {
    if (!is_git_mode())
        throw std::invalid_argument("weights: total must be exactly 2 (GIT mode), got " + total().str());
}

void WeightVector::require_hassett_mode() const {
    if (!is_hassett_mode())
        throw std::invalid_argument("weights: total must exceed 2 (Hassett mode), got " + total().str());
}

WeightVector WeightVector::parse(std::string_view text) {
    std::vector<EpsRational> weights;
    for (std::string_view token : split(text, ',')) weights.push_back(EpsRational::parse(token));
    return WeightVector(std::move(weights));
}

std::string WeightVector::str() const {
    std::string out;
    for (const auto& w : weights_) {
        if (!out.empty()) out += ", ";
        out += w.str();
    }
    return out;
}

CollisionPartition CollisionPartition::parse(std::string_view text) {
    CollisionPartition p;
    for (std::string_view block_text : split(text, '|')) {
        std::vector<int> block;
        for (std::string_view token : split(block_text, ',')) {
            const Rational r = Rational::parse(token);
            if (!r.is_integer() || r < Rational(1) || r > Rational(1 << 20))
                throw std::invalid_argument("partition: indices must be positive integers");
            block.push_back(r.numerator().convert_to<int>());
        }
        p.groups.push_back(std::move(block));
    }
    return p;
}

void CollisionPartition::validate(std::size_t n) const {
    if (groups.empty()) throw std::invalid_argument("partition: no blocks");
    // Bitmask fast path for the common small n; no allocation.
    if (n <= 64) {
        std::uint64_t seen = 0;
        std::size_t count = 0;
        for (const auto& block : groups) {
            if (block.empty()) throw std::invalid_argument("partition: empty block");
            for (int i : block) {
                if (i < 1 || static_cast<std::size_t>(i) > n)
                    throw std::invalid_argument("partition: index out of 1..n");
                const std::uint64_t bit = 1ull << (i - 1);
                if (seen & bit) throw std::invalid_argument("partition: repeated index");
                seen |= bit;
                ++count;
            }
        }
        if (count != n) throw std::invalid_argument("partition: blocks must cover 1..n");
        return;
    }
    std::vector<char> seen(n, 0);
    std::size_t count = 0;
    for (const auto& block : groups) {
        if (block.empty()) throw std::invalid_argument("partition: empty block");
        for (int i : block) {
            if (i < 1 || static_cast<std::size_t>(i) > n)
                throw std::invalid_argument("partition: index out of 1..n");
            if (seen[i - 1]) throw std::invalid_argument("partition: repeated index");
            seen[i - 1] = 1;
            ++count;
        }
    }
    if (count != n) throw std::invalid_argument("partition: blocks must cover 1..n");
}

std::string CollisionPartition::str() const {
    std::string out;
    for (const auto& block : groups) {
        if (!out.empty()) out += "|";
        std::string b;
        for (int i : block) {
            if (!b.empty()) b += ",";
            b += std::to_string(i);
        }
        out += b;
    }
    return out;
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::StrictlySemistable: return "strictly-semistable";
        case Stability::Unstable: return "unstable";
    }
    return "?";
}

Stability git_stability(const WeightVector& w, const CollisionPartition& p) {
    w.require_git_mode();
    p.validate(w.size());
    static const EpsRational one{Rational(1)};
    const auto& weights = w.weights();
    bool semistable = false;
    for (const auto& block : p.groups) {
        EpsRational sum;
        for (int i : block) sum += weights[static_cast<std::size_t>(i - 1)];
        if (one < sum) return Stability::Unstable;
        if (sum == one) semistable = true;
    }
    return semistable ? Stability::StrictlySemistable : Stability::Stable;
}

std::optional<WeightVector> canonical_weights(int n, int d) {
    if (n < 5) throw std::invalid_argument("canonical_weights: need n >= 5");
    switch (classify_regime(n, d)) {
        case Regime::DividesN:
            return WeightVector(std::vector<EpsRational>(
                static_cast<std::size_t>(n), EpsRational(Rational(2, n))));
        case Regime::CoprimeNMinus1: {
            std::vector<EpsRational> weights(
                static_cast<std::size_t>(n - 1),
                EpsRational(Rational(1, n - 1), Rational(1)));
            weights.emplace_back(Rational(1), Rational(-(n - 1)));
            return WeightVector(std::move(weights));
        }
        case Regime::NeitherRegime:
            return std::nullopt;
    }
    return std::nullopt;
}

CodimResult CodimResult::finite(long long value) {
    if (value < 1) throw std::invalid_argument("codim: finite value must be >= 1");
    return CodimResult(Kind::Finite, value);
}

long long CodimResult::value() const {
    if (kind_ != Kind::Finite) throw std::logic_error("codim: no finite value");
    return value_;
}

std::string CodimResult::str() const {
    switch (kind_) {
        case Kind::Finite: return std::to_string(value_);
        case Kind::Infinite: return "inf";
        case Kind::NotApplicable: return "not-applicable";
    }
    return "?";
}

namespace {

void require_codim_args(int n, int d, int k) {
    if (n < 5) throw std::invalid_argument("codim: need n >= 5");
    if (d < 2) throw std::invalid_argument("codim: need d >= 2");
    if (k < 1 || k > d - 1) throw std::invalid_argument("codim: need 1 <= k <= d-1");
}

}  // namespace

CodimResult codim_H_closed(int n, int d, int k) {
    require_codim_args(n, d, k);
    const Regime regime = classify_regime(n, d);
    if (regime == Regime::NeitherRegime) return CodimResult::not_applicable();
    const long long g = std::gcd(k, d);
    // Compare g against the threshold exactly by cross-multiplying.
    long long lhs, rhs;
    if (regime == Regime::DividesN) {
        lhs = g * n;  // g vs 2d/n
        rhs = 2LL * d;
    } else {
        lhs = g * (n - 2);  // g vs d/(n-2)
        rhs = d;
    }
    if (lhs > rhs) return CodimResult::finite(d / g - 1);
    if (lhs == rhs) return CodimResult::finite(n - 3);
    return CodimResult::infinite();
}

CodimResult codim_H_oracle(int n, int d, int k) {
    require_codim_args(n, d, k);
    const Regime regime = classify_regime(n, d);
    if (regime == Regime::NeitherRegime) return CodimResult::not_applicable();
    if (regime == Regime::DividesN) {
        for (int l = 2; 2 * l <= n; ++l)
            if ((static_cast<long long>(k) * l) % d == 0)
                return 2 * l == n ? CodimResult::finite(n - 3) : CodimResult::finite(l - 1);
        return CodimResult::infinite();
    }
    for (int l = 2; l <= n - 2; ++l)
        if ((static_cast<long long>(k) * l) % d == 0) return CodimResult::finite(l - 1);
    return CodimResult::infinite();
}

long long reduction_image_codim(int n, int d, int size) {
    if (n < 5) throw std::invalid_argument("reduction_image_codim: need n >= 5");
    const Regime regime = classify_regime(n, d);
    if (regime == Regime::NeitherRegime)
        throw std::invalid_argument("reduction_image_codim: no reduction morphism in this regime");
    if (regime == Regime::DividesN) {
        if (size < 2 || 2 * size > n)
            throw std::invalid_argument("reduction_image_codim: need 2 <= size <= n/2 when d | n");
        return 2 * size == n ? n - 3 : size - 1;
    }
    if (size < 2 || size > n - 2)
        throw std::invalid_argument("reduction_image_codim: need 2 <= size <= n-2");
    return size - 1;
}

bool hassett_reduction_exists(const WeightVector& a, const WeightVector& c) {
    if (a.size() != c.size())
        throw std::invalid_argument("reduction: weight vectors differ in length");
    a.require_hassett_mode();
    c.require_hassett_mode();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.at(i) < c.at(i)) return false;
    return true;
}

namespace {

// Representative of {I, I^c}: the side with fewer elements, ties broken by
// the side containing point 1 (which is also the lexicographically smaller).
unsigned canonical_subset_mask(unsigned mask, int n) {
    const unsigned full = (1u << n) - 1;
    const unsigned comp = full & ~mask;
    const int pm = std::popcount(mask), pc = std::popcount(comp);
    if (pm != pc) return pm < pc ? mask : comp;
    return (mask & 1u) ? mask : comp;
}

}  // namespace

std::vector<std::vector<int>> blowup_loci(const WeightVector& w) {
    w.require_git_mode();
    const int n = static_cast<int>(w.size());
    if (n > kMaxSubsetScanPoints)
        throw std::invalid_argument("blowup_loci: subset scan capped at 16 points");
    const EpsRational one{Rational(1)};
    std::vector<unsigned> hits;
    const unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        EpsRational sum;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sum += w.at(static_cast<std::size_t>(i));
        if (sum == one) hits.push_back(canonical_subset_mask(mask, n));
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

    std::vector<std::vector<int>> out;
    out.reserve(hits.size());
    for (unsigned mask : hits) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) members.push_back(i + 1);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace purelocus
