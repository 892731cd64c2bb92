#pragma once

#include "purelocus/cover.hpp"
#include "purelocus/eps_rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace purelocus {

/* Weights attached to the n points, each satisfying 0 < w_i <= 1 under the
 * eps-lexicographic order. GIT mode additionally requires the total to be
 * exactly 2; Hassett mode requires the total to exceed 2. */
class WeightVector {
public:
    explicit WeightVector(std::vector<EpsRational> weights);

    std::size_t size() const { return weights_.size(); }
    const EpsRational& at(std::size_t i) const { return weights_.at(i); }
    const std::vector<EpsRational>& weights() const { return weights_; }

    const EpsRational& total() const { return total_; }
    bool is_git_mode() const;
    bool is_hassett_mode() const;
    void require_git_mode() const;
    void require_hassett_mode() const;

    // Comma-separated tokens: "p/q", "p/q+e", "p/q-Ne", ...
    static WeightVector parse(std::string_view text);
    std::string str() const;

private:
    std::vector<EpsRational> weights_;
    EpsRational total_;  // cached; the vector is immutable after construction
};

/* Blocks of coincident points, indices 1..n; singleton blocks are free
 * points. Parsed from pipe-separated blocks, e.g. "1,2|3|4,5,6". */
struct CollisionPartition {
    std::vector<std::vector<int>> groups;

    static CollisionPartition parse(std::string_view text);
    // Throws unless the blocks partition {1..n}.
    void validate(std::size_t n) const;
    std::string str() const;
};

enum class Stability { Stable, StrictlySemistable, Unstable };

const char* to_string(Stability s);

/* Stable when every block's weight sum is < 1, unstable when some block sum
 * exceeds 1, strictly semistable otherwise (some block sum equals 1 exactly).
 * Sums are compared to 1 eps-lexicographically, so 1 + e counts as > 1. */
Stability git_stability(const WeightVector& w, const CollisionPartition& p);

/* The regime's canonical weight vector: (2/n, ..., 2/n) when d | n;
 * (1/(n-1) + e) on the first n-1 points and 1 - (n-1)e on the last when
 * d does not divide n and gcd(d, n-1) = 1; nullopt otherwise. */
std::optional<WeightVector> canonical_weights(int n, int d);

/* Codimension of the non-pure image inside the GIT quotient: a finite value
 * >= 1, infinite (the image misses nothing), or not applicable (the (n, d)
 * pair admits no totally ramified cover, mirroring the dash rows of the
 * discreteness table). */
class CodimResult {
public:
    enum class Kind { Finite, Infinite, NotApplicable };

    static CodimResult finite(long long value);
    static CodimResult infinite() { return CodimResult(Kind::Infinite, 0); }
    static CodimResult not_applicable() { return CodimResult(Kind::NotApplicable, 0); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_not_applicable() const { return kind_ == Kind::NotApplicable; }
    long long value() const;

    std::string str() const;  // "5", "inf" or "not-applicable"

    friend bool operator==(const CodimResult&, const CodimResult&) = default;

private:
    CodimResult(Kind kind, long long value) : kind_(kind), value_(value) {}

    Kind kind_;
    long long value_;
};

/* H(n, d, k) by the closed case formulas. With g = gcd(k, d):
 * for d | n the threshold is 2d/n and H is d/g - 1 above it, n - 3 at it,
 * infinite below it; for the coprime regime the threshold is d/(n-2) with the
 * same shape. NotApplicable when neither regime holds. */
CodimResult codim_H_closed(int n, int d, int k);

/* H(n, d, k) by brute force: scan for the smallest cluster size l with
 * d | k*l, where l is capped at n/2 (d | n) or n - 2 (coprime regime). The
 * cap at n/2 lands on the zero-dimensional boundary, giving n - 3. */
CodimResult codim_H_oracle(int n, int d, int k);

/* Codimension in the GIT quotient of the image of a divisor whose smaller
 * side has the given size: size - 1, except that size = n/2 with d | n is
 * contracted to a point, giving n - 3. */
long long reduction_image_codim(int n, int d, int size);

// Whether the Hassett space for weights a reduces onto the one for weights c.
bool hassett_reduction_exists(const WeightVector& a, const WeightVector& c);

/* All proper subsets whose weight sum is exactly 1, canonicalized modulo
 * I <-> I^c and sorted by (size, members). Nonempty exactly when the map
 * from the perturbed Hassett space to the GIT quotient is a blow-up; an
 * empty list signals an isomorphism. Capped at 16 points. */
std::vector<std::vector<int>> blowup_loci(const WeightVector& w);

}  // namespace purelocus
