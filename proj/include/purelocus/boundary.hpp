#pragma once

#include "purelocus/cover.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace purelocus {

struct PureLocusReport;

/* Canonical representative of a boundary divisor D_I of the n-pointed space.
 * D_I = D_{I^c}, so exactly one representative is kept: the side with
 * 2 <= |I| <= floor(n/2), and the side containing 1 when |I| = n/2. */
class BoundaryDivisor {
public:
    // Throws unless 2 <= |I| <= n - 2 and all members lie in 1..n.
    static BoundaryDivisor canonicalize(int n, const std::set<int>& members);

    int n() const { return n_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    // min(|I|, |I^c|); equal to size() since the canonical side is the smaller.
    int min_side() const { return size(); }

    std::string str() const;  // "1,2,5"

    friend bool operator==(const BoundaryDivisor& a, const BoundaryDivisor& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }
    friend bool operator<(const BoundaryDivisor& a, const BoundaryDivisor& b) {
        return a.members_ < b.members_;
    }

private:
    BoundaryDivisor(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {}

    int n_;
    std::vector<int> members_;  // sorted ascending

    friend PureLocusReport enumerate_pure_locus(int n, int d, int k);
};

// The divisor is pure for character k iff k * min(|I|, |I^c|) != 0 mod d.
bool is_pure_divisor(const BoundaryDivisor& divisor, int d, int k);

struct PureLocusReport {
    int n = 0;
    int d = 0;
    int k = 0;
    Regime regime = Regime::NeitherRegime;
    std::vector<std::string> warnings;
    std::vector<BoundaryDivisor> non_pure;  // sorted lexicographically by members
    // size -> (pure count, non-pure count)
    std::map<int, std::pair<long long, long long>> counts_by_size;

    long long pure_count() const;
    long long non_pure_count() const;
    long long total_divisors() const;
};

/* Classifies every canonical divisor of the n-pointed boundary as pure or
 * non-pure for (d, k). NeitherRegime and n = 4 inputs are accepted with a
 * warning recorded in the report; the congruence itself is combinatorial.
 * Enumeration is capped at n <= 20. */
PureLocusReport enumerate_pure_locus(int n, int d, int k);

/* Pure for every character k in 1..d-1; the cover over a generic point of
 * the divisor is then of compact type. */
bool is_compact_type(int n, int d, const BoundaryDivisor& divisor);

/* Size of the cluster of marked points that collide at the image of the
 * divisor's generic point under the reduction to the regime's GIT quotient.
 * For d | n the smaller side collides; in the coprime regime the side away
 * from the distinguished last point collides. */
int git_collision_size(const BoundaryDivisor& divisor, Regime regime);

}  // namespace purelocus
