#pragma once

#include "purelocus/rational.hpp"

#include <utility>

namespace purelocus {

/* Which construction of the degree-d cyclic cover applies to n marked points:
 * all points finite when d | n, the last point pinned at infinity when
 * d does not divide n but gcd(d, n-1) = 1, and no totally ramified cover at
 * all otherwise. */
enum class Regime { DividesN, CoprimeNMinus1, NeitherRegime };

const char* to_string(Regime r);

// Throws std::invalid_argument for n < 4 or d < 2.
Regime classify_regime(int n, int d);

/* A branched-cover instance: n marked points on the line, cover degree d and
 * character index k. k is normalized mod d into 1..d-1; the trivial character
 * k = 0 mod d carries no period data and is rejected. */
class CoverData {
public:
    CoverData(int n, int d, int k);

    int n() const { return n_; }
    int d() const { return d_; }
    int k() const { return k_; }
    Regime regime() const { return classify_regime(n_, d_); }
    CoverData conjugate() const { return CoverData(n_, d_, d_ - k_); }

private:
    int n_;
    int d_;
    int k_;
};

struct EigenHodgeNumbers {
    long long h10 = 0;
    long long h01 = 0;
    friend bool operator==(const EigenHodgeNumbers&, const EigenHodgeNumbers&) = default;
};

/* h10 = ceil(n k/d - 1), h01 = ceil(n (d-k)/d - 1). Valid in every regime;
 * only the codimension machinery needs the regime hypothesis. */
EigenHodgeNumbers eigen_hodge_numbers(const CoverData& c);

// The signature (r, s) of the period domain U(r, s); alias of the above.
std::pair<long long, long long> signature(const CoverData& c);

/* Genus (d-1)(n-2)/2 of the degree-d cover totally ramified over n points.
 * Throws std::domain_error when (d-1)(n-2) is odd (impossible in an
 * admissible regime) and std::invalid_argument for n < 3 or d < 2. */
long long genus(int n, int d);

/* Whether the eigenspace dimensions sum to 2 genus(n, d), i.e.
 * sum_{k=1}^{d-1} (h10_k + h01_k) = (d-1)(n-2). Exact for d | n. In the
 * coprime regime the ceiling formulas instead sum to
 * (d-1)(n-1) + 1 - gcd(n, d), so this returns false there. */
bool dimension_conservation(int n, int d);

}  // namespace purelocus
