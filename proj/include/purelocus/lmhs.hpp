#pragma once

#include <utility>
#include <vector>

namespace purelocus {

/* Weight-one Hodge-Deligne diagram with Hodge numbers (r, s) and a the rank
 * of the monodromy logarithm: the diagram has I^{1,0} = r - a, I^{0,1} = s - a
 * and a boxes at each of (1,1) and (0,0). */
class HodgeDeligneW1 {
public:
    HodgeDeligneW1(int r, int s, int a);

    int r() const { return r_; }
    int s() const { return s_; }
    int a() const { return a_; }
    int i10() const { return r_ - a_; }
    int i01() const { return s_ - a_; }
    int i11() const { return a_; }
    int i00() const { return a_; }

private:
    int r_;
    int s_;
    int a_;
};

enum class LmhsType { Pure, TypeI };

const char* to_string(LmhsType t);

// Pure exactly when a = 0, i.e. all p = q pieces vanish.
LmhsType lmhs_type(const HodgeDeligneW1& h);

/* Purity of the limiting structure at a y^d + x^l degeneration restricted to
 * the k-th character: pure iff the (1,1) eigenpiece vanishes, iff d does not
 * divide k*l. */
bool purity_from_vanishing(int d, int l, int k);

/* Bounds for the limiting (1,1) dimension when the central fiber has several
 * singular points (d, l_i), all sharing the cover degree d:
 *   max_i h11_eigen  <=  h11_lim  <=  sum_i h11_eigen.
 * When the central fiber has connected normalization the phantom term
 * vanishes and the upper bound is attained, so lower is promoted to upper. */
std::pair<long long, long long> h11_lim_bounds(
    const std::vector<std::pair<int, int>>& singularities, int k,
    bool connected_normalization);

/* Dimension balance of the vanishing cycle sequence in weight one:
 * sum_i dim(V_i^{1,1}) = h11_lim + h11_ph. */
bool vanishing_balance(long long h11_lim, long long h11_ph,
                       const std::vector<std::pair<int, int>>& singularities, int k);

}  // namespace purelocus
