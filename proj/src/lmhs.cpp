#include "purelocus/lmhs.hpp"

#include "purelocus/spectra.hpp"

#include <algorithm>
#include <stdexcept>

namespace purelocus {

HodgeDeligneW1::HodgeDeligneW1(int r, int s, int a) : r_(r), s_(s), a_(a) {
    if (r < 0 || s < 0 || a < 0)
        throw std::invalid_argument("hodge-deligne: negative dimension");
    if (a > std::min(r, s))
        throw std::invalid_argument("hodge-deligne: a exceeds min(r, s)");
}

const char* to_string(LmhsType t) {
    return t == LmhsType::Pure ? "Pure" : "TypeI";
}

LmhsType lmhs_type(const HodgeDeligneW1& h) {
    return h.a() == 0 ? LmhsType::Pure : LmhsType::TypeI;
}

bool purity_from_vanishing(int d, int l, int k) {
    return h11_eigen(d, l, k) == 0;
}

namespace {

int shared_degree(const std::vector<std::pair<int, int>>& singularities) {
    if (singularities.empty())
        throw std::invalid_argument("lmhs: empty singularity list");
    const int d = singularities.front().first;
    for (const auto& [di, li] : singularities) {
        (void)li;
        if (di != d)
            throw std::invalid_argument("lmhs: singularities must share the cover degree");
    }
    return d;
}

}  // namespace

std::pair<long long, long long> h11_lim_bounds(
    const std::vector<std::pair<int, int>>& singularities, int k,
    bool connected_normalization) {
    shared_degree(singularities);
    long long lower = 0, upper = 0;
    for (const auto& [d, l] : singularities) {
        const int h = h11_eigen(d, l, k);
        lower = std::max<long long>(lower, h);
        upper += h;
    }
    if (connected_normalization) lower = upper;
    return {lower, upper};
}

bool vanishing_balance(long long h11_lim, long long h11_ph,
                       const std::vector<std::pair<int, int>>& singularities, int k) {
    if (h11_lim < 0 || h11_ph < 0)
        throw std::invalid_argument("vanishing_balance: dimensions must be nonnegative");
    shared_degree(singularities);
    long long total = 0;
    for (const auto& [d, l] : singularities) total += h11_eigen(d, l, k);
    return total == h11_lim + h11_ph;
}

}  // namespace purelocus
