#pragma once

#include "purelocus/rational.hpp"

#include <vector>

namespace purelocus {

/* The singularity z_0^{l_0} + ... + z_s^{l_s} at the origin. The weight
 * vector w_j = 1/l_j gives every defining monomial weighted degree 1. */
class BrieskornPham {
public:
    explicit BrieskornPham(std::vector<int> exponents);

    const std::vector<int>& exponents() const { return exponents_; }
    int vars() const { return static_cast<int>(exponents_.size()); }  // s + 1

private:
    std::vector<int> exponents_;
};

using ExponentVector = std::vector<int>;

/* Monomial basis of the Jacobian algebra: all beta with
 * 0 <= beta_j <= l_j - 2 componentwise, in lexicographic order. */
std::vector<ExponentVector> jacobian_basis(const BrieskornPham& f);

// Dimension of the Jacobian algebra: prod_j (l_j - 1).
Integer milnor_number(const BrieskornPham& f);

// l(beta) = sum_j (beta_j + 1) / l_j, always in (0, s+1).
// Throws if beta lies outside the basis box.
Rational l_of_beta(const ExponentVector& beta, const BrieskornPham& f);

struct SpectrumEntry {
    Rational alpha;           // exponent p + lambda of the semisimple monodromy
    Rational eta;             // deck-character exponent, in [0, 1)
    int weight = 1;           // s or s + 1
    long long multiplicity = 1;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct Eigenspectra {
    // Sorted by (alpha, eta, weight); equal triples merged into one entry.
    std::vector<SpectrumEntry> entries;

    long long total_multiplicity() const;
};

/* Eigenspectra of the plane-curve singularity y^d + x^l: one entry per
 * (a, k) with 0 <= a <= l-2 and 1 <= k <= d-1, where
 *   alpha = (a+1)/l + k/d,   eta = k/d,
 *   weight = 2 when alpha is an integer, 1 otherwise.
 * The character k runs over 1..d-1 so that the total multiplicity equals the
 * Milnor number (l-1)(d-1); eta records the deck-transformation character,
 * which is the indexing under which the (1,1) eigenpiece below matches. */
Eigenspectra eigenspectra_curve(int d, int l);

/* Number of Jacobian-basis elements of y^d + x^l with integral l(beta);
 * this is the dimension of the top weight-graded piece, and the number of
 * weight-2 entries of eigenspectra_curve. */
long long grW_top_dim(int d, int l);

/* Dimension of the k-th eigenpiece of the (1,1) part of the vanishing
 * cohomology of y^d + x^l: 1 when d divides k*l, else 0. */
int h11_eigen(int d, int l, int k);

}  // namespace purelocus
