#pragma once

#include "purelocus/git.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace purelocus {

/* One row of the discreteness table: the braid-group image for (n, k/d) is a
 * lattice with signature (r, s), and H is the codimension of the non-pure
 * image in the GIT quotient (dash when neither regime applies). The rows
 * with k = d/2 carry the symplectic-lattice annotation. */
struct McMullenCase {
    int n = 0;
    int k = 0;
    int d = 0;
    int r = 0;
    int s = 0;
    CodimResult H = CodimResult::not_applicable();
    bool symplectic_lattice = false;  // k = d/2
    bool parametric = false;          // instantiated from an n > 12 family
};

// Renders H the way the table and its CSV do: "5", "inf" or "-".
std::string h_column_text(const CodimResult& h);

/* The table dataset: explicit rows for 5 <= n <= 12 loaded from the embedded
 * CSV, plus the four parametric families for n > 12 with k/d in
 * {1/6, 1/4, 1/3, 1/2} and H in {5, 3, 2, 1}. */
class TableDataset {
public:
    // The CSV shipped inside the binary; parsed once.
    static const TableDataset& embedded();
    // Strict loader; throws std::invalid_argument on any malformed row.
    static TableDataset from_csv(std::istream& in);

    const std::vector<McMullenCase>& explicit_rows() const { return rows_; }

    /* The row matching (n, k/d) with the ratio reduced first; parametric
     * families are instantiated with the ceiling signature formulas for
     * n > 12. nullopt when the table has no such case. */
    std::optional<McMullenCase> lookup(int n, int k, int d) const;

    /* Table membership of (n, k/d) or its conjugate (n, (d-k)/d), explicit
     * or parametric. Membership is McMullen's discreteness criterion. */
    bool is_discrete(int n, int k, int d) const;

    /* Recomputes the signature of every row and both routes to H, and
     * instantiates each parametric family for 13 <= n <= 40 (H is compared
     * only where a cover regime applies). Returns one message per
     * disagreement; empty means the dataset matches the computed values. */
    std::vector<std::string> validate_all() const;

private:
    std::vector<McMullenCase> rows_;
};

}  // namespace purelocus
