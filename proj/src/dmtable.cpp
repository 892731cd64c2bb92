#include "purelocus/dmtable.hpp"

#include "mcmullen_table_data.hpp"
#include "purelocus/cover.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace purelocus {

namespace {

struct ParametricFamily {
    int k;
    int d;
    long long H;
};

// The n > 12 rows of the table; signatures follow the ceiling formulas.
constexpr ParametricFamily kParametricFamilies[] = {
    {1, 6, 5},
    {1, 4, 3},
    {1, 3, 2},
    {1, 2, 1},
};

constexpr int kParametricValidationMaxN = 40;

int parse_int_field(const std::string& field, int line_no) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(field, &used);
        if (used != field.size()) throw std::invalid_argument("trailing junk");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("table csv line " + std::to_string(line_no) +
                                    ": bad integer field '" + field + "'");
    }
}

std::string row_label(const McMullenCase& row) {
    return "n=" + std::to_string(row.n) + " k/d=" + std::to_string(row.k) + "/" +
           std::to_string(row.d);
}

}  // namespace

std::string h_column_text(const CodimResult& h) {
    if (h.is_not_applicable()) return "-";
    return h.str();
}

TableDataset TableDataset::from_csv(std::istream& in) {
    TableDataset dataset;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (line == "n,k,d,r,s,H") continue;  // header

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 6)
            throw std::invalid_argument("table csv line " + std::to_string(line_no) +
                                        ": expected 6 fields, got " + std::to_string(fields.size()));

        McMullenCase row;
        row.n = parse_int_field(fields[0], line_no);
        row.k = parse_int_field(fields[1], line_no);
        row.d = parse_int_field(fields[2], line_no);
        row.r = parse_int_field(fields[3], line_no);
        row.s = parse_int_field(fields[4], line_no);
        if (row.n < 5 || row.n > 12)
            throw std::invalid_argument("table csv line " + std::to_string(line_no) +
                                        ": explicit rows have 5 <= n <= 12");
        if (row.k < 1 || row.k >= row.d)
            throw std::invalid_argument("table csv line " + std::to_string(line_no) +
                                        ": need 1 <= k < d");
        if (std::gcd(row.k, row.d) != 1)
            throw std::invalid_argument("table csv line " + std::to_string(line_no) +
                                        ": k/d must be in lowest terms");
        if (row.r < 1 || row.s < 1)
            throw std::invalid_argument("table csv line " + std::to_string(line_no) +
                                        ": the table only lists cases with r, s >= 1");
        const std::string& h = fields[5];
        if (h == "-")
            row.H = CodimResult::not_applicable();
        else if (h == "inf")
            row.H = CodimResult::infinite();
        else
            row.H = CodimResult::finite(parse_int_field(h, line_no));
        row.symplectic_lattice = (row.d == 2 * row.k);
        dataset.rows_.push_back(row);
    }
    if (dataset.rows_.empty())
        throw std::invalid_argument("table csv: no data rows");
    return dataset;
}

const TableDataset& TableDataset::embedded() {
    static const TableDataset dataset = [] {
        std::istringstream in(detail::kMcMullenTableCsv);
        return from_csv(in);
    }();
    return dataset;
}

std::optional<McMullenCase> TableDataset::lookup(int n, int k, int d) const {
    if (n < 1 || d < 2 || k < 1 || k > d - 1)
        throw std::invalid_argument("table lookup: need n >= 1 and 1 <= k <= d-1");
    const int g = std::gcd(k, d);
    const int k0 = k / g, d0 = d / g;
    if (n <= 12) {
        for (const auto& row : rows_)
            if (row.n == n && row.k == k0 && row.d == d0) return row;
        return std::nullopt;
    }
    for (const auto& family : kParametricFamilies) {
        if (family.k != k0 || family.d != d0) continue;
        McMullenCase row;
        row.n = n;
        row.k = k0;
        row.d = d0;
        const auto [r, s] = signature(CoverData(n, d0, k0));
        row.r = static_cast<int>(r);
        row.s = static_cast<int>(s);
        row.H = CodimResult::finite(family.H);
        row.symplectic_lattice = (d0 == 2 * k0);
        row.parametric = true;
        return row;
    }
    return std::nullopt;
}

bool TableDataset::is_discrete(int n, int k, int d) const {
    return lookup(n, k, d).has_value() || lookup(n, d - k, d).has_value();
}

std::vector<std::string> TableDataset::validate_all() const {
    std::vector<std::string> mismatches;

    auto check_h = [&mismatches](const McMullenCase& row, const CodimResult& got,
                                 const char* route) {
        if (got != row.H)
            mismatches.push_back("row " + row_label(row) + ": stored H=" + h_column_text(row.H) +
                                 " but " + route + " recomputes " + h_column_text(got));
    };

    for (const auto& row : rows_) {
        const auto [r, s] = signature(CoverData(row.n, row.d, row.k));
        if (r != row.r || s != row.s)
            mismatches.push_back("row " + row_label(row) + ": stored (r,s)=(" +
                                 std::to_string(row.r) + "," + std::to_string(row.s) +
                                 ") but recomputed (" + std::to_string(r) + "," +
                                 std::to_string(s) + ")");
        check_h(row, codim_H_closed(row.n, row.d, row.k), "closed formula");
        check_h(row, codim_H_oracle(row.n, row.d, row.k), "oracle");
    }

    // Parametric families: instantiate each admissible n; H is defined only
    // where a cover regime applies, signatures everywhere.
    for (const auto& family : kParametricFamilies) {
        for (int n = 13; n <= kParametricValidationMaxN; ++n) {
            const auto row = lookup(n, family.k, family.d);
            if (!row) {
                mismatches.push_back("parametric family k/d=" + std::to_string(family.k) + "/" +
                                     std::to_string(family.d) + " missing at n=" + std::to_string(n));
                continue;
            }
            const auto [r, s] = signature(CoverData(n, family.d, family.k));
            if (r != row->r || s != row->s)
                mismatches.push_back("row " + row_label(*row) + ": parametric (r,s)=(" +
                                     std::to_string(row->r) + "," + std::to_string(row->s) +
                                     ") but recomputed (" + std::to_string(r) + "," +
                                     std::to_string(s) + ")");
            if (classify_regime(n, family.d) != Regime::NeitherRegime) {
                check_h(*row, codim_H_closed(n, family.d, family.k), "closed formula");
                check_h(*row, codim_H_oracle(n, family.d, family.k), "oracle");
            }
        }
    }
    return mismatches;
}

}  // namespace purelocus
