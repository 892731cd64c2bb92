#include "purelocus/serialize.hpp"

namespace purelocus {

OrderedJson to_json(const Eigenspectra& spectra) {
    OrderedJson entries = OrderedJson::array();
    for (const auto& e : spectra.entries) {
        OrderedJson j;
        j["alpha"] = e.alpha.str();
        j["eta"] = e.eta.str();
        j["weight"] = e.weight;
        j["mult"] = e.multiplicity;
        entries.push_back(std::move(j));
    }
    return entries;
}

OrderedJson to_json(const PureLocusReport& report) {
    OrderedJson j;
    j["n"] = report.n;
    j["d"] = report.d;
    j["k"] = report.k;
    j["regime"] = to_string(report.regime);
    j["warnings"] = report.warnings;
    j["pure"] = report.pure_count();
    j["non_pure"] = report.non_pure_count();
    j["total"] = report.total_divisors();
    OrderedJson by_size = OrderedJson::array();
    for (const auto& [size, counts] : report.counts_by_size) {
        OrderedJson row;
        row["size"] = size;
        row["pure"] = counts.first;
        row["non_pure"] = counts.second;
        by_size.push_back(std::move(row));
    }
    j["counts_by_size"] = std::move(by_size);
    OrderedJson divisors = OrderedJson::array();
    for (const auto& divisor : report.non_pure) divisors.push_back(divisor.members());
    j["non_pure_divisors"] = std::move(divisors);
    return j;
}

OrderedJson to_json(const McMullenCase& row) {
    OrderedJson j;
    j["n"] = row.n;
    j["k"] = row.k;
    j["d"] = row.d;
    j["r"] = row.r;
    j["s"] = row.s;
    j["H"] = h_column_text(row.H);
    j["symplectic_lattice"] = row.symplectic_lattice;
    j["parametric"] = row.parametric;
    return j;
}

}  // namespace purelocus
