#include "purelocus/cli.hpp"

#include "purelocus/boundary.hpp"
#include "purelocus/cover.hpp"
#include "purelocus/dmtable.hpp"
#include "purelocus/lmhs.hpp"
#include "purelocus/serialize.hpp"
#include "purelocus/spectra.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace purelocus {

namespace {

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (int v : values) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

WeightVector parse_weights_flag(const std::string& text, const char* flag) {
    try {
        return WeightVector::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

CollisionPartition parse_partition_flag(const std::string& text) {
    try {
        CollisionPartition p = CollisionPartition::parse(text);
        return p;
    } catch (const std::exception& e) {
        throw UsageError(std::string("--partition: ") + e.what());
    }
}

std::vector<int> parse_members_flag(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size() || v < 1) throw std::invalid_argument("bad index");
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--members: bad index '" + token + "'");
        }
    }
    if (out.empty()) throw UsageError("--members: empty set");
    return out;
}

void require_nd(const CommandRequest& req, int min_n) {
    if (req.n < min_n)
        throw UsageError("--n must be >= " + std::to_string(min_n));
    if (req.d < 2) throw UsageError("--d must be >= 2");
}

void require_k(const CommandRequest& req) {
    if (req.k < 1 || req.k > req.d - 1) throw UsageError("--k must satisfy 1 <= k <= d-1");
}

}  // namespace

CommandRequest parse_args(const std::vector<std::string>& args) {
    CommandRequest req;

    CLI::App app{"Exact invariants of cyclic covers of the line branched at n points"};
    app.name("purelocus");
    app.require_subcommand(0, 1);

    bool json = false, csv = false;
    // Formats are accepted after any subcommand as well.
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_flag("--csv", csv, "CSV output (spectrum, pure-locus only)");
    app.fallthrough();

    std::string weights_text, from_text, to_text, partition_text, members_text;

    auto* hodge = app.add_subcommand("hodge", "signature, genus and regime of a cover (n, d, k)");
    hodge->add_option("--n", req.n, "number of marked points")->required();
    hodge->add_option("--d", req.d, "cover degree")->required();
    hodge->add_option("--k", req.k, "character index")->required();

    auto* spectrum = app.add_subcommand("spectrum", "eigenspectra of the singularity y^d + x^l");
    spectrum->add_option("--d", req.d, "cover degree")->required();
    spectrum->add_option("--l", req.l, "cluster size (x-exponent)")->required();

    auto* pure = app.add_subcommand("pure-locus", "classify boundary divisors as pure/non-pure");
    pure->add_option("--n", req.n, "number of marked points")->required();
    pure->add_option("--d", req.d, "cover degree")->required();
    pure->add_option("--k", req.k, "character index")->required();
    pure->add_flag("--list", req.list, "emit the non-pure divisors, one per line");

    auto* compact = app.add_subcommand("compact-type", "whether a divisor is pure for every character");
    compact->add_option("--n", req.n, "number of marked points")->required();
    compact->add_option("--d", req.d, "cover degree")->required();
    compact->add_option("--members", members_text, "divisor side, e.g. 1,2,5")->required();

    auto* codim = app.add_subcommand("codim", "codimension H(n, d, k) of the non-pure image");
    codim->add_option("--n", req.n, "number of marked points")->required();
    codim->add_option("--d", req.d, "cover degree")->required();
    codim->add_option("--k", req.k, "character index")->required();
    codim->add_flag("--oracle", req.oracle, "use the brute-force route instead of the closed formulas");

    auto* stability = app.add_subcommand("stability", "GIT stability of a weighted collision pattern");
    stability->add_option("--weights", weights_text, "comma-separated weights, e.g. 1/3,1/3,...")->required();
    stability->add_option("--partition", partition_text, "pipe-separated blocks, e.g. 1,2|3|4,5,6")->required();

    auto* blowup = app.add_subcommand("blowup-loci", "subsets of weight exactly 1 (blow-up centers)");
    blowup->add_option("--weights", weights_text, "comma-separated GIT weights")->required();

    auto* reduction = app.add_subcommand("reduction", "existence of a Hassett reduction morphism");
    reduction->add_option("--from", from_text, "source weights")->required();
    reduction->add_option("--to", to_text, "target weights")->required();

    auto* table = app.add_subcommand("table", "the embedded discreteness table");
    table->require_subcommand(1);
    auto* check = table->add_subcommand("check", "cross-validate every table row");
    check->add_option("--csv", req.table_csv_path, "validate an external CSV instead of the embedded table");
    auto* lookup = table->add_subcommand("lookup", "find the row for (n, k/d)");
    lookup->add_option("--n", req.n, "number of marked points")->required();
    lookup->add_option("--k", req.k, "character index")->required();
    lookup->add_option("--d", req.d, "cover degree")->required();

    std::vector<const char*> argv;
    argv.push_back("purelocus");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        req.command = Command::Help;
        req.help_text = app.help();
        return req;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (json && csv) throw UsageError("--json and --csv are mutually exclusive");
    req.format = json ? OutputFormat::Json : (csv ? OutputFormat::Csv : OutputFormat::Plain);

    if (app.get_subcommands().empty()) {
        req.command = Command::Help;
        req.help_text = app.help();
        return req;
    }

    if (hodge->parsed()) {
        req.command = Command::Hodge;
        require_nd(req, 4);
        require_k(req);
    } else if (spectrum->parsed()) {
        req.command = Command::Spectrum;
        if (req.d < 2) throw UsageError("--d must be >= 2");
        if (req.l < 2) throw UsageError("--l must be >= 2");
    } else if (pure->parsed()) {
        req.command = Command::PureLocus;
        require_nd(req, 4);
        require_k(req);
    } else if (compact->parsed()) {
        req.command = Command::CompactType;
        require_nd(req, 4);
        req.members = parse_members_flag(members_text);
    } else if (codim->parsed()) {
        req.command = Command::Codim;
        require_nd(req, 5);
        require_k(req);
    } else if (stability->parsed()) {
        req.command = Command::Stability;
        req.weights = parse_weights_flag(weights_text, "--weights");
        req.partition = parse_partition_flag(partition_text);
    } else if (blowup->parsed()) {
        req.command = Command::BlowupLoci;
        req.weights = parse_weights_flag(weights_text, "--weights");
    } else if (reduction->parsed()) {
        req.command = Command::Reduction;
        req.weights_from = parse_weights_flag(from_text, "--from");
        req.weights_to = parse_weights_flag(to_text, "--to");
    } else if (table->parsed()) {
        if (check->parsed()) {
            req.command = Command::TableCheck;
        } else {
            req.command = Command::TableLookup;
            if (req.n < 1) throw UsageError("--n must be >= 1");
            if (req.d < 2) throw UsageError("--d must be >= 2");
            require_k(req);
        }
    }

    if (req.format == OutputFormat::Csv && req.command != Command::Spectrum &&
        req.command != Command::PureLocus)
        throw UsageError("--csv is only available for 'spectrum' and 'pure-locus'");

    return req;
}

namespace {

ExecutionResult run_hodge(const CommandRequest& req) {
    const CoverData cover(req.n, req.d, req.k);
    const auto [r, s] = signature(cover);
    const Regime regime = cover.regime();
    const bool has_genus = regime != Regime::NeitherRegime;

    if (req.format == OutputFormat::Json) {
        OrderedJson j;
        j["n"] = req.n;
        j["d"] = req.d;
        j["k"] = req.k;
        j["regime"] = to_string(regime);
        j["h10"] = r;
        j["h01"] = s;
        if (has_genus)
            j["genus"] = genus(req.n, req.d);
        else
            j["genus"] = nullptr;
        return {dump_json(j), 0};
    }
    std::string genus_text = has_genus ? std::to_string(genus(req.n, req.d)) : "n/a";
    std::string out = "signature: (" + std::to_string(r) + "," + std::to_string(s) +
                      "); genus: " + genus_text + "; regime: " + to_string(regime) + "\n";
    return {out, 0};
}

ExecutionResult run_spectrum(const CommandRequest& req) {
    const Eigenspectra spectra = eigenspectra_curve(req.d, req.l);
    const Integer mu = milnor_number(BrieskornPham({req.l, req.d}));

    if (req.format == OutputFormat::Json) {
        OrderedJson j;
        j["d"] = req.d;
        j["l"] = req.l;
        j["milnor"] = mu.convert_to<long long>();
        j["weight2_count"] = grW_top_dim(req.d, req.l);
        j["entries"] = to_json(spectra);
        return {dump_json(j), 0};
    }
    if (req.format == OutputFormat::Csv) {
        std::string out = "alpha,eta,weight,mult\n";
        for (const auto& e : spectra.entries)
            out += e.alpha.str() + "," + e.eta.str() + "," + std::to_string(e.weight) + "," +
                   std::to_string(e.multiplicity) + "\n";
        return {out, 0};
    }
    std::string out = "eigenspectra of y^" + std::to_string(req.d) + " + x^" +
                      std::to_string(req.l) + " (milnor number " + mu.str() + "):\n";
    for (const auto& e : spectra.entries)
        out += "alpha=" + e.alpha.str() + " eta=" + e.eta.str() +
               " weight=" + std::to_string(e.weight) + " mult=" + std::to_string(e.multiplicity) +
               "\n";
    return {out, 0};
}

ExecutionResult run_pure_locus(const CommandRequest& req) {
    const PureLocusReport report = enumerate_pure_locus(req.n, req.d, req.k);

    if (req.format == OutputFormat::Json) return {dump_json(to_json(report)), 0};

    if (req.list) {
        std::string out;
        if (req.format == OutputFormat::Csv) {
            out = "size,members\n";
            for (const auto& divisor : report.non_pure)
                out += std::to_string(divisor.size()) + ",\"" + divisor.str() + "\"\n";
        } else {
            for (const auto& divisor : report.non_pure) out += divisor.str() + "\n";
        }
        return {out, 0};
    }

    if (req.format == OutputFormat::Csv) {
        std::string out = "size,pure,non_pure\n";
        for (const auto& [size, counts] : report.counts_by_size)
            out += std::to_string(size) + "," + std::to_string(counts.first) + "," +
                   std::to_string(counts.second) + "\n";
        return {out, 0};
    }

    std::string out = "pure locus for (n=" + std::to_string(req.n) + ", d=" + std::to_string(req.d) +
                      ", k=" + std::to_string(req.k) + "), regime " + to_string(report.regime) + ":\n";
    for (const auto& warning : report.warnings) out += "warning: " + warning + "\n";
    for (const auto& [size, counts] : report.counts_by_size)
        out += "  size " + std::to_string(size) + ": " + std::to_string(counts.first) + " pure, " +
               std::to_string(counts.second) + " non-pure\n";
    out += "total: " + std::to_string(report.total_divisors()) + " divisors, " +
           std::to_string(report.pure_count()) + " pure, " +
           std::to_string(report.non_pure_count()) + " non-pure\n";
    return {out, 0};
}

ExecutionResult run_compact_type(const CommandRequest& req) {
    const std::set<int> members(req.members.begin(), req.members.end());
    const BoundaryDivisor divisor = BoundaryDivisor::canonicalize(req.n, members);
    const bool compact = is_compact_type(req.n, req.d, divisor);

    if (req.format == OutputFormat::Json) {
        OrderedJson j;
        j["n"] = req.n;
        j["d"] = req.d;
        j["divisor"] = divisor.members();
        j["compact_type"] = compact;
        return {dump_json(j), 0};
    }
    std::string out = "divisor: " + divisor.str() + "; compact-type: " +
                      (compact ? "true" : "false") + "\n";
    return {out, 0};
}

ExecutionResult run_codim(const CommandRequest& req) {
    const CodimResult h =
        req.oracle ? codim_H_oracle(req.n, req.d, req.k) : codim_H_closed(req.n, req.d, req.k);
    if (req.format == OutputFormat::Json) {
        OrderedJson j;
        j["n"] = req.n;
        j["d"] = req.d;
        j["k"] = req.k;
        j["method"] = req.oracle ? "oracle" : "closed";
        j["H"] = h.str();
        return {dump_json(j), 0};
    }
    return {"H = " + h.str() + "\n", 0};
}

ExecutionResult run_stability(const CommandRequest& req) {
    const Stability verdict = git_stability(*req.weights, *req.partition);
    if (req.format == OutputFormat::Json) {
        OrderedJson j;
        OrderedJson weights = OrderedJson::array();
        for (const auto& w : req.weights->weights()) weights.push_back(w.str());
        j["weights"] = std::move(weights);
        OrderedJson blocks = OrderedJson::array();
        for (const auto& block : req.partition->groups) blocks.push_back(block);
        j["partition"] = std::move(blocks);
        j["stability"] = to_string(verdict);
        return {dump_json(j), 0};
    }
    return {std::string("stability: ") + to_string(verdict) + "\n", 0};
}

ExecutionResult run_blowup_loci(const CommandRequest& req) {
    const auto loci = blowup_loci(*req.weights);
    if (req.format == OutputFormat::Json) {
        OrderedJson j;
        OrderedJson weights = OrderedJson::array();
        for (const auto& w : req.weights->weights()) weights.push_back(w.str());
        j["weights"] = std::move(weights);
        OrderedJson sets = OrderedJson::array();
        for (const auto& members : loci) sets.push_back(members);
        j["loci"] = std::move(sets);
        return {dump_json(j), 0};
    }
    if (loci.empty())
        return {"no blow-up loci: the reduction is an isomorphism\n", 0};
    std::string out = "blow-up loci (" + std::to_string(loci.size()) + "):\n";
    for (const auto& members : loci) out += join_ints(members) + "\n";
    return {out, 0};
}

ExecutionResult run_reduction(const CommandRequest& req) {
    const bool exists = hassett_reduction_exists(*req.weights_from, *req.weights_to);
    if (req.format == OutputFormat::Json) {
        OrderedJson j;
        j["from"] = req.weights_from->str();
        j["to"] = req.weights_to->str();
        j["reduction_exists"] = exists;
        return {dump_json(j), 0};
    }
    return {std::string("reduction exists: ") + (exists ? "true" : "false") + "\n", 0};
}

ExecutionResult run_table_check(const CommandRequest& req) {
    const TableDataset* dataset = &TableDataset::embedded();
    TableDataset external;
    if (!req.table_csv_path.empty()) {
        std::ifstream in(req.table_csv_path);
        if (!in) throw std::invalid_argument("cannot open '" + req.table_csv_path + "'");
        external = TableDataset::from_csv(in);
        dataset = &external;
    }
    const auto mismatches = dataset->validate_all();
    const auto rows = dataset->explicit_rows().size();

    if (req.format == OutputFormat::Json) {
        OrderedJson j;
        j["explicit_rows"] = rows;
        j["parametric_families"] = 4;
        j["mismatches"] = mismatches;
        j["ok"] = mismatches.empty();
        return {dump_json(j), mismatches.empty() ? 0 : 2};
    }
    std::string out;
    for (const auto& m : mismatches) out += "mismatch: " + m + "\n";
    out += "validated " + std::to_string(rows) +
           " explicit rows and 4 parametric families (instantiated n=13..40)\n";
    out += mismatches.empty()
               ? "table check: OK\n"
               : "table check: FAILED (" + std::to_string(mismatches.size()) + " mismatches)\n";
    return {out, mismatches.empty() ? 0 : 2};
}

ExecutionResult run_table_lookup(const CommandRequest& req) {
    const auto row = TableDataset::embedded().lookup(req.n, req.k, req.d);
    if (req.format == OutputFormat::Json) {
        OrderedJson j;
        j["query"] = {{"n", req.n}, {"k", req.k}, {"d", req.d}};
        j["found"] = row.has_value();
        if (row) j["row"] = to_json(*row);
        return {dump_json(j), 0};
    }
    if (!row)
        return {"no table entry for n=" + std::to_string(req.n) + ", k/d=" +
                    std::to_string(req.k) + "/" + std::to_string(req.d) + "\n",
                0};
    std::string out = "n=" + std::to_string(row->n) + " k/d=" + std::to_string(row->k) + "/" +
                      std::to_string(row->d) + " (r,s)=(" + std::to_string(row->r) + "," +
                      std::to_string(row->s) + ") H=" + h_column_text(row->H);
    if (row->symplectic_lattice) out += " [symplectic lattice, k=d/2]";
    if (row->parametric) out += " [parametric n>12 family]";
    out += "\n";
    return {out, 0};
}

}  // namespace

ExecutionResult execute(const CommandRequest& req) {
    switch (req.command) {
        case Command::Help: return {req.help_text, 0};
        case Command::Hodge: return run_hodge(req);
        case Command::Spectrum: return run_spectrum(req);
        case Command::PureLocus: return run_pure_locus(req);
        case Command::CompactType: return run_compact_type(req);
        case Command::Codim: return run_codim(req);
        case Command::Stability: return run_stability(req);
        case Command::BlowupLoci: return run_blowup_loci(req);
        case Command::Reduction: return run_reduction(req);
        case Command::TableCheck: return run_table_check(req);
        case Command::TableLookup: return run_table_lookup(req);
    }
    throw std::logic_error("unreachable command");
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const CommandRequest req = parse_args(args);
        const ExecutionResult result = execute(req);
        std::cout << result.output;
        return result.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace purelocus
