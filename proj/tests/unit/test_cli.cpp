#include "doctest.h"

#include "purelocus/cli.hpp"
#include "purelocus/serialize.hpp"

#include <cstdio>
#include <fstream>

using namespace purelocus;

namespace {

ExecutionResult run(std::vector<std::string> args) { return execute(parse_args(args)); }

}  // namespace

TEST_CASE("parse_args builds validated requests") {
    const CommandRequest hodge = parse_args({"hodge", "--n", "8", "--d", "4", "--k", "1"});
    CHECK(hodge.command == Command::Hodge);
    CHECK(hodge.n == 8);
    CHECK(hodge.d == 4);
    CHECK(hodge.k == 1);
    CHECK(hodge.format == OutputFormat::Plain);

    const CommandRequest codim =
        parse_args({"codim", "--n", "12", "--d", "6", "--k", "1", "--oracle"});
    CHECK(codim.command == Command::Codim);
    CHECK(codim.oracle);
}

TEST_CASE("parse_args usage errors") {
    CHECK_THROWS_AS(parse_args({"hodge", "--n", "8", "--d", "4", "--k", "4"}), UsageError);
    CHECK_THROWS_AS(parse_args({"hodge", "--n", "3", "--d", "4", "--k", "1"}), UsageError);
    CHECK_THROWS_AS(parse_args({"frobnicate"}), UsageError);
    CHECK_THROWS_AS(parse_args({"hodge", "--n", "8", "--d", "4"}), UsageError);
    CHECK_THROWS_AS(parse_args({"stability", "--weights", "1/0,1", "--partition", "1|2"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"stability", "--weights", "x,y", "--partition", "1|2"}),
                    UsageError);
    CHECK_THROWS_AS(
        parse_args({"codim", "--n", "12", "--d", "6", "--k", "1", "--json", "--csv"}),
        UsageError);
    CHECK_THROWS_AS(parse_args({"codim", "--n", "12", "--d", "6", "--k", "1", "--csv"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"codim", "--n", "4", "--d", "2", "--k", "1"}), UsageError);
}

TEST_CASE("help is exit 0") {
    const auto help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("purelocus") != std::string::npos);
    const auto bare = run({});
    CHECK(bare.exit_code == 0);
}

TEST_CASE("hodge plain output") {
    const auto res = run({"hodge", "--n", "8", "--d", "4", "--k", "1"});
    CHECK(res.exit_code == 0);
    CHECK(res.output == "signature: (1,5); genus: 9; regime: DividesN\n");

    const auto neither = run({"hodge", "--n", "9", "--d", "6", "--k", "1"});
    CHECK(neither.output == "signature: (1,7); genus: n/a; regime: NeitherRegime\n");
}

TEST_CASE("codim plain output") {
    CHECK(run({"codim", "--n", "9", "--d", "6", "--k", "1"}).output == "H = not-applicable\n");
    CHECK(run({"codim", "--n", "12", "--d", "6", "--k", "1"}).output == "H = 9\n");
    CHECK(run({"codim", "--n", "12", "--d", "6", "--k", "1", "--oracle"}).output == "H = 9\n");
    CHECK(run({"codim", "--n", "12", "--d", "12", "--k", "5"}).output == "H = inf\n");
}

TEST_CASE("spectrum outputs") {
    const auto plain = run({"spectrum", "--d", "4", "--l", "2"});
    CHECK(plain.output ==
          "eigenspectra of y^4 + x^2 (milnor number 3):\n"
          "alpha=3/4 eta=1/4 weight=1 mult=1\n"
          "alpha=1 eta=1/2 weight=2 mult=1\n"
          "alpha=5/4 eta=3/4 weight=1 mult=1\n");

    const auto csv = run({"spectrum", "--d", "4", "--l", "2", "--csv"});
    CHECK(csv.output ==
          "alpha,eta,weight,mult\n"
          "3/4,1/4,1,1\n"
          "1,1/2,2,1\n"
          "5/4,3/4,1,1\n");
}

TEST_CASE("pure-locus outputs") {
    const auto plain = run({"pure-locus", "--n", "6", "--d", "2", "--k", "1"});
    CHECK(plain.output.find("total: 25 divisors, 10 pure, 15 non-pure") != std::string::npos);

    const auto list = run({"pure-locus", "--n", "6", "--d", "2", "--k", "1", "--list"});
    CHECK(list.output.substr(0, 8) == "1,2\n1,3\n");
    CHECK(std::count(list.output.begin(), list.output.end(), '\n') == 15);

    const auto csv = run({"pure-locus", "--n", "6", "--d", "2", "--k", "1", "--csv"});
    CHECK(csv.output ==
          "size,pure,non_pure\n"
          "2,0,15\n"
          "3,10,0\n");

    const auto list_csv = run({"pure-locus", "--n", "6", "--d", "2", "--k", "1", "--csv", "--list"});
    CHECK(list_csv.output.substr(0, 23) == "size,members\n2,\"1,2\"\n2,");
}

TEST_CASE("compact-type, stability, blowup-loci, reduction") {
    CHECK(run({"compact-type", "--n", "8", "--d", "3", "--members", "1,2"}).output ==
          "divisor: 1,2; compact-type: true\n");
    CHECK(run({"compact-type", "--n", "8", "--d", "4", "--members", "5,6,7,8"}).output ==
          "divisor: 1,2,3,4; compact-type: false\n");

    CHECK(run({"stability", "--weights", "1/3,1/3,1/3,1/3,1/3,1/3", "--partition",
               "1,2,3|4|5|6"})
              .output == "stability: strictly-semistable\n");

    const auto loci = run({"blowup-loci", "--weights", "1/3,1/3,1/3,1/3,1/3,1/3"});
    CHECK(loci.output.find("blow-up loci (10):") != std::string::npos);

    CHECK(run({"reduction", "--from", "1,1,1,1,1", "--to", "2/5+e,2/5+e,2/5+e,2/5+e,2/5+e"})
              .output == "reduction exists: true\n");
}

TEST_CASE("table lookup and check") {
    const auto hit = run({"table", "lookup", "--n", "8", "--k", "1", "--d", "4"});
    CHECK(hit.output == "n=8 k/d=1/4 (r,s)=(1,5) H=5\n");

    const auto sym = run({"table", "lookup", "--n", "7", "--k", "1", "--d", "2"});
    CHECK(sym.output == "n=7 k/d=1/2 (r,s)=(3,3) H=- [symplectic lattice, k=d/2]\n");

    const auto miss = run({"table", "lookup", "--n", "6", "--k", "1", "--d", "5"});
    CHECK(miss.exit_code == 0);
    CHECK(miss.output == "no table entry for n=6, k/d=1/5\n");

    const auto check = run({"table", "check"});
    CHECK(check.exit_code == 0);
    CHECK(check.output.find("49 explicit rows") != std::string::npos);
    CHECK(check.output.find("table check: OK") != std::string::npos);
}

TEST_CASE("table check exits 2 on a corrupted external csv") {
    const std::string path = "corrupted_table_test.csv";
    {
        std::ofstream out(path);
        out << "n,k,d,r,s,H\n8,1,4,2,5,5\n";
    }
    const auto res = run({"table", "check", "--csv", path});
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("mismatch") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("json output re-parses and re-renders byte-identically") {
    const std::vector<std::vector<std::string>> cases = {
        {"hodge", "--n", "8", "--d", "4", "--k", "1", "--json"},
        {"spectrum", "--d", "6", "--l", "4", "--json"},
        {"pure-locus", "--n", "8", "--d", "4", "--k", "1", "--json"},
        {"codim", "--n", "12", "--d", "6", "--k", "1", "--json"},
        {"table", "lookup", "--n", "8", "--k", "1", "--d", "4", "--json"},
        {"table", "check", "--json"},
        {"stability", "--weights", "1/3,1/3,1/3,1/3,1/3,1/3", "--partition", "1,2|3|4,5,6",
         "--json"},
        {"blowup-loci", "--weights", "1/3,1/3,1/3,1/3,1/3,1/3", "--json"},
        {"reduction", "--from", "1,1,1,1,1", "--to", "2/5+e,2/5+e,2/5+e,2/5+e,2/5+e", "--json"},
        {"compact-type", "--n", "8", "--d", "3", "--members", "1,2", "--json"},
    };
    for (const auto& args : cases) {
        const auto res = run(args);
        const OrderedJson parsed = OrderedJson::parse(res.output);
        CHECK(parsed.dump(2) + "\n" == res.output);
    }
}

TEST_CASE("plain outputs never contain floating-point literals") {
    const std::vector<std::vector<std::string>> cases = {
        {"hodge", "--n", "8", "--d", "6", "--k", "1"},
        {"spectrum", "--d", "10", "--l", "6"},
        {"pure-locus", "--n", "9", "--d", "3", "--k", "1"},
        {"codim", "--n", "11", "--d", "3", "--k", "1"},
        {"stability", "--weights", "1/4,1/4,1/4,1/4,1/2,1/2", "--partition", "1,2|3,4|5|6"},
        {"table", "lookup", "--n", "12", "--k", "1", "--d", "6"},
    };
    for (const auto& args : cases) {
        const auto res = run(args);
        for (std::size_t i = 1; i + 1 < res.output.size(); ++i)
            if (res.output[i] == '.')
                CHECK_FALSE((isdigit(res.output[i - 1]) && isdigit(res.output[i + 1])));
    }
}
