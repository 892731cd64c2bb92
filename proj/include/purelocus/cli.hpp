#pragma once

#include "purelocus/git.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace purelocus {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command {
    Help,
    Hodge,
    Spectrum,
    PureLocus,
    CompactType,
    Codim,
    Stability,
    BlowupLoci,
    Reduction,
    TableCheck,
    TableLookup,
};

enum class OutputFormat { Plain, Json, Csv };

/* A validated request: every request maps to exactly one library call. */
struct CommandRequest {
    Command command = Command::Help;
    OutputFormat format = OutputFormat::Plain;

    int n = 0;
    int d = 0;
    int k = 0;
    int l = 0;
    bool oracle = false;
    bool list = false;
    std::vector<int> members;
    std::optional<WeightVector> weights;
    std::optional<WeightVector> weights_from;
    std::optional<WeightVector> weights_to;
    std::optional<CollisionPartition> partition;
    std::string table_csv_path;  // table check: external CSV override
    std::string help_text;
};

/* Parses the argument list (program name excluded). Throws UsageError with a
 * message naming the offending flag on any invalid input. */
CommandRequest parse_args(const std::vector<std::string>& args);

struct ExecutionResult {
    std::string output;
    int exit_code = 0;  // 0 ok, 1 invalid input, 2 table-check mismatch
};

ExecutionResult execute(const CommandRequest& request);

// Thin wrapper used by main(): parse, execute, print, map errors to exit 1.
int run_cli(int argc, const char* const* argv);

}  // namespace purelocus
