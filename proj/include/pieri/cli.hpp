#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pieri/partition.hpp"
#include "pieri/rootdata.hpp"

namespace pieri::cli {

enum class Verb { Help, Rule, Decompose, Branch, Dim, Weights, Verify };
enum class VerifyKind { None, Kostant, ExtendedKostant, Shift, Equivalence, Cauchy, Necessity };
enum class DiagramKind { None, Defining, Exterior, Symmetric, Irrep };

struct Command {
    Verb verb = Verb::Help;
    VerifyKind verify = VerifyKind::None;
    std::optional<GroupType> group;
    std::optional<Partition> lambda; // --lambda / --hw as partition
    std::optional<Weight> hw;        // --hw exact coordinates
    std::optional<Partition> mu;
    std::optional<Weight> mu_hw;
    DiagramKind diagram = DiagramKind::None;
    int degree = 0;      // --ext / --sym value
    int n = 0, m = 0, d = 0;
    int bound = 4;
    int max_entry = 2;
    int max_degree = 3;
    bool force = false;
    std::string format = "text";
    std::string json_path;
    int threads = 1;
    std::string help_text; // set when verb == Help
};

struct RunResult {
    int exit_code = 0;
    std::string output;
};

// Parses argv (program name excluded). Throws std::invalid_argument with a
// usage message on bad input.
Command parse(const std::vector<std::string>& args);

// Executes a parsed command. Exit codes: 0 success, 1 a verify verb found
// mismatches, 3 internal invariant violation.
RunResult run(const Command& cmd);

// parse + run with all errors mapped onto the exit-code scheme
// (2 = usage, 3 = internal).
RunResult run_args(const std::vector<std::string>& args);

int main_entry(int argc, char** argv);

} // namespace pieri::cli
