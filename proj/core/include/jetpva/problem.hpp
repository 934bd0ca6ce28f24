#pragma once

#include "jetpva/loop.hpp"
#include "jetpva/report.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace jetpva {

/// Parsed and validated input document: variety, variables with
/// invertibility flags, bracket entries for a<b pairs, and windows.
struct ProblemSpec {
    std::string variety = "unnamed";
    std::vector<std::string> vars;
    std::vector<bool> invertible;
    std::vector<std::tuple<int, int, Poly>> brackets; // (a, b, value) with a < b
    int weight_window = 2;
    std::vector<int> md_window; // per-variable bound
    int lc_degree = 2;

    friend bool operator==(const ProblemSpec &, const ProblemSpec &) = default;
};

/// Line-oriented document parser ('#' comments); rejects unknown keys,
/// undeclared variables, and duplicate or out-of-order bracket entries.
/// Error messages carry the line number.
ProblemSpec parse_problem(const std::string &text);

/// Canonical printer; parse_problem(print_problem(s)) == s.
std::string print_problem(const ProblemSpec &s);

BaseRing problem_ring(const ProblemSpec &s);
PoissonStructure problem_poisson(const ProblemSpec &s);
Window problem_window(const ProblemSpec &s);

struct RunOptions {
    std::string command;
    std::vector<std::string> args; // operands of lambda-bracket
    std::string algebroid = "cotangent";
    bool reduce = true;
    int jobs = 1;
};

/// Dispatches check-poisson, jet-info, lambda-bracket, pva-check,
/// loop-cohomology, derham, lc-crosscheck, compare-theorem.
Report run_command(const ProblemSpec &spec, const RunOptions &opt);

} // namespace jetpva
