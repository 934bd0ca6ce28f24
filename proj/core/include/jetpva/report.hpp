#pragma once

#include <optional>
#include <string>
#include <vector>

namespace jetpva {

struct BlockLine {
    int deg = 0;
    int w = 0;
    std::vector<int> d;
    int dim = 0;
    int hdim = 0;
};

struct CheckLine {
    std::string name;
    bool pass = true;
    std::string detail; // optional single token
};

/// CLI-facing result: block table, named checks, optional verdict, plus
/// free-form informational lines (human mode only).
struct Report {
    std::vector<BlockLine> blocks;
    std::vector<CheckLine> checks;
    std::optional<bool> verdict;
    std::vector<std::string> info;

    bool all_checks_pass() const
    {
        for (const auto &c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

/// Machine mode follows the line grammar
///   block deg=<n> w=<w> d=(<d1>,...,<dm>) dim=<k> hdim=<h>
///   check <name> pass|fail [detail=<token>]
///   verdict PASS|FAIL
/// byte-identical across runs for identical input. Human mode prints
/// aligned tables.
std::string emit_report(const Report &r, bool machine);

} // namespace jetpva
