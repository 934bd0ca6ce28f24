// Batch front door: parse a variety/bracket document, dispatch a
// computation, print human or machine reports.
//
// Exit status: 0 = all checks pass, 1 = a mathematical check failed,
// 2 = input or precondition error.

#include "jetpva/error.hpp"
#include "jetpva/problem.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char **argv)
{
    CLI::App app{"jet-space Poisson vertex cohomology toolkit"};

    std::string command;
    std::vector<std::string> args;
    std::string input_path;
    std::string mode = "human";
    std::string algebroid = "cotangent";
    std::string reduce = "on";
    int jobs = 1;

    app.add_option("command", command,
                   "check-poisson | jet-info | lambda-bracket <f> <g> | pva-check | "
                   "loop-cohomology | derham | lc-crosscheck | compare-theorem")
        ->required();
    app.add_option("args", args, "command operands");
    app.add_option("--input", input_path, "problem document (default: stdin)");
    app.add_option("--mode", mode, "human|machine")->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--algebroid", algebroid, "cotangent|tangent")
        ->check(CLI::IsMember({"cotangent", "tangent"}));
    app.add_option("--reduce", reduce, "on|off")->check(CLI::IsMember({"on", "off"}));
    app.add_option("--jobs", jobs, "parallel workers for blockwise computation")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        std::string text;
        if (input_path.empty()) {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream in(input_path);
            if (!in)
                throw jetpva::Error("cli", "cannot open input file '" + input_path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }

        jetpva::ProblemSpec spec = jetpva::parse_problem(text);
        jetpva::RunOptions opt;
        opt.command = command;
        opt.args = args;
        opt.algebroid = algebroid;
        opt.reduce = reduce == "on";
        opt.jobs = jobs;

        jetpva::Report rep = jetpva::run_command(spec, opt);
        std::cout << jetpva::emit_report(rep, mode == "machine");
        if (rep.verdict && !*rep.verdict)
            return 1;
        return 0;
    } catch (const jetpva::Error &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "[cli] " << e.what() << "\n";
        return 2;
    }
}
