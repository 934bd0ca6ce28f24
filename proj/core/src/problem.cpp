#include "jetpva/problem.hpp"

#include "jetpva/lambda.hpp"
#include "jetpva/lccochain.hpp"

#include <sstream>

namespace jetpva {

namespace {

std::vector<std::string> tokens_of(const std::string &line)
{
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t)
        out.push_back(t);
    return out;
}

[[noreturn]] void fail_line(int lineno, const std::string &msg)
{
    throw Error("cli", "line " + std::to_string(lineno) + ": " + msg);
}

} // namespace

ProblemSpec parse_problem(const std::string &text)
{
    ProblemSpec s;
    s.variety.clear();
    bool have_vars = false, have_md = false, have_weight = false, have_lc = false, have_variety = false;

    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos)
            raw = raw.substr(0, pos);
        auto toks = tokens_of(raw);
        if (toks.empty())
            continue;
        const std::string &key = toks[0];

        if (key == "variety") {
            if (toks.size() != 2)
                fail_line(lineno, "variety expects one name");
            if (have_variety)
                fail_line(lineno, "duplicate variety line");
            s.variety = toks[1];
            have_variety = true;
        } else if (key == "vars") {
            if (have_vars)
                fail_line(lineno, "duplicate vars line");
            if (toks.size() < 2)
                fail_line(lineno, "vars expects at least one variable");
            for (size_t i = 1; i < toks.size(); ++i) {
                std::string name = toks[i];
                bool inv = false;
                if (!name.empty() && name.back() == '*') {
                    inv = true;
                    name.pop_back();
                }
                if (name.empty())
                    fail_line(lineno, "empty variable name");
                for (const auto &existing : s.vars)
                    if (existing == name)
                        fail_line(lineno, "duplicate variable '" + name + "'");
                s.vars.push_back(name);
                s.invertible.push_back(inv);
            }
            have_vars = true;
        } else if (key == "bracket") {
            if (!have_vars)
                fail_line(lineno, "bracket before vars");
            auto colon = raw.find(':');
            if (colon == std::string::npos)
                fail_line(lineno, "bracket expects 'bracket <v1> <v2> : <expr>'");
            auto head = tokens_of(raw.substr(0, colon));
            if (head.size() != 3)
                fail_line(lineno, "bracket expects two variables before ':'");
            auto find = [&](const std::string &n) -> int {
                for (size_t i = 0; i < s.vars.size(); ++i)
                    if (s.vars[i] == n)
                        return static_cast<int>(i);
                fail_line(lineno, "undeclared variable '" + n + "'");
            };
            int a = find(head[1]);
            int b = find(head[2]);
            if (a == b)
                fail_line(lineno, "bracket of a variable with itself");
            if (a > b)
                fail_line(lineno, "bracket entries are given for a<b pairs only (antisymmetry implied)");
            for (const auto &[pa, pb, _] : s.brackets)
                if (pa == a && pb == b)
                    fail_line(lineno, "non-antisymmetric duplicate bracket entry");
            BaseRing ring(s.vars, s.invertible);
            Poly value;
            try {
                value = ring.parse(raw.substr(colon + 1));
            } catch (const Error &e) {
                fail_line(lineno, e.what());
            }
            s.brackets.emplace_back(a, b, value);
        } else if (key == "window") {
            if (toks.size() < 3)
                fail_line(lineno, "window expects a kind and value(s)");
            if (toks[1] == "weight") {
                if (have_weight)
                    fail_line(lineno, "duplicate weight window");
                s.weight_window = std::stoi(toks[2]);
                if (s.weight_window < 0)
                    fail_line(lineno, "weight window must be non-negative");
                have_weight = true;
            } else if (toks[1] == "multidegree") {
                if (have_md)
                    fail_line(lineno, "duplicate multidegree window");
                if (!have_vars)
                    fail_line(lineno, "multidegree window before vars");
                if (toks.size() != 2 + s.vars.size())
                    fail_line(lineno, "multidegree window expects one bound per variable");
                for (size_t i = 2; i < toks.size(); ++i)
                    s.md_window.push_back(std::stoi(toks[i]));
                have_md = true;
            } else if (toks[1] == "lcdegree") {
                if (have_lc)
                    fail_line(lineno, "duplicate lcdegree window");
                s.lc_degree = std::stoi(toks[2]);
                if (s.lc_degree < 0 || s.lc_degree > 2)
                    fail_line(lineno, "lcdegree window must be 0, 1 or 2");
                have_lc = true;
            } else {
                fail_line(lineno, "unknown window kind '" + toks[1] + "'");
            }
        } else {
            fail_line(lineno, "unknown key '" + key + "'");
        }
    }
    if (!have_vars)
        throw Error("cli", "document declares no variables");
    if (s.variety.empty())
        s.variety = "unnamed";
    if (s.md_window.empty())
        s.md_window.assign(s.vars.size(), 2);
    return s;
}

std::string print_problem(const ProblemSpec &s)
{
    std::ostringstream os;
    os << "variety " << s.variety << "\n";
    os << "vars";
    for (size_t i = 0; i < s.vars.size(); ++i)
        os << " " << s.vars[i] << (s.invertible[i] ? "*" : "");
    os << "\n";
    BaseRing ring(s.vars, s.invertible);
    for (const auto &[a, b, value] : s.brackets)
        os << "bracket " << s.vars[static_cast<size_t>(a)] << " " << s.vars[static_cast<size_t>(b)]
           << " : " << ring.to_string(value) << "\n";
    os << "window weight " << s.weight_window << "\n";
    os << "window multidegree";
    for (int b : s.md_window)
        os << " " << b;
    os << "\n";
    os << "window lcdegree " << s.lc_degree << "\n";
    return os.str();
}

BaseRing problem_ring(const ProblemSpec &s)
{
    return BaseRing(s.vars, s.invertible);
}

PoissonStructure problem_poisson(const ProblemSpec &s)
{
    BaseRing ring = problem_ring(s);
    const int m = ring.nvars();
    std::vector<std::vector<Poly>> pi(static_cast<size_t>(m), std::vector<Poly>(static_cast<size_t>(m)));
    for (const auto &[a, b, value] : s.brackets) {
        pi[static_cast<size_t>(a)][static_cast<size_t>(b)] = value;
        pi[static_cast<size_t>(b)][static_cast<size_t>(a)] = -value;
    }
    return PoissonStructure::make(ring, std::move(pi));
}

Window problem_window(const ProblemSpec &s)
{
    Window w;
    w.wmax = s.weight_window;
    w.md_bound = s.md_window;
    return w;
}

namespace {

Report cmd_check_poisson(const ProblemSpec &spec)
{
    Report rep;
    PoissonStructure P = problem_poisson(spec);
    auto bad = schouten_jacobi_check(P);
    CheckLine c{"schouten-jacobi", !bad, ""};
    if (bad)
        c.detail = "(" + spec.vars[static_cast<size_t>(bad->a)] + "," +
                   spec.vars[static_cast<size_t>(bad->b)] + "," + spec.vars[static_cast<size_t>(bad->c)] +
                   ")";
    rep.checks.push_back(c);
    rep.verdict = !bad;
    return rep;
}

Report cmd_jet_info(const ProblemSpec &spec)
{
    Report rep;
    BaseRing base = problem_ring(spec);
    JetRing jr(base, spec.weight_window);
    rep.info.push_back("variety " + spec.variety);
    rep.info.push_back("jet ring at weight cutoff " + std::to_string(spec.weight_window) + ": " +
                       std::to_string(jr.var_count()) + " variables");
    for (VarId v = 0; v < jr.var_count(); ++v) {
        const auto &info = jr.var(v);
        rep.info.push_back("  " + info.name + "  weight " + std::to_string(info.weight) +
                           (info.invertible ? "  invertible" : ""));
    }
    rep.checks.push_back(CheckLine{"jet-ring", true,
                                   std::to_string(jr.var_count()) + "-variables-cutoff-" +
                                       std::to_string(spec.weight_window)});
    rep.verdict = true;
    return rep;
}

Report cmd_lambda_bracket(const ProblemSpec &spec, const RunOptions &opt)
{
    if (opt.args.size() != 2)
        throw Error("cli", "lambda-bracket expects two polynomial arguments");
    Report rep;
    PoissonStructure P = problem_poisson(spec);
    JetRing jr(P.base, spec.weight_window);
    LambdaBracket lb = LambdaBracket::from_poisson(jr, P);
    Poly f = jr.parse(opt.args[0]);
    Poly g = jr.parse(opt.args[1]);
    FormalPoly br = lb.bracket(f, g);
    std::string value = fp_to_string(jr, br);
    rep.info.push_back("{" + opt.args[0] + " lambda " + opt.args[1] + "} = " + value);
    rep.checks.push_back(CheckLine{"lambda-bracket", true, value});
    rep.verdict = true;
    return rep;
}

Report cmd_pva_check(const ProblemSpec &spec)
{
    Report rep;
    PoissonStructure P = problem_poisson(spec);
    const int wmax = spec.weight_window;
    JetRing jr(P.base, wmax + 1);
    LambdaBracket lb = LambdaBracket::from_poisson(jr, P);
    AxiomReport ax = pva_axiom_suite(lb, wmax);
    for (const auto &item : ax.items)
        rep.checks.push_back(CheckLine{item.axiom, item.pass, item.detail});
    rep.verdict = ax.all_pass();
    return rep;
}

Report cmd_loop_cohomology(const ProblemSpec &spec, const RunOptions &opt)
{
    Report rep;
    PoissonStructure P = problem_poisson(spec);
    LieAlgebroidData L = (opt.algebroid == "tangent") ? tangent_algebroid(P.base)
                                                      : cotangent_algebroid(P);
    LoopComplex C = build_loop_complex(L, spec.weight_window);
    CohomologyReport coh = blockwise_cohomology(C, opt.reduce, problem_window(spec), opt.jobs);
    for (const auto &b : coh.blocks)
        rep.blocks.push_back(BlockLine{b.label.degree, b.label.weight, b.label.multidegree, b.dim, b.hdim});
    rep.checks.push_back(CheckLine{"euler-consistency", coh.euler_consistent, ""});
    rep.verdict = coh.euler_consistent;
    return rep;
}

Report cmd_derham(const ProblemSpec &spec)
{
    Report rep;
    BaseRing base = problem_ring(spec);
    BaseComplex C = build_base_complex(tangent_algebroid(base));
    CohomologyReport coh = base_cohomology(C, problem_window(spec));
    for (const auto &b : coh.blocks)
        rep.blocks.push_back(BlockLine{b.label.degree, b.label.weight, b.label.multidegree, b.dim, b.hdim});
    rep.checks.push_back(CheckLine{"euler-consistency", coh.euler_consistent, ""});
    rep.verdict = coh.euler_consistent;
    return rep;
}

Report cmd_lc_crosscheck(const ProblemSpec &spec)
{
    Report rep;
    PoissonStructure P = problem_poisson(spec);
    IntertwineReport ir = intertwine_check(P, spec.weight_window, problem_window(spec));
    rep.checks.push_back(CheckLine{"iota-intertwines-degree-0", ir.deg0, ir.deg0 ? "" : ir.detail});
    if (spec.lc_degree >= 1) {
        rep.checks.push_back(CheckLine{"iota-intertwines-degree-1", ir.deg1, ir.deg1 ? "" : ir.detail});
        rep.checks.push_back(CheckLine{"d-squared-zero", ir.ddzero, ir.ddzero ? "" : ir.detail});
    }
    if (spec.lc_degree >= 2)
        rep.checks.push_back(CheckLine{"iota-block-bijection", ir.bijection, ir.bijection ? "" : ir.detail});
    rep.verdict = rep.all_checks_pass();
    return rep;
}

Report cmd_compare_theorem(const ProblemSpec &spec, const RunOptions &opt)
{
    Report rep;
    PoissonStructure P = problem_poisson(spec);
    TheoremReport tr = theorem_symplectic_check(P, spec.weight_window, problem_window(spec), opt.jobs);
    for (const auto &b : tr.loop.blocks)
        rep.blocks.push_back(BlockLine{b.label.degree, b.label.weight, b.label.multidegree, b.dim, b.hdim});
    rep.checks.push_back(CheckLine{"dimensions-match-de-rham", tr.dims_match, tr.dims_match ? "" : tr.detail});
    rep.checks.push_back(
        CheckLine{"positive-weight-acyclic", tr.positive_weight_vanish, ""});
    rep.checks.push_back(CheckLine{"pi-sharp-transport", tr.transport_ok, tr.transport_ok ? "" : tr.detail});
    rep.checks.push_back(CheckLine{"euler-consistency", tr.loop.euler_consistent, ""});
    rep.verdict = tr.pass() && tr.loop.euler_consistent;
    return rep;
}

} // namespace

Report run_command(const ProblemSpec &spec, const RunOptions &opt)
{
    if (opt.command == "check-poisson")
        return cmd_check_poisson(spec);
    if (opt.command == "jet-info")
        return cmd_jet_info(spec);
    if (opt.command == "lambda-bracket")
        return cmd_lambda_bracket(spec, opt);
    if (opt.command == "pva-check")
        return cmd_pva_check(spec);
    if (opt.command == "loop-cohomology")
        return cmd_loop_cohomology(spec, opt);
    if (opt.command == "derham")
        return cmd_derham(spec);
    if (opt.command == "lc-crosscheck")
        return cmd_lc_crosscheck(spec);
    if (opt.command == "compare-theorem")
        return cmd_compare_theorem(spec, opt);
    throw Error("cli", "unknown command '" + opt.command + "'");
}

} // namespace jetpva
