#include "jetpva/lambda.hpp"

namespace jetpva {

FormalPoly fp_mul_poly(const PolyRing &ring, const FormalPoly &f, const Poly &p)
{
    FormalPoly r(f.nvars());
    for (const auto &[e, c] : f.coeffs())
        r.add(e, ring.mul(c, p));
    return r;
}

FormalPoly fp_delta(const JetRing &jr, const FormalPoly &f)
{
    FormalPoly r(f.nvars());
    for (const auto &[e, c] : f.coeffs())
        r.add(e, jr.delta(c));
    return r;
}

FormalPoly fp_subst_single(const JetRing &jr, const FormalPoly &f, int out_nvars,
                           const std::vector<Rational> &lam_coef, const Rational &delta_coef)
{
    auto apply_linear = [&](const FormalPoly &x) {
        FormalPoly y(out_nvars);
        for (int j = 0; j < out_nvars; ++j)
            if (lam_coef[static_cast<size_t>(j)] != 0)
                y += lam_coef[static_cast<size_t>(j)] * x.shifted(j);
        if (delta_coef != 0)
            y += delta_coef * fp_delta(jr, x);
        return y;
    };

    FormalPoly r(out_nvars);
    for (const auto &[e, c] : f.coeffs()) {
        FormalPoly t = FormalPoly::from_poly(c, out_nvars);
        for (int k = 0; k < e[0]; ++k)
            t = apply_linear(t);
        r += t;
    }
    return r;
}

FormalPoly lambda_substitute(const JetRing &jr, const FormalPoly &f)
{
    return fp_subst_single(jr, f, 1, {Rational(-1)}, Rational(-1));
}

FormalPoly canonicalize_mod_delta_sum(const JetRing &jr, const FormalPoly &f)
{
    const int n = f.nvars();
    if (n < 1)
        throw Error("lc-cohomology", "canonicalization needs at least one formal variable");
    const int out = n - 1;

    auto apply_linear = [&](const FormalPoly &x) {
        FormalPoly y(out);
        for (int j = 0; j < out; ++j)
            y += Rational(-1) * x.shifted(j);
        y += Rational(-1) * fp_delta(jr, x);
        return y;
    };

    FormalPoly r(out);
    for (const auto &[e, c] : f.coeffs()) {
        FormalPoly t = FormalPoly::from_poly(c, out);
        for (int k = 0; k < e[static_cast<size_t>(out)]; ++k)
            t = apply_linear(t);
        std::vector<int> lead(e.begin(), e.begin() + out);
        FormalPoly shifted(out);
        for (const auto &[e2, c2] : t.coeffs()) {
            auto e3 = e2;
            for (int j = 0; j < out; ++j)
                e3[static_cast<size_t>(j)] += lead[static_cast<size_t>(j)];
            shifted.add(e3, c2);
        }
        r += shifted;
    }
    return r;
}

std::optional<int> fp_homogeneous_weight(const JetRing &jr, const FormalPoly &f)
{
    std::optional<int> w;
    for (const auto &[e, c] : f.coeffs()) {
        int lam = 0;
        for (int x : e)
            lam += x;
        for (const auto &[m, coef] : c.terms()) {
            int tw = lam + jr.weight(m);
            if (!w)
                w = tw;
            else if (*w != tw)
                return std::nullopt;
        }
    }
    return w ? w : std::optional<int>(0);
}

std::string fp_to_string(const PolyRing &ring, const FormalPoly &f)
{
    if (f.is_zero())
        return "0";
    static const char *names[] = {"lambda", "mu", "nu"};
    std::string s;
    bool first = true;
    for (const auto &[e, c] : f.coeffs()) {
        if (!first)
            s += " + ";
        first = false;
        std::string lam;
        for (int j = 0; j < f.nvars(); ++j) {
            int k = e[static_cast<size_t>(j)];
            if (k == 0)
                continue;
            if (!lam.empty())
                lam += "*";
            lam += (j < 3) ? names[j] : ("lambda" + std::to_string(j + 1));
            if (k > 1)
                lam += "^" + std::to_string(k);
        }
        if (lam.empty())
            s += ring.to_string(c);
        else
            s += "(" + ring.to_string(c) + ")*" + lam;
    }
    return s;
}

LambdaBracket LambdaBracket::from_poisson(const JetRing &jr, const PoissonStructure &P)
{
    const int m = P.base.nvars();
    std::vector<std::vector<FormalPoly>> table(
        static_cast<size_t>(m), std::vector<FormalPoly>(static_cast<size_t>(m), FormalPoly(1)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                FormalPoly::from_poly(jr.embed_base(P.entry(a, b)), 1);
    return LambdaBracket(&jr, std::move(table));
}

FormalPoly LambdaBracket::bracket_ctx(const Poly &f, const Poly &g, int nvars, int act) const
{
    FormalPoly r(nvars);
    for (const auto &[mf, cf] : f.terms())
        for (const auto &[mg, cg] : g.terms())
            r += (cf * cg) * bracket_mono(mf, mg, nvars, act);
    return r;
}

FormalPoly LambdaBracket::bracket_mono(const Monomial &T, const Monomial &U, int nvars, int act) const
{
    if (U.is_one() || T.is_one())
        return FormalPoly(nvars);

    // Right Leibniz: peel one generator off the second slot.
    const auto &uf = U.factors();
    const auto [uv, ue] = uf.back();
    const bool u_single = uf.size() == 1 && ue == 1;
    if (!u_single) {
        Monomial rest = U.with_exponent_shift(uv, -1);
        Monomial gen = Monomial::variable(uv);
        FormalPoly a = fp_mul_poly(*jr_, bracket_mono(T, gen, nvars, act),
                                   jr_->normalized(Poly::term(rest, 1)));
        FormalPoly b = fp_mul_poly(*jr_, bracket_mono(T, rest, nvars, act), Poly::variable(uv));
        return a + b;
    }

    const auto [b_idx, j] = jr_->var_level(uv);

    const auto &tf = T.factors();
    const auto [tv, te] = tf.back();
    const bool t_single = tf.size() == 1 && te == 1;
    if (t_single) {
        const auto [a_idx, i] = jr_->var_level(tv);
        if (i > 0) {
            // sesquilinearity: x_{a,i} = delta(x_{a,i-1}) / i
            FormalPoly inner =
                bracket_mono(Monomial::variable(jr_->jet_var(a_idx, i - 1)), U, nvars, act);
            return Rational(-1, i) * inner.shifted(act);
        }
        if (j > 0) {
            // {f lambda delta g} = (lambda + delta){f lambda g}
            FormalPoly inner =
                bracket_mono(T, Monomial::variable(jr_->jet_var(b_idx, j - 1)), nvars, act);
            return Rational(1, j) * (inner.shifted(act) + fp_delta(*jr_, inner));
        }
        // base case: both weight-0 generators
        std::vector<Rational> lam(static_cast<size_t>(nvars), Rational(0));
        lam[static_cast<size_t>(act)] = 1;
        return fp_subst_single(*jr_, entry(a_idx, b_idx), nvars, lam, Rational(0));
    }

    // Product in the first slot: skew-symmetry
    //   {T lambda u} = -{u mu T}|_{mu -> -delta - lambda}.
    FormalPoly inner = bracket_mono(Monomial::variable(uv), T, 1, 0);
    std::vector<Rational> lam(static_cast<size_t>(nvars), Rational(0));
    lam[static_cast<size_t>(act)] = -1;
    return Rational(-1) * fp_subst_single(*jr_, inner, nvars, lam, Rational(-1));
}

PVAStructure make_pva(const PoissonStructure &P, int W)
{
    if (auto bad = schouten_jacobi_check(P))
        throw Error("lambda-bracket", "input bivector fails the Jacobi identity on (" +
                                          std::to_string(bad->a) + "," + std::to_string(bad->b) +
                                          "," + std::to_string(bad->c) + ")");
    PVAStructure pva{JetRing(P.base, W), P, LambdaBracket(nullptr, {})};
    pva.bracket = LambdaBracket::from_poisson(pva.ring, P);
    return pva;
}

namespace {

std::string pair_name(const JetRing &jr, VarId u, VarId v)
{
    return "(" + jr.var(u).name + "," + jr.var(v).name + ")";
}

} // namespace

AxiomReport pva_axiom_suite(const LambdaBracket &lb, int wmax)
{
    const JetRing &jr = lb.ring();
    if (jr.cutoff() < wmax + 1)
        throw Error("lambda-bracket",
                    "axiom suite at window " + std::to_string(wmax) +
                        " needs ring cutoff >= " + std::to_string(wmax + 1));

    std::vector<VarId> gens;
    for (VarId v = 0; v < jr.var_count(); ++v)
        if (jr.var(v).weight <= wmax)
            gens.push_back(v);

    AxiomItem delta_der{"delta-derivation", true, ""};
    AxiomItem sesqui{"sesquilinearity", true, ""};
    AxiomItem skew{"skew-symmetry", true, ""};
    AxiomItem jacobi{"jacobi", true, ""};
    AxiomItem leibniz{"leibniz", true, ""};

    for (VarId u : gens)
        for (VarId v : gens) {
            Poly pu = Poly::variable(u), pv = Poly::variable(v);
            FormalPoly br = lb.bracket(pu, pv);

            if (delta_der.pass) {
                FormalPoly lhs = fp_delta(jr, br);
                FormalPoly rhs = lb.bracket(jr.delta(pu), pv) + lb.bracket(pu, jr.delta(pv));
                if (lhs != rhs) {
                    delta_der.pass = false;
                    delta_der.detail = pair_name(jr, u, v);
                }
            }
            if (sesqui.pass) {
                FormalPoly lhs = lb.bracket(jr.delta(pu), pv);
                FormalPoly rhs = Rational(-1) * br.shifted(0);
                if (lhs != rhs) {
                    sesqui.pass = false;
                    sesqui.detail = pair_name(jr, u, v);
                }
            }
            if (skew.pass) {
                FormalPoly rhs = Rational(-1) * lambda_substitute(jr, lb.bracket(pv, pu));
                if (br != rhs) {
                    skew.pass = false;
                    skew.detail = pair_name(jr, u, v);
                }
            }
        }

    for (VarId u : gens)
        for (VarId v : gens)
            for (VarId w : gens) {
                Poly pu = Poly::variable(u), pv = Poly::variable(v), pw = Poly::variable(w);

                if (leibniz.pass) {
                    FormalPoly lhs = lb.bracket(pu, jr.mul(pv, pw));
                    FormalPoly rhs = fp_mul_poly(jr, lb.bracket(pu, pv), pw) +
                                     fp_mul_poly(jr, lb.bracket(pu, pw), pv);
                    if (lhs != rhs) {
                        leibniz.pass = false;
                        leibniz.detail = pair_name(jr, u, v) + jr.var(w).name;
                    }
                }

                if (jacobi.pass) {
                    // {{u lam v} (lam+mu) w} = {u lam {v mu w}} - {v mu {u lam w}}
                    FormalPoly lhs(2);
                    for (const auto &[e, c] : lb.bracket(pu, pv).coeffs()) {
                        FormalPoly inner = lb.bracket(c, pw); // 1 var
                        FormalPoly sub =
                            fp_subst_single(jr, inner, 2, {Rational(1), Rational(1)}, Rational(0));
                        for (int k = 0; k < e[0]; ++k)
                            sub = sub.shifted(0);
                        lhs += sub;
                    }
                    FormalPoly rhs(2);
                    for (const auto &[e, c] : lb.bracket(pv, pw).coeffs()) {
                        FormalPoly outer = lb.bracket_ctx(pu, c, 2, 0);
                        rhs += outer.shifted(1, e[0]);
                    }
                    for (const auto &[e, c] : lb.bracket(pu, pw).coeffs()) {
                        FormalPoly outer = lb.bracket_ctx(pv, c, 2, 1);
                        rhs -= outer.shifted(0, e[0]);
                    }
                    if (lhs != rhs) {
                        jacobi.pass = false;
                        jacobi.detail =
                            "(" + jr.var(u).name + "," + jr.var(v).name + "," + jr.var(w).name + ")";
                    }
                }
            }

    AxiomReport rep;
    rep.items = {delta_der, sesqui, skew, jacobi, leibniz};
    return rep;
}

ArakawaCheck arakawa_closed_form(const LambdaBracket &lb, int i, int j, int a, int b)
{
    const JetRing &jr = lb.ring();
    ArakawaCheck out{FormalPoly(1), FormalPoly(1), FormalPoly(1), ""};

    out.recursion = lb.bracket(Poly::variable(jr.jet_var(a, i)), Poly::variable(jr.jet_var(b, j)));

    const FormalPoly &base = lb.entry(a, b);

    // reading "operator": delta^(i) applied after (-lambda-delta)^(j)
    {
        FormalPoly f = base;
        for (int k = 0; k < j; ++k)
            f = Rational(-1) * f.shifted(0) - fp_delta(jr, f);
        f = Rational(Int(1), factorial(j)) * f;
        for (int k = 0; k < i; ++k)
            f = fp_delta(jr, f);
        out.reading_operator = Rational(Int(1), factorial(i)) * f;
    }

    // reading "sesquilinear": (-lambda)^(i) (lambda+delta)^(j)
    {
        FormalPoly f = base;
        for (int k = 0; k < j; ++k)
            f = f.shifted(0) + fp_delta(jr, f);
        f = Rational(Int(1), factorial(j)) * f;
        f = f.shifted(0, i);
        Rational s(Int((i % 2 == 0) ? 1 : -1), factorial(i));
        out.reading_sesquilinear = s * f;
    }

    const bool opA = out.reading_operator == out.recursion;
    const bool opB = out.reading_sesquilinear == out.recursion;
    if (opA && opB)
        out.winning = "both";
    else if (opA)
        out.winning = "operator";
    else if (opB)
        out.winning = "sesquilinear";
    else
        throw Error("lambda-bracket", "closed form matches neither reading at (i,j,a,b)=(" +
                                          std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(a) + "," + std::to_string(b) + ")");
    return out;
}

PoissonStructure induced_poisson_at_lambda_zero(const LambdaBracket &lb, const PoissonStructure &P)
{
    const JetRing &jr = lb.ring();
    const int m = P.base.nvars();
    std::vector<std::vector<Poly>> pi(static_cast<size_t>(m),
                                      std::vector<Poly>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            FormalPoly f =
                lb.bracket(Poly::variable(jr.jet_var(a, 0)), Poly::variable(jr.jet_var(b, 0)));
            Poly at_zero = f.coefficient(std::vector<int>{0});
            Poly w0;
            for (const auto &[mono, c] : at_zero.terms())
                if (jr.weight(mono) == 0)
                    w0.add_term(mono, c);
            pi[static_cast<size_t>(a)][static_cast<size_t>(b)] = jr.project_weight0(w0);
        }
    PoissonStructure rec = PoissonStructure::make(P.base, pi);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (rec.entry(a, b) != P.entry(a, b))
                throw Error("lambda-bracket", "induced Poisson structure does not round-trip on (" +
                                                  P.base.var(a).name + "," + P.base.var(b).name + ")");
    return rec;
}

} // namespace jetpva
