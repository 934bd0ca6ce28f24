#pragma once

#include "jetpva/jetring.hpp"
#include "jetpva/poisson.hpp"

#include <map>
#include <string>
#include <vector>

namespace jetpva {

/// Polynomial in formal variables lambda_1..lambda_n with jet-ring
/// coefficients. Carrier of lambda-brackets and LC cochain values.
/// Weight bookkeeping: each lambda carries conformal weight 1.
class FormalPoly {
public:
    explicit FormalPoly(int nvars = 1) : nvars_(nvars) {}

    static FormalPoly from_poly(const Poly &p, int nvars = 1)
    {
        FormalPoly f(nvars);
        f.add(std::vector<int>(static_cast<size_t>(nvars), 0), p);
        return f;
    }

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Poly> &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const std::vector<int> &exps, const Poly &p)
    {
        if (p.is_zero())
            return;
        auto [it, inserted] = coeffs_.emplace(exps, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    Poly coefficient(const std::vector<int> &exps) const
    {
        auto it = coeffs_.find(exps);
        return it == coeffs_.end() ? Poly{} : it->second;
    }

    FormalPoly &operator+=(const FormalPoly &o)
    {
        for (const auto &[e, p] : o.coeffs_)
            add(e, p);
        return *this;
    }
    FormalPoly &operator-=(const FormalPoly &o)
    {
        for (const auto &[e, p] : o.coeffs_)
            add(e, -p);
        return *this;
    }
    friend FormalPoly operator+(FormalPoly a, const FormalPoly &b) { return a += b; }
    friend FormalPoly operator-(FormalPoly a, const FormalPoly &b) { return a -= b; }
    friend FormalPoly operator-(const FormalPoly &a) { return Rational(-1) * a; }
    friend FormalPoly operator*(const Rational &s, const FormalPoly &f)
    {
        FormalPoly r(f.nvars_);
        if (s == 0)
            return r;
        for (const auto &[e, p] : f.coeffs_)
            r.coeffs_.emplace(e, s * p);
        return r;
    }

    /// Multiply by lambda_var^k.
    FormalPoly shifted(int var, int k = 1) const
    {
        FormalPoly r(nvars_);
        for (const auto &[e, p] : coeffs_) {
            auto e2 = e;
            e2[static_cast<size_t>(var)] += k;
            r.coeffs_.emplace(e2, p);
        }
        return r;
    }

    friend bool operator==(const FormalPoly &, const FormalPoly &) = default;

private:
    int nvars_;
    std::map<std::vector<int>, Poly> coeffs_;
};

FormalPoly fp_mul_poly(const PolyRing &ring, const FormalPoly &f, const Poly &p);
FormalPoly fp_delta(const JetRing &jr, const FormalPoly &f);

/// Substitutes the single variable of `f` by
/// Sigma_j lam_coef[j] * lambda_j + delta_coef * delta
/// (delta expanded on the coefficients), producing an `out_nvars`-variable
/// polynomial.
FormalPoly fp_subst_single(const JetRing &jr, const FormalPoly &f, int out_nvars,
                           const std::vector<Rational> &lam_coef, const Rational &delta_coef);

/// The skew-symmetry substitution lambda -> -lambda - delta; involutive
/// on single-variable values.
FormalPoly lambda_substitute(const JetRing &jr, const FormalPoly &f);

/// Eliminates the last formal variable via
/// lambda_n -> -lambda_1 - ... - lambda_{n-1} - delta.
FormalPoly canonicalize_mod_delta_sum(const JetRing &jr, const FormalPoly &f);

/// Per-term weight homogeneity with weight(lambda) = 1; returns the
/// common weight, or nothing if inhomogeneous (zero reports weight 0).
std::optional<int> fp_homogeneous_weight(const JetRing &jr, const FormalPoly &f);

std::string fp_to_string(const PolyRing &ring, const FormalPoly &f);

/// The Poisson-vertex lambda-bracket on a truncated jet ring, computed by
/// the normative recursion: generator base values {x_{a,0} lambda x_{b,0}},
/// first-slot sesquilinearity, the derived second-slot rule
/// {f lambda delta g} = (lambda + delta){f lambda g}, the right Leibniz
/// rule, and skew-symmetry for products in the first slot.
class LambdaBracket {
public:
    LambdaBracket(const JetRing *jr, std::vector<std::vector<FormalPoly>> table)
        : jr_(jr), table_(std::move(table))
    {}

    static LambdaBracket from_poisson(const JetRing &jr, const PoissonStructure &P);

    const JetRing &ring() const { return *jr_; }
    const FormalPoly &entry(int a, int b) const
    {
        return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }
    void set_entry(int a, int b, FormalPoly f)
    {
        table_[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(f);
    }

    FormalPoly bracket(const Poly &f, const Poly &g) const { return bracket_ctx(f, g, 1, 0); }
    /// Bracket whose formal variable is lambda_{act} inside an
    /// `nvars`-variable ambient context (needed by the Jacobi axiom and
    /// the LC differential).
    FormalPoly bracket_ctx(const Poly &f, const Poly &g, int nvars, int act) const;

private:
    FormalPoly bracket_mono(const Monomial &T, const Monomial &U, int nvars, int act) const;

    const JetRing *jr_;
    std::vector<std::vector<FormalPoly>> table_;
};

/// Jet ring + verified Poisson structure + the induced lambda-bracket.
struct PVAStructure {
    JetRing ring;
    PoissonStructure pi;
    LambdaBracket bracket;
};

/// Throws when the Schouten check fails.
PVAStructure make_pva(const PoissonStructure &P, int W);

struct AxiomItem {
    std::string axiom;
    bool pass = true;
    std::string detail; // first failing tuple, when any
};
struct AxiomReport {
    std::vector<AxiomItem> items;
    bool all_pass() const
    {
        for (const auto &i : items)
            if (!i.pass)
                return false;
        return true;
    }
};

/// Checks the five PVA axioms as exact identities of FormalPolys on all
/// generator pairs/triples of weight <= wmax. The bracket's ring must
/// have cutoff >= wmax + 1 so that input-level delta applications are
/// weight-exact.
AxiomReport pva_axiom_suite(const LambdaBracket &lb, int wmax);

struct ArakawaCheck {
    FormalPoly recursion;
    FormalPoly reading_operator;      // delta^(i) after (-lambda-delta)^(j)
    FormalPoly reading_sesquilinear;  // (-lambda)^(i) (lambda+delta)^(j)
    std::string winning;              // "sesquilinear" | "operator" | "both"
};

/// Evaluates the closed jet formula under both candidate readings and
/// compares with the recursion; throws when neither matches.
ArakawaCheck arakawa_closed_form(const LambdaBracket &lb, int i, int j, int a, int b);

/// Restricts the bracket to weight-0 generators at lambda = 0 and
/// projects to the base; throws on a round-trip mismatch with P.
PoissonStructure induced_poisson_at_lambda_zero(const LambdaBracket &lb, const PoissonStructure &P);

} // namespace jetpva
