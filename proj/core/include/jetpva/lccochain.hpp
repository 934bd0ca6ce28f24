#pragma once

#include "jetpva/lambda.hpp"
#include "jetpva/loop.hpp"

#include <string>
#include <vector>

namespace jetpva {

/// Lie-conformal / PVA cochain in degrees 0..2, stored by canonical
/// generator values only: the degree-n value on an n-tuple of weight-0
/// generators is a FormalPoly in lambda_1..lambda_{n-1} (the last
/// variable eliminated through lambda_n -> -Sigma lambda - delta).
/// Values on delta-descendants and products are evaluation rules
/// (sesquilinearity and the slot Leibniz rule), never stored data.
struct LCCochain {
    int degree = 0;
    Poly v0;                                  // degree 0: element of B (class mod delta B)
    std::vector<Poly> v1;                     // degree 1: value per base direction
    std::vector<std::vector<FormalPoly>> v2;  // degree 2: canonical reps, used for a <= b

    /// Canonical representative for an ordered generator pair; (b,a) is
    /// derived from (a,b) through the antisymmetry substitution.
    FormalPoly value2(const JetRing &jr, int a, int b) const;
};

LCCochain lc_zero_cochain(const JetRing &jr, int degree);

/// Evaluates a degree-1 cochain on an arbitrary ring element; the slot
/// formal variable is Sigma_j t[j] lambda_j in an nvars-variable context.
FormalPoly eval_cochain1(const JetRing &jr, const LCCochain &Y, const Poly &arg, int nvars,
                         const std::vector<Rational> &t);

FormalPoly eval_cochain2(const JetRing &jr, const LCCochain &Y, const Poly &arg1, const Poly &arg2,
                         int nvars, const std::vector<Rational> &t1, const std::vector<Rational> &t2);

/// The LC differential value of a degree-1 cochain on an arbitrary
/// argument pair, in two ambient formal variables, before the final
/// canonicalization:
///   {f l1 Y(g)} - {g l2 Y(f)} - Y_{l1+l2}({f l1 g}).
FormalPoly lc_d1_raw(const LambdaBracket &lb, const LCCochain &Y, const Poly &f, const Poly &g);

/// The degree-2 differential value on an argument triple, canonicalized
/// to two formal variables; vanishes identically iff d(dY') = 0 paths do.
FormalPoly lc_d2_value(const LambdaBracket &lb, const LCCochain &Y, const Poly &f, const Poly &g,
                       const Poly &h);

/// Degrees 0 -> 1 -> 2 of the LC differential on stored cochains.
LCCochain lc_differential(const LambdaBracket &lb, const LCCochain &Y);

/// Transport of a loop de Rham-Lie form (cotangent complex, degree <= 2)
/// to an LC cochain: th^a_i contributes lambda^i in its slot,
/// antisymmetrized over slots, then canonicalized. `raw1` / `raw2` keep
/// the pre-canonicalization values (degree-n values in n variables).
struct IotaResult {
    LCCochain cochain;
    std::vector<FormalPoly> raw1;              // per slot, degree 1
    std::vector<std::vector<FormalPoly>> raw2; // per ordered pair, degree 2
};

IotaResult iota_transport(const LoopComplex &cot, const SuperElement &form, int degree);

/// The lambda-side delta action delta_coeff + Sigma (lambda^2 d/dlambda
/// + lambda), the transported module delta; iota intertwines the two.
FormalPoly lambda_side_delta(const JetRing &jr, const FormalPoly &f);

struct IntertwineReport {
    bool deg0 = true;      // iota . D = d_LC . iota on degree-0 block bases
    bool deg1 = true;      // same in degree 1 -> 2
    bool bijection = true; // rank(iota) = reduced loop dim = LC dim per block
    bool ddzero = true;    // d_LC . d_LC = 0 on degree-0/1 bases
    std::string detail;
    bool ok() const { return deg0 && deg1 && bijection && ddzero; }
};

/// The key-lemma cross-check within the window: blockwise bijection and
/// exact intertwining of differentials in degrees 0->1 and 1->2, plus
/// d^2 = 0 on the LC side.
IntertwineReport intertwine_check(const PoissonStructure &P, int wmax, const Window &win);

struct ClosureReport {
    bool ok = true;
    std::string detail;
};

/// Verifies that the differential of a stored cochain, evaluated by the
/// formula at randomized product arguments, matches the slot-Leibniz
/// extension of its stored generator values.
ClosureReport polyderivation_closure_check(const LambdaBracket &lb, const LCCochain &Y, int trials,
                                           unsigned seed, int wmax);

} // namespace jetpva
