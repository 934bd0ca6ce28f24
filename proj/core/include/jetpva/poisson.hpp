#pragma once

#include "jetpva/jetring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetpva {

/// Poisson bivector on the base: pi[a][b] = {x_a, x_b}, antisymmetric.
/// The Jacobi identity is a property to verify, never an assumption.
struct PoissonStructure {
    BaseRing base;
    std::vector<std::vector<Poly>> pi;

    static PoissonStructure make(const BaseRing &base, std::vector<std::vector<Poly>> pi);

    const Poly &entry(int a, int b) const { return pi[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    /// {f, g} = Sigma pi^{ab} d_a f d_b g.
    Poly bracket(const Poly &f, const Poly &g) const;
};

struct SchoutenCounterexample {
    int a = 0, b = 0, c = 0; // smallest failing triple, lexicographic
    Poly value;              // the non-vanishing cyclic sum
};

/// Componentwise Schouten identity
///   Sigma_d (pi^{da} d_d pi^{bc} + pi^{db} d_d pi^{ca} + pi^{dc} d_d pi^{ab}) = 0.
std::optional<SchoutenCounterexample> schouten_jacobi_check(const PoissonStructure &P);

/// Lie algebroid on a free module over the base: anchor rho[alpha][a]
/// (rho(e_alpha) = Sigma rho_alpha^a d_a) and structure functions
/// c[alpha][beta][gamma] ([e_alpha, e_beta] = Sigma c e_gamma).
struct LieAlgebroidData {
    BaseRing base;
    int rank = 0;
    std::vector<std::vector<Poly>> anchor;
    std::vector<std::vector<std::vector<Poly>>> structure;

    const Poly &rho(int alpha, int a) const
    {
        return anchor[static_cast<size_t>(alpha)][static_cast<size_t>(a)];
    }
    const Poly &c(int alpha, int beta, int gamma) const
    {
        return structure[static_cast<size_t>(alpha)][static_cast<size_t>(beta)][static_cast<size_t>(gamma)];
    }
};

/// A section written in the module frame: rank coefficient functions.
using Section = std::vector<Poly>;

Poly anchor_apply(const LieAlgebroidData &L, const Section &s, const Poly &f);
Section bracket_sections(const LieAlgebroidData &L, const Section &s, const Section &t);

/// Koszul (cotangent) algebroid of a Poisson structure in the coordinate
/// coframe: basis dx_alpha, anchor pi^{alpha a}, structure functions
/// d pi^{alpha beta} / d x_gamma (from {da,db} = d{a,b}).
LieAlgebroidData cotangent_algebroid(const PoissonStructure &P);

/// Tautological tangent algebroid in the coordinate frame.
LieAlgebroidData tangent_algebroid(const BaseRing &base);

struct AlgebroidCounterexample {
    std::string axiom; // "jacobi" | "anchor-morphism" | "leibniz" | "antisymmetry"
    std::vector<int> tuple;
};

std::optional<AlgebroidCounterexample> algebroid_axiom_check(const LieAlgebroidData &L);

/// pi viewed as the frame map dx_a -> Sigma pi^{ab} d_b together with
/// its exact inverse; empty when det(pi) is not a unit of the base ring.
struct FrameMap {
    std::vector<std::vector<Poly>> fwd;
    std::vector<std::vector<Poly>> inv;
};

std::optional<FrameMap> pi_sharp_iso(const PoissonStructure &P);

struct TransportCheck {
    bool anchor_identity = true; // transported anchor equals the identity
    bool brackets_vanish = true; // transported coordinate brackets vanish
    bool ok() const { return anchor_identity && brackets_vanish; }
};

/// Pushes the cotangent algebroid through pi-sharp and compares with the
/// tangent algebroid in the coordinate frame.
TransportCheck check_pi_sharp_transport(const PoissonStructure &P, const FrameMap &F);

Poly exact_det(const PolyRing &ring, const std::vector<std::vector<Poly>> &m);

} // namespace jetpva
