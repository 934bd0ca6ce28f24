#pragma once

#include "jetpva/poly.hpp"

#include <string>
#include <vector>

namespace jetpva {

/// Coordinate ring of a smooth affine base with global coordinates:
/// k[x_1..x_m] with selected variables inverted. Weight 0 throughout,
/// multidegree of x_a is e_a.
class BaseRing : public PolyRing {
public:
    BaseRing() = default;
    BaseRing(const std::vector<std::string> &names, const std::vector<bool> &invertible);

    int nvars() const { return var_count(); }
};

/// A polynomial ring together with a derivation given on generators.
/// Targets of jet-ring prolongations carry this structure.
struct DeltaRing {
    const PolyRing *ring = nullptr;
    std::vector<Poly> delta_images; // one per variable

    Poly delta(const Poly &p) const;
    Poly delta_divided(const Poly &p, int k) const;
};

/// Truncated jet ring of a BaseRing: variables x_{a,i} for 0 <= i <= W,
/// weight(x_{a,i}) = i, multidegree e_a, with only the 0-th jet of an
/// invertible base variable inverted. Monomials of total weight > W are
/// identified with zero; the cutoff ideal is delta-stable, so the
/// derivation delta(x_{a,i}) = (i+1) x_{a,i+1} descends.
class JetRing : public PolyRing {
public:
    JetRing() = default;
    JetRing(const BaseRing &base, int W);

    const BaseRing &base() const { return base_; }
    int cutoff() const { return W_; }

    VarId jet_var(int a, int i) const;
    std::pair<int, int> var_level(VarId v) const; // (base index, jet level)

    Poly delta(const Poly &p) const;
    /// delta^(k) = delta^k / k!.
    Poly delta_divided(const Poly &p, int k) const;

    /// The inclusion A -> L+A sending x_a to x_{a,0}.
    Poly embed_base(const Poly &base_poly) const;
    /// Projection of the weight-0 subring back to the base ring; throws
    /// if the element has positive-weight terms.
    Poly project_weight0(const Poly &p) const;

    DeltaRing delta_ring() const;

private:
    BaseRing base_;
    int W_ = 0;
};

JetRing build_jet_ring(const BaseRing &base, int W);

/// Ring morphism from a jet ring determined by delta-compatibility:
/// x_{a,i} maps to delta^(i)(f(x_a)) in the target delta-ring.
struct JetMorphism {
    const JetRing *source = nullptr;
    DeltaRing target;
    std::vector<Poly> images; // per jet variable

    Poly apply(const Poly &p) const;
};

/// Throws when the image of an invertible base variable is not a unit.
JetMorphism prolong_algebra_map(const JetRing &jr, const std::vector<Poly> &f, const DeltaRing &target);

} // namespace jetpva
