#pragma once

#include "jetpva/jetring.hpp"

#include <vector>

namespace jetpva {

/// Free module over a jet ring on symbols (e_k)_i, 1<=k<=rank,
/// 0<=i<=W; delta acts by (e_k)_i -> (i+1)(e_k)_{i+1}, zero past the
/// cutoff. Realizes L+ of a free module on the base.
struct FreeJetModule {
    const JetRing *ring = nullptr;
    int rank = 0;

    int symbol_count() const { return rank * (ring->cutoff() + 1); }
    int symbol(int k, int i) const { return k * (ring->cutoff() + 1) + i; }
};

struct JetModElem {
    std::vector<Poly> c; // coefficient per symbol
};

JetModElem fjm_zero(const FreeJetModule &mod);
JetModElem fjm_symbol(const FreeJetModule &mod, int k, int i);
JetModElem fjm_add(const JetModElem &a, const JetModElem &b);
JetModElem fjm_scale(const FreeJetModule &mod, const Poly &p, const JetModElem &v);
JetModElem fjm_delta(const FreeJetModule &mod, const JetModElem &v);
JetModElem fjm_delta_divided(const FreeJetModule &mod, const JetModElem &v, int k);

/// The exterior differential of the jet ring, written in the basis
/// (dx_a)_i of L+Omega^1: d(x_{a,i}) = (dx_a)_i extended by Leibniz.
JetModElem jet_of_differential(const JetRing &jr, const Poly &p);

/// Pro-truncation of the integral functor: basis e_k (x) z^j for
/// 0<=j<=n. A jet-ring element p acts through its prolongation
/// Sigma_i delta^(i)(p) z^i, truncated at z^n; delta acts as
/// delta_X - d/dz with delta_X trivial on the constant sections.
struct ProTruncModule {
    const JetRing *ring = nullptr;
    int rank = 0;
    int order = 0; // n

    int symbol_count() const { return rank * (order + 1); }
    int symbol(int k, int j) const { return k * (order + 1) + j; }
};

struct ProElem {
    std::vector<Poly> c;
};

ProElem pro_zero(const ProTruncModule &mod);
ProElem pro_symbol(const ProTruncModule &mod, int k, int j);
ProElem pro_add(const ProElem &a, const ProElem &b);
ProElem pro_delta(const ProTruncModule &mod, const ProElem &v);
ProElem int_module_action(const ProTruncModule &mod, const Poly &p, const ProElem &v);

/// The duality pairing <e^v_k (x) z^j, (e_l)_i> = [k=l][i=j], extended
/// bilinearly over the stored coefficients. Through the module actions
/// this reproduces delta^(i-j) of base pairings, with negative powers
/// of delta equal to zero.
Poly duality_pairing(const ProTruncModule &dual, const ProElem &w,
                     const FreeJetModule &mod, const JetModElem &v);

struct GramBlockReport {
    int weight = 0;   // paired jet level / z-degree
    int dim = 0;      // block size (= rank)
    int rank = 0;     // computed rank of the Gram block
    bool full_rank() const { return rank == dim; }
};

struct GramReport {
    std::vector<GramBlockReport> blocks;
    int total_dim = 0;
    int total_rank = 0;
    bool full_rank() const { return total_rank == total_dim; }
};

/// Gram matrices of the pairing on the pure basis symbols, blocked by
/// the paired level j = i, within the weight window.
GramReport pairing_gram_rank(const JetRing &jr, int n, int r, int w_max);

} // namespace jetpva
