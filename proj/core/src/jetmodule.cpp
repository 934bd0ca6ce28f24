#include "jetpva/jetmodule.hpp"

#include "jetpva/linalg.hpp"

namespace jetpva {

JetModElem fjm_zero(const FreeJetModule &mod)
{
    return JetModElem{std::vector<Poly>(static_cast<size_t>(mod.symbol_count()))};
}

JetModElem fjm_symbol(const FreeJetModule &mod, int k, int i)
{
    JetModElem v = fjm_zero(mod);
    v.c[static_cast<size_t>(mod.symbol(k, i))] = Poly::one();
    return v;
}

JetModElem fjm_add(const JetModElem &a, const JetModElem &b)
{
    JetModElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] += b.c[i];
    return r;
}

JetModElem fjm_scale(const FreeJetModule &mod, const Poly &p, const JetModElem &v)
{
    JetModElem r = fjm_zero(mod);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = mod.ring->mul(p, v.c[i]);
    return r;
}

JetModElem fjm_delta(const FreeJetModule &mod, const JetModElem &v)
{
    const int W = mod.ring->cutoff();
    JetModElem r = fjm_zero(mod);
    for (int k = 0; k < mod.rank; ++k)
        for (int i = 0; i <= W; ++i) {
            const Poly &p = v.c[static_cast<size_t>(mod.symbol(k, i))];
            if (p.is_zero())
                continue;
            r.c[static_cast<size_t>(mod.symbol(k, i))] += mod.ring->delta(p);
            if (i < W)
                r.c[static_cast<size_t>(mod.symbol(k, i + 1))] += Rational(i + 1) * p;
        }
    return r;
}

JetModElem fjm_delta_divided(const FreeJetModule &mod, const JetModElem &v, int k)
{
    JetModElem r = v;
    for (int i = 0; i < k; ++i)
        r = fjm_delta(mod, r);
    Rational s(Int(1), factorial(k));
    for (auto &p : r.c)
        p = s * p;
    return r;
}

JetModElem jet_of_differential(const JetRing &jr, const Poly &p)
{
    FreeJetModule mod{&jr, jr.base().nvars()};
    JetModElem r = fjm_zero(mod);
    for (VarId v = 0; v < jr.var_count(); ++v) {
        Poly d = jr.partial(p, v);
        if (d.is_zero())
            continue;
        auto [a, i] = jr.var_level(v);
        r.c[static_cast<size_t>(mod.symbol(a, i))] += d;
    }
    return r;
}

ProElem pro_zero(const ProTruncModule &mod)
{
    return ProElem{std::vector<Poly>(static_cast<size_t>(mod.symbol_count()))};
}

ProElem pro_symbol(const ProTruncModule &mod, int k, int j)
{
    ProElem v = pro_zero(mod);
    v.c[static_cast<size_t>(mod.symbol(k, j))] = Poly::one();
    return v;
}

ProElem pro_add(const ProElem &a, const ProElem &b)
{
    ProElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] += b.c[i];
    return r;
}

ProElem pro_delta(const ProTruncModule &mod, const ProElem &v)
{
    ProElem r = pro_zero(mod);
    for (int k = 0; k < mod.rank; ++k)
        for (int j = 0; j <= mod.order; ++j) {
            const Poly &p = v.c[static_cast<size_t>(mod.symbol(k, j))];
            if (p.is_zero())
                continue;
            r.c[static_cast<size_t>(mod.symbol(k, j))] += mod.ring->delta(p);
            if (j > 0)
                r.c[static_cast<size_t>(mod.symbol(k, j - 1))] += Rational(-j) * p;
        }
    return r;
}

ProElem int_module_action(const ProTruncModule &mod, const Poly &p, const ProElem &v)
{
    ProElem r = pro_zero(mod);
    for (int i = 0; i <= mod.order; ++i) {
        Poly pi = mod.ring->delta_divided(p, i);
        if (pi.is_zero())
            continue;
        for (int k = 0; k < mod.rank; ++k)
            for (int j = 0; j + i <= mod.order; ++j) {
                const Poly &q = v.c[static_cast<size_t>(mod.symbol(k, j))];
                if (!q.is_zero())
                    r.c[static_cast<size_t>(mod.symbol(k, j + i))] += mod.ring->mul(pi, q);
            }
    }
    return r;
}

Poly duality_pairing(const ProTruncModule &dual, const ProElem &w,
                     const FreeJetModule &mod, const JetModElem &v)
{
    if (dual.rank != mod.rank)
        throw Error("jet-core", "duality pairing between modules of different ranks");
    if (dual.ring != mod.ring)
        throw Error("jet-core", "duality pairing between modules over different rings");
    const int top = std::min(dual.order, mod.ring->cutoff());
    Poly r;
    for (int k = 0; k < dual.rank; ++k)
        for (int j = 0; j <= top; ++j)
            r += mod.ring->mul(w.c[static_cast<size_t>(dual.symbol(k, j))],
                               v.c[static_cast<size_t>(mod.symbol(k, j))]);
    return r;
}

GramReport pairing_gram_rank(const JetRing &jr, int n, int r, int w_max)
{
    ProTruncModule dual{&jr, r, n};
    FreeJetModule mod{&jr, r};
    const int top = std::min({n, jr.cutoff(), w_max});

    GramReport rep;
    for (int j = 0; j <= top; ++j) {
        QMatrix gram(static_cast<size_t>(r), static_cast<size_t>(r));
        for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l) {
                Poly p = duality_pairing(dual, pro_symbol(dual, k, j), mod, fjm_symbol(mod, l, j));
                gram.at(static_cast<size_t>(k), static_cast<size_t>(l)) = p.coefficient(Monomial{});
            }
        GramBlockReport b;
        b.weight = j;
        b.dim = r;
        b.rank = exact_rank(gram);
        rep.total_dim += b.dim;
        rep.total_rank += b.rank;
        rep.blocks.push_back(b);
    }
    return rep;
}

} // namespace jetpva
