#include "jetpva/poisson.hpp"

namespace jetpva {

PoissonStructure PoissonStructure::make(const BaseRing &base, std::vector<std::vector<Poly>> pi)
{
    const int m = base.nvars();
    if (static_cast<int>(pi.size()) != m)
        throw Error("poisson-algebroid", "bivector matrix has wrong size");
    for (int a = 0; a < m; ++a) {
        if (static_cast<int>(pi[static_cast<size_t>(a)].size()) != m)
            throw Error("poisson-algebroid", "bivector matrix has wrong size");
        if (!pi[static_cast<size_t>(a)][static_cast<size_t>(a)].is_zero())
            throw Error("poisson-algebroid", "bivector has a nonzero diagonal entry");
        for (int b = 0; b < a; ++b)
            if (pi[static_cast<size_t>(a)][static_cast<size_t>(b)] +
                    pi[static_cast<size_t>(b)][static_cast<size_t>(a)] !=
                Poly{})
                throw Error("poisson-algebroid", "bivector is not antisymmetric");
    }
    return PoissonStructure{base, std::move(pi)};
}

Poly PoissonStructure::bracket(const Poly &f, const Poly &g) const
{
    const int m = base.nvars();
    Poly r;
    for (int a = 0; a < m; ++a) {
        Poly fa = base.partial(f, a);
        if (fa.is_zero())
            continue;
        for (int b = 0; b < m; ++b) {
            if (entry(a, b).is_zero())
                continue;
            Poly gb = base.partial(g, b);
            if (gb.is_zero())
                continue;
            r += base.mul(base.mul(entry(a, b), fa), gb);
        }
    }
    return r;
}

std::optional<SchoutenCounterexample> schouten_jacobi_check(const PoissonStructure &P)
{
    const int m = P.base.nvars();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                Poly s;
                for (int d = 0; d < m; ++d) {
                    s += P.base.mul(P.entry(d, a), P.base.partial(P.entry(b, c), d));
                    s += P.base.mul(P.entry(d, b), P.base.partial(P.entry(c, a), d));
                    s += P.base.mul(P.entry(d, c), P.base.partial(P.entry(a, b), d));
                }
                if (!s.is_zero())
                    return SchoutenCounterexample{a, b, c, s};
            }
    return std::nullopt;
}

Poly anchor_apply(const LieAlgebroidData &L, const Section &s, const Poly &f)
{
    Poly r;
    for (int alpha = 0; alpha < L.rank; ++alpha) {
        if (s[static_cast<size_t>(alpha)].is_zero())
            continue;
        for (int a = 0; a < L.base.nvars(); ++a) {
            if (L.rho(alpha, a).is_zero())
                continue;
            Poly df = L.base.partial(f, a);
            if (df.is_zero())
                continue;
            r += L.base.mul(s[static_cast<size_t>(alpha)], L.base.mul(L.rho(alpha, a), df));
        }
    }
    return r;
}

Section bracket_sections(const LieAlgebroidData &L, const Section &s, const Section &t)
{
    Section r(static_cast<size_t>(L.rank));
    // f g [e_alpha, e_beta]
    for (int alpha = 0; alpha < L.rank; ++alpha)
        for (int beta = 0; beta < L.rank; ++beta) {
            Poly fg = L.base.mul(s[static_cast<size_t>(alpha)], t[static_cast<size_t>(beta)]);
            if (fg.is_zero())
                continue;
            for (int gamma = 0; gamma < L.rank; ++gamma)
                if (!L.c(alpha, beta, gamma).is_zero())
                    r[static_cast<size_t>(gamma)] += L.base.mul(fg, L.c(alpha, beta, gamma));
        }
    // rho(s)(g_beta) e_beta - rho(t)(f_alpha) e_alpha
    for (int beta = 0; beta < L.rank; ++beta)
        r[static_cast<size_t>(beta)] += anchor_apply(L, s, t[static_cast<size_t>(beta)]);
    for (int alpha = 0; alpha < L.rank; ++alpha)
        r[static_cast<size_t>(alpha)] -= anchor_apply(L, t, s[static_cast<size_t>(alpha)]);
    return r;
}

LieAlgebroidData cotangent_algebroid(const PoissonStructure &P)
{
    if (auto bad = schouten_jacobi_check(P))
        throw Error("poisson-algebroid",
                    "Jacobi identity fails on (" + std::to_string(bad->a) + "," +
                        std::to_string(bad->b) + "," + std::to_string(bad->c) + ")");
    const int m = P.base.nvars();
    LieAlgebroidData L;
    L.base = P.base;
    L.rank = m;
    L.anchor = P.pi;
    L.structure.assign(static_cast<size_t>(m),
                       std::vector<std::vector<Poly>>(static_cast<size_t>(m),
                                                      std::vector<Poly>(static_cast<size_t>(m))));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int g = 0; g < m; ++g)
                L.structure[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(g)] =
                    P.base.partial(P.entry(a, b), g);
    return L;
}

LieAlgebroidData tangent_algebroid(const BaseRing &base)
{
    const int m = base.nvars();
    LieAlgebroidData L;
    L.base = base;
    L.rank = m;
    L.anchor.assign(static_cast<size_t>(m), std::vector<Poly>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        L.anchor[static_cast<size_t>(a)][static_cast<size_t>(a)] = Poly::one();
    L.structure.assign(static_cast<size_t>(m),
                       std::vector<std::vector<Poly>>(static_cast<size_t>(m),
                                                      std::vector<Poly>(static_cast<size_t>(m))));
    return L;
}

std::optional<AlgebroidCounterexample> algebroid_axiom_check(const LieAlgebroidData &L)
{
    const int r = L.rank;
    const int m = L.base.nvars();

    auto basis = [&](int alpha) {
        Section s(static_cast<size_t>(r));
        s[static_cast<size_t>(alpha)] = Poly::one();
        return s;
    };

    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int g = 0; g < r; ++g)
                if (L.c(a, b, g) + L.c(b, a, g) != Poly{})
                    return AlgebroidCounterexample{"antisymmetry", {a, b, g}};

    // (ii) anchor is a bracket morphism
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int k = 0; k < m; ++k) {
                Poly lhs;
                for (int g = 0; g < r; ++g)
                    lhs += L.base.mul(L.c(a, b, g), L.rho(g, k));
                Poly rhs;
                for (int d = 0; d < m; ++d) {
                    rhs += L.base.mul(L.rho(a, d), L.base.partial(L.rho(b, k), d));
                    rhs -= L.base.mul(L.rho(b, d), L.base.partial(L.rho(a, k), d));
                }
                if (lhs != rhs)
                    return AlgebroidCounterexample{"anchor-morphism", {a, b, k}};
            }

    // (i) Jacobi with coefficient corrections
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int g = b + 1; g < r; ++g) {
                Section j1 = bracket_sections(L, bracket_sections(L, basis(a), basis(b)), basis(g));
                Section j2 = bracket_sections(L, bracket_sections(L, basis(b), basis(g)), basis(a));
                Section j3 = bracket_sections(L, bracket_sections(L, basis(g), basis(a)), basis(b));
                for (int k = 0; k < r; ++k) {
                    Poly s = j1[static_cast<size_t>(k)] + j2[static_cast<size_t>(k)] +
                             j3[static_cast<size_t>(k)];
                    if (!s.is_zero())
                        return AlgebroidCounterexample{"jacobi", {a, b, g}};
                }
            }

    // (iii) Leibniz against each base variable
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int k = 0; k < m; ++k) {
                Poly xk = Poly::variable(k);
                Section scaled = basis(b);
                scaled[static_cast<size_t>(b)] = xk;
                Section lhs = bracket_sections(L, basis(a), scaled);
                Section rhs = bracket_sections(L, basis(a), basis(b));
                for (int g = 0; g < r; ++g)
                    rhs[static_cast<size_t>(g)] = L.base.mul(xk, rhs[static_cast<size_t>(g)]);
                rhs[static_cast<size_t>(b)] += anchor_apply(L, basis(a), xk);
                if (lhs != rhs)
                    return AlgebroidCounterexample{"leibniz", {a, b, k}};
            }

    return std::nullopt;
}

Poly exact_det(const PolyRing &ring, const std::vector<std::vector<Poly>> &m)
{
    const size_t n = m.size();
    if (n == 0)
        return Poly::one();
    if (n == 1)
        return m[0][0];
    Poly det;
    std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1));
    for (size_t k = 0; k < n; ++k) {
        if (m[0][k].is_zero())
            continue;
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == k)
                    continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        Poly term = ring.mul(m[0][k], exact_det(ring, minor));
        det += (k % 2 == 0) ? term : -term;
    }
    return det;
}

std::optional<FrameMap> pi_sharp_iso(const PoissonStructure &P)
{
    const int m = P.base.nvars();
    Poly det = exact_det(P.base, P.pi);
    if (!P.base.is_unit(det))
        return std::nullopt;

    Poly det_inv = P.base.unit_inverse(det);
    FrameMap F;
    F.fwd = P.pi;
    F.inv.assign(static_cast<size_t>(m), std::vector<Poly>(static_cast<size_t>(m)));
    // adjugate via cofactors
    std::vector<std::vector<Poly>> minor(static_cast<size_t>(m - 1),
                                         std::vector<Poly>(static_cast<size_t>(m - 1)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int ii = 0;
            for (int p = 0; p < m; ++p) {
                if (p == i)
                    continue;
                int jj = 0;
                for (int q = 0; q < m; ++q) {
                    if (q == j)
                        continue;
                    minor[static_cast<size_t>(ii)][static_cast<size_t>(jj)] =
                        P.pi[static_cast<size_t>(p)][static_cast<size_t>(q)];
                    ++jj;
                }
                ++ii;
            }
            Poly cof = exact_det(P.base, minor);
            if ((i + j) % 2 == 1)
                cof = -cof;
            F.inv[static_cast<size_t>(j)][static_cast<size_t>(i)] = P.base.mul(cof, det_inv);
        }
    return F;
}

TransportCheck check_pi_sharp_transport(const PoissonStructure &P, const FrameMap &F)
{
    LieAlgebroidData cot = cotangent_algebroid(P);
    const int m = P.base.nvars();
    TransportCheck res;

    // transported anchor: Ginv . pi must be the identity
    for (int a = 0; a < m && res.anchor_identity; ++a)
        for (int b = 0; b < m && res.anchor_identity; ++b) {
            Poly s;
            for (int k = 0; k < m; ++k)
                s += P.base.mul(F.inv[static_cast<size_t>(a)][static_cast<size_t>(k)],
                                F.fwd[static_cast<size_t>(k)][static_cast<size_t>(b)]);
            Poly expect = (a == b) ? Poly::one() : Poly{};
            if (s != expect)
                res.anchor_identity = false;
        }

    // transported coordinate brackets must vanish:
    // phi([phi^{-1} d_a, phi^{-1} d_b]) = 0
    for (int a = 0; a < m && res.brackets_vanish; ++a)
        for (int b = a + 1; b < m && res.brackets_vanish; ++b) {
            Section u(F.inv[static_cast<size_t>(a)].begin(), F.inv[static_cast<size_t>(a)].end());
            Section v(F.inv[static_cast<size_t>(b)].begin(), F.inv[static_cast<size_t>(b)].end());
            Section w = bracket_sections(cot, u, v);
            for (int k = 0; k < m; ++k) {
                Poly comp;
                for (int alpha = 0; alpha < m; ++alpha)
                    comp += P.base.mul(w[static_cast<size_t>(alpha)],
                                       F.fwd[static_cast<size_t>(alpha)][static_cast<size_t>(k)]);
                if (!comp.is_zero())
                    res.brackets_vanish = false;
            }
        }
    return res;
}

} // namespace jetpva
