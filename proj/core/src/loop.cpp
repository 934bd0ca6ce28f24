#include "jetpva/loop.hpp"

#include "jetpva/jetring.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

namespace jetpva {

bool Window::contains(const std::vector<int> &d) const
{
    int total = 0;
    for (size_t a = 0; a < d.size(); ++a) {
        int abs = std::abs(d[a]);
        if (abs > md_bound[a])
            return false;
        total += abs;
    }
    return !md_total || total <= *md_total;
}

std::vector<std::vector<int>> Window::multidegrees() const
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(md_bound.size(), 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == md_bound.size()) {
            if (contains(cur))
                out.push_back(cur);
            return;
        }
        for (int v = -md_bound[pos]; v <= md_bound[pos]; ++v) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Multidegree of a homogeneous polynomial; nullopt when zero. Throws on
// an inhomogeneous entry, naming the context.
std::optional<std::vector<int>> homogeneous_md(const PolyRing &ring, const Poly &p,
                                               const std::string &context)
{
    std::optional<std::vector<int>> md;
    for (const auto &[m, c] : p.terms()) {
        auto d = ring.multidegree(m);
        if (!md)
            md = d;
        else if (*md != d)
            throw Error("loop-complex", "multidegree-inhomogeneous coefficient in " + context +
                                            "; blockwise cohomology refused");
    }
    return md;
}

std::vector<int> vec_add(const std::vector<int> &a, const std::vector<int> &b)
{
    std::vector<int> r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

std::vector<int> vec_sub(const std::vector<int> &a, const std::vector<int> &b)
{
    std::vector<int> r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

// Solves for theta multidegrees so that the base differential is
// multidegree-homogeneous; unconstrained generators default to zero.
std::vector<std::vector<int>> infer_odd_multidegrees(const LieAlgebroidData &L)
{
    const int m = L.base.nvars();
    const int r = L.rank;
    std::vector<std::optional<std::vector<int>>> u(static_cast<size_t>(r));

    auto unit_md = [&](int a) {
        std::vector<int> e(static_cast<size_t>(m), 0);
        e[static_cast<size_t>(a)] = 1;
        return e;
    };

    auto assign = [&](int alpha, const std::vector<int> &val, const std::string &ctx) {
        if (u[static_cast<size_t>(alpha)] && *u[static_cast<size_t>(alpha)] != val)
            throw Error("loop-complex",
                        "no consistent multidegree for odd generator th" + std::to_string(alpha + 1) +
                            " (" + ctx + "); blockwise cohomology refused");
        u[static_cast<size_t>(alpha)] = val;
    };

    for (int alpha = 0; alpha < r; ++alpha)
        for (int a = 0; a < m; ++a) {
            auto md = homogeneous_md(L.base, L.rho(alpha, a),
                                     "anchor entry rho(" + std::to_string(alpha) + "," +
                                         std::to_string(a) + ")");
            if (md)
                assign(alpha, vec_sub(unit_md(a), *md), "anchor");
        }

    // propagate structure constraints u_gamma = md(c) + u_alpha + u_beta
    bool changed = true;
    while (changed) {
        changed = false;
        for (int alpha = 0; alpha < r; ++alpha)
            for (int beta = alpha + 1; beta < r; ++beta)
                for (int gamma = 0; gamma < r; ++gamma) {
                    auto md = homogeneous_md(L.base, L.c(alpha, beta, gamma),
                                             "structure function c(" + std::to_string(alpha) + "," +
                                                 std::to_string(beta) + "," + std::to_string(gamma) +
                                                 ")");
                    if (!md)
                        continue;
                    auto &ua = u[static_cast<size_t>(alpha)];
                    auto &ub = u[static_cast<size_t>(beta)];
                    auto &ug = u[static_cast<size_t>(gamma)];
                    int known = (ua ? 1 : 0) + (ub ? 1 : 0) + (ug ? 1 : 0);
                    if (known == 3) {
                        if (*ug != vec_add(*md, vec_add(*ua, *ub)))
                            throw Error("loop-complex",
                                        "no consistent multidegree for odd generator th" +
                                            std::to_string(gamma + 1) +
                                            "; blockwise cohomology refused");
                    } else if (known == 2) {
                        if (!ug)
                            ug = vec_add(*md, vec_add(*ua, *ub));
                        else if (!ua)
                            ua = vec_sub(vec_sub(*ug, *md), *ub);
                        else
                            ub = vec_sub(vec_sub(*ug, *md), *ua);
                        changed = true;
                    }
                }
    }

    std::vector<std::vector<int>> out;
    for (int alpha = 0; alpha < r; ++alpha)
        out.push_back(u[static_cast<size_t>(alpha)].value_or(std::vector<int>(static_cast<size_t>(m), 0)));
    return out;
}

bool is_homogeneous(const SuperAlgebra &alg, const SuperElement &s, int weight,
                    const std::vector<int> &md, int degree)
{
    for (const auto &[k, c] : s.terms())
        if (alg.weight(k) != weight || alg.multidegree(k) != md || alg.degree(k) != degree)
            return false;
    return true;
}

} // namespace

BaseComplex build_base_complex(const LieAlgebroidData &L)
{
    if (auto bad = algebroid_axiom_check(L)) {
        std::string tuple;
        for (int t : bad->tuple)
            tuple += (tuple.empty() ? "" : ",") + std::to_string(t);
        throw Error("loop-complex",
                    "inconsistent algebroid data: axiom '" + bad->axiom + "' fails on (" + tuple + ")");
    }

    BaseComplex C;
    C.ring = std::make_shared<BaseRing>(L.base);
    C.L = L;
    C.odd_md = infer_odd_multidegrees(L);

    std::vector<OddInfo> odds;
    for (int alpha = 0; alpha < L.rank; ++alpha)
        odds.push_back(OddInfo{"th" + std::to_string(alpha + 1), 0, C.odd_md[static_cast<size_t>(alpha)]});
    C.alg = SuperAlgebra(C.ring.get(), odds);

    C.D.odd_parity = true;
    C.D.even_images.resize(static_cast<size_t>(L.base.nvars()));
    C.D.odd_images.resize(static_cast<size_t>(L.rank));
    for (int a = 0; a < L.base.nvars(); ++a) {
        SuperElement img;
        for (int alpha = 0; alpha < L.rank; ++alpha)
            if (!L.rho(alpha, a).is_zero())
                img += C.alg.mul(SuperElement::from_poly(L.rho(alpha, a)), C.alg.odd_gen(alpha));
        C.D.even_images[static_cast<size_t>(a)] = img;
    }
    for (int gamma = 0; gamma < L.rank; ++gamma) {
        SuperElement img;
        for (int alpha = 0; alpha < L.rank; ++alpha)
            for (int beta = alpha + 1; beta < L.rank; ++beta)
                if (!L.c(alpha, beta, gamma).is_zero()) {
                    SuperElement tt = C.alg.mul(C.alg.odd_gen(alpha), C.alg.odd_gen(beta));
                    img -= C.alg.mul(SuperElement::from_poly(L.c(alpha, beta, gamma)), tt);
                }
        C.D.odd_images[static_cast<size_t>(gamma)] = img;
    }

    // grading + D^2 = 0 on every generator
    for (int a = 0; a < L.base.nvars(); ++a) {
        SuperElement g = C.alg.even_gen(a);
        if (!is_homogeneous(C.alg, C.alg.apply(C.D, g), 0, L.base.var(a).multidegree, 1))
            throw Error("loop-complex", "differential is not graded on generator " + L.base.var(a).name);
        if (!C.alg.apply(C.D, C.alg.apply(C.D, g)).is_zero())
            throw Error("loop-complex", "inconsistent algebroid data: D^2 != 0 on " + L.base.var(a).name);
    }
    for (int alpha = 0; alpha < L.rank; ++alpha) {
        SuperElement g = C.alg.odd_gen(alpha);
        if (!is_homogeneous(C.alg, C.alg.apply(C.D, g), 0, C.odd_md[static_cast<size_t>(alpha)], 2))
            throw Error("loop-complex",
                        "differential is not graded on generator " + C.alg.odd(alpha).name);
        if (!C.alg.apply(C.D, C.alg.apply(C.D, g)).is_zero())
            throw Error("loop-complex",
                        "inconsistent algebroid data: D^2 != 0 on " + C.alg.odd(alpha).name);
    }
    return C;
}

LoopComplex build_loop_complex(const LieAlgebroidData &L, int W)
{
    BaseComplex base = build_base_complex(L);

    LoopComplex C;
    C.ring = std::make_shared<JetRing>(L.base, W);
    C.L = L;
    C.W = W;

    std::vector<OddInfo> odds;
    for (int alpha = 0; alpha < L.rank; ++alpha)
        for (int i = 0; i <= W; ++i)
            odds.push_back(OddInfo{"th" + std::to_string(alpha + 1) + "_" + std::to_string(i), i,
                                   base.odd_md[static_cast<size_t>(alpha)]});
    C.alg = SuperAlgebra(C.ring.get(), odds);

    // delta: x_{a,i} -> (i+1) x_{a,i+1}, th^alpha_i -> (i+1) th^alpha_{i+1}
    C.delta.odd_parity = false;
    C.delta.even_images.resize(static_cast<size_t>(C.ring->var_count()));
    C.delta.odd_images.resize(static_cast<size_t>(C.alg.odd_count()));
    for (VarId v = 0; v < C.ring->var_count(); ++v) {
        auto [a, i] = C.ring->var_level(v);
        C.delta.even_images[static_cast<size_t>(v)] =
            (i < W) ? SuperElement::from_poly(Rational(i + 1) * Poly::variable(C.ring->jet_var(a, i + 1)))
                    : SuperElement{};
    }
    for (OddId o = 0; o < C.alg.odd_count(); ++o) {
        auto [alpha, i] = C.odd_level(o);
        C.delta.odd_images[static_cast<size_t>(o)] =
            (i < W) ? Rational(i + 1) * C.alg.odd_gen(C.odd_id(alpha, i + 1)) : SuperElement{};
    }

    // lift a weight-0 base element into the loop algebra
    auto lift0 = [&](const SuperElement &s) {
        SuperElement out;
        for (const auto &[k, c] : s.terms()) {
            Monomial mono;
            for (const auto &[v, e] : k.mono.factors())
                mono = mono * Monomial::variable(C.ring->jet_var(v, 0), e);
            OddWord word;
            for (OddId o : k.odd)
                word.push_back(C.odd_id(o, 0));
            out.add_term(SuperKey{mono, word}, c);
        }
        return out;
    };

    // D on weight-0 generators, propagated by divided delta powers
    C.D.odd_parity = true;
    C.D.even_images.resize(static_cast<size_t>(C.ring->var_count()));
    C.D.odd_images.resize(static_cast<size_t>(C.alg.odd_count()));
    for (int a = 0; a < L.base.nvars(); ++a) {
        SuperElement d0 = lift0(*base.D.even_images[static_cast<size_t>(a)]);
        for (int i = 0; i <= W; ++i)
            C.D.even_images[static_cast<size_t>(C.ring->jet_var(a, i))] =
                C.alg.apply_divided(C.delta, d0, i);
    }
    for (int alpha = 0; alpha < L.rank; ++alpha) {
        SuperElement d0 = lift0(*base.D.odd_images[static_cast<size_t>(alpha)]);
        for (int i = 0; i <= W; ++i)
            C.D.odd_images[static_cast<size_t>(C.odd_id(alpha, i))] =
                C.alg.apply_divided(C.delta, d0, i);
    }

    // the computational content of the uniqueness-of-lift lemma:
    // D^2 = 0 and [D, delta] = 0 on every generator
    auto check_gen = [&](const SuperElement &g, int w, const std::vector<int> &md, int deg,
                         const std::string &name) {
        SuperElement dg = C.alg.apply(C.D, g);
        if (!is_homogeneous(C.alg, dg, w, md, deg + 1))
            throw Error("loop-complex", "differential is not graded on generator " + name);
        if (!C.alg.apply(C.D, dg).is_zero())
            throw Error("loop-complex", "construction error: D^2 != 0 on " + name);
        SuperElement comm = C.alg.apply(C.D, C.alg.apply(C.delta, g)) -
                            C.alg.apply(C.delta, dg);
        if (!comm.is_zero())
            throw Error("loop-complex", "construction error: [D,delta] != 0 on " + name);
    };
    for (VarId v = 0; v < C.ring->var_count(); ++v)
        check_gen(C.alg.even_gen(v), C.ring->var(v).weight, C.ring->var(v).multidegree, 0,
                  C.ring->var(v).name);
    for (OddId o = 0; o < C.alg.odd_count(); ++o)
        check_gen(C.alg.odd_gen(o), C.alg.odd(o).weight, C.alg.odd(o).multidegree, 1,
                  C.alg.odd(o).name);

    return C;
}

std::vector<SuperKey> block_basis(const SuperAlgebra &alg, int degree, int weight,
                                  const std::vector<int> &md)
{
    const PolyRing &ring = alg.even();
    const int m = ring.multidegree_size();

    // the unique weight-0 variable per multidegree direction
    std::vector<VarId> w0var(static_cast<size_t>(m), -1);
    std::vector<VarId> positive;
    for (VarId v = 0; v < ring.var_count(); ++v) {
        if (ring.var(v).weight == 0) {
            const auto &d = ring.var(v).multidegree;
            for (int a = 0; a < m; ++a)
                if (d[static_cast<size_t>(a)] == 1)
                    w0var[static_cast<size_t>(a)] = v;
        } else {
            positive.push_back(v);
        }
    }

    std::vector<SuperKey> keys;
    OddWord word;

    auto complete = [&](const Monomial &mono) {
        std::vector<int> have = ring.multidegree(mono);
        for (OddId o : word) {
            const auto &d = alg.odd(o).multidegree;
            for (int a = 0; a < m; ++a)
                have[static_cast<size_t>(a)] += d[static_cast<size_t>(a)];
        }
        Monomial full = mono;
        for (int a = 0; a < m; ++a) {
            int need = md[static_cast<size_t>(a)] - have[static_cast<size_t>(a)];
            if (need == 0)
                continue;
            VarId v = w0var[static_cast<size_t>(a)];
            if (v < 0 || (need < 0 && !ring.var(v).invertible))
                return;
            full = full * Monomial::variable(v, need);
        }
        keys.push_back(SuperKey{full, word});
    };

    std::function<void(size_t, int, Monomial)> rec_even = [&](size_t idx, int rem, Monomial acc) {
        if (idx == positive.size()) {
            if (rem == 0)
                complete(acc);
            return;
        }
        const VarId v = positive[idx];
        const int wv = ring.var(v).weight;
        for (int e = 0; e * wv <= rem; ++e)
            rec_even(idx + 1, rem - e * wv, acc * Monomial::variable(v, e));
    };

    std::function<void(OddId, int)> rec_odd = [&](OddId start, int wsum) {
        if (static_cast<int>(word.size()) == degree) {
            rec_even(0, weight - wsum, Monomial{});
            return;
        }
        for (OddId o = start; o < alg.odd_count(); ++o) {
            int w2 = wsum + alg.odd(o).weight;
            if (w2 > weight)
                continue;
            word.push_back(o);
            rec_odd(o + 1, w2);
            word.pop_back();
        }
    };

    if (degree >= 0 && weight >= 0)
        rec_odd(0, 0);
    std::sort(keys.begin(), keys.end());
    return keys;
}

QMatrix derivation_matrix(const SuperAlgebra &alg, const SuperAlgebra::Derivation &d,
                          const std::vector<SuperKey> &from, const std::vector<SuperKey> &to)
{
    std::map<SuperKey, size_t> index;
    for (size_t i = 0; i < to.size(); ++i)
        index.emplace(to[i], i);

    QMatrix M(to.size(), from.size());
    for (size_t j = 0; j < from.size(); ++j) {
        SuperElement img = alg.apply(d, SuperElement::term(from[j], 1));
        for (const auto &[k, c] : img.terms()) {
            auto it = index.find(k);
            if (it == index.end())
                throw Error("loop-complex", "derivation image leaves the graded block");
            M.at(it->second, j) = c;
        }
    }
    return M;
}

namespace {

struct ComplexView {
    const SuperAlgebra *alg = nullptr;
    const SuperAlgebra::Derivation *D = nullptr;
    const SuperAlgebra::Derivation *delta = nullptr; // null: no reduction possible
};

struct ColumnResult {
    std::vector<BlockResult> blocks;
    bool euler_consistent = true;
};

// Exact cohomology of one (weight, multidegree) column, optionally
// delta-reduced. Degrees run over 0..#odd generators.
ColumnResult compute_column(const ComplexView &V, int w, const std::vector<int> &d, bool reduce)
{
    const SuperAlgebra &alg = *V.alg;
    const int N = alg.odd_count();

    std::vector<std::vector<SuperKey>> bases(static_cast<size_t>(N) + 2);
    for (int n = 0; n <= N; ++n)
        bases[static_cast<size_t>(n)] = block_basis(alg, n, w, d);

    const bool do_reduce = reduce && w > 0 && V.delta != nullptr;
    std::vector<QuotientSpace> quot;
    quot.reserve(static_cast<size_t>(N) + 2);
    for (int n = 0; n <= N + 1; ++n) {
        const auto &cur = n <= N ? bases[static_cast<size_t>(n)] : std::vector<SuperKey>{};
        std::vector<QVec> images;
        if (do_reduce && !cur.empty()) {
            std::map<SuperKey, size_t> index;
            for (size_t i = 0; i < cur.size(); ++i)
                index.emplace(cur[i], i);
            for (const SuperKey &k : block_basis(alg, n, w - 1, d)) {
                SuperElement img = alg.apply(*V.delta, SuperElement::term(k, 1));
                QVec v(cur.size(), Rational(0));
                for (const auto &[kk, c] : img.terms()) {
                    auto it = index.find(kk);
                    if (it == index.end())
                        throw Error("loop-complex", "delta image leaves the graded block");
                    v[it->second] = c;
                }
                images.push_back(std::move(v));
            }
        }
        quot.emplace_back(cur.size(), images);
    }

    // reduced differentials out of each degree
    std::vector<QMatrix> dmat(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        const auto &cur = bases[static_cast<size_t>(n)];
        const auto &next = bases[static_cast<size_t>(n) + 1];
        const auto &Qc = quot[static_cast<size_t>(n)];
        const auto &Qn = quot[static_cast<size_t>(n) + 1];
        QMatrix M(Qn.dim(), Qc.dim());
        if (!cur.empty() && Qc.dim() > 0 && Qn.dim() > 0 && !next.empty()) {
            std::map<SuperKey, size_t> index;
            for (size_t i = 0; i < next.size(); ++i)
                index.emplace(next[i], i);
            for (size_t col = 0; col < Qc.dim(); ++col) {
                const SuperKey &k = cur[static_cast<size_t>(Qc.free_cols()[col])];
                SuperElement img = alg.apply(*V.D, SuperElement::term(k, 1));
                QVec v(next.size(), Rational(0));
                for (const auto &[kk, c] : img.terms()) {
                    auto it = index.find(kk);
                    if (it == index.end())
                        throw Error("loop-complex", "differential image leaves the graded block");
                    v[it->second] = c;
                }
                QVec cc = Qn.coords(v);
                for (size_t rr = 0; rr < cc.size(); ++rr)
                    M.at(rr, col) = cc[rr];
            }
        }
        dmat[static_cast<size_t>(n)] = std::move(M);
    }

    ColumnResult res;
    std::vector<int> dims(static_cast<size_t>(N) + 1, 0), ranks(static_cast<size_t>(N) + 1, 0);
    for (int n = 0; n <= N; ++n) {
        dims[static_cast<size_t>(n)] = static_cast<int>(quot[static_cast<size_t>(n)].dim());
        ranks[static_cast<size_t>(n)] = exact_rank(dmat[static_cast<size_t>(n)]);
    }
    int euler_dim = 0, euler_h = 0;
    for (int n = 0; n <= N; ++n) {
        int dim = dims[static_cast<size_t>(n)];
        if (dim == 0)
            continue;
        int hdim = dim - ranks[static_cast<size_t>(n)] - (n > 0 ? ranks[static_cast<size_t>(n) - 1] : 0);
        res.blocks.push_back(BlockResult{BlockLabel{n, w, d}, dim, hdim});
        int sign = (n % 2 == 0) ? 1 : -1;
        euler_dim += sign * dim;
        euler_h += sign * hdim;
    }
    res.euler_consistent = euler_dim == euler_h;
    return res;
}

CohomologyReport run_columns(const ComplexView &V, bool reduce, const Window &win, int wmax, int jobs)
{
    struct Col {
        int w;
        std::vector<int> d;
    };
    std::vector<Col> cols;
    for (int w = 0; w <= wmax; ++w)
        for (const auto &d : win.multidegrees())
            cols.push_back(Col{w, d});

    std::vector<ColumnResult> results(cols.size());
    if (jobs < 1)
        jobs = 1;
    if (jobs == 1) {
        for (size_t i = 0; i < cols.size(); ++i)
            results[i] = compute_column(V, cols[i].w, cols[i].d, reduce);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= cols.size())
                        return;
                    results[i] = compute_column(V, cols[i].w, cols[i].d, reduce);
                }
            });
        for (auto &t : pool)
            t.join();
    }

    CohomologyReport rep;
    for (const auto &r : results) {
        rep.euler_consistent = rep.euler_consistent && r.euler_consistent;
        rep.blocks.insert(rep.blocks.end(), r.blocks.begin(), r.blocks.end());
    }
    std::sort(rep.blocks.begin(), rep.blocks.end(),
              [](const BlockResult &a, const BlockResult &b) { return a.label < b.label; });
    return rep;
}

} // namespace

CohomologyReport blockwise_cohomology(const LoopComplex &C, bool reduce, const Window &win, int jobs)
{
    ComplexView V{&C.alg, &C.D, &C.delta};
    return run_columns(V, reduce, win, std::min(win.wmax, C.W), jobs);
}

CohomologyReport base_cohomology(const BaseComplex &C, const Window &win)
{
    ComplexView V{&C.alg, &C.D, nullptr};
    return run_columns(V, false, win, 0, 1);
}

ReducedBlock delta_reduce(const LoopComplex &C, int degree, int weight, const std::vector<int> &md)
{
    std::vector<SuperKey> cur = block_basis(C.alg, degree, weight, md);
    std::vector<QVec> images;
    if (weight > 0 && !cur.empty()) {
        std::map<SuperKey, size_t> index;
        for (size_t i = 0; i < cur.size(); ++i)
            index.emplace(cur[i], i);
        for (const SuperKey &k : block_basis(C.alg, degree, weight - 1, md)) {
            SuperElement img = C.alg.apply(C.delta, SuperElement::term(k, 1));
            QVec v(cur.size(), Rational(0));
            for (const auto &[kk, c] : img.terms())
                v[index.at(kk)] = c;
            images.push_back(std::move(v));
        }
    }
    QuotientSpace Q(cur.size(), images);

    std::vector<SuperKey> next = block_basis(C.alg, degree + 1, weight, md);
    std::vector<QVec> next_images;
    if (weight > 0 && !next.empty()) {
        std::map<SuperKey, size_t> index;
        for (size_t i = 0; i < next.size(); ++i)
            index.emplace(next[i], i);
        for (const SuperKey &k : block_basis(C.alg, degree + 1, weight - 1, md)) {
            SuperElement img = C.alg.apply(C.delta, SuperElement::term(k, 1));
            QVec v(next.size(), Rational(0));
            for (const auto &[kk, c] : img.terms())
                v[index.at(kk)] = c;
            next_images.push_back(std::move(v));
        }
    }
    QuotientSpace Qn(next.size(), next_images);

    QMatrix M(Qn.dim(), Q.dim());
    if (Q.dim() > 0 && Qn.dim() > 0) {
        std::map<SuperKey, size_t> index;
        for (size_t i = 0; i < next.size(); ++i)
            index.emplace(next[i], i);
        for (size_t col = 0; col < Q.dim(); ++col) {
            const SuperKey &k = cur[static_cast<size_t>(Q.free_cols()[col])];
            SuperElement img = C.alg.apply(C.D, SuperElement::term(k, 1));
            QVec v(next.size(), Rational(0));
            for (const auto &[kk, c] : img.terms())
                v[index.at(kk)] = c;
            QVec cc = Qn.coords(v);
            for (size_t rr = 0; rr < cc.size(); ++rr)
                M.at(rr, col) = cc[rr];
        }
    }
    return ReducedBlock{BlockLabel{degree, weight, md}, std::move(cur), std::move(Q), std::move(M)};
}

CartanReport cartan_suite(const LoopComplex &C, const Window &win)
{
    const JetRing &jr = *C.ring;
    const int m = jr.base().nvars();
    if (C.L.rank != m)
        throw Error("loop-complex", "Cartan suite requires the tangent algebroid");
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Poly expect = (a == b) ? Poly::one() : Poly{};
            if (C.L.rho(a, b) != expect)
                throw Error("loop-complex", "Cartan suite requires the tangent algebroid");
        }

    CartanReport rep;

    // iota_eta: odd derivation th^a_i -> i x_{a,i}, x_{a,i} -> 0
    SuperAlgebra::Derivation iota;
    iota.odd_parity = true;
    iota.even_images.assign(static_cast<size_t>(jr.var_count()), SuperElement{});
    iota.odd_images.resize(static_cast<size_t>(C.alg.odd_count()));
    for (OddId o = 0; o < C.alg.odd_count(); ++o) {
        auto [alpha, i] = C.odd_level(o);
        iota.odd_images[static_cast<size_t>(o)] =
            SuperElement::from_poly(Rational(i) * Poly::variable(jr.jet_var(alpha, i)));
    }

    // Lie_eta: multiplication by conformal weight on generators
    SuperAlgebra::Derivation lie_eta;
    lie_eta.odd_parity = false;
    lie_eta.even_images.resize(static_cast<size_t>(jr.var_count()));
    lie_eta.odd_images.resize(static_cast<size_t>(C.alg.odd_count()));
    for (VarId v = 0; v < jr.var_count(); ++v)
        lie_eta.even_images[static_cast<size_t>(v)] =
            SuperElement::from_poly(Rational(jr.var(v).weight) * Poly::variable(v));
    for (OddId o = 0; o < C.alg.odd_count(); ++o)
        lie_eta.odd_images[static_cast<size_t>(o)] =
            Rational(C.alg.odd(o).weight) * C.alg.odd_gen(o);

    auto gens = [&](auto &&f) {
        for (VarId v = 0; v < jr.var_count(); ++v)
            f(C.alg.even_gen(v), jr.var(v).weight, jr.var(v).name);
        for (OddId o = 0; o < C.alg.odd_count(); ++o)
            f(C.alg.odd_gen(o), C.alg.odd(o).weight, C.alg.odd(o).name);
    };

    gens([&](const SuperElement &g, int w, const std::string &name) {
        SuperElement lhs =
            C.alg.apply(C.D, C.alg.apply(iota, g)) + C.alg.apply(iota, C.alg.apply(C.D, g));
        if (lhs != Rational(w) * g && rep.cartan_identity) {
            rep.cartan_identity = false;
            rep.detail = "[D,iota] != Lie_eta on " + name;
        }
        SuperElement comm = C.alg.apply(lie_eta, C.alg.apply(C.delta, g)) -
                            C.alg.apply(C.delta, C.alg.apply(lie_eta, g));
        if (comm != C.alg.apply(C.delta, g) && rep.euler_delta_identity) {
            rep.euler_delta_identity = false;
            rep.detail = "[Lie_eta,Lie_delta] != Lie_delta on " + name;
        }
    });

    // homotopy identity and direct acyclicity per block
    const int wmax = std::min(win.wmax, C.W);
    for (int w = 0; w <= wmax; ++w)
        for (const auto &d : win.multidegrees()) {
            const int N = C.alg.odd_count();
            std::vector<std::vector<SuperKey>> bases(static_cast<size_t>(N) + 2);
            for (int n = 0; n <= N; ++n)
                bases[static_cast<size_t>(n)] = block_basis(C.alg, n, w, d);
            for (int n = 0; n <= N; ++n) {
                const auto &cur = bases[static_cast<size_t>(n)];
                if (cur.empty())
                    continue;
                const auto &prev = n > 0 ? bases[static_cast<size_t>(n) - 1] : std::vector<SuperKey>{};
                const auto &next = bases[static_cast<size_t>(n) + 1];
                QMatrix d_cur = derivation_matrix(C.alg, C.D, cur, next);
                QMatrix d_prev = derivation_matrix(C.alg, C.D, prev, cur);
                QMatrix i_cur = derivation_matrix(C.alg, iota, cur, prev);
                QMatrix i_next = derivation_matrix(C.alg, iota, next, cur);
                // D iota + iota D = w Id
                QMatrix h1 = mat_mul(d_prev, i_cur);
                QMatrix h2 = mat_mul(i_next, d_cur);
                for (size_t rrow = 0; rrow < cur.size() && rep.homotopy_blocks; ++rrow)
                    for (size_t jcol = 0; jcol < cur.size(); ++jcol) {
                        Rational want = (rrow == jcol) ? Rational(w) : Rational(0);
                        if (h1.at(rrow, jcol) + h2.at(rrow, jcol) != want) {
                            rep.homotopy_blocks = false;
                            rep.detail = "homotopy identity fails in a block";
                            break;
                        }
                    }
            }
        }

    CohomologyReport unreduced = blockwise_cohomology(C, false, win, 1);
    for (const auto &b : unreduced.blocks)
        if (b.label.weight > 0 && b.hdim != 0) {
            rep.positive_weight_acyclic = false;
            rep.detail = "positive-weight un-reduced block has cohomology";
            break;
        }
    return rep;
}

WeightZeroReport compare_weight_zero(const LoopComplex &C, const BaseComplex &base, const Window &win)
{
    WeightZeroReport rep;
    const int W = C.W;

    auto rename = [&](const SuperKey &k) {
        Monomial mono;
        for (const auto &[v, e] : k.mono.factors()) {
            auto [a, i] = C.ring->var_level(v);
            if (i != 0)
                return std::optional<SuperKey>{};
            mono = mono * Monomial::variable(a, e);
        }
        OddWord word;
        for (OddId o : k.odd) {
            auto [alpha, i] = C.odd_level(o);
            if (i != 0)
                return std::optional<SuperKey>{};
            word.push_back(alpha);
        }
        return std::optional<SuperKey>{SuperKey{mono, word}};
    };

    const int N = C.alg.odd_count();
    for (const auto &d : win.multidegrees()) {
        for (int n = 0; n <= N && rep.weight_zero_matches; ++n) {
            std::vector<SuperKey> loop_keys = block_basis(C.alg, n, 0, d);
            std::vector<SuperKey> base_keys = block_basis(base.alg, n, 0, d);
            if (loop_keys.size() != base_keys.size()) {
                rep.weight_zero_matches = false;
                rep.detail = "weight-0 block dimensions differ from the base complex";
                break;
            }
            for (size_t i = 0; i < loop_keys.size(); ++i) {
                auto rn = rename(loop_keys[i]);
                if (!rn || !(*rn == base_keys[i])) {
                    rep.weight_zero_matches = false;
                    rep.detail = "weight-0 block bases differ from the base complex";
                    break;
                }
            }
            if (!rep.weight_zero_matches)
                break;
            std::vector<SuperKey> loop_next = block_basis(C.alg, n + 1, 0, d);
            std::vector<SuperKey> base_next = block_basis(base.alg, n + 1, 0, d);
            QMatrix dl = derivation_matrix(C.alg, C.D, loop_keys, loop_next);
            QMatrix db = derivation_matrix(base.alg, base.D, base_keys, base_next);
            if (!(dl == db)) {
                rep.weight_zero_matches = false;
                rep.detail = "weight-0 differential differs from the base complex";
            }
        }
    }

    CohomologyReport reduced = blockwise_cohomology(C, true, win, 1);
    for (const auto &b : reduced.blocks)
        if (b.label.weight >= 1 && b.label.weight <= W && b.hdim != 0) {
            rep.positive_weight_acyclic = false;
            rep.detail = "reduced positive-weight block has cohomology";
            break;
        }
    return rep;
}

TheoremReport theorem_symplectic_check(const PoissonStructure &P, int W, const Window &win, int jobs)
{
    auto F = pi_sharp_iso(P);
    if (!F)
        throw Error("loop-complex", "degenerate bivector: pi-sharp is not invertible");

    TheoremReport rep;
    LoopComplex cot = build_loop_complex(cotangent_algebroid(P), W);
    rep.loop = blockwise_cohomology(cot, true, win, jobs);

    BaseComplex tan_base = build_base_complex(tangent_algebroid(P.base));
    rep.base_de_rham = base_cohomology(tan_base, win);

    std::map<std::pair<int, std::vector<int>>, int> loop_sum, base_sum;
    for (const auto &b : rep.loop.blocks)
        loop_sum[{b.label.degree, b.label.multidegree}] += b.hdim;
    for (const auto &b : rep.base_de_rham.blocks)
        base_sum[{b.label.degree, b.label.multidegree}] += b.hdim;
    for (auto &[k, v] : loop_sum)
        if (v != (base_sum.count(k) ? base_sum[k] : 0)) {
            rep.dims_match = false;
            rep.detail = "cohomology dimensions differ from base de Rham";
        }
    for (auto &[k, v] : base_sum)
        if (v != (loop_sum.count(k) ? loop_sum[k] : 0)) {
            rep.dims_match = false;
            rep.detail = "cohomology dimensions differ from base de Rham";
        }

    rep.positive_weight_vanish = rep.loop.positive_weight_hdim() == 0;

    // generator-level transport of the tangent complex through pi-sharp
    LoopComplex tan = build_loop_complex(tangent_algebroid(P.base), W);
    const int m = P.base.nvars();
    std::vector<SuperElement> odd_image(static_cast<size_t>(tan.alg.odd_count()));
    for (int a = 0; a < m; ++a) {
        SuperElement img0;
        for (int alpha = 0; alpha < m; ++alpha) {
            const Poly &entry = P.entry(alpha, a);
            if (!entry.is_zero())
                img0 += cot.alg.mul(SuperElement::from_poly(cot.ring->embed_base(entry)),
                                    cot.alg.odd_gen(cot.odd_id(alpha, 0)));
        }
        for (int i = 0; i <= W; ++i)
            odd_image[static_cast<size_t>(tan.odd_id(a, i))] =
                cot.alg.apply_divided(cot.delta, img0, i);
    }
    auto phi = [&](const SuperElement &s) {
        SuperElement out;
        for (const auto &[k, c] : s.terms()) {
            SuperElement acc = SuperElement::term(SuperKey{k.mono, {}}, c);
            for (OddId o : k.odd)
                acc = cot.alg.mul(acc, odd_image[static_cast<size_t>(o)]);
            out += acc;
        }
        return out;
    };
    for (VarId v = 0; v < tan.ring->var_count() && rep.transport_ok; ++v) {
        SuperElement lhs = phi(tan.alg.apply(tan.D, tan.alg.even_gen(v)));
        SuperElement rhs = cot.alg.apply(cot.D, phi(tan.alg.even_gen(v)));
        if (!(lhs == rhs)) {
            rep.transport_ok = false;
            rep.detail = "pi-sharp transport fails on " + tan.ring->var(v).name;
        }
    }
    for (OddId o = 0; o < tan.alg.odd_count() && rep.transport_ok; ++o) {
        SuperElement lhs = phi(tan.alg.apply(tan.D, tan.alg.odd_gen(o)));
        SuperElement rhs = cot.alg.apply(cot.D, phi(tan.alg.odd_gen(o)));
        if (!(lhs == rhs)) {
            rep.transport_ok = false;
            rep.detail = "pi-sharp transport fails on " + tan.alg.odd(o).name;
        }
    }
    return rep;
}

} // namespace jetpva
