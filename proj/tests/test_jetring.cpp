#include "jetpva/jetmodule.hpp"
#include "jetpva/jetring.hpp"

#include <doctest.h>

#include <random>

using namespace jetpva;

namespace {

BaseRing plane1()
{
    return BaseRing({"x"}, {false});
}

Poly random_jet_poly(const JetRing &jr, std::mt19937 &rng, int max_terms = 3)
{
    std::uniform_int_distribution<int> nterms(1, max_terms), exp(0, 2), coef(-3, 3);
    Poly p;
    for (int t = 0; t < nterms(rng); ++t) {
        Monomial m;
        for (VarId v = 0; v < jr.var_count(); ++v)
            m = m * Monomial::variable(v, exp(rng));
        p.add_term(m, coef(rng));
    }
    return jr.normalized(p);
}

} // namespace

TEST_CASE("build_jet_ring")
{
    JetRing jr(plane1(), 2);
    CHECK(jr.var_count() == 3);
    CHECK(jr.var(jr.jet_var(0, 0)).name == "x_0");
    CHECK(jr.var(jr.jet_var(0, 2)).weight == 2);
    CHECK_FALSE(jr.var(jr.jet_var(0, 0)).invertible);

    // Laurent base: only the 0-th jet is inverted
    JetRing jl(BaseRing({"x"}, {true}), 1);
    CHECK(jl.var(jl.jet_var(0, 0)).invertible);
    CHECK_FALSE(jl.var(jl.jet_var(0, 1)).invertible);

    // W = 0 is the base ring again
    JetRing j0(plane1(), 0);
    CHECK(j0.var_count() == 1);
    CHECK(j0.delta(Poly::variable(0)).is_zero());
}

TEST_CASE("delta_apply on generators and divided powers")
{
    JetRing jr(BaseRing({"x", "y"}, {false, false}), 3);
    Poly x0 = Poly::variable(jr.jet_var(0, 0));
    Poly x1 = Poly::variable(jr.jet_var(0, 1));
    Poly x2 = Poly::variable(jr.jet_var(0, 2));
    Poly y0 = Poly::variable(jr.jet_var(1, 0));

    CHECK(jr.delta(x0) == x1);
    CHECK(jr.delta(x1) == Rational(2) * x2);

    // delta^(2)(x0 y0) = x0 y2 + x1 y1 + x2 y0
    Poly expect = jr.mul(x0, Poly::variable(jr.jet_var(1, 2))) +
                  jr.mul(x1, Poly::variable(jr.jet_var(1, 1))) + jr.mul(x2, y0);
    CHECK(jr.delta_divided(jr.mul(x0, y0), 2) == expect);
}

TEST_CASE("divided-power Leibniz identity")
{
    JetRing jr(BaseRing({"x", "y"}, {false, false}), 4);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        Poly p = random_jet_poly(jr, rng), q = random_jet_poly(jr, rng);
        for (int n = 0; n <= 3; ++n) {
            Poly lhs = jr.delta_divided(jr.mul(p, q), n);
            Poly rhs;
            for (int k = 0; k <= n; ++k)
                rhs += jr.mul(jr.delta_divided(p, k), jr.delta_divided(q, n - k));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("truncation stability of delta")
{
    // blocks of weight <= W are independent of the cutoff
    BaseRing base({"x", "y"}, {false, false});
    JetRing jw(base, 2), jw1(base, 3);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_jet_poly(jw, rng);
        // view p inside the bigger ring: variable ids differ, remap
        Poly p_big;
        for (const auto &[m, c] : p.terms()) {
            Monomial m2;
            for (const auto &[v, e] : m.factors()) {
                auto [a, i] = jw.var_level(v);
                m2 = m2 * Monomial::variable(jw1.jet_var(a, i), e);
            }
            p_big.add_term(m2, c);
        }
        if (jw.weight(p.terms().empty() ? Monomial{} : p.terms().begin()->first) > 1)
            continue;
        Poly d_small = jw.delta(p);
        Poly d_big = jw1.delta(p_big);
        // compare the weight <= 2 parts
        Poly d_big_trunc;
        for (const auto &[m, c] : d_big.terms()) {
            if (jw1.weight(m) > 2)
                continue;
            Monomial m2;
            for (const auto &[v, e] : m.factors()) {
                auto [a, i] = jw1.var_level(v);
                m2 = m2 * Monomial::variable(jw.jet_var(a, i), e);
            }
            d_big_trunc.add_term(m2, c);
        }
        CHECK(d_small == d_big_trunc);
    }
}

TEST_CASE("prolong_algebra_map")
{
    // target k[t] with delta = d/dt, f(x) = t^2
    BaseRing base({"x"}, {false});
    JetRing jr(base, 3);
    PolyRing kt({VarInfo{"t", false, 0, {0}}}, 1);
    DeltaRing target{&kt, {Poly::one()}};

    JetMorphism f = prolong_algebra_map(jr, {kt.mul(Poly::variable(0), Poly::variable(0))}, target);
    CHECK(f.images[static_cast<size_t>(jr.jet_var(0, 0))] == kt.parse("t^2"));
    CHECK(f.images[static_cast<size_t>(jr.jet_var(0, 1))] == kt.parse("2*t"));
    CHECK(f.images[static_cast<size_t>(jr.jet_var(0, 2))] == Poly::one());
    CHECK(f.images[static_cast<size_t>(jr.jet_var(0, 3))].is_zero());

    // constants are killed by delta
    JetMorphism c = prolong_algebra_map(jr, {Poly::constant(5)}, target);
    CHECK(c.images[static_cast<size_t>(jr.jet_var(0, 1))].is_zero());

    // identity prolongation: x_{a,i} -> x_{a,i}
    JetMorphism id = prolong_algebra_map(jr, {Poly::variable(jr.jet_var(0, 0))},
                                         jr.delta_ring());
    for (VarId v = 0; v < jr.var_count(); ++v)
        CHECK(id.images[static_cast<size_t>(v)] == Poly::variable(v));

    // non-unit image for an invertible variable is a domain error
    JetRing jl(BaseRing({"x"}, {true}), 1);
    CHECK_THROWS_AS((void)prolong_algebra_map(jl, {kt.parse("t")}, target), Error);

    // morphism is a ring map compatible with delta on generators
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_jet_poly(jr, rng);
        Poly q = random_jet_poly(jr, rng);
        CHECK(f.apply(jr.mul(p, q)) == kt.mul(f.apply(p), f.apply(q)));
        CHECK(f.apply(jr.delta(p)) == target.delta(f.apply(p)));
    }
}

TEST_CASE("adjunction uniqueness on generators")
{
    // a delta-compatible assignment agreeing at weight 0 is forced
    BaseRing base({"x"}, {false});
    JetRing jr(base, 3);
    PolyRing kt({VarInfo{"t", false, 0, {0}}}, 1);
    DeltaRing target{&kt, {Poly::one()}};
    Poly f0 = kt.parse("t^2 + 3*t");
    JetMorphism f = prolong_algebra_map(jr, {f0}, target);
    Poly img = f0;
    for (int i = 0; i <= 3; ++i) {
        CHECK(f.images[static_cast<size_t>(jr.jet_var(0, i))] == img);
        // next forced value: delta(previous)/(i+1)
        img = Rational(1, i + 1) * target.delta(img);
    }
}

TEST_CASE("jet_of_differential")
{
    BaseRing base({"x", "y"}, {false, false});
    JetRing jr(base, 2);
    FreeJetModule omega{&jr, 2};

    Poly x0 = Poly::variable(jr.jet_var(0, 0));
    Poly x1 = Poly::variable(jr.jet_var(0, 1));
    Poly y0 = Poly::variable(jr.jet_var(1, 0));
    Poly y1 = Poly::variable(jr.jet_var(1, 1));

    // d(x1) = (dx)_1
    JetModElem d1 = jet_of_differential(jr, x1);
    CHECK(d1.c[static_cast<size_t>(omega.symbol(0, 1))] == Poly::one());

    // d(x0 y0) = y0 (dx)_0 + x0 (dy)_0
    JetModElem d2 = jet_of_differential(jr, jr.mul(x0, y0));
    CHECK(d2.c[static_cast<size_t>(omega.symbol(0, 0))] == y0);
    CHECK(d2.c[static_cast<size_t>(omega.symbol(1, 0))] == x0);

    // d(x0 y1 + x1 y0) = delta(d(x0 y0))
    JetModElem lhs = jet_of_differential(jr, jr.mul(x0, y1) + jr.mul(x1, y0));
    JetModElem rhs = fjm_delta(omega, d2);
    CHECK(lhs.c == rhs.c);

    // delta-compatibility on random elements
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_jet_poly(jr, rng);
        JetModElem a = jet_of_differential(jr, jr.delta(p));
        JetModElem b = fjm_delta(omega, jet_of_differential(jr, p));
        CHECK(a.c == b.c);
    }
}
