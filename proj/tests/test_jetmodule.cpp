#include "jetpva/jetmodule.hpp"

#include <doctest.h>

#include <random>

using namespace jetpva;

TEST_CASE("int_module_action")
{
    BaseRing base({"x"}, {false});
    JetRing jr(base, 3);
    Poly x0 = Poly::variable(jr.jet_var(0, 0));
    Poly x1 = Poly::variable(jr.jet_var(0, 1));

    // weight-0 acts diagonally at truncation order 0
    ProTruncModule m0{&jr, 1, 0};
    ProElem v = int_module_action(m0, x0, pro_symbol(m0, 0, 0));
    CHECK(v.c[0] == x0);

    // x acting on e (x) z^n keeps only the z^n coefficient
    ProTruncModule m1{&jr, 1, 1};
    ProElem top = int_module_action(m1, x0, pro_symbol(m1, 0, 1));
    CHECK(top.c[static_cast<size_t>(m1.symbol(0, 1))] == x0);
    CHECK(top.c[static_cast<size_t>(m1.symbol(0, 0))].is_zero());

    // x acting on e (x) z^0 at n = 1: x0 e z^0 + x1 e z^1
    ProElem low = int_module_action(m1, x0, pro_symbol(m1, 0, 0));
    CHECK(low.c[static_cast<size_t>(m1.symbol(0, 0))] == x0);
    CHECK(low.c[static_cast<size_t>(m1.symbol(0, 1))] == x1);

    // multiplicativity of the prolonged action
    ProTruncModule m2{&jr, 1, 2};
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> pickv(0, jr.var_count() - 1), coef(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = Poly::variable(pickv(rng)) + Poly::constant(coef(rng));
        Poly q = Poly::variable(pickv(rng));
        ProElem a = int_module_action(m2, jr.mul(p, q), pro_symbol(m2, 0, 0));
        ProElem b = int_module_action(m2, p, int_module_action(m2, q, pro_symbol(m2, 0, 0)));
        CHECK(a.c == b.c);
    }
}

TEST_CASE("duality_pairing on basis symbols")
{
    BaseRing base({"x"}, {false});
    JetRing jr(base, 3);
    FreeJetModule mod{&jr, 1};

    // <e^v (x) z^1, e_3> = 0, <e^v (x) z^j, e_i> = [i = j]
    ProTruncModule dual{&jr, 1, 2};
    CHECK(duality_pairing(dual, pro_symbol(dual, 0, 1), mod, fjm_symbol(mod, 0, 3)).is_zero());
    CHECK(duality_pairing(dual, pro_symbol(dual, 0, 1), mod, fjm_symbol(mod, 0, 1)) == Poly::one());
    // negative powers of delta are zero: <e^v (x) z^2, e_1> = 0
    CHECK(duality_pairing(dual, pro_symbol(dual, 0, 2), mod, fjm_symbol(mod, 0, 1)).is_zero());

    // rank mismatch is a domain error
    FreeJetModule mod2{&jr, 2};
    CHECK_THROWS_AS((void)duality_pairing(dual, pro_symbol(dual, 0, 0), mod2, fjm_symbol(mod2, 0, 0)),
                    Error);
}

TEST_CASE("pairing reproduces the divided-power expansion")
{
    // <a e^v (x) z^j, b e_i> = delta^(i-j)(a b) on the coefficient level
    BaseRing base({"x", "y"}, {false, false});
    JetRing jr(base, 3);
    FreeJetModule mod{&jr, 1};
    ProTruncModule dual{&jr, 1, 3};

    std::mt19937 rng(41);
    std::uniform_int_distribution<int> pickv(0, 1), lvl(0, 1), coef(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Poly a = Poly::variable(jr.jet_var(pickv(rng), lvl(rng))) + Poly::constant(coef(rng));
        Poly b = Poly::variable(jr.jet_var(pickv(rng), 0));
        for (int j = 0; j <= 3; ++j)
            for (int i = 0; i <= 3; ++i) {
                ProElem w = int_module_action(dual, a, pro_symbol(dual, 0, j));
                JetModElem v = fjm_scale(mod, Poly::one(), fjm_symbol(mod, 0, i));
                // (b e)_i = Sigma delta^(k)(b) e_{i-k}
                JetModElem bv = fjm_zero(mod);
                for (int k = 0; k <= i; ++k) {
                    Poly bk = jr.delta_divided(b, k);
                    if (!bk.is_zero())
                        bv.c[static_cast<size_t>(mod.symbol(0, i - k))] += bk;
                }
                Poly lhs = duality_pairing(dual, w, mod, bv);
                Poly rhs = (i - j >= 0) ? jr.delta_divided(jr.mul(a, b), i - j) : Poly{};
                CHECK(lhs == rhs);
                (void)v;
            }
    }
}

TEST_CASE("delta-invariance of the pairing")
{
    // <delta w, v> + <w, delta v> = delta <w, v> on all basis pairs
    BaseRing base({"x"}, {false});
    JetRing jr(base, 3);
    for (int r = 1; r <= 2; ++r)
        for (int n = 0; n <= 3; ++n) {
            FreeJetModule mod{&jr, r};
            ProTruncModule dual{&jr, r, n};
            for (int k = 0; k < r; ++k)
                for (int j = 0; j <= n; ++j)
                    for (int l = 0; l < r; ++l)
                        for (int i = 0; i <= 3; ++i) {
                            ProElem w = pro_symbol(dual, k, j);
                            JetModElem v = fjm_symbol(mod, l, i);
                            Poly lhs = duality_pairing(dual, pro_delta(dual, w), mod, v) +
                                       duality_pairing(dual, w, mod, fjm_delta(mod, v));
                            Poly rhs = jr.delta(duality_pairing(dual, w, mod, v));
                            CHECK(lhs == rhs);
                        }
        }
}

TEST_CASE("pairing_gram_rank full rank")
{
    BaseRing base({"x"}, {false});
    JetRing jr(base, 3);

    // r=1, n=0: a single 1x1 block [1]
    GramReport g0 = pairing_gram_rank(jr, 0, 1, 0);
    CHECK(g0.blocks.size() == 1);
    CHECK(g0.total_dim == 1);
    CHECK(g0.full_rank());

    // r=1, n=2: three blocks, total rank 3
    GramReport g1 = pairing_gram_rank(jr, 2, 1, 3);
    CHECK(g1.total_dim == 3);
    CHECK(g1.full_rank());

    // r=2, n=1: total rank 4
    GramReport g2 = pairing_gram_rank(jr, 1, 2, 3);
    CHECK(g2.total_dim == 4);
    CHECK(g2.full_rank());
}
