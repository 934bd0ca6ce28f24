#include "jetpva/poisson.hpp"

#include <doctest.h>

#include <random>

using namespace jetpva;

namespace {

PoissonStructure symplectic_plane()
{
    BaseRing base({"x", "y"}, {false, false});
    std::vector<std::vector<Poly>> pi(2, std::vector<Poly>(2));
    pi[0][1] = Poly::one();
    pi[1][0] = -Poly::one();
    return PoissonStructure::make(base, pi);
}

PoissonStructure torus_xy()
{
    BaseRing base({"x", "y"}, {true, true});
    std::vector<std::vector<Poly>> pi(2, std::vector<Poly>(2));
    Poly xy = base.mul(Poly::variable(0), Poly::variable(1));
    pi[0][1] = xy;
    pi[1][0] = -xy;
    return PoissonStructure::make(base, pi);
}

PoissonStructure so3()
{
    BaseRing base({"x", "y", "z"}, {false, false, false});
    std::vector<std::vector<Poly>> pi(3, std::vector<Poly>(3));
    auto set = [&](int a, int b, const Poly &v) {
        pi[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
        pi[static_cast<size_t>(b)][static_cast<size_t>(a)] = -v;
    };
    set(0, 1, Poly::variable(2)); // {x,y} = z
    set(1, 2, Poly::variable(0)); // {y,z} = x
    set(2, 0, Poly::variable(1)); // {z,x} = y
    return PoissonStructure::make(base, pi);
}

} // namespace

TEST_CASE("schouten_jacobi_check")
{
    // any 2d bivector is Poisson: no triple a<b<c exists
    CHECK_FALSE(schouten_jacobi_check(symplectic_plane()).has_value());
    CHECK_FALSE(schouten_jacobi_check(torus_xy()).has_value());
    CHECK_FALSE(schouten_jacobi_check(so3()).has_value());

    // {x,y} = z, {y,z} = y^2, {z,x} = 0 fails the cyclic identity
    BaseRing base({"x", "y", "z"}, {false, false, false});
    std::vector<std::vector<Poly>> pi(3, std::vector<Poly>(3));
    auto set = [&](int a, int b, const Poly &v) {
        pi[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
        pi[static_cast<size_t>(b)][static_cast<size_t>(a)] = -v;
    };
    set(0, 1, Poly::variable(2));
    set(1, 2, base.mul(Poly::variable(1), Poly::variable(1)));
    PoissonStructure bad = PoissonStructure::make(base, pi);
    auto ce = schouten_jacobi_check(bad);
    REQUIRE(ce.has_value());
    CHECK(ce->a == 0);
    CHECK(ce->b == 1);
    CHECK(ce->c == 2);
}

TEST_CASE("bracket evaluator cross-checks the componentwise identity")
{
    // Jacobi of {f,{g,h}} + cyclic vanishes iff schouten passes, on
    // random polynomial triples
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> pickv(0, 2), coef(-2, 2);
    auto rand_poly = [&](const BaseRing &base) {
        Poly p = Poly::variable(pickv(rng));
        p = base.mul(p, Poly::variable(pickv(rng)));
        p += Poly::constant(coef(rng));
        return p;
    };
    PoissonStructure P = so3();
    for (int t = 0; t < 15; ++t) {
        Poly f = rand_poly(P.base), g = rand_poly(P.base), h = rand_poly(P.base);
        Poly jac = P.bracket(f, P.bracket(g, h)) + P.bracket(g, P.bracket(h, f)) +
                   P.bracket(h, P.bracket(f, g));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("cotangent_algebroid")
{
    // {x,y} = 1: rho(dx) = d_y, rho(dy) = -d_x, c = 0
    LieAlgebroidData L = cotangent_algebroid(symplectic_plane());
    CHECK(L.rank == 2);
    CHECK(L.rho(0, 0).is_zero());
    CHECK(L.rho(0, 1) == Poly::one());
    CHECK(L.rho(1, 0) == -Poly::one());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g)
                CHECK(L.c(a, b, g).is_zero());

    // torus: c_{xy}^x = y, c_{xy}^y = x
    LieAlgebroidData T = cotangent_algebroid(torus_xy());
    CHECK(T.c(0, 1, 0) == Poly::variable(1));
    CHECK(T.c(0, 1, 1) == Poly::variable(0));
    CHECK(T.rho(0, 1) == torus_xy().entry(0, 1));

    // zero bivector: zero anchor, zero bracket
    BaseRing base({"x", "y"}, {false, false});
    PoissonStructure Z = PoissonStructure::make(base, {{Poly{}, Poly{}}, {Poly{}, Poly{}}});
    LieAlgebroidData LZ = cotangent_algebroid(Z);
    CHECK(LZ.rho(0, 0).is_zero());
    CHECK(LZ.rho(0, 1).is_zero());
    CHECK(LZ.c(0, 1, 0).is_zero());
}

TEST_CASE("tangent_algebroid and axiom check")
{
    BaseRing base({"x"}, {false});
    LieAlgebroidData L1 = tangent_algebroid(base);
    CHECK(L1.rank == 1);
    CHECK(L1.rho(0, 0) == Poly::one());
    CHECK_FALSE(algebroid_axiom_check(L1).has_value());

    BaseRing base2({"x", "y"}, {true, true});
    CHECK_FALSE(algebroid_axiom_check(tangent_algebroid(base2)).has_value());
}

TEST_CASE("algebroid_axiom_check accepts Koszul data and catches mutations")
{
    CHECK_FALSE(algebroid_axiom_check(cotangent_algebroid(so3())).has_value());
    CHECK_FALSE(algebroid_axiom_check(cotangent_algebroid(symplectic_plane())).has_value());

    LieAlgebroidData T = cotangent_algebroid(torus_xy());
    CHECK_FALSE(algebroid_axiom_check(T).has_value());

    // flip the sign of one structure entry: some axiom must fail
    LieAlgebroidData bad = T;
    bad.structure[0][1][0] = -bad.structure[0][1][0];
    bad.structure[1][0][0] = -bad.structure[1][0][0];
    CHECK(algebroid_axiom_check(bad).has_value());
}

TEST_CASE("pi_sharp_iso")
{
    // {x,y} = 1: det = 1, invertible
    auto F = pi_sharp_iso(symplectic_plane());
    REQUIRE(F.has_value());
    CHECK(F->inv[0][1] == -Poly::one());

    // torus: det = (xy)^2 is a unit
    auto FT = pi_sharp_iso(torus_xy());
    REQUIRE(FT.has_value());
    CHECK(check_pi_sharp_transport(torus_xy(), *FT).ok());
    CHECK(check_pi_sharp_transport(symplectic_plane(), *F).ok());

    // {x,y} = x on the plane: det = x^2 is not a unit
    BaseRing base({"x", "y"}, {false, false});
    std::vector<std::vector<Poly>> pi(2, std::vector<Poly>(2));
    pi[0][1] = Poly::variable(0);
    pi[1][0] = -Poly::variable(0);
    CHECK_FALSE(pi_sharp_iso(PoissonStructure::make(base, pi)).has_value());
}

TEST_CASE("bracket_sections Leibniz")
{
    LieAlgebroidData T = cotangent_algebroid(torus_xy());
    Section e0(2), e1(2);
    e0[0] = Poly::one();
    e1[1] = Poly::one();
    Section scaled = e1;
    scaled[1] = Poly::variable(0); // x e_1
    Section lhs = bracket_sections(T, e0, scaled);
    Section rhs = bracket_sections(T, e0, e1);
    for (auto &p : rhs)
        p = T.base.mul(Poly::variable(0), p);
    rhs[1] += anchor_apply(T, e0, Poly::variable(0));
    CHECK(lhs == rhs);
}
