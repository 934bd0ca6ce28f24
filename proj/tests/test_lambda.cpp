#include "jetpva/lambda.hpp"

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
    set(0, 1, Poly::variable(2));
    set(1, 2, Poly::variable(0));
    set(2, 0, Poly::variable(1));
    return PoissonStructure::make(base, pi);
}

FormalPoly lam_pow(const Poly &c, int k)
{
    FormalPoly f(1);
    f.add({k}, c);
    return f;
}

} // namespace

TEST_CASE("lambda_bracket generator values, {x,y} = 1")
{
    PVAStructure pva = make_pva(symplectic_plane(), 4);
    const JetRing &jr = pva.ring;
    const LambdaBracket &lb = pva.bracket;

    Poly x0 = Poly::variable(jr.jet_var(0, 0)), x1 = Poly::variable(jr.jet_var(0, 1));
    Poly y0 = Poly::variable(jr.jet_var(1, 0)), y1 = Poly::variable(jr.jet_var(1, 1));

    // {x0 lam y0} = 1
    CHECK(lb.bracket(x0, y0) == FormalPoly::from_poly(Poly::one()));
    // {x1 lam y0} = -lam
    CHECK(lb.bracket(x1, y0) == lam_pow(-Poly::one(), 1));
    // {x0 y0 lam y0} = y0 (left Leibniz through skew)
    CHECK(lb.bracket(jr.mul(x0, y0), y0) == FormalPoly::from_poly(y0));
    // {x1 lam y1} = -lam^2
    CHECK(lb.bracket(x1, y1) == lam_pow(-Poly::one(), 2));
}

TEST_CASE("lambda_substitute")
{
    PVAStructure pva = make_pva(symplectic_plane(), 3);
    const JetRing &jr = pva.ring;
    Poly x0 = Poly::variable(jr.jet_var(0, 0)), x1 = Poly::variable(jr.jet_var(0, 1));

    CHECK(lambda_substitute(jr, FormalPoly::from_poly(Poly::one())) ==
          FormalPoly::from_poly(Poly::one()));
    CHECK(lambda_substitute(jr, lam_pow(Poly::one(), 1)) == lam_pow(-Poly::one(), 1));
    // lam x0 -> -lam x0 - x1
    FormalPoly expect = lam_pow(-x0, 1);
    expect.add({0}, -x1);
    CHECK(lambda_substitute(jr, lam_pow(x0, 1)) == expect);
}

TEST_CASE("weight conservation")
{
    PVAStructure pva = make_pva(torus_xy(), 3);
    const JetRing &jr = pva.ring;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    FormalPoly br = pva.bracket.bracket(Poly::variable(jr.jet_var(a, i)),
                                                        Poly::variable(jr.jet_var(b, j)));
                    auto w = fp_homogeneous_weight(jr, br);
                    REQUIRE(w.has_value());
                    if (!br.is_zero())
                        CHECK(*w == i + j);
                }
}

TEST_CASE("pva_axiom_suite passes for the three example brackets")
{
    for (int which = 0; which < 3; ++which) {
        PoissonStructure P = which == 0 ? symplectic_plane() : which == 1 ? torus_xy() : so3();
        PVAStructure pva = make_pva(P, 3);
        AxiomReport rep = pva_axiom_suite(pva.bracket, 2);
        for (const auto &item : rep.items)
            CHECK_MESSAGE(item.pass, item.axiom, " fails at ", item.detail);
    }
}

TEST_CASE("corrupted bracket is detected")
{
    PVAStructure pva = make_pva(symplectic_plane(), 3);
    LambdaBracket lb = pva.bracket;
    // {x0 lam y0} := lam
    lb.set_entry(0, 1, lam_pow(Poly::one(), 1));
    AxiomReport rep = pva_axiom_suite(lb, 1);
    CHECK_FALSE(rep.all_pass());
    bool skew_or_sesqui = false;
    for (const auto &item : rep.items)
        if (!item.pass && (item.axiom == "skew-symmetry" || item.axiom == "sesquilinearity"))
            skew_or_sesqui = true;
    CHECK(skew_or_sesqui);
}

TEST_CASE("single-sign mutations are detected")
{
    for (int which = 0; which < 3; ++which) {
        PoissonStructure P = which == 0 ? symplectic_plane() : which == 1 ? torus_xy() : so3();
        PVAStructure pva = make_pva(P, 2);
        const int m = P.base.nvars();
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                if (pva.bracket.entry(a, b).is_zero())
                    continue;
                LambdaBracket bad = pva.bracket;
                bad.set_entry(a, b, Rational(-1) * bad.entry(a, b));
                CHECK_FALSE(pva_axiom_suite(bad, 1).all_pass());
            }
    }
}

TEST_CASE("arakawa_closed_form matches the recursion")
{
    PVAStructure pva = make_pva(torus_xy(), 4);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    ArakawaCheck c = arakawa_closed_form(pva.bracket, i, j, a, b);
                    CHECK(c.recursion == c.reading_sesquilinear);
                    if (i + j > 0 && !c.recursion.is_zero())
                        CHECK((c.winning == "sesquilinear" || c.winning == "both"));
                }

    // spec examples at {x,y} = 1
    PVAStructure plane = make_pva(symplectic_plane(), 4);
    ArakawaCheck c10 = arakawa_closed_form(plane.bracket, 1, 0, 0, 1);
    CHECK(c10.recursion == lam_pow(-Poly::one(), 1));
    CHECK(c10.winning == "sesquilinear");
    ArakawaCheck c01 = arakawa_closed_form(plane.bracket, 0, 1, 0, 1);
    CHECK(c01.recursion == lam_pow(Poly::one(), 1));
}

TEST_CASE("induced_poisson_at_lambda_zero round trip")
{
    for (int which = 0; which < 3; ++which) {
        PoissonStructure P = which == 0 ? symplectic_plane() : which == 1 ? torus_xy() : so3();
        PVAStructure pva = make_pva(P, 2);
        PoissonStructure rec = induced_poisson_at_lambda_zero(pva.bracket, P);
        for (int a = 0; a < P.base.nvars(); ++a)
            for (int b = 0; b < P.base.nvars(); ++b)
                CHECK(rec.entry(a, b) == P.entry(a, b));
    }

    // zero bivector round-trips to zero
    BaseRing base({"x", "y"}, {false, false});
    PoissonStructure Z = PoissonStructure::make(base, {{Poly{}, Poly{}}, {Poly{}, Poly{}}});
    PVAStructure pvz = make_pva(Z, 2);
    PoissonStructure rec = induced_poisson_at_lambda_zero(pvz.bracket, Z);
    CHECK(rec.entry(0, 1).is_zero());

    // a corrupted bracket fails the round trip
    PVAStructure pva = make_pva(symplectic_plane(), 2);
    LambdaBracket bad = pva.bracket;
    bad.set_entry(0, 1, FormalPoly::from_poly(Poly::constant(2)));
    CHECK_THROWS_AS((void)induced_poisson_at_lambda_zero(bad, symplectic_plane()), Error);
}

TEST_CASE("skew-symmetry is an executable involution")
{
    PVAStructure pva = make_pva(torus_xy(), 3);
    const JetRing &jr = pva.ring;
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pickv(0, jr.var_count() - 1);
    for (int t = 0; t < 20; ++t) {
        Poly f = Poly::variable(pickv(rng));
        Poly g = Poly::variable(pickv(rng));
        FormalPoly br = pva.bracket.bracket(f, g);
        FormalPoly other = pva.bracket.bracket(g, f);
        CHECK(br == Rational(-1) * lambda_substitute(jr, other));
        // involutivity of the substitution
        CHECK(lambda_substitute(jr, lambda_substitute(jr, br)) == br);
    }
}
