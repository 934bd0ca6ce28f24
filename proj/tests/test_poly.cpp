#include "jetpva/jetring.hpp"
#include "jetpva/poly.hpp"

#include <doctest.h>

#include <random>

using namespace jetpva;

namespace {

BaseRing plane()
{
    return BaseRing({"x", "y"}, {false, false});
}

BaseRing torus()
{
    return BaseRing({"x", "y"}, {true, true});
}

Poly random_poly(const PolyRing &ring, std::mt19937 &rng)
{
    std::uniform_int_distribution<int> nterms(1, 4), exp(0, 3), coef(-5, 5);
    Poly p;
    for (int t = 0; t < nterms(rng); ++t) {
        Monomial m;
        for (VarId v = 0; v < ring.var_count(); ++v)
            m = m * Monomial::variable(v, exp(rng));
        p.add_term(m, coef(rng));
    }
    return ring.normalized(p);
}

} // namespace

TEST_CASE("poly_mul ring identities")
{
    BaseRing R = plane();
    Poly x = Poly::variable(0), y = Poly::variable(1);

    // (x+y)(x-y) = x^2 - y^2
    CHECK(R.mul(x + y, x - y) == R.mul(x, x) - R.mul(y, y));

    // x * x^-1 = 1 on the torus
    BaseRing T = torus();
    CHECK(T.mul(Poly::variable(0), Poly::variable(0, -1)) == Poly::one());

    // negative exponent on a non-invertible variable is a domain error
    CHECK_THROWS_AS((void)R.mul(x, Poly::variable(0, -2)), Error);
}

TEST_CASE("poly_mul on jet variables")
{
    JetRing jr(plane(), 2);
    // (x0 + 2 x1)(x0 - 2 x1) = x0^2 - 4 x1^2
    Poly x0 = Poly::variable(jr.jet_var(0, 0));
    Poly x1 = Poly::variable(jr.jet_var(0, 1));
    Poly lhs = jr.mul(x0 + Rational(2) * x1, x0 - Rational(2) * x1);
    Poly rhs = jr.mul(x0, x0) - Rational(4) * jr.mul(x1, x1);
    CHECK(lhs == rhs);
}

TEST_CASE("poly_mul properties on randomized triples")
{
    std::mt19937 rng(12345);
    BaseRing T = torus();
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(T, rng), b = random_poly(T, rng), c = random_poly(T, rng);
        CHECK(T.mul(a, b) == T.mul(b, a));
        CHECK(T.mul(T.mul(a, b), c) == T.mul(a, T.mul(b, c)));
        CHECK(T.mul(a, b + c) == T.mul(a, b) + T.mul(a, c));
    }
}

TEST_CASE("poly_partial")
{
    BaseRing R = plane();
    Poly x = Poly::variable(0), y = Poly::variable(1);
    // d(x^2 y)/dx = 2 x y
    CHECK(R.partial(R.mul(R.mul(x, x), y), 0) == Rational(2) * R.mul(x, y));

    // Laurent rule d(x^-1)/dx = -x^-2
    BaseRing T = torus();
    CHECK(T.partial(Poly::variable(0, -1), 0) == -Poly::variable(0, -2));

    // term-by-term on jets: d(x0 y1 + 3 x1)/dx1 = 3
    JetRing jr(plane(), 1);
    Poly p = jr.mul(Poly::variable(jr.jet_var(0, 0)), Poly::variable(jr.jet_var(1, 1))) +
             Rational(3) * Poly::variable(jr.jet_var(0, 1));
    CHECK(jr.partial(p, jr.jet_var(0, 1)) == Poly::constant(3));

    CHECK_THROWS_AS((void)R.partial(x, 99), Error);
}

TEST_CASE("canonical form is structural equality")
{
    BaseRing R = plane();
    Poly x = Poly::variable(0), y = Poly::variable(1);
    Poly p = R.mul(x + y, x + y);
    Poly q = R.mul(x, x) + Rational(2) * R.mul(x, y) + R.mul(y, y);
    CHECK(p == q);
    Poly z = p - q;
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
}

TEST_CASE("unit detection in Laurent rings")
{
    BaseRing T = torus();
    Poly xy = T.mul(Poly::variable(0), Poly::variable(1));
    CHECK(T.is_unit(xy));
    CHECK(T.mul(xy, T.unit_inverse(xy)) == Poly::one());
    CHECK_FALSE(T.is_unit(xy + Poly::one()));

    BaseRing R = plane();
    CHECK_FALSE(R.is_unit(Poly::variable(0)));
    CHECK(R.is_unit(Poly::constant(Rational(3, 2))));
}

TEST_CASE("expression parser")
{
    BaseRing T = torus();
    CHECK(T.parse("x*y - y*x") == Poly{});
    CHECK(T.parse("(x + y)^2") == T.mul(T.parse("x+y"), T.parse("x+y")));
    CHECK(T.parse("3/2*x^-1") == Rational(3, 2) * Poly::variable(0, -1));
    CHECK(T.parse("-x + 2") == Poly::constant(2) - Poly::variable(0));
    CHECK_THROWS_AS((void)T.parse("x + z"), Error);
    CHECK_THROWS_AS((void)T.parse("x +"), Error);

    // printing round-trips through the parser
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        Poly p = random_poly(T, rng);
        CHECK(T.parse(T.to_string(p)) == p);
    }
}
