#include "jetpva/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace jetpva;

TEST_CASE("exact_kernel_and_rank on small matrices")
{
    QMatrix id(3, 3);
    for (size_t i = 0; i < 3; ++i)
        id.at(i, i) = 1;
    auto r = exact_kernel_and_rank(id);
    CHECK(r.rank == 3);
    CHECK(r.kernel.empty());

    QMatrix zero(2, 3);
    r = exact_kernel_and_rank(zero);
    CHECK(r.rank == 0);
    CHECK(r.kernel.size() == 3);

    QMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    r = exact_kernel_and_rank(m);
    CHECK(r.rank == 1);
    REQUIRE(r.kernel.size() == 1);
    // kernel spanned by (2, -1) up to scale
    const QVec &v = r.kernel[0];
    CHECK(v[0] * Rational(-1) == v[1] * Rational(2));
}

TEST_CASE("rank + kernel dimension = column count, A v = 0")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(1, 8), val(-4, 4), den(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        size_t rows = static_cast<size_t>(dim(rng)), cols = static_cast<size_t>(dim(rng));
        QMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m.at(i, j) = Rational(val(rng), den(rng));
        auto r = exact_kernel_and_rank(m);
        CHECK(static_cast<size_t>(r.rank) + r.kernel.size() == cols);
        for (const auto &v : r.kernel) {
            QVec av = m.apply(v);
            for (const auto &x : av)
                CHECK(x == 0);
        }
        CHECK(exact_rank(m) == r.rank);
    }
}

TEST_CASE("quotient spaces")
{
    // Q^3 / span{(1,1,0)}
    QuotientSpace q(3, {{Rational(1), Rational(1), Rational(0)}});
    CHECK(q.dim() == 2);
    QVec v{Rational(2), Rational(0), Rational(5)};
    QVec red = q.reduce(v);
    CHECK(red[0] == 0); // pivot coordinate killed
    QVec c = q.coords(v);
    CHECK(c.size() == 2);
    CHECK(c[0] == Rational(-2));
    CHECK(c[1] == Rational(5));

    // quotient by the full space
    QuotientSpace full(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(full.dim() == 0);

    // vectors in the subspace reduce to zero
    QuotientSpace q2(3, {{Rational(1), Rational(2), Rational(3)}});
    QVec w = q2.reduce({Rational(2), Rational(4), Rational(6)});
    for (const auto &x : w)
        CHECK(x == 0);
}

TEST_CASE("mat_mul")
{
    QMatrix a(2, 3), b(3, 1);
    int k = 1;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 3; ++j)
            a.at(i, j) = k++;
    for (size_t j = 0; j < 3; ++j)
        b.at(j, 0) = 1;
    QMatrix c = mat_mul(a, b);
    CHECK(c.at(0, 0) == Rational(6));
    CHECK(c.at(1, 0) == Rational(15));
}
