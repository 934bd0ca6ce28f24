#include "jetpva/linalg.hpp"

#include <algorithm>

namespace jetpva {

QVec QMatrix::apply(const QVec &v) const
{
    QVec r(rows_, Rational(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (a_[i][j] != 0 && v[j] != 0)
                r[i] += a_[i][j] * v[j];
    return r;
}

QMatrix mat_mul(const QMatrix &a, const QMatrix &b)
{
    QMatrix r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0)
                continue;
            for (size_t j = 0; j < b.cols(); ++j)
                if (b.at(k, j) != 0)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

namespace {

struct Echelon {
    std::vector<std::vector<Int>> rows; // first `rank` rows are the echelon
    std::vector<int> pivots;
    int rank = 0;
};

// Fraction-free row echelon (Bareiss): every division below is exact.
Echelon bareiss(const QMatrix &m)
{
    const size_t nr = m.rows(), nc = m.cols();
    Echelon e;
    e.rows.assign(nr, std::vector<Int>(nc, Int(0)));
    for (size_t i = 0; i < nr; ++i) {
        Int lcm = 1;
        for (size_t j = 0; j < nc; ++j)
            lcm = boost::multiprecision::lcm(lcm, denominator(m.at(i, j)));
        for (size_t j = 0; j < nc; ++j)
            e.rows[i][j] = numerator(m.at(i, j)) * (lcm / denominator(m.at(i, j)));
    }

    Int prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t piv = r;
        while (piv < nr && e.rows[piv][c] == 0)
            ++piv;
        if (piv == nr)
            continue;
        std::swap(e.rows[r], e.rows[piv]);
        for (size_t i = r + 1; i < nr; ++i) {
            for (size_t j = c + 1; j < nc; ++j)
                e.rows[i][j] = (e.rows[r][c] * e.rows[i][j] - e.rows[i][c] * e.rows[r][j]) / prev;
            e.rows[i][c] = 0;
        }
        prev = e.rows[r][c];
        e.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    e.rank = static_cast<int>(r);
    return e;
}

} // namespace

int exact_rank(const QMatrix &m)
{
    return bareiss(m).rank;
}

KernelResult exact_kernel_and_rank(const QMatrix &m)
{
    const size_t nc = m.cols();
    Echelon e = bareiss(m);
    KernelResult res;
    res.rank = e.rank;

    std::vector<bool> is_pivot(nc, false);
    for (int p : e.pivots)
        is_pivot[static_cast<size_t>(p)] = true;

    for (size_t f = 0; f < nc; ++f) {
        if (is_pivot[f])
            continue;
        QVec v(nc, Rational(0));
        v[f] = 1;
        for (int i = e.rank - 1; i >= 0; --i) {
            const size_t p = static_cast<size_t>(e.pivots[static_cast<size_t>(i)]);
            Rational s(0);
            for (size_t j = p + 1; j < nc; ++j)
                if (v[j] != 0 && e.rows[static_cast<size_t>(i)][j] != 0)
                    s += Rational(e.rows[static_cast<size_t>(i)][j]) * v[j];
            v[p] = -s / Rational(e.rows[static_cast<size_t>(i)][p]);
        }
        res.kernel.push_back(std::move(v));
    }
    return res;
}

RowSpace row_space(const QMatrix &m)
{
    Echelon e = bareiss(m);
    RowSpace rs;
    rs.pivots = e.pivots;
    const size_t nc = m.cols();
    rs.rref.assign(static_cast<size_t>(e.rank), QVec(nc, Rational(0)));
    for (int i = 0; i < e.rank; ++i) {
        const auto &row = e.rows[static_cast<size_t>(i)];
        const Rational piv(row[static_cast<size_t>(e.pivots[static_cast<size_t>(i)])]);
        for (size_t j = 0; j < nc; ++j)
            rs.rref[static_cast<size_t>(i)][j] = Rational(row[j]) / piv;
    }
    // back-eliminate above each pivot
    for (int i = e.rank - 1; i >= 0; --i) {
        const size_t p = static_cast<size_t>(rs.pivots[static_cast<size_t>(i)]);
        for (int k = 0; k < i; ++k) {
            Rational f = rs.rref[static_cast<size_t>(k)][p];
            if (f == 0)
                continue;
            for (size_t j = 0; j < nc; ++j)
                rs.rref[static_cast<size_t>(k)][j] -= f * rs.rref[static_cast<size_t>(i)][j];
        }
    }
    return rs;
}

QuotientSpace::QuotientSpace(size_t n, const std::vector<QVec> &spanning) : n_(n)
{
    QMatrix m(spanning.size(), n);
    for (size_t i = 0; i < spanning.size(); ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = spanning[i][j];
    rs_ = row_space(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : rs_.pivots)
        is_pivot[static_cast<size_t>(p)] = true;
    for (size_t j = 0; j < n; ++j)
        if (!is_pivot[j])
            free_cols_.push_back(static_cast<int>(j));
}

QVec QuotientSpace::reduce(QVec v) const
{
    for (size_t i = 0; i < rs_.rref.size(); ++i) {
        const size_t p = static_cast<size_t>(rs_.pivots[i]);
        Rational f = v[p];
        if (f == 0)
            continue;
        for (size_t j = 0; j < n_; ++j)
            v[j] -= f * rs_.rref[i][j];
    }
    return v;
}

QVec QuotientSpace::coords(const QVec &v) const
{
    QVec red = reduce(v);
    QVec c(free_cols_.size(), Rational(0));
    for (size_t k = 0; k < free_cols_.size(); ++k)
        c[k] = red[static_cast<size_t>(free_cols_[k])];
    return c;
}

} // namespace jetpva
