#pragma once

#include "jetpva/rational.hpp"

#include <vector>

namespace jetpva {

using QVec = std::vector<Rational>;

/// Dense matrix over Q. Desk-scale: blocks in this library stay small,
/// exactness matters more than asymptotics.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, QVec(cols, Rational(0))) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational &at(size_t i, size_t j) { return a_[i][j]; }
    const Rational &at(size_t i, size_t j) const { return a_[i][j]; }
    const QVec &row(size_t i) const { return a_[i]; }

    QVec apply(const QVec &v) const;

    friend bool operator==(const QMatrix &x, const QMatrix &y) = default;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<QVec> a_;
};

QMatrix mat_mul(const QMatrix &a, const QMatrix &b);

struct KernelResult {
    int rank = 0;
    std::vector<QVec> kernel; // basis of the right kernel
};

/// Rank and right-kernel basis by fraction-free (Bareiss) elimination
/// over arbitrary-precision integers, with exact rational
/// back-substitution at the end.
KernelResult exact_kernel_and_rank(const QMatrix &m);

int exact_rank(const QMatrix &m);

/// Reduced row echelon form rows of the row space (pivot columns in
/// increasing order), computed through the same Bareiss elimination.
struct RowSpace {
    std::vector<QVec> rref;
    std::vector<int> pivots;
};
RowSpace row_space(const QMatrix &m);

/// The quotient of Q^n by the row space of a spanning family. Classes
/// are represented canonically by killing the pivot coordinates; the
/// non-pivot coordinates serve as quotient coordinates.
class QuotientSpace {
public:
    QuotientSpace(size_t n, const std::vector<QVec> &spanning);

    size_t ambient_dim() const { return n_; }
    size_t dim() const { return free_cols_.size(); }
    const std::vector<int> &free_cols() const { return free_cols_; }

    QVec reduce(QVec v) const;       // canonical representative
    QVec coords(const QVec &v) const; // quotient coordinates of the class

private:
    size_t n_;
    RowSpace rs_;
    std::vector<int> free_cols_;
};

} // namespace jetpva
