#ifndef LOGDIV_LINALG_HPP
#define LOGDIV_LINALG_HPP

#include <logdiv/rational.hpp>

#include <optional>
#include <vector>

namespace logdiv {

using QVector = std::vector<Rational>;

/// Dense matrix over Q with exact Gauss-Jordan elimination.
class QMatrix {
public:
    QMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows, QVector(cols, Rational(0))) {}

    static QMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return data_[i][j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i][j]; }
    const QVector& row(size_t i) const { return data_[i]; }

    void append_row(QVector r);

    /// In-place reduced row echelon form. Returns the pivot column of each
    /// nonzero row, in order; zero rows sink to the bottom.
    std::vector<size_t> rref();

    size_t rank() const;

    /// Basis of { x : Ax = 0 }, one vector per free column, deterministic.
    std::vector<QVector> nullspace() const;

    /// A particular solution of Ax = b with free variables set to 0.
    std::optional<QVector> solve(const QVector& rhs) const;

private:
    size_t rows_, cols_;
    std::vector<QVector> data_;
};

/// Row space of Q^dim maintained in reduced echelon form; supports incremental
/// rank growth and membership tests.
class RowSpan {
public:
    explicit RowSpan(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }

    /// Residual of v after reduction by the span (zero iff contained).
    QVector reduce(QVector v) const;
    bool contains(const QVector& v) const;

    /// Inserts v if independent; returns true when the rank grew.
    bool add(QVector v);

    /// The reduced echelon rows; canonical for the spanned subspace.
    const std::vector<QVector>& rows() const { return rows_; }

private:
    size_t dim_;
    std::vector<QVector> rows_;    // pivot columns strictly increasing
    std::vector<size_t> pivots_;
};

bool is_zero_vector(const QVector& v);

} // namespace logdiv

#endif
