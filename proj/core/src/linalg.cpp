#include <logdiv/linalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace logdiv {

bool is_zero_vector(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
    return m;
}

void QMatrix::append_row(QVector r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.push_back(std::move(r));
    ++rows_;
}

std::vector<size_t> QMatrix::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && data_[p][c] == 0) ++p;
        if (p == rows_) continue;
        std::swap(data_[r], data_[p]);
        Rational inv = Rational(1) / data_[r][c];
        for (size_t j = c; j < cols_; ++j) data_[r][j] *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || data_[i][c] == 0) continue;
            Rational factor = data_[i][c];
            for (size_t j = c; j < cols_; ++j) data_[i][j] -= factor * data_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t QMatrix::rank() const {
    QMatrix copy = *this;
    return copy.rref().size();
}

std::vector<QVector> QMatrix::nullspace() const {
    QMatrix copy = *this;
    std::vector<size_t> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        QVector v(cols_, Rational(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -copy.data_[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> QMatrix::solve(const QVector& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.data_[i][j] = data_[i][j];
        aug.data_[i][cols_] = rhs[i];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    QVector x(cols_, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.data_[i][cols_];
    return x;
}

QVector RowSpan::reduce(QVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (c == 0) continue;
        Rational factor = c;  // pivot entries are 1
        for (size_t j = pivots_[i]; j < dim_; ++j) v[j] -= factor * rows_[i][j];
    }
    return v;
}

bool RowSpan::contains(const QVector& v) const { return is_zero_vector(reduce(v)); }

bool RowSpan::add(QVector v) {
    v = reduce(std::move(v));
    size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;

    Rational inv = Rational(1) / v[p];
    for (size_t j = p; j < dim_; ++j) v[j] *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rational factor = rows_[i][p];
        if (factor == 0) continue;
        for (size_t j = p; j < dim_; ++j) rows_[i][j] -= factor * v[j];
    }
    size_t k = 0;
    while (k < pivots_.size() && pivots_[k] < p) ++k;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(k), p);
    return true;
}

} // namespace logdiv
