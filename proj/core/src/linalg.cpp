#include "rsavg/linalg.hpp"

#include <stdexcept>

namespace rsavg {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols, 0)
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::vector<RationalVector> const & cols)
{
    if (cols.empty()) return {};
    RationalMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalVector RationalMatrix::column(std::size_t j) const
{
    RationalVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Rational RationalMatrix::trace() const
{
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

RationalMatrix operator*(RationalMatrix const & a, RationalMatrix const & b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            Rational const & x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

RationalVector operator*(RationalMatrix const & a, RationalVector const & x)
{
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    RationalVector y(a.rows_, 0);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
}

RationalMatrix operator+(RationalMatrix a, RationalMatrix const & b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
}

RationalMatrix operator-(RationalMatrix a, RationalMatrix const & b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
}

RationalMatrix operator*(Rational const & s, RationalMatrix a)
{
    for (auto & x : a.data_) x *= s;
    return a;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix & m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        Rational const inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational const f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<RationalVector> nullspace(RationalMatrix const & a)
{
    RationalMatrix m = a;
    auto const pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(RationalMatrix const & a)
{
    RationalMatrix m = a;
    return rref(m).size();
}

Rational determinant(RationalMatrix a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    std::size_t const n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rational const f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

RationalVector coordinates_in_span(std::vector<RationalVector> const & basis, RationalVector const & v)
{
    std::size_t const d = basis.size();
    std::size_t const n = v.size();
    RationalMatrix aug(n, d + 1);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) aug(i, d) = v[i];
    auto const pivots = rref(aug);
    if (pivots.size() != d || (!pivots.empty() && pivots.back() == d))
        throw std::domain_error("coordinates_in_span: vector not in span of an independent basis");
    RationalVector x(d);
    for (std::size_t r = 0; r < d; ++r) x[r] = aug(r, d);
    return x;
}

RationalMatrix restrict_to(RationalMatrix const & a, std::vector<RationalVector> const & basis)
{
    std::vector<RationalVector> cols;
    cols.reserve(basis.size());
    for (auto const & b : basis) cols.push_back(coordinates_in_span(basis, a * b));
    return RationalMatrix::from_columns(cols);
}

RationalPoly characteristic_polynomial(RationalMatrix const & a)
{
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    if (a.rows() != a.cols()) throw std::invalid_argument("characteristic_polynomial: not square");
    std::size_t const n = a.rows();
    RationalPoly c(n + 1, 0);
    c[n] = 1;
    RationalMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
    }
    return c;
}

Rational poly_eval(RationalPoly const & p, Rational const & x)
{
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

RationalMatrix poly_eval(RationalPoly const & p, RationalMatrix const & a)
{
    std::size_t const n = a.rows();
    RationalMatrix acc(n, n);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * a;
        for (std::size_t j = 0; j < n; ++j) acc(j, j) += p[i];
    }
    return acc;
}

RationalPoly poly_divide_linear(RationalPoly const & p, Rational const & root)
{
    if (p.size() < 2) throw std::invalid_argument("poly_divide_linear: degree < 1");
    RationalPoly q(p.size() - 1, 0);
    Rational carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * root;
        q[i - 1] = carry;
    }
    if (p[0] + carry * root != 0) throw std::domain_error("poly_divide_linear: not a root");
    return q;
}

void poly_trim(RationalPoly & p)
{
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Rational dot(RationalVector const & x, RationalVector const & y)
{
    if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace rsavg
