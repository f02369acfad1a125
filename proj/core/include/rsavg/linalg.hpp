#pragma once

// Dense exact linear algebra over Q, sized for Hecke modules of a few dozen
// dimensions at most.

#include <cstddef>
#include <vector>

#include "rsavg/exactmath.hpp"

namespace rsavg {

using RationalVector = std::vector<Rational>;

class RationalMatrix
{
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);
    /// Columns given as vectors.
    static RationalMatrix from_columns(std::vector<RationalVector> const & cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational & operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Rational const & operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    RationalVector column(std::size_t j) const;
    Rational trace() const;

    friend RationalMatrix operator*(RationalMatrix const & a, RationalMatrix const & b);
    friend RationalVector operator*(RationalMatrix const & a, RationalVector const & x);
    friend RationalMatrix operator+(RationalMatrix a, RationalMatrix const & b);
    friend RationalMatrix operator-(RationalMatrix a, RationalMatrix const & b);
    friend RationalMatrix operator*(Rational const & s, RationalMatrix a);
    friend bool operator==(RationalMatrix const & a, RationalMatrix const & b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Basis (as column vectors) of the right kernel {x : A x = 0}.
std::vector<RationalVector> nullspace(RationalMatrix const & a);
std::size_t rank(RationalMatrix const & a);
Rational determinant(RationalMatrix a);

/// Coordinates of v in the span of the given independent columns; throws
/// std::domain_error if v is not in the span.
RationalVector coordinates_in_span(std::vector<RationalVector> const & basis, RationalVector const & v);

/// Matrix of a linear map restricted to an invariant subspace with the given
/// basis: column j holds the coordinates of A * basis[j].
RationalMatrix restrict_to(RationalMatrix const & a, std::vector<RationalVector> const & basis);

/// Polynomials over Q, constant term first.
using RationalPoly = std::vector<Rational>;

RationalPoly characteristic_polynomial(RationalMatrix const & a);
Rational poly_eval(RationalPoly const & p, Rational const & x);
RationalMatrix poly_eval(RationalPoly const & p, RationalMatrix const & a);
RationalPoly poly_divide_linear(RationalPoly const & p, Rational const & root);  // exact
void poly_trim(RationalPoly & p);

Rational dot(RationalVector const & x, RationalVector const & y);

}  // namespace rsavg
