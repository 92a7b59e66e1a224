#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "latsec/rational.hpp"

namespace latsec::mat {

RationalMatrix identity(std::size_t n);
RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector row_times(std::span<const Rational> row, const RationalMatrix& a);
RationalMatrix scale(const RationalMatrix& a, const Rational& factor);

/// Gram matrix A A^T.
RationalMatrix gram(const RationalMatrix& a);
Rational determinant(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);
/// Throws Error{unsupported_rank} for singular or non-square input.
RationalMatrix inverse(const RationalMatrix& a);

RationalMatrix from_int(const IntMatrix& a);
/// Nullopt unless every entry is an integer that fits in int64.
std::optional<IntMatrix> to_int(const RationalMatrix& a);

std::vector<std::vector<double>> to_double(const RationalMatrix& a);

/// Upper-triangular R with G = R^T R (Cholesky). G must be positive definite.
std::vector<std::vector<double>> cholesky_upper(const std::vector<std::vector<double>>& g);

/// Row-style Hermite normal form of the lattice generated by the rows of `rows`
/// (any number of rows). Returns the nonzero rows, upper triangular with
/// positive pivots and reduced entries above each pivot.
IntMatrix hermite_normal_form(IntMatrix rows);

struct SmithForm {
  std::vector<std::int64_t> diagonal;  // d_1 | d_2 | ..., all positive
  IntMatrix right;                     // V
  IntMatrix right_inverse;             // V^{-1}
};

/// Smith normal form A = U D V of a square nonsingular integer matrix, with U, V
/// unimodular and D = diag(d_i), d_i | d_{i+1}. Only the right factor is kept;
/// the row lattice of A equals the row lattice of D V.
SmithForm smith_normal_form(const IntMatrix& a);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector row_times(std::span<const std::int64_t> row, const IntMatrix& a);

}  // namespace latsec::mat
