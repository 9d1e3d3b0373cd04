#pragma once

// Exact integer and rational linear algebra: Bareiss determinants, Smith
// normal form with transforms, integer system solving and lattice bases.

#include "satake/types.hpp"

#include <optional>
#include <vector>

namespace satake {

BigMatrix to_big(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(BigMatrix m);

/// Rank over the rationals.
std::size_t matrix_rank(BigMatrix m);

/// U * A * V = diag(diagonal) with U, V unimodular; diagonal entries are
/// nonnegative and each divides the next. `diagonal` has min(rows, cols)
/// entries; `rank` counts the nonzero ones.
struct SmithForm {
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
  BigMatrix left;
  BigMatrix right;
};

SmithForm smith_normal_form(const BigMatrix& a, std::size_t cols);
inline SmithForm smith_normal_form(const BigMatrix& a) {
  return smith_normal_form(a, a.empty() ? 0 : a.front().size());
}

/// Reduces a list of integer row vectors of length `cols` to a basis of the
/// lattice they span (echelon form, zero rows dropped).
BigMatrix row_lattice_basis(const BigMatrix& rows, std::size_t cols);

/// All integer solutions of A x = b: x = particular + Z-span(kernel).
struct IntegerSolution {
  std::vector<BigInt> particular;
  BigMatrix kernel;  // each entry is a kernel vector
};

std::optional<IntegerSolution> solve_integer_system(const BigMatrix& a, const std::vector<BigInt>& b,
                                                    std::size_t cols);

/// Unique rational solution of the square system A x = b, if A is invertible.
std::optional<std::vector<Rational>> solve_rational_square(const BigMatrix& a, const std::vector<BigInt>& b);

/// Least common multiple of denominators, then the scaled integer vector.
std::vector<BigInt> clear_denominators(const std::vector<Rational>& v, BigInt* scale = nullptr);

}  // namespace satake
