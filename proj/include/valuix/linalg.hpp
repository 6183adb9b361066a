#pragma once

// Dense exact linear algebra over Q. Sizes here are tiny (n <= 5 columns for
// geometry, a few dozen for measure extraction), so plain Gaussian
// elimination is used throughout.

#include <optional>
#include <vector>

#include "valuix/rational.hpp"

namespace valuix::linalg {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a);

std::size_t rank(Matrix a);
Rat determinant(Matrix a);

/// Basis of {x : a x = 0}; `cols` is needed when `a` has no rows.
std::vector<RatVec> nullspace(Matrix a, std::size_t cols);

/// Unique solution of a x = b, or nullopt when singular or inconsistent.
/// Overdetermined consistent systems of full column rank are accepted.
std::optional<RatVec> solve(const Matrix& a, const RatVec& b);

/// Coordinates of `x` in the basis given by the columns `basis[j]`.
std::optional<RatVec> coordinates(const std::vector<RatVec>& basis, const RatVec& x);

Matrix transpose(const Matrix& a);

}  // namespace valuix::linalg
