#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "branecharge/rational.hpp"

namespace branecharge {

/// Integer vector in Z^n (either the lattice M or its dual N).
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RationalMatrix = std::vector<std::vector<Rational>>;

std::int64_t dot(const IntVector& a, const IntVector& b);
Rational dot(const std::vector<Rational>& a, const IntVector& b);

/// gcd of the absolute values of the entries; 0 for the zero vector.
std::int64_t content(const IntVector& v);
IntVector primitive(IntVector v);

/// Exact determinant of a square integer matrix (Bareiss elimination).
std::int64_t determinant(const IntMatrix& rows);

/// Rank over Q.
int rank(const IntMatrix& rows);

/// Generalized cross product of n-1 vectors in Z^n: a vector orthogonal to
/// every row, zero iff the rows are linearly dependent.
IntVector orthogonal_complement(const IntMatrix& rows, int n);

/// Inverse over Q, or nullopt for singular input.
std::optional<RationalMatrix> inverse(const IntMatrix& rows);

/// Solves rows * x = rhs over Q; nullopt when rows is singular.
std::optional<std::vector<Rational>> solve(const IntMatrix& rows,
                                           std::span<const Rational> rhs);

/// Affine rank of a point set (dimension of its affine hull); -1 if empty.
int affine_dimension(std::span<const IntVector> points);

}  // namespace branecharge
