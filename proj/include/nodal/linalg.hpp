#pragma once

#include <vector>

#include "nodal/scalar.hpp"

namespace nodal {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<std::vector<Scalar>>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of the right null space {v : m v = 0}.
std::vector<Vector> nullspace(Matrix m, std::size_t columns);
Scalar determinant(Matrix m);
/// Matrix-vector product.
Vector mat_vec(const Matrix& m, const Vector& v);
/// Scales a nonzero vector so its first nonzero entry is 1.
Vector normalize_projective(Vector v);
bool is_zero_vector(const Vector& v);
/// Proportionality of two vectors (both nonzero).
bool proportional(const Vector& a, const Vector& b);

}  // namespace nodal
