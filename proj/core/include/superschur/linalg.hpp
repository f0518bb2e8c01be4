#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superschur/scalar.hpp"

namespace superschur {

using Vec = std::vector<Scalar>;
/// Row-major matrix; every row has the same length.
using Matrix = std::vector<Vec>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x
Vec scaled(const Vec& x, const Scalar& a);
std::string to_string(const Vec& v);

/// Reduced row echelon form with zero rows removed. Pivot = leftmost nonzero
/// column; rows are taken in order; every pivot is normalized to 1. The result
/// is unique for a given row space, so two spans are equal iff their RREFs
/// are equal.
Matrix rref(Matrix rows);

/// Pivot column of each row of a matrix already in RREF.
std::vector<std::size_t> pivot_columns(const Matrix& echelon);

/// Reduces v modulo the row space of an RREF matrix: afterwards v vanishes on
/// every pivot column.
Vec reduce(Vec v, const Matrix& echelon);

bool in_span(const Vec& v, const Matrix& echelon);

std::size_t rank(Matrix rows);

/// Basis (in RREF) of {x : A x = 0} for an equation matrix with `columns`
/// columns. The basis vectors of the returned RREF are obtained by setting one
/// free column to 1 and the others to 0.
Matrix kernel(const Matrix& equations, std::size_t columns);

/// Coordinates c with sum_i c_i * echelon[i] == v, or nullopt when v is not in
/// the row space.
std::optional<Vec> coordinates(const Vec& v, const Matrix& echelon);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Matrix-vector product a * x.
Vec mat_vec(const Matrix& a, const Vec& x);

}  // namespace superschur
