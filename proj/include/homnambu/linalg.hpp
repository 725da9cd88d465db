#pragma once

#include <optional>
#include <vector>

#include "homnambu/matrix.hpp"

namespace homnambu {

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

EchelonForm reduced_row_echelon(Matrix m);

// Basis of {v : m v = 0}. Each vector has a 1 at one free column and zeros
// at the other free columns; the list is the RREF of the basis rows, so
// equal inputs give identical output.
std::vector<Vector> nullspace(const Matrix& m);

// Fraction-free (Bareiss) elimination on a row-integerized copy.
std::size_t rank(const Matrix& m);
Scalar det(const Matrix& m);

std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

// RREF of the span of the given vectors: a canonical basis.
std::vector<Vector> canonical_basis(const std::vector<Vector>& spanning, std::size_t dim);

// Coordinates of v against a canonical basis (read at the pivot columns);
// absent when v lies outside the span.
std::optional<std::vector<Scalar>> coordinates(const std::vector<Vector>& canonical, const Vector& v);

}  // namespace homnambu
