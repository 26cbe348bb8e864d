#pragma once

#include "cospec/matrix.hpp"

namespace cospec {

/// det(xI - m) by the division-free Berkowitz algorithm, ascending degree.
/// Integer input yields integer coefficients; rational input rational ones.
Poly charpoly(const ExactMatrix& m);

/// Exact determinant via Bareiss fraction-free elimination.
Rat determinant(const ExactMatrix& m);

int rank(const ExactMatrix& m);

/// Exact rational basis of the right kernel {x : m x = 0}. Basis vectors are
/// scaled to primitive integer form (coprime integer entries).
std::vector<std::vector<Rat>> nullspace(const ExactMatrix& m);

}  // namespace cospec
