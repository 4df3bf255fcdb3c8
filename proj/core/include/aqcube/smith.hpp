#pragma once

#include <optional>
#include <vector>

#include "aqcube/int_matrix.hpp"

namespace aqcube {

// U * A * V = D with U, V unimodular and D diagonal, nonnegative,
// divisibility-ordered d1 | d2 | ...
struct SmithResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    std::size_t rank() const;
    std::vector<Int> diagonal() const;
};

SmithResult snf(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Basis of the integer kernel lattice {x : A x = 0}, as matrix columns.
// The basis is saturated (a basis of the full kernel, not a sublattice).
IntMatrix kernel_basis(const IntMatrix& a);

// Some integer solution of A x = b, if one exists.
std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b);

// Solve A X = B columnwise; nullopt if any column has no solution.
std::optional<IntMatrix> solve_many(const IntMatrix& a, const IntMatrix& b);

// Basis of the lattice spanned by the columns of A (column echelon form
// with zero columns dropped).
IntMatrix column_lattice_basis(const IntMatrix& a);

}  // namespace aqcube
