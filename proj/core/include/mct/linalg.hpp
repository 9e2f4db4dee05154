#pragma once

// Tiny exact dense linear algebra over rationals: reduced row echelon
// form, rank, kernel bases and linear solves. Matrices are row-major
// vectors of rows.

#include <optional>
#include <vector>

#include "mct/scalar.hpp"

namespace mct {

using Row = std::vector<Scalar>;
using Mat = std::vector<Row>;

struct Rref {
  Mat mat;                      // reduced row echelon form
  std::vector<int> pivot_cols;  // pivot column per nonzero row
};

Rref rref(Mat m);
int rank(const Mat& m);

// Basis of { x : m x = 0 } as column vectors.
std::vector<Row> kernel_basis(const Mat& m, int cols);

// One solution of m x = b, or nullopt when inconsistent.
std::optional<Row> solve(const Mat& m, const Row& b);

// Matrix-vector and matrix-matrix products.
Row mat_apply(const Mat& m, const Row& x);

}  // namespace mct
