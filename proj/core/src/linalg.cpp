#include "mct/linalg.hpp"

#include <stdexcept>

namespace mct {

Rref rref(Mat m) {
  Rref out;
  if (m.empty()) return out;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Scalar inv = Scalar(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Scalar f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  out.mat = std::move(m);
  return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::vector<Row> kernel_basis(const Mat& m, int cols) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Row> out;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row x(cols, Scalar(0));
    x[free] = 1;
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
      x[r.pivot_cols[i]] = -r.mat[i][free];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Row> solve(const Mat& m, const Row& b) {
  if (m.empty()) {
    for (const auto& v : b)
      if (v != 0) return std::nullopt;
    return Row{};
  }
  size_t rows = m.size(), cols = m[0].size();
  Mat aug = m;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  Rref r = rref(std::move(aug));
  Row x(cols, Scalar(0));
  for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
    int c = r.pivot_cols[i];
    if (c == static_cast<int>(cols)) return std::nullopt;  // pivot in the b column
    x[c] = r.mat[i][cols];
  }
  return x;
}

Row mat_apply(const Mat& m, const Row& x) {
  Row out(m.size(), Scalar(0));
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw std::invalid_argument("mat_apply: size mismatch");
    for (size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  }
  return out;
}

}  // namespace mct
