#include "zoll/linalg.hpp"

#include <utility>

#include "zoll/errors.hpp"

namespace zoll {

namespace {

/// In-place Bareiss elimination on the augmented rows; returns pivot columns.
std::vector<std::size_t> bareiss(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  Scalar previous = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c)
        m(r, c) = (m(row, col) * m(r, c) - m(r, col) * m(row, c)) / previous;
      m(r, col) = 0;
    }
    previous = m(row, col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return bareiss(m, m.cols()).size(); }

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DomainError("solve: shape mismatch");
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  if (bareiss(aug, n).size() != n) return std::nullopt;
  std::vector<Scalar> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc = aug(i, n);
    for (std::size_t c = i + 1; c < n; ++c) acc -= aug(i, c) * x[c];
    x[i] = acc / aug(i, i);
  }
  return x;
}

}  // namespace zoll
