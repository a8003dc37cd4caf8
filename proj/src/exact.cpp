#include "mrees/exact.hpp"

#include <utility>

#include "mrees/error.hpp"

namespace mrees {

namespace {

// Brings the first `cols` columns of m to echelon form in place, returning the
// pivot columns. Every entry stays an integer: after step k the active block
// is divisible by the previous pivot (Sylvester's identity).
std::vector<std::size_t> bareiss(BigMatrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < m[i].size(); ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(BigMatrix a, std::vector<BigInt> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw PreconditionError("solve_exact: right-hand side length mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw PreconditionError("solve_exact: matrix is not square");
    a[i].push_back(std::move(b[i]));
  }
  const auto pivots = bareiss(a, n);
  if (pivots.size() != n) return std::nullopt;

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
    x[i] = acc / Rational(a[i][i]);
  }
  return x;
}

std::size_t exact_rank(BigMatrix a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  return bareiss(a, cols).size();
}

}  // namespace mrees
