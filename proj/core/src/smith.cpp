#include "su2knots/smith.hpp"

#include <algorithm>

namespace su2knots {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Position of the smallest nonzero |entry| in the trailing submatrix, or
// false when that submatrix is zero.
bool find_pivot(const IntMatrix& m, std::size_t s, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = s; i < m.rows; ++i) {
    for (std::size_t j = s; j < m.cols; ++j) {
      const BigInt& v = m.at(i, j);
      if (v == 0) continue;
      const BigInt a = abs_big(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  const std::size_t n = std::min(m.rows, m.cols);
  std::vector<BigInt> diag(n, BigInt(0));

  for (std::size_t s = 0; s < n; ++s) {
    std::size_t pi = s, pj = s;
    if (!find_pivot(m, s, pi, pj)) break;
    swap_rows(m, s, pi);
    swap_cols(m, s, pj);

    // Euclidean elimination: repeat while the pivot row/column has
    // off-pivot residue, since quotient-remainder steps may reintroduce it.
    for (;;) {
      bool clean = true;
      for (std::size_t i = s + 1; i < m.rows; ++i) {
        if (m.at(i, s) == 0) continue;
        const BigInt q = m.at(i, s) / m.at(s, s);
        for (std::size_t j = s; j < m.cols; ++j) m.at(i, j) -= q * m.at(s, j);
        if (m.at(i, s) != 0) {
          swap_rows(m, s, i);
          clean = false;
        }
      }
      for (std::size_t j = s + 1; j < m.cols; ++j) {
        if (m.at(s, j) == 0) continue;
        const BigInt q = m.at(s, j) / m.at(s, s);
        for (std::size_t i = s; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, s);
        if (m.at(s, j) != 0) {
          swap_cols(m, s, j);
          clean = false;
        }
      }
      if (clean) break;
    }

    // Divisibility fix: fold any non-multiple into the pivot's column and
    // redo the block.
    bool divisible = true;
    for (std::size_t i = s + 1; i < m.rows && divisible; ++i) {
      for (std::size_t j = s + 1; j < m.cols && divisible; ++j) {
        if (m.at(i, j) % m.at(s, s) != 0) {
          for (std::size_t jj = s; jj < m.cols; ++jj) m.at(s, jj) += m.at(i, jj);
          divisible = false;
        }
      }
    }
    if (!divisible) {
      --s;
      continue;
    }
    diag[s] = abs_big(m.at(s, s));
  }
  return diag;
}

}  // namespace su2knots
