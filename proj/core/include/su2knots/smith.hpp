#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace su2knots {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix in row-major order.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  BigInt& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Diagonal of the Smith normal form: nonnegative invariant factors
// d_1 | d_2 | ... | d_r followed by zeros up to min(rows, cols).
std::vector<BigInt> smith_diagonal(IntMatrix m);

}  // namespace su2knots
