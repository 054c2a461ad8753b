#pragma once

#include <cstddef>
#include <vector>

#include "gotzrep/integer.hpp"

namespace gotzrep {

/// Dense row-major integer matrix; a thin carrier for exact rank computations.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

/// Rank modulo the prime 2^61 - 1. Never exceeds the rank over Q.
std::size_t rank_mod_prime(const IntMatrix& m);

/// Fraction-free (Bareiss) elimination over Z, i.e. the rank over Q.
std::size_t rank_bareiss(IntMatrix m);

/// Exact rank over Q. A full rank result modulo a prime is already exact
/// because the modular rank is a lower bound; otherwise falls back to Bareiss.
std::size_t exact_rank(const IntMatrix& m);

}  // namespace gotzrep
