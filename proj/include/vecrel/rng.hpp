#pragma once

#include <cstdint>
#include <random>

#include "vecrel/linalg.hpp"
#include "vecrel/scalar.hpp"

namespace vecrel {

// Seeded source of small rational test data. Genericity sampling draws
// integers in [-9, 9] and resamples when a required nonvanishing fails.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  long int_in(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

  Scalar small_int() { return Scalar(int_in(-9, 9)); }

  Scalar nonzero_int() {
    for (;;) {
      Scalar s = small_int();
      if (!s.is_zero()) return s;
    }
  }

  Scalar positive_int() { return Scalar(int_in(1, 9)); }

  Vector vector(std::size_t k) {
    Vector v(k);
    for (auto& x : v) x = small_int();
    return v;
  }

  Vector nonzero_vector(std::size_t k) {
    for (;;) {
      Vector v = vector(k);
      if (!is_zero_vector(v)) return v;
    }
  }

  Matrix full_rank_matrix(std::size_t rows, std::size_t cols) {
    for (;;) {
      Matrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = small_int();
      if (m.rank() == std::min(rows, cols)) return m;
    }
  }

  Matrix invertible_matrix(std::size_t n) { return full_rank_matrix(n, n); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace vecrel
