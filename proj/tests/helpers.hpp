#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "homtwist/matrix.hpp"

namespace testing {

using homtwist::Mat;
using homtwist::Rational;

inline Mat M(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return homtwist::from_rows(r);
}

inline Rational R(long n, long d = 1) { return Rational(n, d); }

/// Small random rationals with numerator and denominator in a fixed box.
class RandomRationals {
 public:
  explicit RandomRationals(unsigned seed) : gen_(seed) {}
  Rational next(long span = 5, long maxden = 4) {
    std::uniform_int_distribution<long> num(-span, span), den(1, maxden);
    return Rational(num(gen_), den(gen_));
  }
  Rational nonzero(long span = 5, long maxden = 4) {
    for (;;) {
      Rational r = next(span, maxden);
      if (!r.is_zero()) return r;
    }
  }
  Mat matrix(std::size_t rows, std::size_t cols) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = next();
    return m;
  }

 private:
  std::mt19937 gen_;
};

}  // namespace testing
