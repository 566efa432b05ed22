#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chowring/polynomial.hpp"

namespace chowring::app {

/// Seeded generator of random polynomials and integer data.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);
  Integer coefficient(int bound);
  /// Random monomial of weighted degree exactly `degree`; the one monomial
  /// when `degree` is 0. Requires a weight-1 variable for odd degrees.
  Monomial monomial(const std::vector<Variable>& vars, int degree);
  /// Up to `terms` terms of weighted degree <= max_degree.
  Polynomial polynomial(const std::vector<Variable>& vars, int max_degree, int terms,
                        int coeff_bound = 9);
  /// Homogeneous of the given degree (possibly zero).
  Polynomial homogeneous(const std::vector<Variable>& vars, int degree, int terms,
                         int coeff_bound = 9);

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), engine_);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chowring::app
