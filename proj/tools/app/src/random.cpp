#include "chowring/app/random.hpp"

#include <algorithm>

#include "chowring/graded_ideal.hpp"

namespace chowring::app {

int RandomSource::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Integer RandomSource::coefficient(int bound) {
  int c = 0;
  while (c == 0) c = uniform(-bound, bound);
  return c;
}

Monomial RandomSource::monomial(const std::vector<Variable>& vars, int degree) {
  const auto basis = monomials_of_degree(vars, degree);
  if (basis.empty()) return Monomial();
  return basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))];
}

Polynomial RandomSource::polynomial(const std::vector<Variable>& vars, int max_degree, int terms,
                                    int coeff_bound) {
  std::vector<Polynomial::Term> out;
  for (int i = 0; i < terms; ++i) {
    const int d = uniform(0, max_degree);
    const auto basis = monomials_of_degree(vars, d);
    if (basis.empty()) continue;
    out.emplace_back(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))],
                     coefficient(coeff_bound));
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial RandomSource::homogeneous(const std::vector<Variable>& vars, int degree, int terms,
                                     int coeff_bound) {
  const auto basis = monomials_of_degree(vars, degree);
  std::vector<Polynomial::Term> out;
  if (basis.empty()) return Polynomial();
  for (int i = 0; i < terms; ++i) {
    out.emplace_back(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))],
                     coefficient(coeff_bound));
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace chowring::app
