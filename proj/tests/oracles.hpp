#pragma once

// Independent reference computations used to cross-check the library.

#include <map>
#include <random>
#include <vector>

#include "chowring/polynomial.hpp"

namespace oracle {

using chowring::Integer;
using chowring::Polynomial;
using chowring::Variable;

using Point = std::map<Variable, Integer>;

/// Evaluates p term by term; variables missing from `at` count as zero.
inline Integer evaluate(const Polynomial& p, const Point& at) {
  Integer total = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer value = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = at.find(v);
      const Integer x = it == at.end() ? Integer(0) : it->second;
      for (std::uint32_t i = 0; i < e; ++i) value *= x;
    }
    total += value;
  }
  return total;
}

inline Point random_point(const std::vector<Variable>& vars, std::mt19937_64& rng, int bound = 50) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Point p;
  for (Variable v : vars) p[v] = dist(rng);
  return p;
}

/// Naive product over a dense exponent map, summing every pair of terms.
inline std::map<std::map<Variable, std::uint32_t>, Integer> naive_product(const Polynomial& a,
                                                                         const Polynomial& b) {
  std::map<std::map<Variable, std::uint32_t>, Integer> out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::map<Variable, std::uint32_t> exps;
      for (const auto& [v, e] : ma.factors()) exps[v] += e;
      for (const auto& [v, e] : mb.factors()) exps[v] += e;
      out[exps] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::map<std::map<Variable, std::uint32_t>, Integer> as_map(const Polynomial& p) {
  std::map<std::map<Variable, std::uint32_t>, Integer> out;
  for (const auto& [m, c] : p.terms()) {
    std::map<Variable, std::uint32_t> exps(m.factors().begin(), m.factors().end());
    out[exps] = c;
  }
  return out;
}

/// e_k(l_1..l_n) by enumerating k-subsets.
inline Polynomial elementary_by_subsets(int n, int k) {
  Polynomial sum;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Polynomial term(1);
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) term *= Polynomial(Variable::root(i + 1));
    }
    sum += term;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return sum;
}

/// Chern roots point: evaluates c_i at the values (-1)^i e_i(l) of a root point.
inline Point chern_point_from_roots(int n, const Point& roots) {
  Point out = roots;
  for (int i = 1; i <= n; ++i) {
    Integer e = evaluate(elementary_by_subsets(n, i), roots);
    out[Variable::chern(i)] = i % 2 == 0 ? e : Integer(-e);
  }
  return out;
}

}  // namespace oracle
