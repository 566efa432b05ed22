#pragma once

#include <cstdint>
#include <string>

namespace chowring::app {

struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  /// Description of the first failing case, empty when all passed.
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

inline constexpr std::uint64_t kDefaultPropertySeed = 20240611;
inline constexpr int kDefaultPropertyCases = 200;

/// Associativity, commutativity, distributivity and exact division on random
/// polynomials in six variables of degree <= 8.
PropertyOutcome ring_axioms(std::uint64_t seed, int cases);

/// symmetric_to_chern(chern_to_roots(q)) = q for random q, n <= 5, degree <= 8.
PropertyOutcome symchern_round_trip(std::uint64_t seed, int cases);

/// symmetric_to_chern respects sums and products of random symmetrized
/// polynomials, n <= 4.
PropertyOutcome symchern_homomorphism(std::uint64_t seed, int cases);

/// The fundamental class of a fixed point restricts to the product of its
/// tangent weights there and to zero at every other fixed point, n <= 4.
PropertyOutcome fixed_point_restriction(std::uint64_t seed, int cases);

/// HNF idempotence and row-order invariance on random integer matrices, and
/// generator-order invariance of graded pieces.
PropertyOutcome hnf_invariance(std::uint64_t seed, int cases);

/// Multiples of P(H)R(H) lie in the ideal of the Veronese pushforwards, before
/// and after H -> k c_1, for n <= 4.
PropertyOutcome pr_membership(std::uint64_t seed, int cases);

}  // namespace chowring::app
