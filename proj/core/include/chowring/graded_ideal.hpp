#pragma once

#include <span>
#include <vector>

#include "chowring/hermite.hpp"
#include "chowring/polynomial.hpp"

namespace chowring {

/// Homogeneous ideal of a weighted-graded polynomial ring over the integers.
class GradedIdeal {
 public:
  GradedIdeal() = default;
  /// Zero generators are dropped. Throws NotHomogeneous, or
  /// std::invalid_argument when a generator uses a variable outside `ambient`.
  GradedIdeal(std::vector<Variable> ambient, std::vector<Polynomial> generators);

  /// Sorted in the variable order.
  const std::vector<Variable>& ambient() const { return ambient_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  int max_generator_degree() const;

 private:
  std::vector<Variable> ambient_;
  std::vector<Polynomial> generators_;
};

/// All monomials of weighted degree `degree` in `ambient`, ascending.
std::vector<Monomial> monomials_of_degree(std::span<const Variable> ambient, int degree);

/// The degree-d piece of an ideal as an integer lattice in the coordinates of
/// the degree-d monomial basis.
struct GradedPieceLattice {
  int degree = 0;
  std::vector<Monomial> basis;
  HermiteForm hnf;

  /// Throws std::invalid_argument if p has a term outside the basis.
  IntVector coordinates(const Polynomial& p) const;
  Polynomial polynomial(const IntVector& coords) const;
  std::vector<Polynomial> row_polynomials() const;
};

GradedPieceLattice graded_piece(const GradedIdeal& ideal, int degree);

/// Throws NotHomogeneous.
bool contains(const GradedIdeal& ideal, const Polynomial& p);

struct DegreeComparison {
  int degree = 0;
  GradedPieceLattice lhs;
  GradedPieceLattice rhs;
  bool equal = false;
};

struct IdealComparison {
  int bound = 0;
  std::vector<DegreeComparison> degrees;

  bool equal() const;
  std::vector<int> mismatched_degrees() const;
};

/// Per-degree lattice comparison for every degree 0..bound. Both ideals must
/// live in the same ambient ring.
IdealComparison compare_up_to(const GradedIdeal& lhs, const GradedIdeal& rhs, int bound);
bool equal_up_to(const GradedIdeal& lhs, const GradedIdeal& rhs, int bound);

/// Degree-ascending reduction to a small generating set that agrees with the
/// ideal in every degree up to `bound`.
std::vector<Polynomial> simplify_generators(const GradedIdeal& ideal, int bound);

}  // namespace chowring
