#pragma once

#include <cstddef>
#include <vector>

#include "chowring/fraction.hpp"
#include "chowring/symchern.hpp"

namespace chowring {

/// An isolated torus fixed point of P(V), one per root m_j of V.
struct FixedPoint {
  std::size_t index = 0;
  /// Restriction of the hyperplane class O(1): -m_j.
  Polynomial hyperplane_restriction;
  /// {m_i - m_j : i != j}
  std::vector<Polynomial> tangent_weights;
};

/// Throws RepeatedRoots when two roots of V coincide.
std::vector<FixedPoint> fixed_points(const RepRoots& module);

/// prod_{i != j} (var + m_i): the class of fixed point j as a complete
/// intersection of coordinate hyperplanes.
Polynomial fundamental_class(const RepRoots& module, std::size_t j, Variable var);
LinearFormProduct fundamental_class_factors(const RepRoots& module, std::size_t j, Variable var);

/// Veronese embedding P(E*) -> P(Sym2(E*)) on fixed points: the point of root
/// l_j goes to the point of root 2 l_j.
struct VeroneseCorrespondence {
  int n = 0;
  RepRoots source;
  RepRoots target;
  std::vector<std::size_t> point_map;

  static VeroneseCorrespondence build(int n);
};

enum class LocalizationRoute {
  /// Pull the linear factors shared by every fixed-point class out of the
  /// sum before clearing denominators.
  kCommonFactor,
  /// Expand every summand completely before summing.
  kExpanded,
};

/// i_* K^r by explicit localization, still in the root variables (and H).
/// Throws InternalInconsistency if denominators fail to clear.
Polynomial veronese_pushforward_roots(int n, int r,
                                      LocalizationRoute route = LocalizationRoute::kCommonFactor);

/// i_* K^r in H and c_1..c_n, via the localization sum.
Polynomial veronese_pushforward(int n, int r,
                                LocalizationRoute route = LocalizationRoute::kCommonFactor);

/// 2^{n-1-r} H^r R(H) with R(H) = prod_{i<j} (H + l_i + l_j), in H and c_1..c_n.
Polynomial closed_form_pushforward(int n, int r);

/// R(H) rewritten in Chern classes.
Polynomial wedge2_chern_poly(int n);

}  // namespace chowring
