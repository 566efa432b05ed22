#include "chowring/localize.hpp"

#include <algorithm>

namespace chowring {

namespace {

void require_distinct(const RepRoots& module) {
  const auto& roots = module.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[i] == roots[j]) {
        throw RepeatedRoots(module.module().to_string() + " has the repeated root " +
                            roots[i].to_string());
      }
    }
  }
}

void check_rank(int n, int r) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (r < 0 || r > n - 1) throw std::invalid_argument("r must lie in [0, n-1]");
}

}  // namespace

std::vector<FixedPoint> fixed_points(const RepRoots& module) {
  require_distinct(module);
  const auto& roots = module.roots();
  std::vector<FixedPoint> out;
  out.reserve(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    FixedPoint p;
    p.index = j;
    p.hyperplane_restriction = -roots[j];
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i != j) p.tangent_weights.push_back(roots[i] - roots[j]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

LinearFormProduct fundamental_class_factors(const RepRoots& module, std::size_t j, Variable var) {
  require_distinct(module);
  if (j >= module.dimension()) throw std::out_of_range("fixed point index out of range");
  LinearFormProduct out;
  for (std::size_t i = 0; i < module.dimension(); ++i) {
    if (i != j) out.multiply(Polynomial(var) + module.roots()[i]);
  }
  return out;
}

Polynomial fundamental_class(const RepRoots& module, std::size_t j, Variable var) {
  return fundamental_class_factors(module, j, var).expand();
}

VeroneseCorrespondence VeroneseCorrespondence::build(int n) {
  VeroneseCorrespondence out{n, build_roots(n, {BaseModule::kDual, 0}),
                             build_roots(n, {BaseModule::kSym2Dual, 0}), {}};
  for (const auto& root : out.source.roots()) {
    const Polynomial image = root.scale(2);
    auto it = std::find(out.target.roots().begin(), out.target.roots().end(), image);
    if (it == out.target.roots().end()) {
      throw InternalInconsistency("no Veronese image for root " + root.to_string());
    }
    out.point_map.push_back(static_cast<std::size_t>(it - out.target.roots().begin()));
  }
  return out;
}

namespace {

/// The localization sum split as residual * shared, where `shared` collects
/// the linear factors common to every fixed-point class.
struct LocalizationParts {
  Polynomial residual;
  LinearFormProduct shared;
};

LocalizationParts localization_parts(int n, int r, LocalizationRoute route) {
  check_rank(n, r);
  const Variable h = Variable::hyperplane();
  const auto map = VeroneseCorrespondence::build(n);
  const auto source_points = fixed_points(map.source);

  std::vector<LinearFormProduct> classes;
  for (std::size_t j = 0; j < source_points.size(); ++j) {
    classes.push_back(fundamental_class_factors(map.target, map.point_map[j], h));
  }

  LinearFormProduct shared;
  if (route == LocalizationRoute::kCommonFactor) {
    shared = classes.front();
    for (const auto& c : classes) shared = shared.gcd(c);
  }

  std::vector<StructuredFraction> summands;
  for (std::size_t j = 0; j < source_points.size(); ++j) {
    const FixedPoint& p = source_points[j];
    LinearFormProduct denominator;
    for (const auto& w : p.tangent_weights) denominator.multiply(w);
    Polynomial numerator = classes[j].quotient(shared).expand() *
                           p.hyperplane_restriction.pow(static_cast<unsigned>(r));
    summands.emplace_back(std::move(numerator), denominator);
  }
  StructuredFraction total = sum_fractions(summands);
  if (!total.is_polynomial()) {
    throw InternalInconsistency("localization sum did not clear denominators: " +
                                total.to_string());
  }
  return {total.numerator(), shared};
}

}  // namespace

Polynomial veronese_pushforward_roots(int n, int r, LocalizationRoute route) {
  auto parts = localization_parts(n, r, route);
  return parts.residual * parts.shared.expand();
}

Polynomial veronese_pushforward(int n, int r, LocalizationRoute route) {
  auto parts = localization_parts(n, r, route);
  Polynomial shared = parts.shared.expand();
  // Both parts are symmetric here; convert them separately since the
  // rewriting is multiplicative. Otherwise convert the full product.
  if (is_symmetric(parts.residual, n) && is_symmetric(shared, n)) {
    return symmetric_to_chern(parts.residual, n) * symmetric_to_chern(shared, n);
  }
  Polynomial in_roots = parts.residual * shared;
  if (!is_symmetric(in_roots, n)) {
    throw InternalInconsistency("localization sum is not symmetric for n=" + std::to_string(n));
  }
  return symmetric_to_chern(in_roots, n);
}

Polynomial wedge2_chern_poly(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return total_chern_poly_in_chern(build_roots(n, {BaseModule::kWedge2Dual, 0}),
                                   Variable::hyperplane());
}

Polynomial closed_form_pushforward(int n, int r) {
  check_rank(n, r);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(n - 1 - r));
  return (Polynomial(Variable::hyperplane()).pow(static_cast<unsigned>(r)) * wedge2_chern_poly(n))
      .scale(scale);
}

}  // namespace chowring
