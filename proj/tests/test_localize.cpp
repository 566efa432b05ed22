#include <doctest.h>

#include <set>

#include "chowring/errors.hpp"
#include "chowring/fraction.hpp"
#include "chowring/localize.hpp"
#include "chowring/symchern.hpp"

using namespace chowring;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

const Polynomial kRHat = P("H^3 - 2*c1*H^2 + c1^2*H + c2*H + c3 - c1*c2");

Integer two_to(int e) { return Integer(1) << e; }

}  // namespace

TEST_CASE("fixed points of P(E*)") {
  const auto pts3 = fixed_points(build_roots(3, {BaseModule::kDual, 0}));
  REQUIRE(pts3.size() == 3);
  CHECK(pts3[0].hyperplane_restriction == P("-l1"));
  CHECK(pts3[0].tangent_weights == std::vector{P("l2 - l1"), P("l3 - l1")});
  const auto pts2 = fixed_points(build_roots(2, {BaseModule::kDual, 0}));
  CHECK(pts2[1].hyperplane_restriction == P("-l2"));
  CHECK(pts2[1].tangent_weights == std::vector{P("l1 - l2")});
  CHECK(fixed_points(build_roots(3, {BaseModule::kSym2Dual, 0})).size() == 6);
}

TEST_CASE("fixed points reject repeated roots") {
  CHECK_THROWS_AS(fixed_points(RepRoots(2, {BaseModule::kDual, 0}, {P("l1"), P("l1")})), RepeatedRoots);
}

TEST_CASE("tangent weights are nonzero and number dim - 1") {
  for (int n = 2; n <= 5; ++n) {
    const RepRoots sym2 = build_roots(n, {BaseModule::kSym2Dual, 0});
    for (const auto& pt : fixed_points(sym2)) {
      CHECK(pt.tangent_weights.size() == sym2.dimension() - 1);
      for (const auto& w : pt.tangent_weights) CHECK_FALSE(w.is_zero());
    }
  }
}

TEST_CASE("fundamental classes") {
  const Variable h = Variable::hyperplane();
  const RepRoots sym2 = build_roots(3, {BaseModule::kSym2Dual, 0});
  std::size_t j = 0;
  while (sym2.roots()[j] != P("2*l1")) ++j;
  CHECK(fundamental_class(sym2, j, h) ==
        P("(H + 2*l2)*(H + 2*l3)*(H + l1 + l2)*(H + l1 + l3)*(H + l2 + l3)"));
  CHECK(fundamental_class(build_roots(2, {BaseModule::kDual, 0}), 0, Variable::tautological()) == P("K + l2"));
  CHECK(fundamental_class_factors(sym2, j, h).expand() == fundamental_class(sym2, j, h));
}

TEST_CASE("fundamental classes restrict to tangent weights") {
  const Variable h = Variable::hyperplane();
  for (const ModuleDescriptor& desc : {ModuleDescriptor{BaseModule::kSym2Dual, 0},
                                       ModuleDescriptor{BaseModule::kDual, 0},
                                       ModuleDescriptor{BaseModule::kWedge2Dual, 1}}) {
    const RepRoots module = build_roots(4, desc);
    const auto pts = fixed_points(module);
    for (const auto& pt : pts) {
      Polynomial w(1);
      for (const auto& t : pt.tangent_weights) w *= t;
      CHECK(fundamental_class(module, pt.index, h).substitute(h, pt.hyperplane_restriction) == w);
    }
  }
}

TEST_CASE("the Veronese map sends l_j to 2 l_j") {
  for (int n = 2; n <= 5; ++n) {
    const auto v = VeroneseCorrespondence::build(n);
    std::set<std::size_t> image(v.point_map.begin(), v.point_map.end());
    CHECK(image.size() == v.point_map.size());
    for (std::size_t j = 0; j < v.point_map.size(); ++j) {
      CHECK(v.target.roots()[v.point_map[j]] == v.source.roots()[j].scale(2));
    }
  }
}

TEST_CASE("pushforwards for n = 3") {
  CHECK(veronese_pushforward(3, 0) == kRHat.scale(4));
  CHECK(veronese_pushforward(3, 1) == (P("H") * kRHat).scale(2));
  CHECK(veronese_pushforward(3, 2) == P("H^2") * kRHat);
  CHECK(closed_form_pushforward(3, 1) == (P("H") * kRHat).scale(2));
  CHECK(closed_form_pushforward(2, 0) == P("2*H - 2*c1"));
  CHECK(veronese_pushforward(2, 1) == P("H*(H - c1)"));
  CHECK_THROWS(veronese_pushforward(3, 3));
  CHECK_THROWS(closed_form_pushforward(1, 0));
}

TEST_CASE("hand-rolled localization sum for n = 3") {
  // sum_j (-l_j)^r [Q_j] / prod_{k != j} (l_k - l_j), done with the fraction API directly.
  const auto v = VeroneseCorrespondence::build(3);
  const Variable h = Variable::hyperplane();
  for (int r = 0; r < 3; ++r) {
    std::vector<StructuredFraction> terms;
    for (std::size_t j = 0; j < 3; ++j) {
      LinearFormProduct d;
      for (std::size_t k = 0; k < 3; ++k) {
        if (k != j) d.multiply(v.source.roots()[k] - v.source.roots()[j]);
      }
      terms.emplace_back((-v.source.roots()[j]).pow(static_cast<unsigned>(r)) *
                             fundamental_class(v.target, v.point_map[j], h),
                         d);
    }
    const Polynomial sum = sum_fractions(terms).as_polynomial();
    CHECK(symmetric_to_chern(sum, 3) == veronese_pushforward(3, r));
  }
}

TEST_CASE("localization equals the interpolation closed form") {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 0; r < n; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      const Polynomial loc = veronese_pushforward(n, r);
      CHECK(loc == closed_form_pushforward(n, r));
      CHECK(loc.homogeneous_degree() == n * (n + 1) / 2 - 1 - (n - 1 - r));
    }
    CHECK(closed_form_pushforward(n, n - 1).content() == 1);
    CHECK(closed_form_pushforward(n, 0).content() == two_to(n - 1));
  }
}

TEST_CASE("expanded and common-factor localization routes agree") {
  for (int n = 2; n <= 4; ++n) {
    for (int r = 0; r < n; ++r) {
      CHECK(veronese_pushforward(n, r, LocalizationRoute::kExpanded) ==
            veronese_pushforward(n, r, LocalizationRoute::kCommonFactor));
      CHECK(veronese_pushforward_roots(n, r, LocalizationRoute::kExpanded) ==
            veronese_pushforward_roots(n, r, LocalizationRoute::kCommonFactor));
    }
  }
}

TEST_CASE("R(H) against frozen symmetrization values") {
  CHECK(wedge2_chern_poly(2) == P("H - c1"));
  CHECK(wedge2_chern_poly(3) == kRHat);
  CHECK(wedge2_chern_poly(4) ==
        P("H^6 - 3*H^5*c1 + 3*H^4*c1^2 + 2*H^4*c2 - H^3*c1^3 - 4*H^3*c1*c2 + 2*H^2*c1^2*c2 + "
          "H^2*c1*c3 + H^2*c2^2 - 4*H^2*c4 - H*c1^2*c3 - H*c1*c2^2 + 4*H*c1*c4 - c1^2*c4 + "
          "c1*c2*c3 - c3^2"));
}
