#include <doctest.h>

#include "chowring/errors.hpp"
#include "chowring/pipeline.hpp"
#include "chowring/serialize.hpp"

using namespace chowring;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

const Polynomial kRHat = P("H^3 - 2*c1*H^2 + c1^2*H + c2*H + c3 - c1*c2");

std::vector<std::string> operations(const RingPresentation& p) {
  std::vector<std::string> out;
  for (const auto& s : p.provenance) out.push_back(s.operation);
  return out;
}

}  // namespace

TEST_CASE("projective bundles") {
  const auto e3 = projective_bundle(build_roots(3, {BaseModule::kDual, 0}), Variable::tautological());
  CHECK(e3.relations.generators() == std::vector{P("K^3 - c1*K^2 + c2*K - c3")});
  const auto e2 = projective_bundle(build_roots(2, {BaseModule::kDual, 0}), Variable::tautological());
  CHECK(e2.relations.generators() == std::vector{P("K^2 - c1*K + c2")});
  const auto sym = projective_bundle(build_roots(3, {BaseModule::kSym2Dual, 0}));
  CHECK(sym.relations.generators() == std::vector{P("(H^3 - 2*c1*H^2 + 4*c2*H - 8*c3)") * kRHat});
  CHECK(sym.provenance.at(0).arguments.at("orbit_factors").size() == 2);
}

TEST_CASE("excision appends the pushforward classes") {
  auto p = excise_veronese(projective_bundle(build_roots(3, {BaseModule::kSym2Dual, 0})), 3);
  const auto& g = p.relations.generators();
  REQUIRE(g.size() == 4);
  CHECK(g[1] == kRHat.scale(4));
  CHECK(g[2] == (P("H") * kRHat).scale(2));
  CHECK(g[3] == P("H^2") * kRHat);
  auto q = excise_veronese(projective_bundle(build_roots(2, {BaseModule::kSym2Dual, 0})), 2,
                           PushforwardRoute::kClosedForm);
  CHECK(q.relations.generators()[1] == P("2*H - 2*c1"));
  CHECK(q.relations.generators()[2] == P("H^2 - c1*H"));
  auto twice = excise_veronese(p, 3);
  for (int d = 0; d <= 8; ++d) CHECK(graded_piece(twice.relations, d).hnf == graded_piece(p.relations, d).hnf);
  CHECK_THROWS(excise_veronese(projective_bundle(build_roots(2, {BaseModule::kDual, 0}), Variable::tautological()), 2));
}

TEST_CASE("torsor quotient substitutes and drops H") {
  auto p = excise_veronese(projective_bundle(build_roots(3, {BaseModule::kSym2Dual, 0})), 3);
  auto q = torsor_quotient(p, 1);
  CHECK(q.variables() == chern_variables(3));
  const auto& g = q.relations.generators();
  REQUIRE(g.size() == 4);
  CHECK(g[1] == P("4*c3"));
  CHECK(g[2] == P("2*c1*c3"));
  CHECK(g[3] == P("c1^2*c3"));
  auto zero = torsor_quotient(p, 0);
  CHECK(zero.relations.generators() == std::vector{P("-8*c3*(c3 - c1*c2)"), P("4*(c3 - c1*c2)")});
}

TEST_CASE("m01 pipeline") {
  const RingPresentation p = m01();
  CHECK(p.verified());
  CHECK(p.simplified == std::vector{P("4*c3"), P("2*c1*c3"), P("c1^2*c3")});
  CHECK(operations(p) == std::vector<std::string>{"projective_bundle", "excise_veronese",
                                                  "torsor_quotient", "simplify_generators"});
  REQUIRE(p.verification.size() == 1);
  CHECK(p.verification[0].degree_bound == 12);
  const auto& d3 = p.verification[0].comparison.degrees.at(3);
  CHECK(d3.lhs.row_polynomials() == std::vector{P("4*c3")});
  CHECK(d3.rhs.row_polynomials() == std::vector{P("4*c3")});
  CHECK_NOTHROW(require_verified(p));
}

TEST_CASE("reduced quadrics") {
  const auto q30 = reduced_quadrics(3, 0);
  CHECK(q30.verified());
  CHECK(equal_up_to(q30.relations, GradedIdeal(chern_variables(3), {P("4*(c3 - c1*c2)")}), 9));
  CHECK(q30.simplified == std::vector{P("4*(c3 - c1*c2)")});
  const auto q20 = reduced_quadrics(2, 0);
  CHECK(q20.relations.generators() == std::vector{P("-4*c1*c2"), P("-2*c1")});
  CHECK(q20.simplified == std::vector{P("2*c1")});
  CHECK(equal_up_to(reduced_quadrics(3, 1).relations, m01().relations, 12));
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= 3; ++k) {
      const auto q = reduced_quadrics(n, k);
      CHECK(q.verified());
      CHECK(q.verification.size() == (k % 2 == 0 ? 2u : 1u));
    }
  }
}

TEST_CASE("residual projective-bundle relation is redundant after the quotient") {
  for (int n = 2; n <= 5; ++n) {
    const Polynomial pr = total_chern_poly_in_chern(build_roots(n, {BaseModule::kSym2Dual, 0}),
                                                    Variable::hyperplane());
    for (int k = 0; k <= 3; ++k) {
      CHECK(contains(GradedIdeal(chern_variables(n), reduced_quadrics_family(n, k)),
                     pr.substitute(Variable::hyperplane(), Polynomial(Variable::chern(1)).scale(k))));
    }
  }
}

TEST_CASE("alpha family") {
  CHECK(alpha_family(4).alphas[0] == P("4*H - 2*c1"));
  for (int n = 2; n <= 8; ++n) {
    const auto a = alpha_family(n).alphas;
    REQUIRE(a.size() == static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const Polynomial at0 = a[static_cast<std::size_t>(i - 1)].substitute(Variable::hyperplane(), 0);
      CHECK(at0 == (i % 2 == 1 ? Polynomial(Variable::chern(i)).scale(-2) : Polynomial()));
      CHECK(a[static_cast<std::size_t>(i - 1)].homogeneous_degree() == i);
    }
  }
  CHECK(alpha_family(3).alphas[1] == P("3*H^2 - 2*c1*H"));
}

TEST_CASE("series division") {
  for (int n = 2; n <= 6; ++n) {
    const auto beta = chern_series_divide(n);
    const auto p = twisted_dual_chern_series(n);
    CHECK(beta[0] == alpha_family(n).alphas[0]);
    CHECK(beta[0] == p[1] - P("c1"));
    // (1 + beta_1 + ... + beta_n)(1 + c_1 + ... + c_n) agrees with P through degree n.
    Polynomial series(1), chern(1), total;
    for (const auto& b : beta) series += b;
    for (int i = 1; i <= n; ++i) chern += Polynomial(Variable::chern(i));
    for (const auto& pi : p) total += pi;
    const Polynomial prod = series * chern;
    for (int d = 0; d <= n; ++d) CHECK(prod.homogeneous_component(d) == total.homogeneous_component(d));
  }
}

TEST_CASE("orthogonal presentations") {
  const auto o41 = orthogonal(4, 1);
  CHECK(o41.verified());
  CHECK(equal_up_to(GradedIdeal(chern_variables(4), o41.simplified),
                    GradedIdeal(chern_variables(4), {P("2*c1"), P("c1^2"), P("2*c3"), P("c1*c3")}), 10));
  const auto o43 = orthogonal(4, 3);
  CHECK(o43.relations.generators() ==
        std::vector{P("10*c1"), P("45*c1^2"), P("81*c1^3 + 6*c1*c2 - 2*c3"),
                    P("54*c1^4 + 9*c1^2*c2 - 3*c1*c3")});
  for (int n = 2; n <= 6; ++n) {
    const auto o = orthogonal(n, 0);
    CHECK(o.verified());
    CHECK(o.verification.back().name == "odd_chern_classes");
  }
}

TEST_CASE("replaying a provenance log reproduces the relations") {
  std::vector<RingPresentation> all{m01(), reduced_quadrics(3, 2), reduced_quadrics(4, 1), orthogonal(4, 3),
                                    orthogonal(3, 0)};
  for (const auto& p : all) {
    const RingPresentation again = replay(p.provenance);
    CHECK(presentation_to_json(again).at("relations") == presentation_to_json(p).at("relations"));
    CHECK(again.simplified == p.simplified);
    const RingPresentation from_json = replay(provenance_from_json(provenance_to_json(p.provenance)));
    CHECK(from_json.relations.generators() == p.relations.generators());
  }
  CHECK_THROWS(replay({{"no_such_step", "", nlohmann::json::object()}}));
}

TEST_CASE("verification failures carry the report") {
  RingPresentation p = m01();
  p.verification.at(0).passed = false;
  try {
    require_verified(p);
    FAIL("expected VerificationFailure");
  } catch (const VerificationFailure& e) {
    CHECK(e.presentation().verification.size() == 1);
    CHECK(std::string(e.what()).find("literal_ideal") != std::string::npos);
  }
}

TEST_CASE("pipelines reject bad parameters") {
  CHECK_THROWS(reduced_quadrics(1, 0));
  CHECK_THROWS(reduced_quadrics(3, -1));
  CHECK_THROWS(orthogonal(1, 1));
  CHECK_THROWS(alpha_family(1));
  CHECK_THROWS(m01({4}));
}
