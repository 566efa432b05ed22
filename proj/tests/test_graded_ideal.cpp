#include <doctest.h>

#include <functional>
#include <set>

#include "chowring/app/random.hpp"
#include "chowring/errors.hpp"
#include "chowring/graded_ideal.hpp"
#include "chowring/localize.hpp"
#include "chowring/pipeline.hpp"
#include "chowring/symchern.hpp"

using namespace chowring;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

std::vector<Variable> c123() { return chern_variables(3); }

GradedIdeal m01_ideal() { return GradedIdeal(c123(), {P("4*c3"), P("2*c1*c3"), P("c1^2*c3")}); }

/// Number of monomials of weighted degree d in variables of the given weights.
int count_monomials(const std::vector<int>& weights, int d) {
  std::function<int(std::size_t, int)> go = [&](std::size_t i, int rem) -> int {
    if (rem == 0) return 1;
    if (i == weights.size()) return 0;
    int total = 0;
    for (int e = 0; e * weights[i] <= rem; ++e) total += go(i + 1, rem - e * weights[i]);
    return total;
  };
  return go(0, d);
}

}  // namespace

TEST_CASE("graded ideals reject inhomogeneous generators and foreign variables") {
  CHECK_THROWS_AS(GradedIdeal(c123(), {P("c1 + c2")}), NotHomogeneous);
  CHECK_THROWS_AS(GradedIdeal(c123(), {P("H")}), std::invalid_argument);
  CHECK(GradedIdeal(c123(), {P("0"), P("c1")}).generators().size() == 1);
}

TEST_CASE("monomial bases match a counting oracle") {
  for (int d = 0; d <= 14; ++d) {
    CHECK(monomials_of_degree(chern_variables(4), d).size() ==
          static_cast<std::size_t>(count_monomials({1, 2, 3, 4}, d)));
    std::vector<Variable> with_h = chern_variables(3);
    with_h.push_back(Variable::hyperplane());
    CHECK(monomials_of_degree(with_h, d).size() == static_cast<std::size_t>(count_monomials({1, 2, 3, 1}, d)));
  }
  const auto basis = monomials_of_degree(c123(), 5);
  std::vector<std::string> text;
  for (const auto& m : basis) text.push_back(m.to_string());
  CHECK(text == std::vector<std::string>{"c1^5", "c1^3*c2", "c1*c2^2", "c1^2*c3", "c2*c3"});
}

TEST_CASE("graded pieces of the three-generator ideal") {
  const auto d3 = graded_piece(m01_ideal(), 3);
  CHECK(d3.row_polynomials() == std::vector{P("4*c3")});
  const auto d5 = graded_piece(m01_ideal(), 5);
  CHECK(d5.row_polynomials() == std::vector{P("c1^2*c3"), P("4*c2*c3")});
  CHECK(graded_piece(GradedIdeal(c123(), {}), 4).hnf.rank() == 0);
  CHECK(graded_piece(m01_ideal(), 2).hnf.rank() == 0);
}

TEST_CASE("contains") {
  CHECK(contains(m01_ideal(), P("8*c3")));
  CHECK_FALSE(contains(m01_ideal(), P("2*c3")));
  CHECK(contains(m01_ideal(), P("3*c1^2*c3 + 4*c2*c3")));
  CHECK_THROWS_AS(contains(m01_ideal(), P("c3 + c1")), NotHomogeneous);
  const Variable h = Variable::hyperplane();
  std::vector<Variable> ambient = c123();
  ambient.push_back(h);
  std::vector<Polynomial> push;
  for (int r = 0; r < 3; ++r) push.push_back(veronese_pushforward(3, r));
  CHECK(contains(GradedIdeal(ambient, push), total_chern_poly_in_chern(build_roots(3, {BaseModule::kSym2Dual, 0}), h)));
}

TEST_CASE("equal_up_to") {
  CHECK_FALSE(equal_up_to(GradedIdeal(c123(), {P("2*c3")}), GradedIdeal(c123(), {P("4*c3")}), 3));
  CHECK(equal_up_to(GradedIdeal(c123(), {P("2*c3")}), GradedIdeal(c123(), {P("4*c3"), P("6*c3")}), 6));
  const auto cmp = compare_up_to(GradedIdeal(c123(), {P("2*c3")}), GradedIdeal(c123(), {P("4*c3")}), 4);
  CHECK(cmp.mismatched_degrees() == std::vector{3, 4});
  CHECK_THROWS(equal_up_to(GradedIdeal(c123(), {}), GradedIdeal(chern_variables(2), {}), 2));

  const Polynomial kc1 = P("c1");
  std::vector<Polynomial> alphas;
  for (const auto& a : alpha_family(4).alphas) alphas.push_back(a.substitute(Variable::hyperplane(), kc1));
  CHECK(equal_up_to(GradedIdeal(chern_variables(4), alphas),
                    GradedIdeal(chern_variables(4), {P("2*c1"), P("c1^2"), P("2*c3"), P("c1*c3")}), 10));
}

TEST_CASE("simplify_generators") {
  const auto s = simplify_generators(
      GradedIdeal(chern_variables(3), {P("3*c1 - 2*c1"), P("3*c1^2 - 2*c1^2")}), 4);
  CHECK(s == std::vector{P("c1")});
  CHECK(simplify_generators(GradedIdeal(c123(), {P("4*c3"), P("2*c1*c3"), P("c1^2*c3"), P("8*c3")}), 8) ==
        std::vector{P("4*c3"), P("2*c1*c3"), P("c1^2*c3")});
  CHECK_THROWS(simplify_generators(m01_ideal(), 4));
}

TEST_CASE("simplification preserves the ideal on random inputs") {
  app::RandomSource gen(41);
  for (int i = 0; i < 60; ++i) {
    const int n = gen.uniform(2, 4);
    const auto vars = chern_variables(n);
    std::vector<Polynomial> gens;
    for (int g = 0, count = gen.uniform(1, 4); g < count; ++g) {
      gens.push_back(gen.homogeneous(vars, gen.uniform(1, 6), gen.uniform(1, 3)));
    }
    const GradedIdeal ideal(vars, gens);
    const int bound = std::max(ideal.max_generator_degree(), gen.uniform(1, 8));
    const auto simplified = simplify_generators(ideal, bound);
    CHECK(equal_up_to(ideal, GradedIdeal(vars, simplified), bound));
  }
}

TEST_CASE("contains agrees with brute-force integer combinations") {
  // Degree-1 generators in Z[c1, H]; the degree-2 piece is spanned by c1*g and H*g.
  // Every combination with multipliers in [-B, B] is a certificate of membership.
  app::RandomSource gen(43);
  const std::vector<Variable> vars{Variable::chern(1), Variable::hyperplane()};
  constexpr int kBox = 2;
  int certified = 0;
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> gens{gen.homogeneous(vars, 1, 2, 6), gen.homogeneous(vars, 1, 2, 6)};
    const GradedIdeal ideal(vars, gens);
    std::vector<Polynomial> spanning;
    for (const auto& g : ideal.generators()) {
      spanning.push_back(P("c1") * g);
      spanning.push_back(P("H") * g);
    }
    std::set<std::string> reachable;
    std::vector<int> coeffs(spanning.size(), -kBox);
    for (;;) {
      Polynomial combo;
      for (std::size_t s = 0; s < spanning.size(); ++s) combo += spanning[s].scale(coeffs[s]);
      reachable.insert(combo.to_string());
      std::size_t s = 0;
      while (s < coeffs.size() && coeffs[s] == kBox) coeffs[s++] = -kBox;
      if (s == coeffs.size()) break;
      ++coeffs[s];
    }
    for (const auto& text : reachable) CHECK(contains(ideal, Polynomial::parse(text)));
    for (int t = 0; t < 30; ++t) {
      const Polynomial target = gen.homogeneous(vars, 2, 3, 4);
      if (reachable.count(target.to_string()) > 0) {
        ++certified;
        CHECK(contains(ideal, target));
      }
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("HNF basics") {
  HermiteForm hnf = HermiteForm::from_rows(2, {{4, 6}, {2, 2}});
  CHECK(hnf.rows() == std::vector<IntVector>{{2, 0}, {0, 2}});
  const auto rows = hnf.rows();
  CHECK(HermiteForm::from_rows(2, rows) == hnf);
  CHECK(hnf.contains(IntVector{6, 8}));
  CHECK_FALSE(hnf.contains(IntVector{1, 0}));
  CHECK(hnf.rank() == 2);
}

TEST_CASE("HNF is invariant under row order and idempotent") {
  app::RandomSource gen(47);
  for (int i = 0; i < 100; ++i) {
    const std::size_t cols = static_cast<std::size_t>(gen.uniform(1, 6));
    std::vector<IntVector> rows(static_cast<std::size_t>(gen.uniform(1, 6)), IntVector(cols));
    for (auto& r : rows) for (auto& x : r) x = gen.uniform(-30, 30);
    const HermiteForm a = HermiteForm::from_rows(cols, rows);
    gen.shuffle(rows);
    CHECK(HermiteForm::from_rows(cols, rows) == a);
    CHECK(HermiteForm::from_rows(cols, a.rows()) == a);
    for (const auto& r : a.rows()) CHECK(a.reduce(r) == IntVector(cols));
  }
}

TEST_CASE("alpha2 is H times alpha1 for n = 3") {
  const auto a = alpha_family(3).alphas;
  CHECK(a[1] == P("H") * a[0]);
  for (int k = 0; k <= 5; ++k) {
    const Polynomial kc1 = Polynomial(Variable::chern(1)).scale(k);
    CHECK(contains(GradedIdeal(c123(), {a[0].substitute(Variable::hyperplane(), kc1)}),
                   a[1].substitute(Variable::hyperplane(), kc1)));
  }
}

TEST_CASE("alpha ideal for n = 4, k = 3 sits strictly inside the candidate simplification") {
  // Frozen from an independent computer-algebra comparison of the degree 1..6 lattices.
  std::vector<Polynomial> alphas;
  for (const auto& a : alpha_family(4).alphas) alphas.push_back(a.substitute(Variable::hyperplane(), P("3*c1")));
  const GradedIdeal computed(chern_variables(4), alphas);
  const GradedIdeal candidate(chern_variables(4),
                              {P("10*c1"), P("5*c1^2"), P("c1^3 + 6*c1*c2 - 2*c3"), P("c1^2*c2 - c1*c3")});
  CHECK(compare_up_to(computed, candidate, 10).mismatched_degrees() == std::vector{4, 5, 6, 7, 8, 9, 10});
  for (const auto& g : computed.generators()) CHECK(contains(candidate, g));
  CHECK_FALSE(contains(computed, P("c1^2*c2 - c1*c3")));
}
