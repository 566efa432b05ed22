#include "chowring/app/properties.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>

#include "chowring/app/random.hpp"
#include "chowring/graded_ideal.hpp"
#include "chowring/localize.hpp"
#include "chowring/pipeline.hpp"
#include "chowring/symchern.hpp"

namespace chowring::app {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { out_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (out_.failures == 0) out_.first_failure = what;
    ++out_.failures;
  }
  void next_case() { ++out_.cases; }
  PropertyOutcome result() const { return out_; }

 private:
  PropertyOutcome out_;
};

std::vector<Variable> roots(int n) {
  std::vector<Variable> out;
  for (int i = 1; i <= n; ++i) out.push_back(Variable::root(i));
  return out;
}

Polynomial symmetrize(const Polynomial& p, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  Polynomial sum;
  do {
    std::map<Variable, Variable> mapping;
    for (int i = 1; i <= n; ++i) {
      mapping.emplace(Variable::root(i), Variable::root(perm[static_cast<std::size_t>(i - 1)]));
    }
    sum += p.rename(mapping);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

std::string show(const Polynomial& p) { return p.to_string(); }

}  // namespace

PropertyOutcome ring_axioms(std::uint64_t seed, int cases) {
  RandomSource rng(seed);
  Recorder rec("ring_axioms");
  const std::vector<Variable> vars{Variable::chern(1), Variable::chern(2), Variable::chern(3),
                                   Variable::hyperplane(), Variable::root(1), Variable::root(2)};
  for (int i = 0; i < cases; ++i) {
    rec.next_case();
    const Polynomial a = rng.polynomial(vars, 8, rng.uniform(0, 6));
    const Polynomial b = rng.polynomial(vars, 8, rng.uniform(0, 6));
    const Polynomial c = rng.polynomial(vars, 8, rng.uniform(0, 6));
    const std::string ctx = " for a=" + show(a) + ", b=" + show(b) + ", c=" + show(c);
    rec.check((a * b) * c == a * (b * c), "associativity" + ctx);
    rec.check(a * b == b * a, "commutativity of *" + ctx);
    rec.check(a + b == b + a, "commutativity of +" + ctx);
    rec.check(a * (b + c) == a * b + a * c, "distributivity" + ctx);
    rec.check(a - a == Polynomial(), "additive inverse" + ctx);
    if (!b.is_zero()) rec.check(exact_divide(a * b, b) == a, "exact division" + ctx);
  }
  return rec.result();
}

PropertyOutcome symchern_round_trip(std::uint64_t seed, int cases) {
  RandomSource rng(seed);
  Recorder rec("symchern_round_trip");
  for (int i = 0; i < cases; ++i) {
    rec.next_case();
    const int n = rng.uniform(2, 5);
    const Polynomial q = rng.polynomial(chern_variables(n), 8, rng.uniform(1, 5));
    const Polynomial back = symmetric_to_chern(chern_to_roots(q, n), n);
    rec.check(back == q, "n=" + std::to_string(n) + ": " + show(q) + " came back as " + show(back));
  }
  return rec.result();
}

PropertyOutcome symchern_homomorphism(std::uint64_t seed, int cases) {
  RandomSource rng(seed);
  Recorder rec("symchern_homomorphism");
  for (int i = 0; i < cases; ++i) {
    rec.next_case();
    const int n = rng.uniform(2, 4);
    std::vector<Variable> vars = roots(n);
    vars.push_back(Variable::hyperplane());
    const Polynomial p1 = symmetrize(rng.polynomial(vars, 4, rng.uniform(1, 3), 5), n);
    const Polynomial p2 = symmetrize(rng.polynomial(vars, 4, rng.uniform(1, 3), 5), n);
    const Polynomial f1 = symmetric_to_chern(p1, n);
    const Polynomial f2 = symmetric_to_chern(p2, n);
    const std::string ctx = " for n=" + std::to_string(n) + ", p1=" + show(p1) + ", p2=" + show(p2);
    rec.check(symmetric_to_chern(p1 + p2, n) == f1 + f2, "sum" + ctx);
    rec.check(symmetric_to_chern(p1 * p2, n) == f1 * f2, "product" + ctx);
  }
  return rec.result();
}

PropertyOutcome fixed_point_restriction(std::uint64_t seed, int cases) {
  RandomSource rng(seed);
  Recorder rec("fixed_point_restriction");
  const BaseModule bases[] = {BaseModule::kStandard, BaseModule::kDual, BaseModule::kSym2Dual,
                              BaseModule::kWedge2Dual};
  const Variable h = Variable::hyperplane();
  for (int i = 0; i < cases; ++i) {
    rec.next_case();
    const int n = rng.uniform(2, 4);
    const ModuleDescriptor desc{bases[rng.uniform(0, 3)], rng.uniform(0, 3)};
    const RepRoots module = build_roots(n, desc);
    const auto points = fixed_points(module);
    const std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(points.size()) - 1));
    const Polynomial cls = fundamental_class(module, j, h);
    const std::string ctx = " for " + desc.to_string() + ", n=" + std::to_string(n) +
                            ", point " + std::to_string(j);
    Polynomial weights(1);
    for (const auto& w : points[j].tangent_weights) weights *= w;
    rec.check(cls.substitute(h, points[j].hyperplane_restriction) == weights,
              "restriction at the point itself" + ctx);
    for (const auto& other : points) {
      if (other.index == j) continue;
      rec.check(cls.substitute(h, other.hyperplane_restriction).is_zero(),
                "nonzero restriction at point " + std::to_string(other.index) + ctx);
    }
  }
  return rec.result();
}

PropertyOutcome hnf_invariance(std::uint64_t seed, int cases) {
  RandomSource rng(seed);
  Recorder rec("hnf_invariance");
  const std::vector<Variable> ambient{Variable::chern(1), Variable::chern(2), Variable::chern(3),
                                      Variable::hyperplane()};
  for (int i = 0; i < cases; ++i) {
    rec.next_case();
    const auto columns = static_cast<std::size_t>(rng.uniform(1, 8));
    std::vector<IntVector> rows(static_cast<std::size_t>(rng.uniform(1, 8)), IntVector(columns));
    for (auto& row : rows) {
      for (auto& x : row) x = rng.uniform(-20, 20);
    }
    const HermiteForm hnf = HermiteForm::from_rows(columns, rows);
    const std::string ctx = " (case " + std::to_string(i) + ")";
    rec.check(HermiteForm::from_rows(columns, hnf.rows()) == hnf, "idempotence" + ctx);
    auto shuffled = rows;
    rng.shuffle(shuffled);
    rec.check(HermiteForm::from_rows(columns, shuffled) == hnf, "row order" + ctx);
    rec.check(std::all_of(rows.begin(), rows.end(), [&](const IntVector& r) { return hnf.contains(r); }),
              "input row not contained" + ctx);

    std::vector<Polynomial> gens;
    const int count = rng.uniform(1, 4);
    for (int g = 0; g < count; ++g) {
      gens.push_back(rng.homogeneous(ambient, rng.uniform(1, 4), rng.uniform(1, 3)));
    }
    const GradedIdeal ideal(ambient, gens);
    auto shuffled_gens = gens;
    rng.shuffle(shuffled_gens);
    const GradedIdeal permuted(ambient, shuffled_gens);
    const int d = rng.uniform(1, 6);
    rec.check(graded_piece(ideal, d).hnf == graded_piece(permuted, d).hnf, "generator order" + ctx);
    for (const auto& g : ideal.generators()) rec.check(contains(ideal, g), "generator membership" + ctx);
  }
  return rec.result();
}

namespace {

class MembershipOracle {
 public:
  explicit MembershipOracle(GradedIdeal ideal) : ideal_(std::move(ideal)) {}

  bool contains(const Polynomial& p) {
    if (p.is_zero()) return true;
    const int d = *p.homogeneous_degree();
    auto it = pieces_.find(d);
    if (it == pieces_.end()) it = pieces_.emplace(d, graded_piece(ideal_, d)).first;
    return it->second.hnf.contains(it->second.coordinates(p));
  }

 private:
  GradedIdeal ideal_;
  std::map<int, GradedPieceLattice> pieces_;
};

}  // namespace

PropertyOutcome pr_membership(std::uint64_t seed, int cases) {
  RandomSource rng(seed);
  Recorder rec("pr_membership");
  const Variable h = Variable::hyperplane();
  struct Data {
    Polynomial pr;
    std::vector<Polynomial> pushforwards;
    std::unique_ptr<MembershipOracle> with_h;
  };
  std::map<int, Data> data;
  std::map<std::pair<int, int>, MembershipOracle> quotients;
  for (int i = 0; i < cases; ++i) {
    rec.next_case();
    const int n = rng.uniform(2, 4);
    auto it = data.find(n);
    if (it == data.end()) {
      Data d;
      d.pr = total_chern_poly_in_chern(build_roots(n, {BaseModule::kSym2Dual, 0}), h);
      for (int r = 0; r < n; ++r) d.pushforwards.push_back(closed_form_pushforward(n, r));
      std::vector<Variable> ambient = chern_variables(n);
      ambient.push_back(h);
      d.with_h = std::make_unique<MembershipOracle>(GradedIdeal(ambient, d.pushforwards));
      it = data.emplace(n, std::move(d)).first;
    }
    Data& d = it->second;
    const std::string ctx = " for n=" + std::to_string(n) + " (case " + std::to_string(i) + ")";
    if (i % 2 == 0) {
      std::vector<Variable> vars = chern_variables(n);
      vars.push_back(h);
      const Polynomial m = rng.homogeneous(vars, rng.uniform(0, 2), rng.uniform(1, 3));
      rec.check(d.with_h->contains(m * d.pr), "multiple " + show(m) + " of P(H)R(H)" + ctx);
    } else {
      const int k = rng.uniform(0, 5);
      const Polynomial kc1 = Polynomial(Variable::chern(1)).scale(k);
      auto q = quotients.find({n, k});
      if (q == quotients.end()) {
        std::vector<Polynomial> gens;
        for (const auto& g : d.pushforwards) gens.push_back(g.substitute(h, kc1));
        q = quotients.emplace(std::pair{n, k}, MembershipOracle(GradedIdeal(chern_variables(n), gens)))
                .first;
      }
      const Polynomial m = rng.homogeneous(chern_variables(n), rng.uniform(0, 2), rng.uniform(1, 3));
      rec.check(q->second.contains(m * d.pr.substitute(h, kc1)),
                "multiple " + show(m) + " of P(kc1)R(kc1), k=" + std::to_string(k) + ctx);
    }
  }
  return rec.result();
}

}  // namespace chowring::app
