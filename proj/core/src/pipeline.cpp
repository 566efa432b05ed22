#include "chowring/pipeline.hpp"

#include <algorithm>

namespace chowring {

namespace {

constexpr const char* kRouteLocalization = "localization";
constexpr const char* kRouteClosedForm = "closed_form";

Integer power_of_two(int e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

bool has_variable(const RingPresentation& p, Variable v) {
  return std::binary_search(p.variables().begin(), p.variables().end(), v);
}

RingPresentation with_relations(RingPresentation p, std::vector<Variable> ambient,
                                std::vector<Polynomial> generators) {
  p.relations = GradedIdeal(std::move(ambient), std::move(generators));
  return p;
}

void verify(RingPresentation& p, std::string name, GradedIdeal expected, int bound,
            bool informational = false) {
  VerificationRecord rec;
  rec.name = std::move(name);
  rec.degree_bound = bound;
  rec.informational = informational;
  rec.comparison = compare_up_to(p.relations, expected, bound);
  rec.passed = rec.comparison.equal();
  rec.expected = std::move(expected);
  p.verification.push_back(std::move(rec));
}

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
}

void check_k(int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
}

}  // namespace

bool RingPresentation::verified() const {
  return std::all_of(verification.begin(), verification.end(),
                     [](const VerificationRecord& r) { return r.passed || r.informational; });
}

namespace {

std::string failure_message(const RingPresentation& p) {
  std::string msg = "verification failed:";
  for (const auto& r : p.verification) {
    if (r.passed || r.informational) continue;
    msg += " " + r.name + " (degrees";
    for (int d : r.comparison.mismatched_degrees()) msg += " " + std::to_string(d);
    msg += ")";
  }
  return msg;
}

}  // namespace

VerificationFailure::VerificationFailure(RingPresentation presentation)
    : ChowError(failure_message(presentation)), presentation_(std::move(presentation)) {}

void require_verified(const RingPresentation& presentation) {
  if (!presentation.verified()) throw VerificationFailure(presentation);
}

std::vector<Variable> chern_variables(int n) {
  std::vector<Variable> out;
  for (int i = 1; i <= n; ++i) out.push_back(Variable::chern(i));
  return out;
}

// ---------------------------------------------------------------------------
// Steps

RingPresentation projective_bundle(const RepRoots& module, Variable var) {
  std::vector<Polynomial> factors = total_chern_orbit_factors(module, var);
  Polynomial relation(1);
  nlohmann::json factor_text = nlohmann::json::array();
  for (const auto& f : factors) {
    relation = relation * f;
    factor_text.push_back(f.to_string());
  }
  std::vector<Variable> ambient = chern_variables(module.rank());
  ambient.push_back(var);
  RingPresentation p;
  p = with_relations(std::move(p), std::move(ambient), {relation});
  p.provenance.push_back({"projective_bundle", "projective bundle formula",
                          {{"n", module.rank()},
                           {"module", module.module().to_string()},
                           {"variable", var.name()},
                           {"orbit_factors", factor_text}}});
  return p;
}

RingPresentation excise_veronese(RingPresentation presentation, int n, PushforwardRoute route) {
  check_n(n);
  if (!has_variable(presentation, Variable::hyperplane())) {
    throw std::invalid_argument("excise_veronese needs the hyperplane class H");
  }
  std::vector<Polynomial> gens = presentation.relations.generators();
  for (int r = 0; r < n; ++r) {
    gens.push_back(route == PushforwardRoute::kLocalization ? veronese_pushforward(n, r)
                                                            : closed_form_pushforward(n, r));
  }
  auto ambient = presentation.relations.ambient();
  RingPresentation p = with_relations(std::move(presentation), std::move(ambient), std::move(gens));
  const bool localized = route == PushforwardRoute::kLocalization;
  p.provenance.push_back(
      {"excise_veronese",
       localized ? "explicit localization at torus fixed points"
                 : "Lagrange interpolation of the localization sum",
       {{"n", n}, {"route", localized ? kRouteLocalization : kRouteClosedForm}}});
  return p;
}

RingPresentation torsor_quotient(RingPresentation presentation, int k) {
  const Variable h = Variable::hyperplane();
  if (!has_variable(presentation, h)) {
    throw std::invalid_argument("torsor_quotient needs the hyperplane class H");
  }
  const Polynomial value = Polynomial(Variable::chern(1)).scale(k);
  std::vector<Polynomial> gens;
  for (const auto& g : presentation.relations.generators()) {
    Polynomial s = g.substitute(h, value);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  std::vector<Variable> ambient;
  for (Variable v : presentation.relations.ambient()) {
    if (v != h) ambient.push_back(v);
  }
  RingPresentation p = with_relations(std::move(presentation), std::move(ambient), std::move(gens));
  p.provenance.push_back({"torsor_quotient", "G_m-torsor quotient: kernel generated by k*c1 - H",
                          {{"k", k}}});
  return p;
}

RingPresentation simplify_relations(RingPresentation presentation, int bound) {
  std::vector<Polynomial> simplified = simplify_generators(presentation.relations, bound);
  auto ambient = presentation.relations.ambient();
  RingPresentation p = with_relations(std::move(presentation), std::move(ambient), simplified);
  p.simplified = std::move(simplified);
  p.provenance.push_back({"simplify_generators", "per-degree Hermite normal form reduction",
                          {{"max_degree", bound}}});
  return p;
}

RingPresentation record_simplified(RingPresentation presentation, int bound) {
  presentation.simplified = simplify_generators(presentation.relations, bound);
  presentation.provenance.push_back({"record_simplified",
                                     "per-degree Hermite normal form reduction",
                                     {{"max_degree", bound}}});
  return presentation;
}

namespace {

RingPresentation orthogonal_bundle_relations(int n) {
  std::vector<Variable> ambient = chern_variables(n);
  ambient.push_back(Variable::hyperplane());
  RingPresentation p;
  p = with_relations(std::move(p), std::move(ambient), alpha_family(n).alphas);
  p.provenance.push_back({"orthogonal_relations",
                          "graded pieces of c(E* (x) O(1)) / c(E) in degrees 1..n",
                          {{"n", n}}});
  return p;
}

}  // namespace

RingPresentation replay(const std::vector<ProvenanceStep>& steps) {
  RingPresentation p;
  for (const auto& step : steps) {
    const auto& a = step.arguments;
    if (step.operation == "projective_bundle") {
      const int n = a.at("n").get<int>();
      p = projective_bundle(build_roots(n, ModuleDescriptor::parse(a.at("module").get<std::string>())),
                            Variable::parse(a.at("variable").get<std::string>()));
    } else if (step.operation == "excise_veronese") {
      const std::string route = a.at("route").get<std::string>();
      if (route != kRouteLocalization && route != kRouteClosedForm) {
        throw std::invalid_argument("unknown pushforward route '" + route + "'");
      }
      p = excise_veronese(std::move(p), a.at("n").get<int>(),
                          route == kRouteLocalization ? PushforwardRoute::kLocalization
                                                      : PushforwardRoute::kClosedForm);
    } else if (step.operation == "torsor_quotient") {
      p = torsor_quotient(std::move(p), a.at("k").get<int>());
    } else if (step.operation == "simplify_generators") {
      p = simplify_relations(std::move(p), a.at("max_degree").get<int>());
    } else if (step.operation == "record_simplified") {
      p = record_simplified(std::move(p), a.at("max_degree").get<int>());
    } else if (step.operation == "orthogonal_relations") {
      p = orthogonal_bundle_relations(a.at("n").get<int>());
    } else {
      throw std::invalid_argument("unknown pipeline step '" + step.operation + "'");
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Rational curves with at most one node

GradedIdeal m01_expected_ideal() {
  const Polynomial c1(Variable::chern(1));
  const Polynomial c3(Variable::chern(3));
  return GradedIdeal(chern_variables(3), {c3.scale(4), (c1 * c3).scale(2), c1 * c1 * c3});
}

int m01_default_bound() { return 12; }

RingPresentation m01(const PipelineOptions& options) {
  const int bound = options.max_degree.value_or(m01_default_bound());
  RingPresentation p = projective_bundle(build_roots(3, {BaseModule::kSym2Dual, 0}));
  p = excise_veronese(std::move(p), 3, PushforwardRoute::kLocalization);
  p = torsor_quotient(std::move(p), 1);
  p = simplify_relations(std::move(p), bound);
  verify(p, "literal_ideal", m01_expected_ideal(), bound);
  return p;
}

// ---------------------------------------------------------------------------
// Reduced quadrics

std::vector<Polynomial> reduced_quadrics_family(int n, int k) {
  check_n(n);
  check_k(k);
  const Polynomial e = e_top(n, k);
  const Polynomial kc1 = Polynomial(Variable::chern(1)).scale(k);
  std::vector<Polynomial> out;
  for (int r = 0; r < n; ++r) {
    out.push_back((kc1.pow(static_cast<unsigned>(r)) * e).scale(power_of_two(n - 1 - r)));
  }
  return out;
}

int reduced_quadrics_default_bound(int n) { return 2 * (n * (n - 1) / 2) + n; }

RingPresentation reduced_quadrics(int n, int k, const PipelineOptions& options) {
  check_n(n);
  check_k(k);
  const int bound = options.max_degree.value_or(reduced_quadrics_default_bound(n));
  RingPresentation p = projective_bundle(build_roots(n, {BaseModule::kSym2Dual, 0}));
  p = excise_veronese(std::move(p), n, PushforwardRoute::kClosedForm);
  p = torsor_quotient(std::move(p), k);
  p = record_simplified(std::move(p), bound);
  verify(p, "generator_family", GradedIdeal(chern_variables(n), reduced_quadrics_family(n, k)),
         bound);
  if (k % 2 == 0) {
    verify(p, "single_generator",
           GradedIdeal(chern_variables(n), {e_top(n, k).scale(power_of_two(n - 1))}), bound);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Orthogonal-type stacks

AlphaFamily alpha_family(int n) {
  check_n(n);
  const Polynomial h(Variable::hyperplane());
  auto c = [](int j) { return j == 0 ? Polynomial(1) : Polynomial(Variable::chern(j)); };
  AlphaFamily out{n, {}};
  for (int i = 1; i <= n; ++i) {
    Polynomial alpha;
    for (int j = 0; j < i; ++j) {
      Integer coeff = binomial(n - j, i - j);
      if (j % 2 == 1) coeff = -coeff;
      alpha += (c(j) * h.pow(static_cast<unsigned>(i - j))).scale(coeff);
    }
    if (i % 2 == 1) alpha -= c(i).scale(2);
    out.alphas.push_back(std::move(alpha));
  }
  return out;
}

std::vector<Polynomial> twisted_dual_chern_series(int n) {
  check_n(n);
  const Polynomial one_plus_h = Polynomial(1) + Polynomial(Variable::hyperplane());
  Polynomial total;
  for (int j = 0; j <= n; ++j) {
    Polynomial cj = j == 0 ? Polynomial(1) : Polynomial(Variable::chern(j));
    if (j % 2 == 1) cj = -cj;
    total += cj * one_plus_h.pow(static_cast<unsigned>(n - j));
  }
  std::vector<Polynomial> out;
  for (int i = 0; i <= n; ++i) out.push_back(total.homogeneous_component(i));
  return out;
}

std::vector<Polynomial> chern_series_divide(int n) {
  const std::vector<Polynomial> numer = twisted_dual_chern_series(n);
  auto denom = [](int i) { return i == 0 ? Polynomial(1) : Polynomial(Variable::chern(i)); };
  std::vector<Polynomial> beta{Polynomial(1)};
  for (int i = 1; i <= n; ++i) {
    Polynomial b = numer[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) b -= beta[static_cast<std::size_t>(j)] * denom(i - j);
    beta.push_back(std::move(b));
  }
  beta.erase(beta.begin());
  return beta;
}

int orthogonal_default_bound(int n) { return 2 * n + 2; }

RingPresentation orthogonal(int n, int k, const PipelineOptions& options) {
  check_n(n);
  check_k(k);
  const int bound = options.max_degree.value_or(orthogonal_default_bound(n));
  RingPresentation bundle = orthogonal_bundle_relations(n);

  std::vector<Variable> with_h = chern_variables(n);
  with_h.push_back(Variable::hyperplane());
  verify(bundle, "chern_series_agreement", GradedIdeal(with_h, chern_series_divide(n)), bound);

  RingPresentation p = torsor_quotient(std::move(bundle), k);
  p = record_simplified(std::move(p), bound);
  if (k == 0) {
    std::vector<Polynomial> odd;
    for (int i = 1; i <= n; i += 2) odd.push_back(Polynomial(Variable::chern(i)).scale(2));
    verify(p, "odd_chern_classes", GradedIdeal(chern_variables(n), odd), bound);
  }
  return p;
}

}  // namespace chowring
