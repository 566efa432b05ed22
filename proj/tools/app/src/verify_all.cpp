#include "chowring/app/verify_all.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "chowring/app/properties.hpp"
#include "chowring/localize.hpp"
#include "chowring/pipeline.hpp"
#include "chowring/serialize.hpp"

namespace chowring::app {

using nlohmann::json;

namespace {

Polynomial c(int i) { return Polynomial(Variable::chern(i)); }
Polynomial h() { return Polynomial(Variable::hyperplane()); }

json summary(const VerificationRecord& r) {
  return {{"name", r.name},
          {"degree_bound", r.degree_bound},
          {"passed", r.passed},
          {"mismatched_degrees", r.comparison.mismatched_degrees()}};
}

json polynomial_check(const std::string& label, const Polynomial& got, const Polynomial& want) {
  return {{"case", label}, {"computed", got.to_string()}, {"expected", want.to_string()},
          {"equal", got == want}};
}

bool all_equal(const json& cases, const char* key = "equal") {
  return std::all_of(cases.begin(), cases.end(), [&](const json& j) { return j.at(key).get<bool>(); });
}

/// H^3 - 2c1 H^2 + (c1^2 + c2) H + (c3 - c1 c2)
Polynomial r_hat() {
  return h().pow(3) - (c(1) * h().pow(2)).scale(2) + (c(1) * c(1) + c(2)) * h() + c(3) - c(1) * c(2);
}

CheckOutcome m01_literal() {
  const RingPresentation p = m01();
  json records = json::array();
  for (const auto& r : p.verification) records.push_back(summary(r));
  json simplified = json::array();
  for (const auto& g : p.simplified) simplified.push_back(g.to_string());
  return {p.verified(), m01_default_bound(), {{"verification", records}, {"simplified", simplified}}};
}

CheckOutcome n3_pushforwards() {
  const Polynomial want[] = {r_hat().scale(4), (h() * r_hat()).scale(2), h().pow(2) * r_hat()};
  json cases = json::array();
  for (int r = 0; r < 3; ++r) {
    cases.push_back(polynomial_check("r=" + std::to_string(r), veronese_pushforward(3, r), want[r]));
  }
  return {all_equal(cases), std::nullopt, {{"cases", cases}}};
}

CheckOutcome sym2_factorization() {
  const RepRoots sym2 = build_roots(3, {BaseModule::kSym2Dual, 0});
  const Polynomial got = symmetric_to_chern(total_chern_poly(sym2, Variable::hyperplane()), 3);
  const Polynomial p = h().pow(3) - (c(1) * h().pow(2)).scale(2) + (c(2) * h()).scale(4) - c(3).scale(8);
  const json cases = json::array({polynomial_check("n=3", got, p * r_hat())});
  return {all_equal(cases), std::nullopt, {{"cases", cases}}};
}

CheckOutcome localization_vs_closed_form() {
  json cases = json::array();
  for (int n = 2; n <= 6; ++n) {
    for (int r = 0; r < n; ++r) {
      const bool eq = veronese_pushforward(n, r) == closed_form_pushforward(n, r);
      cases.push_back({{"n", n}, {"r", r}, {"equal", eq}});
    }
  }
  return {all_equal(cases), std::nullopt, {{"cases", cases}}};
}

CheckOutcome reduced_quadrics_suite() {
  json cases = json::array();
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k <= 3; ++k) {
      const RingPresentation p = reduced_quadrics(n, k);
      json records = json::array();
      for (const auto& r : p.verification) records.push_back(summary(r));
      const bool single_checked = std::any_of(p.verification.begin(), p.verification.end(),
                                              [](const VerificationRecord& r) {
                                                return r.name == "single_generator";
                                              });
      const bool case_ok = p.verified() && (k % 2 == 1 || single_checked);
      ok = ok && case_ok;
      cases.push_back({{"n", n}, {"k", k}, {"passed", case_ok}, {"verification", records}});
    }
  }
  const bool cross = equal_up_to(reduced_quadrics(3, 1).relations, m01().relations, 12);
  ok = ok && cross;
  return {ok, std::nullopt,
          {{"cases", cases}, {"n3_k1_matches_m01", {{"degree_bound", 12}, {"equal", cross}}}}};
}

CheckOutcome orthogonal_suite() {
  bool ok = true;
  json series = json::array();
  for (int n = 2; n <= 5; ++n) {
    std::vector<Variable> ambient = chern_variables(n);
    ambient.push_back(Variable::hyperplane());
    const bool eq = equal_up_to(GradedIdeal(ambient, chern_series_divide(n)),
                                GradedIdeal(ambient, alpha_family(n).alphas), 2 * n);
    ok = ok && eq;
    series.push_back({{"n", n}, {"degree_bound", 2 * n}, {"equal", eq}});
  }
  json specializations = json::array();
  for (int n = 2; n <= 8; ++n) {
    bool literal = true;
    std::vector<Polynomial> at_zero;
    std::vector<Polynomial> odd;
    const auto alphas = alpha_family(n).alphas;
    for (int i = 1; i <= n; ++i) {
      const Polynomial a0 = alphas[static_cast<std::size_t>(i - 1)].substitute(Variable::hyperplane(), 0);
      literal = literal && a0 == (i % 2 == 1 ? -c(i).scale(2) : Polynomial());
      at_zero.push_back(a0);
      if (i % 2 == 1) odd.push_back(c(i).scale(2));
    }
    const bool eq = equal_up_to(GradedIdeal(chern_variables(n), at_zero),
                                GradedIdeal(chern_variables(n), odd), 2 * n);
    ok = ok && literal && eq;
    specializations.push_back({{"n", n}, {"literal", literal}, {"degree_bound", 2 * n}, {"equal", eq}});
  }
  const RingPresentation p41 = orthogonal(4, 1, {10});
  const GradedIdeal candidate(chern_variables(4), {c(1).scale(2), c(1) * c(1), c(3).scale(2), c(1) * c(3)});
  const bool eq41 = equal_up_to(GradedIdeal(chern_variables(4), p41.simplified), candidate, 10) &&
                    equal_up_to(p41.relations, candidate, 10);
  ok = ok && eq41;
  json simplified = json::array();
  for (const auto& g : p41.simplified) simplified.push_back(g.to_string());
  return {ok, std::nullopt,
          {{"beta_alpha_agreement", series},
           {"k0_specializations", specializations},
           {"n4_k1", {{"degree_bound", 10}, {"simplified", simplified}, {"equal", eq41}}}}};
}

CheckOutcome n3_elimination() {
  const auto alphas = alpha_family(3).alphas;
  const bool literal = alphas[1] == h() * alphas[0];
  bool ok = literal;
  json cases = json::array();
  for (int k = 0; k <= 5; ++k) {
    const Polynomial kc1 = c(1).scale(k);
    const Polynomial a1 = alphas[0].substitute(Variable::hyperplane(), kc1);
    const Polynomial a2 = alphas[1].substitute(Variable::hyperplane(), kc1);
    const bool in = contains(GradedIdeal(chern_variables(3), {a1}), a2);
    ok = ok && in;
    cases.push_back({{"k", k}, {"alpha1", a1.to_string()}, {"alpha2", a2.to_string()}, {"contained", in}});
  }
  return {ok, std::nullopt, {{"alpha2_equals_H_alpha1", literal}, {"containment", cases}}};
}

CheckOutcome n4_k3_candidate() {
  constexpr int kBound = 10;
  std::vector<Polynomial> computed;
  for (const auto& a : alpha_family(4).alphas) {
    computed.push_back(a.substitute(Variable::hyperplane(), c(1).scale(3)));
  }
  const GradedIdeal lhs(chern_variables(4), computed);
  const GradedIdeal candidate(chern_variables(4),
                           {c(1).scale(10), (c(1) * c(1)).scale(5),
                            c(1).pow(3) + (c(1) * c(2)).scale(6) - c(3).scale(2),
                            c(1) * c(1) * c(2) - c(1) * c(3)});
  const IdealComparison cmp = compare_up_to(lhs, candidate, kBound);
  std::vector<Polynomial> both = computed;
  both.insert(both.end(), candidate.generators().begin(), candidate.generators().end());
  const GradedIdeal sum(chern_variables(4), both);
  const bool computed_in_candidate = equal_up_to(sum, candidate, kBound);
  const bool candidate_in_computed = equal_up_to(sum, lhs, kBound);
  json gens = json::array();
  for (const auto& g : computed) gens.push_back(g.to_string());
  json candidate_text = json::array();
  for (const auto& g : candidate.generators()) candidate_text.push_back(g.to_string());
  return {cmp.equal(), kBound,
          {{"computed_generators", gens},
           {"candidate_generators", candidate_text},
           {"equal", cmp.equal()},
           {"computed_in_candidate", computed_in_candidate},
           {"candidate_in_computed", candidate_in_computed},
           {"mismatched_degrees", cmp.mismatched_degrees()},
           {"report", comparison_to_json(cmp)}}};
}

CheckOutcome property(PropertyOutcome (*suite)(std::uint64_t, int)) {
  const PropertyOutcome o = suite(kDefaultPropertySeed, kDefaultPropertyCases);
  json detail = {{"suite", o.name}, {"cases", o.cases}, {"failures", o.failures},
                 {"seed", kDefaultPropertySeed}};
  if (!o.first_failure.empty()) detail["first_failure"] = o.first_failure;
  return {o.passed() && o.cases >= kDefaultPropertyCases, std::nullopt, detail};
}

}  // namespace

bool VerifyAllReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.ok(); });
}

std::vector<CheckDefinition> acceptance_checks() {
  std::vector<CheckDefinition> out{
      {"c1_m01_literal_ideal", 1, false, m01_literal},
      {"c2_n3_pushforwards", 2, false, n3_pushforwards},
      {"c3_sym2_factorization", 3, false, sym2_factorization},
      {"c4_localization_vs_closed_form", 4, false, localization_vs_closed_form},
      {"c5_reduced_quadrics", 5, false, reduced_quadrics_suite},
      {"c6_orthogonal", 6, false, orthogonal_suite},
      {"c7_n3_elimination", 7, false, n3_elimination},
      {"c8_n4_k3_candidate_ideal", 8, true, n4_k3_candidate},
      {"c9_fixed_point_restriction", 9, false, [] { return property(fixed_point_restriction); }},
      {"c9_hnf_invariance", 9, false, [] { return property(hnf_invariance); }},
      {"c9_pr_membership", 9, false, [] { return property(pr_membership); }},
      {"c9_ring_axioms", 9, false, [] { return property(ring_axioms); }},
      {"c9_symchern_homomorphism", 9, false, [] { return property(symchern_homomorphism); }},
      {"c9_symchern_round_trip", 9, false, [] { return property(symchern_round_trip); }},
  };
  std::sort(out.begin(), out.end(), [](const CheckDefinition& a, const CheckDefinition& b) { return a.name < b.name; });
  return out;
}

double criterion_time_limit(int criterion) {
  switch (criterion) {
    case 1: return 5;
    case 2:
    case 3:
    case 7: return 1;
    case 4:
    case 6: return 60;
    case 5:
    case 9: return 120;
    default: return 60;
  }
}

CheckResult run_check(const CheckDefinition& def) {
  CheckResult r{def.name, def.criterion, def.informational, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.outcome = def.run();
  } catch (const std::exception& e) {
    r.outcome = {false, std::nullopt, {{"error", e.what()}}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerifyAllReport verify_all() {
  VerifyAllReport report;
  for (const auto& def : acceptance_checks()) report.checks.push_back(run_check(def));
  return report;
}

json report_to_json(const VerifyAllReport& report, bool include_timings) {
  json checks = json::array();
  for (const auto& r : report.checks) {
    json c = {{"name", r.name},
              {"criterion", r.criterion},
              {"status", r.informational ? "informational" : (r.outcome.passed ? "pass" : "fail")},
              {"passed", r.outcome.passed},
              {"informational", r.informational},
              {"degree_bound", r.outcome.degree_bound ? json(*r.outcome.degree_bound) : json(nullptr)},
              {"detail", r.outcome.detail}};
    if (include_timings) c["seconds"] = r.seconds;
    checks.push_back(std::move(c));
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "verify_all"},
          {"passed", report.passed()},
          {"checks", checks}};
}

std::string report_to_text(const VerifyAllReport& report, bool include_timings) {
  std::ostringstream out;
  for (const auto& r : report.checks) {
    const char* status = r.informational ? (r.outcome.passed ? "INFO(equal)" : "INFO(differs)")
                                         : (r.outcome.passed ? "PASS" : "FAIL");
    out << status << ' ' << r.name;
    if (r.outcome.degree_bound) out << " D=" << *r.outcome.degree_bound;
    if (include_timings) out << " " << r.seconds << "s";
    out << '\n';
  }
  out << (report.passed() ? "all checks passed\n" : "some checks failed\n");
  return out.str();
}

namespace {

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_') out += "\\_";
    else out += ch;
  }
  return out;
}

}  // namespace

std::string report_to_latex(const VerifyAllReport& report) {
  std::string out;
  out += "\\documentclass{article}\n";
  out += "\\begin{document}\n";
  out += "\\begin{tabular}{lll}\n";
  out += "check & criterion & status \\\\\n\\hline\n";
  for (const auto& r : report.checks) {
    const char* status = r.informational ? (r.outcome.passed ? "informational (equal)" : "informational (differs)")
                                         : (r.outcome.passed ? "pass" : "fail");
    out += "\\texttt{" + latex_escape(r.name) + "} & " + std::to_string(r.criterion) + " & " + status +
           " \\\\\n";
  }
  out += "\\end{tabular}\n";
  out += "\\end{document}\n";
  return out;
}

}  // namespace chowring::app
