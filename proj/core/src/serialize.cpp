#include "chowring/serialize.hpp"

#include <sstream>

namespace chowring {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (const auto& [v, e] : m.factors()) exps[v.name()] = e;
    out.push_back({{"coeff", c.get_str()}, {"exps", exps}});
  }
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  std::vector<Polynomial::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") ||
        !t["coeff"].is_string() || !t["exps"].is_object()) {
      throw ParseError("polynomial term must be {coeff: string, exps: object}");
    }
    Integer c;
    if (c.set_str(t["coeff"].get<std::string>(), 10) != 0) {
      throw ParseError("bad coefficient '" + t["coeff"].get<std::string>() + "'");
    }
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, e] : t["exps"].items()) {
      if (!e.is_number_unsigned()) throw ParseError("exponent of " + name + " must be >= 0");
      factors.emplace_back(Variable::parse(name), e.get<std::uint32_t>());
    }
    terms.emplace_back(Monomial::from_factors(std::move(factors)), std::move(c));
  }
  return Polynomial::from_terms(std::move(terms));
}

namespace {

json text_list(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

}  // namespace

json lattice_to_json(const GradedPieceLattice& lattice) {
  return text_list(lattice.row_polynomials());
}

json comparison_to_json(const IdealComparison& comparison) {
  json degrees = json::array();
  for (const auto& d : comparison.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"lhs_hnf", lattice_to_json(d.lhs)},
                       {"rhs_hnf", lattice_to_json(d.rhs)},
                       {"equal", d.equal}});
  }
  return {{"bound", comparison.bound}, {"equal", comparison.equal()}, {"degrees", degrees}};
}

json verification_to_json(const VerificationRecord& record) {
  return {{"name", record.name},
          {"degree_bound", record.degree_bound},
          {"passed", record.passed},
          {"informational", record.informational},
          {"expected", text_list(record.expected.generators())},
          {"mismatched_degrees", record.comparison.mismatched_degrees()},
          {"report", comparison_to_json(record.comparison)}};
}

json provenance_to_json(const std::vector<ProvenanceStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back(
        {{"operation", s.operation}, {"justification", s.justification}, {"arguments", s.arguments}});
  }
  return out;
}

std::vector<ProvenanceStep> provenance_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("provenance must be an array");
  std::vector<ProvenanceStep> out;
  for (const auto& s : j) {
    try {
      out.push_back({s.at("operation").get<std::string>(), s.at("justification").get<std::string>(),
                     s.at("arguments")});
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad provenance step: ") + e.what());
    }
  }
  return out;
}

json presentation_to_json(const RingPresentation& p) {
  json variables = json::array();
  for (Variable v : p.variables()) variables.push_back({{"name", v.name()}, {"weight", v.weight()}});
  json verification = json::array();
  for (const auto& r : p.verification) verification.push_back(verification_to_json(r));
  return {{"schema_version", kReportSchemaVersion},
          {"variables", variables},
          {"relations", text_list(p.relations.generators())},
          {"simplified", text_list(p.simplified)},
          {"provenance", provenance_to_json(p.provenance)},
          {"verification", verification},
          {"verified", p.verified()}};
}

std::string presentation_to_text(const RingPresentation& p) {
  std::ostringstream out;
  out << "ring: Z[";
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    out << (i ? ", " : "") << p.variables()[i].name();
  }
  out << "]\n";
  out << "relations:\n";
  for (const auto& g : p.relations.generators()) out << "  " << g.to_string() << '\n';
  if (!p.simplified.empty()) {
    out << "simplified:\n";
    for (const auto& g : p.simplified) out << "  " << g.to_string() << '\n';
  }
  out << "provenance:\n";
  for (const auto& s : p.provenance) {
    out << "  " << s.operation << " " << s.arguments.dump() << " -- " << s.justification << '\n';
  }
  if (!p.verification.empty()) {
    out << "verification:\n";
    for (const auto& r : p.verification) {
      out << "  " << (r.passed ? "PASS" : (r.informational ? "INFO" : "FAIL")) << ' ' << r.name
          << " (D = " << r.degree_bound << ")";
      if (!r.passed) {
        out << " mismatched degrees:";
        for (int d : r.comparison.mismatched_degrees()) out << ' ' << d;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace chowring
