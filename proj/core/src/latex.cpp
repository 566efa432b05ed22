#include "chowring/latex.hpp"

namespace chowring {

namespace {

std::string latex_variable(Variable v) {
  switch (v.family()) {
    case VarFamily::kChern: return "c_{" + std::to_string(v.index()) + "}";
    case VarFamily::kRoot: return "l_{" + std::to_string(v.index()) + "}";
    case VarFamily::kTorus: return "t_{" + std::to_string(v.index()) + "}";
    case VarFamily::kXi: return "\\xi";
    default: return v.name();
  }
}

std::string latex_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    out += latex_variable(v);
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

}  // namespace

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Highest term first, as in handwritten displays.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.is_one() || magnitude != 1) out += magnitude.get_str();
    out += latex_monomial(m);
    first = false;
  }
  return out;
}

std::string latex_quotient(const std::vector<Variable>& variables,
                           const std::vector<Polynomial>& relations) {
  std::string out = "\\mathbb{Z}[";
  for (std::size_t i = 0; i < variables.size(); ++i) {
    out += (i ? ", " : "") + latex_variable(variables[i]);
  }
  out += "]";
  if (relations.empty()) return out;
  out += "/\\left(";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    out += (i ? ", " : "") + latex_polynomial(relations[i]);
  }
  out += "\\right)";
  return out;
}

std::string latex_document(const RingPresentation& p) {
  const auto& rels = p.simplified.empty() ? p.relations.generators() : p.simplified;
  std::string out;
  out += "\\documentclass{article}\n";
  out += "\\usepackage{amsmath,amssymb}\n";
  out += "\\begin{document}\n";
  out += "\\begin{equation*}\n";
  out += latex_quotient(p.variables(), rels) + "\n";
  out += "\\end{equation*}\n";
  out += "\\end{document}\n";
  return out;
}

}  // namespace chowring
