#include "chowring/symchern.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>

namespace chowring {

// ---------------------------------------------------------------------------
// Module descriptors

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

ModuleDescriptor ModuleDescriptor::parse(std::string_view text) {
  std::string_view rest = strip(text);
  ModuleDescriptor out;
  if (rest.starts_with("det")) {
    rest.remove_prefix(3);
    if (rest.starts_with("^")) {
      rest.remove_prefix(1);
      auto star = rest.find('*');
      if (star == std::string_view::npos) {
        throw UnsupportedModule("expected '*' after det^k in '" + std::string(text) + "'");
      }
      std::string_view digits = rest.substr(0, star);
      int k = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw UnsupportedModule("bad determinant twist in '" + std::string(text) + "'");
      }
      out.det_twist = k;
      rest = rest.substr(star + 1);
    } else if (rest.starts_with("*")) {
      out.det_twist = 1;
      rest.remove_prefix(1);
    } else {
      throw UnsupportedModule("unsupported module '" + std::string(text) + "'");
    }
  }
  rest = strip(rest);
  if (rest == "E") {
    out.base = BaseModule::kStandard;
  } else if (rest == "E*") {
    out.base = BaseModule::kDual;
  } else if (rest == "Sym2(E*)") {
    out.base = BaseModule::kSym2Dual;
  } else if (rest == "Wedge2(E*)") {
    out.base = BaseModule::kWedge2Dual;
  } else {
    throw UnsupportedModule("unsupported module '" + std::string(text) + "'");
  }
  return out;
}

std::string ModuleDescriptor::to_string() const {
  std::string base_name;
  switch (base) {
    case BaseModule::kStandard: base_name = "E"; break;
    case BaseModule::kDual: base_name = "E*"; break;
    case BaseModule::kSym2Dual: base_name = "Sym2(E*)"; break;
    case BaseModule::kWedge2Dual: base_name = "Wedge2(E*)"; break;
  }
  if (det_twist == 0) return base_name;
  return "det^" + std::to_string(det_twist) + "*" + base_name;
}

RepRoots::RepRoots(int rank, ModuleDescriptor module, std::vector<Polynomial> roots)
    : rank_(rank), module_(module), roots_(std::move(roots)) {}

Polynomial root_variable(int i) { return Polynomial(Variable::root(i)); }

Polynomial c1_in_roots(int n) {
  Polynomial sum;
  for (int i = 1; i <= n; ++i) sum -= root_variable(i);
  return sum;
}

RepRoots build_roots(int n, const ModuleDescriptor& module) {
  if (n < 2) throw std::invalid_argument("torus rank must be at least 2");
  std::vector<Polynomial> roots;
  switch (module.base) {
    case BaseModule::kStandard:
      for (int i = 1; i <= n; ++i) roots.push_back(-root_variable(i));
      break;
    case BaseModule::kDual:
      for (int i = 1; i <= n; ++i) roots.push_back(root_variable(i));
      break;
    case BaseModule::kSym2Dual:
      for (int i = 1; i <= n; ++i) roots.push_back(root_variable(i).scale(2));
      [[fallthrough]];
    case BaseModule::kWedge2Dual:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) roots.push_back(root_variable(i) + root_variable(j));
      }
      break;
  }
  if (module.det_twist != 0) {
    Polynomial shift = c1_in_roots(n).scale(module.det_twist);
    for (auto& r : roots) r += shift;
  }
  return RepRoots(n, module, std::move(roots));
}

Polynomial elementary_symmetric(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<Polynomial::Term> terms;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<Monomial::Factor> fs;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) fs.emplace_back(Variable::root(i + 1), 1);
    }
    terms.emplace_back(Monomial::from_factors(std::move(fs)), Integer(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Symmetric polynomials in dense exponent form

namespace {

using Exponents = std::vector<std::uint32_t>;
/// A symmetric polynomial in l_1..l_n stored by its coefficients on
/// nonincreasing exponent vectors (the monomial symmetric basis).
using SymmetricForm = std::map<Exponents, Integer>;

struct Split {
  std::map<Monomial, std::map<Exponents, Integer>> groups;
};

Split split_roots(const Polynomial& p, int n) {
  Split out;
  for (const auto& [m, c] : p.terms()) {
    Exponents e(static_cast<std::size_t>(n), 0);
    std::vector<Monomial::Factor> outer;
    for (const auto& [v, k] : m.factors()) {
      if (v.family() == VarFamily::kRoot) {
        if (v.index() > n) {
          throw std::invalid_argument("root variable " + v.name() + " exceeds rank " +
                                      std::to_string(n));
        }
        e[static_cast<std::size_t>(v.index() - 1)] = k;
      } else {
        outer.emplace_back(v, k);
      }
    }
    out.groups[Monomial::from_factors(std::move(outer))].emplace(std::move(e), c);
  }
  return out;
}

bool group_is_symmetric(const std::map<Exponents, Integer>& terms, int n) {
  for (const auto& [e, c] : terms) {
    for (int i = 0; i + 1 < n; ++i) {
      if (e[static_cast<std::size_t>(i)] == e[static_cast<std::size_t>(i) + 1]) continue;
      Exponents swapped = e;
      std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i) + 1]);
      auto it = terms.find(swapped);
      if (it == terms.end() || it->second != c) return false;
    }
  }
  return true;
}

bool is_dominant(const Exponents& e) {
  return std::is_sorted(e.begin(), e.end(), std::greater<>());
}

Exponents sorted_desc(Exponents e) {
  std::sort(e.begin(), e.end(), std::greater<>());
  return e;
}

/// Multiplies symmetric f by e_k in the monomial symmetric basis: the
/// coefficient of x^nu in e_k * f is the sum of f_{nu - eps} over 0/1 vectors
/// eps with k ones, and f_{alpha} = f_{sort(alpha)} by symmetry.
SymmetricForm times_elementary(const SymmetricForm& f, int n, int k) {
  std::vector<std::vector<bool>> choices;
  {
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      choices.push_back(pick);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::set<Exponents> targets;
  for (const auto& [lambda, c] : f) {
    for (const auto& eps : choices) {
      Exponents nu = lambda;
      for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += eps[i] ? 1 : 0;
      targets.insert(sorted_desc(std::move(nu)));
    }
  }
  SymmetricForm out;
  for (const auto& nu : targets) {
    Integer total = 0;
    for (const auto& eps : choices) {
      Exponents alpha = nu;
      bool ok = true;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (!eps[i]) continue;
        if (alpha[i] == 0) {
          ok = false;
          break;
        }
        --alpha[i];
      }
      if (!ok) continue;
      auto it = f.find(sorted_desc(std::move(alpha)));
      if (it != f.end()) total += it->second;
    }
    if (total != 0) out.emplace(nu, std::move(total));
  }
  return out;
}

/// Memoized products e_1^{d_1} ... e_n^{d_n} in the monomial symmetric basis.
class ElementaryProducts {
 public:
  explicit ElementaryProducts(int n) : n_(n) {}

  const SymmetricForm& get(const Exponents& d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    SymmetricForm value;
    auto last = std::find_if(d.rbegin(), d.rend(), [](std::uint32_t x) { return x > 0; });
    if (last == d.rend()) {
      value.emplace(Exponents(static_cast<std::size_t>(n_), 0), Integer(1));
    } else {
      const auto k = static_cast<std::size_t>(std::distance(last, d.rend()) - 1);
      Exponents smaller = d;
      --smaller[k];
      value = times_elementary(get(smaller), n_, static_cast<int>(k) + 1);
    }
    return cache_.emplace(d, std::move(value)).first->second;
  }

 private:
  int n_;
  std::map<Exponents, SymmetricForm> cache_;
};

/// Leading-term elimination. Returns the c-polynomial of a symmetric form.
Polynomial eliminate(SymmetricForm remaining, int n, ElementaryProducts& products) {
  std::vector<Polynomial::Term> result;
  while (!remaining.empty()) {
    auto top = std::prev(remaining.end());
    const Exponents lead = top->first;
    const Integer coeff = top->second;
    // d_k = a_k - a_{k+1}; the lead term of prod e_k^{d_k} is x^a.
    Exponents d(static_cast<std::size_t>(n), 0);
    std::uint32_t total = 0;
    std::vector<Monomial::Factor> chern;
    for (int k = 0; k < n; ++k) {
      const std::uint32_t next = (k + 1 < n) ? lead[static_cast<std::size_t>(k) + 1] : 0;
      d[static_cast<std::size_t>(k)] = lead[static_cast<std::size_t>(k)] - next;
      total += lead[static_cast<std::size_t>(k)];
      chern.emplace_back(Variable::chern(k + 1), d[static_cast<std::size_t>(k)]);
    }
    // e_k = (-1)^k c_k, and sum_k k*d_k = |a|.
    result.emplace_back(Monomial::from_factors(std::move(chern)),
                        (total % 2 == 0) ? coeff : Integer(-coeff));
    for (const auto& [e, c] : products.get(d)) {
      auto [it, inserted] = remaining.try_emplace(e, 0);
      it->second -= coeff * c;
      if (it->second == 0) remaining.erase(it);
    }
    if (!remaining.empty() && !(std::prev(remaining.end())->first < lead)) {
      throw InternalInconsistency("symmetric elimination failed to descend");
    }
  }
  return Polynomial::from_terms(std::move(result));
}

}  // namespace

bool is_symmetric(const Polynomial& p, int n) {
  for (const auto& [outer, terms] : split_roots(p, n).groups) {
    if (!group_is_symmetric(terms, n)) return false;
  }
  return true;
}

Polynomial symmetric_to_chern(const Polynomial& p, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  Split split = split_roots(p, n);
  ElementaryProducts products(n);
  Polynomial out;
  for (auto& [outer, terms] : split.groups) {
    if (!group_is_symmetric(terms, n)) {
      throw NotSymmetric("not symmetric in l1..l" + std::to_string(n) + ": " + p.to_string());
    }
    SymmetricForm form;
    for (auto& [e, c] : terms) {
      if (is_dominant(e)) form.emplace(e, c);
    }
    out += eliminate(std::move(form), n, products).multiply_monomial(outer, 1);
  }
  return out;
}

Polynomial chern_to_roots(const Polynomial& p, int n) {
  Polynomial out = p;
  for (int i = 1; i <= n; ++i) {
    Polynomial e = elementary_symmetric(n, i);
    out = out.substitute(Variable::chern(i), i % 2 == 0 ? e : -e);
  }
  return out;
}

Polynomial total_chern_poly(const RepRoots& module, Variable var) {
  if (var.family() == VarFamily::kRoot) {
    throw std::invalid_argument("Chern polynomial variable must not be a root variable");
  }
  Polynomial out(1);
  for (const auto& m : module.roots()) out = out * (Polynomial(var) + m);
  return out;
}

namespace {

Polynomial swap_roots(const Polynomial& p, int i) {
  return p.rename({{Variable::root(i), Variable::root(i + 1)},
                   {Variable::root(i + 1), Variable::root(i)}});
}

std::set<Polynomial> weyl_orbit(const Polynomial& root, int n) {
  std::set<Polynomial> orbit{root};
  std::vector<Polynomial> frontier{root};
  while (!frontier.empty()) {
    Polynomial cur = std::move(frontier.back());
    frontier.pop_back();
    for (int i = 1; i < n; ++i) {
      Polynomial next = swap_roots(cur, i);
      if (orbit.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return orbit;
}

}  // namespace

std::vector<Polynomial> total_chern_orbit_factors(const RepRoots& module, Variable var) {
  if (var.family() == VarFamily::kRoot) {
    throw std::invalid_argument("Chern polynomial variable must not be a root variable");
  }
  const int n = module.rank();
  std::multiset<Polynomial> remaining(module.roots().begin(), module.roots().end());
  std::vector<Polynomial> out;
  while (!remaining.empty()) {
    std::set<Polynomial> orbit = weyl_orbit(*remaining.begin(), n);
    Polynomial product(1);
    for (const auto& m : orbit) {
      auto it = remaining.find(m);
      if (it == remaining.end()) {
        throw InternalInconsistency("root multiset of " + module.module().to_string() +
                                    " is not Weyl invariant");
      }
      remaining.erase(it);
      product = product * (Polynomial(var) + m);
    }
    out.push_back(symmetric_to_chern(product, n));
  }
  return out;
}

Polynomial total_chern_poly_in_chern(const RepRoots& module, Variable var) {
  Polynomial out(1);
  for (const auto& f : total_chern_orbit_factors(module, var)) out = out * f;
  return out;
}

Polynomial e_top(int n, int k) {
  if (k < 0) throw std::invalid_argument("twist must be nonnegative");
  RepRoots roots = build_roots(n, ModuleDescriptor{BaseModule::kWedge2Dual, k});
  Polynomial product(1);
  for (const auto& m : roots.roots()) product = product * m;
  return symmetric_to_chern(product, n);
}

}  // namespace chowring
