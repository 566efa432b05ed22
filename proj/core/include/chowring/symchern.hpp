#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chowring/polynomial.hpp"

namespace chowring {

// Roots are taken for the dual standard representation: l_i = -t_i, and
// c_i = c_i(E) = (-1)^i e_i(l_1, ..., l_n).

enum class BaseModule {
  kStandard,  // E
  kDual,  // E*
  kSym2Dual,  // Sym2(E*)
  kWedge2Dual,  // Wedge2(E*)
};

/// det^twist (x) base
struct ModuleDescriptor {
  BaseModule base = BaseModule::kDual;
  int det_twist = 0;

  /// Grammar: `E`, `E*`, `Sym2(E*)`, `Wedge2(E*)`, optionally prefixed by
  /// `det^k*` (k an integer, `det*` meaning k = 1). Throws UnsupportedModule.
  static ModuleDescriptor parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;
};

/// Torus character decomposition of a GL_n-module: a multiset of linear
/// forms in l_1..l_n, stored in a fixed enumeration order.
class RepRoots {
 public:
  RepRoots(int rank, ModuleDescriptor module, std::vector<Polynomial> roots);

  int rank() const { return rank_; }
  const ModuleDescriptor& module() const { return module_; }
  const std::vector<Polynomial>& roots() const { return roots_; }
  std::size_t dimension() const { return roots_.size(); }

 private:
  int rank_;
  ModuleDescriptor module_;
  std::vector<Polynomial> roots_;
};

RepRoots build_roots(int n, const ModuleDescriptor& module);

/// Root polynomial l_i.
Polynomial root_variable(int i);
/// e_k(l_1, ..., l_n).
Polynomial elementary_symmetric(int n, int k);
/// The first Chern class -(l_1 + ... + l_n) written in the roots.
Polynomial c1_in_roots(int n);

/// Invariance under the adjacent transpositions l_i <-> l_{i+1}, i < n.
/// Variables other than l_1..l_n are treated as constants.
bool is_symmetric(const Polynomial& p, int n);

/// Rewrites a polynomial symmetric in l_1..l_n (other variables are carried
/// along as coefficients) in terms of c_1..c_n. Throws NotSymmetric.
Polynomial symmetric_to_chern(const Polynomial& p, int n);

/// Substitutes c_i -> (-1)^i e_i(l) for i <= n.
Polynomial chern_to_roots(const Polynomial& p, int n);

/// prod over roots m of (var + m), in the root variables.
Polynomial total_chern_poly(const RepRoots& module, Variable var);

/// One factor per orbit of the permutation action on the roots: the product
/// of (var + m) over the orbit, rewritten in c_1..c_n.
std::vector<Polynomial> total_chern_orbit_factors(const RepRoots& module, Variable var);

/// Same class as symmetric_to_chern(total_chern_poly(module, var)), computed
/// as the product of the orbit factors.
Polynomial total_chern_poly_in_chern(const RepRoots& module, Variable var);

/// c_top(det^k (x) Wedge2(E*)) in c_1..c_n.
Polynomial e_top(int n, int k);

}  // namespace chowring
