#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowring/errors.hpp"

namespace chowring {

using Integer = mpz_class;

/// Families of variables the library knows about. The family order is the
/// outer key of the variable order: c1 < c2 < ... < H < K < xi < l1 < ... < t1 < ...
enum class VarFamily : std::uint8_t {
  kChern = 0,  // c_i, weight i
  kHyperplane = 1,  // H
  kTautological = 2,  // K
  kXi = 3,  // xi
  kRoot = 4,  // l_i
  kTorus = 5,  // t_i
};

class Variable {
 public:
  static Variable chern(int i);
  static Variable root(int i);
  static Variable torus(int i);
  static Variable hyperplane();
  static Variable tautological();
  static Variable xi();

  /// Accepts c<i>, l<i>, t<i>, H, K, xi.
  static Variable parse(std::string_view name);

  VarFamily family() const { return static_cast<VarFamily>(key_ >> 16); }
  int index() const { return static_cast<int>(key_ & 0xffffu); }
  int weight() const { return family() == VarFamily::kChern ? index() : 1; }
  std::string name() const;
  std::uint32_t key() const { return key_; }

  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  Variable(VarFamily family, int index);
  std::uint32_t key_ = 0;
};

/// A power product of variables in canonical sparse form: factors sorted by
/// variable, no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t exponent = 1);
  /// Repeated variables are merged, zero exponents removed.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(Variable v) const;
  /// Weighted degree.
  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;
  /// this / other; requires divisible_by(other).
  Monomial operator/(const Monomial& other) const;
  Monomial without(Variable v) const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  /// Graded lexicographic order: weighted degree first, then the exponent of
  /// the largest variable decides.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Exact multivariate polynomial over the integers. Immutable value with a
/// canonical term list (ascending monomial order, no zero coefficients).
class Polynomial {
 public:
  using Term = std::pair<Monomial, Integer>;

  Polynomial() = default;
  Polynomial(const Integer& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(static_cast<long>(constant)) {}  // NOLINT
  Polynomial(Variable v);  // NOLINT(google-explicit-constructor)
  Polynomial(Monomial m, Integer coefficient);

  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Caller guarantees `terms` is already canonical (sorted, merged, nonzero).
  static Polynomial from_canonical_terms(std::vector<Term> terms);

  /// Parses the canonical text form; also accepts non-canonical input such as
  /// `2*H*c1 - c1*H + 3` and parenthesized products like `(H + c1)^2`.
  static Polynomial parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Largest term in the monomial order; requires !is_zero().
  const Term& leading_term() const { return terms_.back(); }

  bool is_homogeneous() const;
  /// Weighted degree when homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;
  std::set<Variable> variables() const;
  Integer coefficient(const Monomial& m) const;
  /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
  Integer content() const;
  Polynomial homogeneous_component(int degree) const;
  /// Coefficients of the powers of `v`: exponent -> coefficient polynomial.
  std::map<std::uint32_t, Polynomial> coefficients_in(Variable v) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial scale(const Integer& factor) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial multiply_monomial(const Monomial& m, const Integer& c) const;

  /// Replaces every occurrence of `v` by `value`.
  Polynomial substitute(Variable v, const Polynomial& value) const;
  /// Applies a variable renaming; the map must be injective on variables().
  Polynomial rename(const std::map<Variable, Variable>& mapping) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
  /// Arbitrary but fixed total order, used to key containers.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

Polynomial substitute(const Polynomial& p, Variable v, const Polynomial& q);

/// p / q over the integers. Throws DivisionByZero or NotDivisible.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);
std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& q);

Integer binomial(int n, int k);

inline Polynomial pow(const Polynomial& p, unsigned e) { return p.pow(e); }

}  // namespace chowring
