#pragma once

#include <map>
#include <span>
#include <vector>

#include "chowring/polynomial.hpp"

namespace chowring {

/// A signed product of degree-one linear forms with multiplicities.
///
/// Each stored factor is normalized so that its leading coefficient is
/// positive; the sign lost by normalization is kept in `sign()`, so
/// `expand()` is always exactly the product that was built.
class LinearFormProduct {
 public:
  LinearFormProduct() = default;

  /// Multiplies in `form^multiplicity`. Throws std::invalid_argument unless
  /// `form` is nonzero and homogeneous of weighted degree 1.
  void multiply(const Polynomial& form, int multiplicity = 1);

  const std::map<Polynomial, int>& factors() const { return factors_; }
  int sign() const { return sign_; }
  bool empty() const { return factors_.empty(); }
  int degree() const;
  int multiplicity(const Polynomial& normalized_form) const;

  Polynomial expand() const;

  /// Factor-wise maximum of multiplicities; sign is +1.
  LinearFormProduct lcm(const LinearFormProduct& other) const;
  /// Factor-wise minimum of multiplicities; sign is +1.
  LinearFormProduct gcd(const LinearFormProduct& other) const;
  /// this / other as a factor multiset. Requires every factor of `other` to
  /// occur here with at least the same multiplicity.
  LinearFormProduct quotient(const LinearFormProduct& other) const;

  friend LinearFormProduct operator*(const LinearFormProduct& a, const LinearFormProduct& b);
  friend bool operator==(const LinearFormProduct&, const LinearFormProduct&) = default;

 private:
  std::map<Polynomial, int> factors_;
  int sign_ = 1;
};

/// numerator / denominator, where the denominator is a product of linear
/// forms with positive leading coefficients.
class StructuredFraction {
 public:
  StructuredFraction() = default;
  StructuredFraction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
  /// The sign of `denominator` is folded into the numerator.
  StructuredFraction(Polynomial numerator, const LinearFormProduct& denominator);

  const Polynomial& numerator() const { return numerator_; }
  const LinearFormProduct& denominator() const { return denominator_; }
  bool is_polynomial() const { return denominator_.empty(); }
  /// Throws InternalInconsistency if a denominator remains.
  const Polynomial& as_polynomial() const;

  /// Divides out every denominator factor that divides the numerator exactly.
  StructuredFraction cancelled() const;

  std::string to_string() const;

 private:
  Polynomial numerator_;
  LinearFormProduct denominator_;
};

/// Sum over the least common denominator, followed by cancellation.
/// The result does not depend on the order of `fractions`.
StructuredFraction sum_fractions(std::span<const StructuredFraction> fractions);

}  // namespace chowring
