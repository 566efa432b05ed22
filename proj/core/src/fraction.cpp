#include "chowring/fraction.hpp"

#include <algorithm>

namespace chowring {

void LinearFormProduct::multiply(const Polynomial& form, int multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  if (multiplicity == 0) return;
  if (form.is_zero() || form.homogeneous_degree() != 1) {
    throw std::invalid_argument("not a linear form: " + form.to_string());
  }
  if (form.leading_term().second < 0) {
    if (multiplicity % 2 == 1) sign_ = -sign_;
    factors_[-form] += multiplicity;
  } else {
    factors_[form] += multiplicity;
  }
}

int LinearFormProduct::degree() const {
  int d = 0;
  for (const auto& [f, m] : factors_) d += m;
  return d;
}

int LinearFormProduct::multiplicity(const Polynomial& normalized_form) const {
  auto it = factors_.find(normalized_form);
  return it == factors_.end() ? 0 : it->second;
}

Polynomial LinearFormProduct::expand() const {
  Polynomial out(sign_);
  for (const auto& [f, m] : factors_) out = out * f.pow(static_cast<unsigned>(m));
  return out;
}

LinearFormProduct LinearFormProduct::lcm(const LinearFormProduct& other) const {
  LinearFormProduct out;
  out.factors_ = factors_;
  for (const auto& [f, m] : other.factors_) {
    int& slot = out.factors_[f];
    slot = std::max(slot, m);
  }
  return out;
}

LinearFormProduct LinearFormProduct::gcd(const LinearFormProduct& other) const {
  LinearFormProduct out;
  for (const auto& [f, m] : factors_) {
    int k = std::min(m, other.multiplicity(f));
    if (k > 0) out.factors_.emplace(f, k);
  }
  return out;
}

LinearFormProduct LinearFormProduct::quotient(const LinearFormProduct& other) const {
  LinearFormProduct out;
  out.sign_ = sign_ * other.sign_;
  out.factors_ = factors_;
  for (const auto& [f, m] : other.factors_) {
    auto it = out.factors_.find(f);
    if (it == out.factors_.end() || it->second < m) {
      throw std::invalid_argument("linear form product quotient is not a product");
    }
    it->second -= m;
    if (it->second == 0) out.factors_.erase(it);
  }
  return out;
}

LinearFormProduct operator*(const LinearFormProduct& a, const LinearFormProduct& b) {
  LinearFormProduct out = a;
  out.sign_ *= b.sign_;
  for (const auto& [f, m] : b.factors_) out.factors_[f] += m;
  return out;
}

StructuredFraction::StructuredFraction(Polynomial numerator) : numerator_(std::move(numerator)) {}

StructuredFraction::StructuredFraction(Polynomial numerator, const LinearFormProduct& denominator)
    : numerator_(std::move(numerator)) {
  if (denominator.sign() < 0) numerator_ = -numerator_;
  for (const auto& [f, m] : denominator.factors()) denominator_.multiply(f, m);
}

const Polynomial& StructuredFraction::as_polynomial() const {
  if (!is_polynomial()) {
    throw InternalInconsistency("fraction still has a denominator: " + to_string());
  }
  return numerator_;
}

StructuredFraction StructuredFraction::cancelled() const {
  if (numerator_.is_zero()) return {};
  StructuredFraction out;
  out.numerator_ = numerator_;
  for (const auto& [f, m] : denominator_.factors()) {
    int remaining = m;
    while (remaining > 0) {
      auto q = try_exact_divide(out.numerator_, f);
      if (!q) break;
      out.numerator_ = *std::move(q);
      --remaining;
    }
    out.denominator_.multiply(f, remaining);
  }
  return out;
}

std::string StructuredFraction::to_string() const {
  if (is_polynomial()) return numerator_.to_string();
  std::string den;
  for (const auto& [f, m] : denominator_.factors()) {
    if (!den.empty()) den += '*';
    den += '(' + f.to_string() + ')';
    if (m > 1) den += '^' + std::to_string(m);
  }
  return '(' + numerator_.to_string() + ")/(" + den + ')';
}

StructuredFraction sum_fractions(std::span<const StructuredFraction> fractions) {
  LinearFormProduct common;
  for (const auto& f : fractions) common = common.lcm(f.denominator());
  Polynomial numerator;
  for (const auto& f : fractions) {
    if (f.numerator().is_zero()) continue;
    numerator += f.numerator() * common.quotient(f.denominator()).expand();
  }
  return StructuredFraction(std::move(numerator), common).cancelled();
}

}  // namespace chowring
