#include "chowring/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <unordered_map>

namespace chowring {

// ---------------------------------------------------------------------------
// Variable

Variable::Variable(VarFamily family, int index)
    : key_((static_cast<std::uint32_t>(family) << 16) | static_cast<std::uint32_t>(index)) {
  if (index < 0 || index > 0xffff) {
    throw std::invalid_argument("variable index out of range");
  }
}

Variable Variable::chern(int i) {
  if (i < 1) throw std::invalid_argument("Chern class index must be >= 1");
  return {VarFamily::kChern, i};
}

Variable Variable::root(int i) {
  if (i < 1) throw std::invalid_argument("root index must be >= 1");
  return {VarFamily::kRoot, i};
}

Variable Variable::torus(int i) {
  if (i < 1) throw std::invalid_argument("torus index must be >= 1");
  return {VarFamily::kTorus, i};
}

Variable Variable::hyperplane() { return {VarFamily::kHyperplane, 0}; }
Variable Variable::tautological() { return {VarFamily::kTautological, 0}; }
Variable Variable::xi() { return {VarFamily::kXi, 0}; }

namespace {

std::optional<int> parse_index(std::string_view digits) {
  if (digits.empty() || digits.front() == '0') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

Variable Variable::parse(std::string_view name) {
  if (name == "H") return hyperplane();
  if (name == "K") return tautological();
  if (name == "xi") return xi();
  if (name.size() >= 2) {
    auto index = parse_index(name.substr(1));
    if (index && *index <= 0xffff) {
      switch (name.front()) {
        case 'c': return chern(*index);
        case 'l': return root(*index);
        case 't': return torus(*index);
        default: break;
      }
    }
  }
  throw ParseError("unknown variable '" + std::string(name) + "'");
}

std::string Variable::name() const {
  switch (family()) {
    case VarFamily::kChern: return "c" + std::to_string(index());
    case VarFamily::kHyperplane: return "H";
    case VarFamily::kTautological: return "K";
    case VarFamily::kXi: return "xi";
    case VarFamily::kRoot: return "l" + std::to_string(index());
    case VarFamily::kTorus: return "t" + std::to_string(index());
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Variable v, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = v.weight() * static_cast<int>(exponent);
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
    m.degree_ += v.weight() * static_cast<int>(e);
  }
  return m;
}

std::uint32_t Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Variable x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      out.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, other.factors_.end());
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
  auto a = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    while (a != factors_.end() && a->first < v) ++a;
    if (a == factors_.end() || a->first != v || a->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  auto b = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (b != other.factors_.end() && b->first == v) {
      sub = b->second;
      ++b;
    }
    if (sub > e) throw std::logic_error("monomial not divisible");
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  if (b != other.factors_.end()) throw std::logic_error("monomial not divisible");
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::without(Variable v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    out.factors_.push_back(f);
    out.degree_ += f.first.weight() * static_cast<int>(f.second);
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& [v, e] : factors_) {
    h ^= (static_cast<std::size_t>(v.key()) << 20) ^ e;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto ia = a.factors_.rbegin();
  auto ib = b.factors_.rbegin();
  while (ia != a.factors_.rend() && ib != b.factors_.rend()) {
    if (ia->first != ib->first) return ia->first <=> ib->first;
    if (ia->second != ib->second) return ia->second <=> ib->second;
    ++ia;
    ++ib;
  }
  if (ia != a.factors_.rend()) return std::strong_ordering::greater;
  if (ib != b.factors_.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace_back(Monomial(), constant);
}

Polynomial::Polynomial(long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(Variable v) { terms_.emplace_back(Monomial(v), Integer(1)); }

Polynomial::Polynomial(Monomial m, Integer coefficient) {
  if (coefficient != 0) terms_.emplace_back(std::move(m), std::move(coefficient));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::from_canonical_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().first.degree() == terms_.back().first.degree();
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().first.degree();
}

int Polynomial::max_degree() const {
  return terms_.empty() ? 0 : terms_.back().first.degree();
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial out;
  for (const auto& t : terms_) {
    if (t.first.degree() == degree) out.terms_.push_back(t);
  }
  return out;
}

std::map<std::uint32_t, Polynomial> Polynomial::coefficients_in(Variable v) const {
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const auto& [m, c] : terms_) {
    buckets[m.exponent(v)].emplace_back(m.without(v), c);
  }
  std::map<std::uint32_t, Polynomial> out;
  for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

namespace {

template <typename Combine>
Polynomial merge(const std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b,
                 Combine combine_b) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    auto cmp = ia->first <=> ib->first;
    if (cmp < 0) {
      out.push_back(*ia++);
    } else if (cmp > 0) {
      out.emplace_back(ib->first, combine_b(ib->second));
      ++ib;
    } else {
      Integer c = ia->second + combine_b(ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.end(); ++ia) out.push_back(*ia);
  for (; ib != b.end(); ++ib) out.emplace_back(ib->first, combine_b(ib->second));
  return Polynomial::from_canonical_terms(std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a.terms_, b.terms_, [](const Integer& c) { return c; });
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return a;
  return merge(a.terms_, b.terms_, [](const Integer& c) { return Integer(-c); });
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.multiply_monomial(a.terms_[0].first, a.terms_[0].second);
  if (b.size() == 1) return a.multiply_monomial(b.terms_[0].first, b.terms_[0].second);
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
  Integer prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      auto [it, inserted] = acc.try_emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.emplace_back(m, std::move(c));
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial Polynomial::scale(const Integer& factor) const {
  if (factor == 0) return {};
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second *= factor;
  return out;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m, const Integer& c) const {
  if (c == 0) return {};
  Polynomial out;
  out.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order.
  for (const auto& [tm, tc] : terms_) out.terms_.emplace_back(tm * m, Integer(tc * c));
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(Variable v, const Polynomial& value) const {
  auto parts = coefficients_in(v);
  Polynomial out;
  Polynomial power(1);
  std::uint32_t current = 0;
  for (const auto& [e, coeff] : parts) {
    while (current < e) {
      power = power * value;
      ++current;
    }
    out += coeff * power;
  }
  return out;
}

Polynomial Polynomial::rename(const std::map<Variable, Variable>& mapping) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> fs = m.factors();
    for (auto& f : fs) {
      auto it = mapping.find(f.first);
      if (it != mapping.end()) f.first = it->second;
    }
    out.emplace_back(Monomial::from_factors(std::move(fs)), c);
  }
  return from_terms(std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += m.to_string();
    } else {
      out += magnitude.get_str() + '*' + m.to_string();
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    int cc = cmp(a.terms_[i].second, b.terms_[i].second);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty input");
    Polynomial p = parse_sum();
    skip_space();
    if (!at_end()) fail(peek() == ')' ? "unbalanced ')'" : "expected '+' or '-'");
    return p;
  }

 private:
  // sum := [+|-] product {(+|-) product}
  Polynomial parse_sum() {
    skip_space();
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) negative = get() == '-';
    Polynomial total = parse_product();
    if (negative) total = -total;
    for (skip_space(); !at_end() && (peek() == '+' || peek() == '-'); skip_space()) {
      const char op = get();
      Polynomial next = parse_product();
      total = op == '-' ? total - next : total + next;
    }
    return total;
  }

  // product := power {* power}
  Polynomial parse_product() {
    Polynomial out = parse_power();
    for (skip_space(); !at_end() && peek() == '*'; skip_space()) {
      ++pos_;
      out = out * parse_power();
    }
    return out;
  }

  // power := atom [^ integer]; atom := integer | variable | ( sum )
  Polynomial parse_power() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    Polynomial base;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      base = Polynomial(parse_integer());
    } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      base = Polynomial(Variable::parse(text_.substr(start, pos_ - start)));
    } else if (peek() == '(') {
      ++pos_;
      base = parse_sum();
      skip_space();
      if (at_end() || get() != ')') fail("expected ')'");
    } else {
      fail("expected a number, a variable or '('");
    }
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      Integer exponent = parse_integer();
      if (!exponent.fits_uint_p()) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(exponent.get_ui()));
    }
    return base;
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Free functions

Polynomial substitute(const Polynomial& p, Variable v, const Polynomial& q) {
  return p.substitute(v, q);
}

std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return Polynomial();
  if (q.is_constant()) {
    const Integer& d = q.leading_term().second;
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      Integer r;
      mpz_divexact(r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
      terms.emplace_back(m, std::move(r));
    }
    return Polynomial::from_terms(std::move(terms));
  }

  const auto& [lead_m, lead_c] = q.leading_term();
  std::map<Monomial, Integer> remainder;
  for (const auto& t : p.terms()) remainder.emplace_hint(remainder.end(), t.first, t.second);
  std::vector<Polynomial::Term> quotient;
  Integer factor;
  while (!remainder.empty()) {
    auto top = std::prev(remainder.end());
    if (!top->first.divisible_by(lead_m) ||
        !mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t())) {
      return std::nullopt;
    }
    Monomial qm = top->first / lead_m;
    mpz_divexact(factor.get_mpz_t(), top->second.get_mpz_t(), lead_c.get_mpz_t());
    for (const auto& [m, c] : q.terms()) {
      Monomial prod = m * qm;
      auto [it, inserted] = remainder.try_emplace(std::move(prod), 0);
      it->second -= c * factor;
      if (it->second == 0) remainder.erase(it);
    }
    quotient.emplace_back(std::move(qm), factor);
  }
  return Polynomial::from_terms(std::move(quotient));
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
  auto r = try_exact_divide(p, q);
  if (!r) throw NotDivisible("(" + p.to_string() + ") is not divisible by (" + q.to_string() + ")");
  return *std::move(r);
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace chowring
