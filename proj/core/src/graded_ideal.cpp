#include "chowring/graded_ideal.hpp"

#include <algorithm>

namespace chowring {

GradedIdeal::GradedIdeal(std::vector<Variable> ambient, std::vector<Polynomial> generators)
    : ambient_(std::move(ambient)) {
  std::sort(ambient_.begin(), ambient_.end());
  ambient_.erase(std::unique(ambient_.begin(), ambient_.end()), ambient_.end());
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw NotHomogeneous("generator is not homogeneous: " + g.to_string());
    for (Variable v : g.variables()) {
      if (!std::binary_search(ambient_.begin(), ambient_.end(), v)) {
        throw std::invalid_argument("generator uses " + v.name() + " outside the ambient ring");
      }
    }
    generators_.push_back(std::move(g));
  }
}

int GradedIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.max_degree());
  return d;
}

std::vector<Monomial> monomials_of_degree(std::span<const Variable> ambient, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<Monomial::Factor> current;
  auto recurse = [&](auto& self, std::size_t index, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Monomial::from_factors(current));
      return;
    }
    if (index == ambient.size()) return;
    const Variable v = ambient[index];
    const int w = v.weight();
    for (int e = remaining / w; e >= 0; --e) {
      if (e > 0) current.emplace_back(v, static_cast<std::uint32_t>(e));
      self(self, index + 1, remaining - e * w);
      if (e > 0) current.pop_back();
    }
  };
  recurse(recurse, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

IntVector GradedPieceLattice::coordinates(const Polynomial& p) const {
  IntVector v(basis.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m) {
      throw std::invalid_argument("monomial " + m.to_string() + " is not in the degree-" +
                                  std::to_string(degree) + " basis");
    }
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

Polynomial GradedPieceLattice::polynomial(const IntVector& coords) const {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) terms.emplace_back(basis[i], coords[i]);
  }
  return Polynomial::from_canonical_terms(std::move(terms));
}

std::vector<Polynomial> GradedPieceLattice::row_polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& r : hnf.rows()) out.push_back(polynomial(r));
  return out;
}

namespace {

SparseVector sparse_coordinates(const GradedPieceLattice& piece, const Polynomial& p) {
  SparseVector v;
  v.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = std::lower_bound(piece.basis.begin(), piece.basis.end(), m);
    if (it == piece.basis.end() || *it != m) {
      throw std::invalid_argument("monomial " + m.to_string() + " is not in the degree-" +
                                  std::to_string(piece.degree) + " basis");
    }
    // Terms and basis share the monomial order, so columns come out sorted.
    v.emplace_back(static_cast<std::uint32_t>(it - piece.basis.begin()), c);
  }
  return v;
}

std::vector<SparseVector> generator_rows(const GradedPieceLattice& piece,
                                         std::span<const Variable> ambient,
                                         const std::vector<Polynomial>& generators) {
  std::vector<SparseVector> rows;
  for (const auto& g : generators) {
    const int gd = g.max_degree();
    if (gd > piece.degree) continue;
    for (const auto& m : monomials_of_degree(ambient, piece.degree - gd)) {
      rows.push_back(sparse_coordinates(piece, g.multiply_monomial(m, 1)));
    }
  }
  return rows;
}

GradedPieceLattice empty_piece(std::span<const Variable> ambient, int degree) {
  GradedPieceLattice piece;
  piece.degree = degree;
  piece.basis = monomials_of_degree(ambient, degree);
  piece.hnf = HermiteForm(piece.basis.size());
  return piece;
}

}  // namespace

GradedPieceLattice graded_piece(const GradedIdeal& ideal, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  GradedPieceLattice piece = empty_piece(ideal.ambient(), degree);
  piece.hnf.add_sparse_rows(generator_rows(piece, ideal.ambient(), ideal.generators()));
  return piece;
}

bool contains(const GradedIdeal& ideal, const Polynomial& p) {
  if (p.is_zero()) return true;
  auto d = p.homogeneous_degree();
  if (!d) throw NotHomogeneous("membership test needs a homogeneous polynomial: " + p.to_string());
  for (Variable v : p.variables()) {
    if (!std::binary_search(ideal.ambient().begin(), ideal.ambient().end(), v)) {
      throw std::invalid_argument(v.name() + " is outside the ambient ring");
    }
  }
  GradedPieceLattice piece = graded_piece(ideal, *d);
  return piece.hnf.reduce(sparse_coordinates(piece, p)).empty();
}

bool IdealComparison::equal() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const DegreeComparison& d) { return d.equal; });
}

std::vector<int> IdealComparison::mismatched_degrees() const {
  std::vector<int> out;
  for (const auto& d : degrees) {
    if (!d.equal) out.push_back(d.degree);
  }
  return out;
}

IdealComparison compare_up_to(const GradedIdeal& lhs, const GradedIdeal& rhs, int bound) {
  if (lhs.ambient() != rhs.ambient()) {
    throw std::invalid_argument("ideals live in different ambient rings");
  }
  IdealComparison out;
  out.bound = bound;
  for (int d = 0; d <= bound; ++d) {
    DegreeComparison dc;
    dc.degree = d;
    dc.lhs = graded_piece(lhs, d);
    dc.rhs = graded_piece(rhs, d);
    dc.equal = dc.lhs.hnf == dc.rhs.hnf;
    out.degrees.push_back(std::move(dc));
  }
  return out;
}

bool equal_up_to(const GradedIdeal& lhs, const GradedIdeal& rhs, int bound) {
  if (lhs.ambient() != rhs.ambient()) {
    throw std::invalid_argument("ideals live in different ambient rings");
  }
  for (int d = 0; d <= bound; ++d) {
    if (graded_piece(lhs, d).hnf != graded_piece(rhs, d).hnf) return false;
  }
  return true;
}

std::vector<Polynomial> simplify_generators(const GradedIdeal& ideal, int bound) {
  if (ideal.max_generator_degree() > bound) {
    throw std::invalid_argument("generator degree " + std::to_string(ideal.max_generator_degree()) +
                                " exceeds the degree bound " + std::to_string(bound));
  }
  const auto& ambient = ideal.ambient();
  std::vector<Polynomial> kept;
  for (int d = 0; d <= bound; ++d) {
    std::vector<Polynomial> in_degree;
    for (const auto& g : ideal.generators()) {
      if (g.max_degree() == d) in_degree.push_back(g);
    }
    if (in_degree.empty()) continue;

    const GradedPieceLattice low = graded_piece(GradedIdeal(ambient, kept), d);
    HermiteForm full = low.hnf;
    full.add_sparse_rows(generator_rows(low, ambient, in_degree));
    if (full == low.hnf) continue;

    // Candidates are the canonical rows of the enlarged lattice, taken in
    // increasing order of leading monomial.
    std::vector<SparseVector> added;
    HermiteForm current = low.hnf;
    for (const auto& [pivot, row] : full.sparse_rows()) {
      SparseVector r = current.reduce(row);
      if (r.empty()) continue;
      current.add_sparse_rows({r});
      added.push_back(std::move(r));
    }
    // Drop any candidate made redundant by ones chosen after it.
    for (std::size_t i = 0; i < added.size();) {
      HermiteForm without = low.hnf;
      std::vector<SparseVector> others;
      for (std::size_t j = 0; j < added.size(); ++j) {
        if (j != i) others.push_back(added[j]);
      }
      without.add_sparse_rows(std::move(others));
      if (without == full) {
        added.erase(added.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    for (const auto& r : added) kept.push_back(low.polynomial(to_dense(r, low.basis.size())));
  }
  return kept;
}

}  // namespace chowring
