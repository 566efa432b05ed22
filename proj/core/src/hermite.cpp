#include "chowring/hermite.hpp"

#include <stdexcept>

namespace chowring {

SparseVector to_sparse(const IntVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return out;
}

IntVector to_dense(const SparseVector& v, std::size_t columns) {
  IntVector out(columns);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

namespace {

Integer entry(const SparseVector& v, std::uint32_t column) {
  auto it = std::lower_bound(v.begin(), v.end(), column,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != v.end() && it->first == column) ? it->second : Integer(0);
}

/// a * x + b * y
SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b,
                     const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  auto ix = x.begin();
  auto iy = y.begin();
  Integer value;
  while (ix != x.end() || iy != y.end()) {
    if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
      value = a * ix->second;
      if (value != 0) out.emplace_back(ix->first, value);
      ++ix;
    } else if (ix == x.end() || iy->first < ix->first) {
      value = b * iy->second;
      if (value != 0) out.emplace_back(iy->first, value);
      ++iy;
    } else {
      value = a * ix->second;
      mpz_addmul(value.get_mpz_t(), b.get_mpz_t(), iy->second.get_mpz_t());
      if (value != 0) out.emplace_back(ix->first, value);
      ++ix;
      ++iy;
    }
  }
  return out;
}

/// target - q * source
SparseVector subtract_multiple(const SparseVector& target, const Integer& q,
                               const SparseVector& source) {
  return combine(Integer(1), target, Integer(-q), source);
}

}  // namespace

HermiteForm HermiteForm::from_rows(std::size_t columns, const std::vector<IntVector>& rows) {
  HermiteForm h(columns);
  h.add_rows(rows);
  return h;
}

std::vector<IntVector> HermiteForm::rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(to_dense(r, columns_));
  return out;
}

std::vector<std::size_t> HermiteForm::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

void HermiteForm::add_row(const IntVector& row) { add_rows({row}); }

void HermiteForm::add_rows(const std::vector<IntVector>& rows) {
  std::vector<SparseVector> sparse;
  sparse.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != columns_) throw std::invalid_argument("row length does not match lattice");
    sparse.push_back(to_sparse(r));
  }
  add_sparse_rows(std::move(sparse));
}

void HermiteForm::add_sparse_rows(std::vector<SparseVector> rows) {
  for (auto& r : rows) {
    if (!r.empty() && r.back().first >= columns_) {
      throw std::invalid_argument("row column out of range");
    }
    insert(std::move(r));
  }
  normalize();
}

void HermiteForm::insert(SparseVector v) {
  Integer g, s, t, a_over_g, b_over_g, q;
  while (!v.empty()) {
    const std::uint32_t pivot = v.back().first;
    auto it = rows_.find(pivot);
    if (it == rows_.end()) {
      if (v.back().second < 0) {
        for (auto& e : v) e.second = -e.second;
      }
      rows_.emplace(pivot, std::move(v));
      return;
    }
    SparseVector& row = it->second;
    const Integer a = row.back().second;
    const Integer b = v.back().second;
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
      v = subtract_multiple(v, q, row);
      continue;
    }
    // g = s*a + t*b; the row becomes s*row + t*v and v becomes
    // (a/g)*v - (b/g)*row, which vanishes at the pivot.
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(a_over_g.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_over_g.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    SparseVector combined = combine(s, row, t, v);
    v = combine(a_over_g, v, Integer(-b_over_g), row);
    row = std::move(combined);
  }
}

void HermiteForm::normalize() {
  Integer q;
  // For each pivot, from the largest down, reduce the rows with larger
  // pivots in that column; later steps only touch smaller columns.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    const std::uint32_t p = it->first;
    const SparseVector& pivot_row = it->second;
    const Integer& pivot_value = pivot_row.back().second;
    for (auto above = rows_.upper_bound(p); above != rows_.end(); ++above) {
      Integer x = entry(above->second, p);
      if (x == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), pivot_value.get_mpz_t());
      if (q != 0) above->second = subtract_multiple(above->second, q, pivot_row);
    }
  }
}

SparseVector HermiteForm::reduce(SparseVector v) const {
  Integer q;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    const auto& [p, row] = *it;
    Integer x = entry(v, p);
    if (x == 0) continue;
    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), row.back().second.get_mpz_t());
    if (q != 0) v = subtract_multiple(v, q, row);
  }
  return v;
}

IntVector HermiteForm::reduce(const IntVector& v) const {
  if (v.size() != columns_) throw std::invalid_argument("vector length does not match lattice");
  return to_dense(reduce(to_sparse(v)), columns_);
}

bool HermiteForm::contains(const IntVector& v) const {
  if (v.size() != columns_) throw std::invalid_argument("vector length does not match lattice");
  return reduce(to_sparse(v)).empty();
}

bool HermiteForm::contains(const HermiteForm& other) const {
  for (const auto& [p, row] : other.rows_) {
    if (!reduce(row).empty()) return false;
  }
  return true;
}

}  // namespace chowring
