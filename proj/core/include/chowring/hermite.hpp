#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "chowring/polynomial.hpp"

namespace chowring {

using IntVector = std::vector<Integer>;
/// (column, nonzero value) pairs sorted by column.
using SparseVector = std::vector<std::pair<std::uint32_t, Integer>>;

SparseVector to_sparse(const IntVector& v);
IntVector to_dense(const SparseVector& v, std::size_t columns);

/// Integer row lattice kept in Hermite normal form.
///
/// The pivot of a row is its last nonzero column. Rows are stored by pivot,
/// pivots are positive, and every entry sitting in another row's pivot
/// column is reduced into [0, pivot). The form is unique for a lattice, so
/// lattice equality is equality of forms.
class HermiteForm {
 public:
  explicit HermiteForm(std::size_t columns = 0) : columns_(columns) {}
  static HermiteForm from_rows(std::size_t columns, const std::vector<IntVector>& rows);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  /// Rows in order of increasing pivot column.
  std::vector<IntVector> rows() const;
  const std::map<std::uint32_t, SparseVector>& sparse_rows() const { return rows_; }
  std::vector<std::size_t> pivots() const;

  void add_row(const IntVector& row);
  void add_rows(const std::vector<IntVector>& rows);
  void add_sparse_rows(std::vector<SparseVector> rows);

  /// Canonical representative of v modulo the lattice.
  IntVector reduce(const IntVector& v) const;
  SparseVector reduce(SparseVector v) const;
  bool contains(const IntVector& v) const;
  bool contains(const HermiteForm& other) const;

  friend bool operator==(const HermiteForm&, const HermiteForm&) = default;

 private:
  void insert(SparseVector v);
  void normalize();

  std::size_t columns_;
  std::map<std::uint32_t, SparseVector> rows_;
};

}  // namespace chowring
