#pragma once

// Exact linear algebra over Q.

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

std::size_t dense_rank(std::vector<std::vector<Rational>> rows);

/// Sparse vector: (column, value) pairs sorted by column, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const std::vector<Rational>& dense);

/// Row echelon form built by incremental insertion. Every stored row has a
/// leading coefficient of one, and no stored row has a nonzero entry in the
/// pivot column of a row inserted before it. Pivot selection is by column
/// order, so the result depends only on the inserted rows and their order.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols);
  ~Echelon();
  Echelon(Echelon&&) noexcept;
  Echelon& operator=(Echelon&&) noexcept;

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true iff the row was independent of the current span.
  bool insert(const SparseVector& row);

  /// Reduces v by every pivot row; the remainder is zero iff v is in the span.
  /// If coords is given, it receives the coefficient of each pivot row used.
  SparseVector reduce(const SparseVector& v, std::map<std::size_t, Rational>* coords = nullptr) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Brings the rows into reduced row echelon form.
  void make_reduced();

  /// Basis of {x : row . x = 0 for every row}; forces reduced form first.
  std::vector<SparseVector> nullspace();

  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  struct Accumulator;

  std::size_t ncols_;
  std::map<std::size_t, SparseVector> rows_;
  std::unique_ptr<Accumulator> acc_;
  bool reduced_ = true;
};

}  // namespace gkm
