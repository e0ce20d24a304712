#include "gkm/linalg.hpp"

#include <algorithm>

#include "gkm/error.hpp"

namespace gkm {

std::size_t dense_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.emplace_back(i, dense[i]);
  return v;
}

// Dense scratch row with live-column flags, reused across reductions.
struct Echelon::Accumulator {
  std::vector<Rational> val;
  std::vector<char> live;

  explicit Accumulator(std::size_t n) : val(n), live(n, 0) {}

  void load(const SparseVector& v) {
    for (const auto& [c, x] : v) {
      val[c] = x;
      live[c] = 1;
    }
  }

  void axpy(const Rational& f, const SparseVector& v) {
    for (const auto& [c, x] : v) {
      if (!live[c]) {
        live[c] = 1;
        val[c] = 0;
      }
      val[c] -= f * x;
    }
  }

  SparseVector take(std::size_t from) {
    SparseVector out;
    for (std::size_t c = from; c < val.size(); ++c) {
      if (!live[c]) continue;
      live[c] = 0;
      if (val[c] != 0) out.emplace_back(c, std::move(val[c]));
      val[c] = 0;
    }
    return out;
  }
};

Echelon::Echelon(std::size_t ncols) : ncols_(ncols), acc_(std::make_unique<Accumulator>(ncols)) {}
Echelon::~Echelon() = default;
Echelon::Echelon(Echelon&&) noexcept = default;
Echelon& Echelon::operator=(Echelon&&) noexcept = default;

SparseVector Echelon::reduce(const SparseVector& v, std::map<std::size_t, Rational>* coords) const {
  if (v.empty()) return {};
  Accumulator& acc = *acc_;
  acc.load(v);
  const std::size_t start = v.front().first;
  auto it = rows_.lower_bound(start);
  for (; it != rows_.end(); ++it) {
    const std::size_t p = it->first;
    if (!acc.live[p] || acc.val[p] == 0) continue;
    Rational f = acc.val[p];
    if (coords) (*coords)[p] += f;
    acc.axpy(f, it->second);
  }
  return acc.take(start);
}

bool Echelon::insert(const SparseVector& row) {
  for (const auto& [c, x] : row)
    if (c >= ncols_) throw Error("echelon: column out of range");
  SparseVector r = reduce(row);
  if (r.empty()) return false;
  const Rational lead = r.front().second;
  for (auto& [c, x] : r) x /= lead;
  // Rows with a smaller pivot may have a nonzero entry in the new column.
  if (!rows_.empty() && rows_.begin()->first < r.front().first) reduced_ = false;
  rows_.emplace(r.front().first, std::move(r));
  return true;
}

void Echelon::make_reduced() {
  if (reduced_) return;
  // Eliminate above each pivot, walking pivots from the right.
  Accumulator& acc = *acc_;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVector& row = it->second;
    const std::size_t p = it->first;
    acc.load(row);
    auto jt = rows_.upper_bound(p);
    for (; jt != rows_.end(); ++jt) {
      const std::size_t q = jt->first;
      if (!acc.live[q] || acc.val[q] == 0) continue;
      Rational f = acc.val[q];
      acc.axpy(f, jt->second);
    }
    row = acc.take(p);
  }
  reduced_ = true;
}

std::vector<SparseVector> Echelon::nullspace() {
  make_reduced();
  std::vector<char> is_pivot(ncols_, 0);
  for (const auto& [p, row] : rows_) is_pivot[p] = 1;
  // Column f of the reduced rows gives the dependence of the pivot variables
  // on the free variable f.
  std::vector<SparseVector> cols(ncols_);
  for (const auto& [p, row] : rows_)
    for (const auto& [c, x] : row)
      if (c != p) cols[c].emplace_back(p, -x);
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v = std::move(cols[f]);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gkm
