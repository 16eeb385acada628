#include "spreadlab/linalg.hpp"

#include <algorithm>

#include "spreadlab/errors.hpp"

namespace spreadlab {

namespace {

// dst[j] += c * src[j] for j in [from, n)
void axpy(Coeff* dst, const Coeff* src, Coeff c, std::size_t from, std::size_t n, std::uint64_t p) {
  for (std::size_t j = from; j < n; ++j) {
    dst[j] = static_cast<Coeff>((dst[j] + static_cast<std::uint64_t>(c) * src[j]) % p);
  }
}

void scale(Coeff* row, Coeff c, std::size_t from, std::size_t n, std::uint64_t p) {
  for (std::size_t j = from; j < n; ++j) row[j] = static_cast<Coeff>(static_cast<std::uint64_t>(row[j]) * c % p);
}

}  // namespace

DenseMatrix DenseMatrix::from_rows(std::span<const Vec> rows, std::size_t cols) {
  DenseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ArgumentError("row length does not match the column count");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i));
  }
  return m;
}

RrefResult rref(DenseMatrix m, const PrimeField& field, Backend backend) {
  const std::uint64_t p = field.characteristic();
  const std::size_t rows = m.rows(), cols = m.cols();
  const auto nrows = static_cast<std::ptrdiff_t>(rows);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(m.row(piv), m.row(piv) + cols, m.row(r));
    scale(m.row(r), field.inv(m.at(r, c)), c, cols, p);
    const Coeff* prow = m.row(r);
    if (backend == Backend::Parallel) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < nrows; ++i) {
        auto ui = static_cast<std::size_t>(i);
        if (ui != r && m.at(ui, c) != 0) axpy(m.row(ui), prow, field.neg(m.at(ui, c)), c, cols, p);
      }
    } else {
      for (std::size_t i = 0; i < rows; ++i) {
        if (i != r && m.at(i, c) != 0) axpy(m.row(i), prow, field.neg(m.at(i, c)), c, cols, p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::vector<Vec> nullspace(const DenseMatrix& m, const PrimeField& field, Backend backend) {
  auto red = rref(m, field, backend);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = field.neg(red.reduced.at(i, f));
    out.push_back(std::move(v));
  }
  return out;
}

void Subspace::reduce_in_place(Vec& v, std::size_t upto) const {
  const std::uint64_t p = field_.characteristic();
  for (std::size_t i = 0; i < upto; ++i) {
    Coeff c = v[pivots_[i]];
    if (c != 0) axpy(v.data(), rows_[i].data(), field_.neg(c), pivots_[i], dim_, p);
  }
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != dim_) throw ArgumentError("vector length does not match the subspace");
  reduce_in_place(v, rows_.size());
  return v;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vec& v) { return contains(v); });
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
  if (it == v.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - v.begin());
  scale(v.data(), field_.inv(v[piv]), piv, dim_, field_.characteristic());
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

std::size_t Subspace::insert_all(std::vector<Vec> vs, Backend backend, std::size_t cap) {
  for (const auto& v : vs) {
    if (v.size() != dim_) throw ArgumentError("vector length does not match the subspace");
  }
  std::size_t added = 0;
  constexpr std::size_t kChunk = 64;
  for (std::size_t start = 0; start < vs.size() && rank() < cap; start += kChunk) {
    std::size_t end = std::min(vs.size(), start + kChunk);
    // against the rows present before this chunk, independently per vector
    const std::size_t before = rows_.size();
    if (backend == Backend::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start); i < static_cast<std::ptrdiff_t>(end); ++i) {
        reduce_in_place(vs[static_cast<std::size_t>(i)], before);
      }
    } else {
      for (std::size_t i = start; i < end; ++i) reduce_in_place(vs[i], before);
    }
    // then sequentially against rows added within the chunk
    for (std::size_t i = start; i < end && rank() < cap; ++i) {
      Vec& v = vs[i];
      const std::uint64_t p = field_.characteristic();
      for (std::size_t k = before; k < rows_.size(); ++k) {
        Coeff c = v[pivots_[k]];
        if (c != 0) axpy(v.data(), rows_[k].data(), field_.neg(c), pivots_[k], dim_, p);
      }
      auto it = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
      if (it == v.end()) continue;
      std::size_t piv = static_cast<std::size_t>(it - v.begin());
      scale(v.data(), field_.inv(v[piv]), piv, dim_, p);
      rows_.push_back(std::move(v));
      pivots_.push_back(piv);
      ++added;
    }
  }
  return added;
}

}  // namespace spreadlab
