#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spreadlab/field.hpp"

namespace spreadlab {

/// Which kernel runs the row operations. Both produce identical results;
/// the serial one is kept as the reference.
enum class Backend { Serial, Parallel };

using Vec = std::vector<Coeff>;

/// Row-major dense matrix over F_p.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static DenseMatrix from_rows(std::span<const Vec> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Coeff at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Coeff* row(std::size_t i) { return data_.data() + i * cols_; }
  const Coeff* row(std::size_t i) const { return data_.data() + i * cols_; }
  Vec row_vec(std::size_t i) const { return Vec(row(i), row(i) + cols_); }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Coeff> data_;
};

struct RrefResult {
  DenseMatrix reduced;               ///< reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss–Jordan elimination; the pivot of each column is the first row
/// (from the current position down) with a nonzero entry.
RrefResult rref(DenseMatrix m, const PrimeField& field, Backend backend = Backend::Parallel);

/// Basis of {v : M v = 0}, one vector per free column in ascending order.
std::vector<Vec> nullspace(const DenseMatrix& m, const PrimeField& field,
                           Backend backend = Backend::Parallel);

/// Incrementally built row space. Stored rows have distinct pivots (their
/// first nonzero entry, normalized to 1) and each is reduced against the
/// rows stored before it.
class Subspace {
 public:
  Subspace(std::size_t dim, PrimeField field) : dim_(dim), field_(field) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }

  /// v minus its projection onto the stored rows.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v if independent; returns whether the rank grew.
  bool insert(Vec v);
  /// Same result as inserting the vectors one by one, stopping once the rank
  /// reaches `cap`. Returns the number of vectors added.
  std::size_t insert_all(std::vector<Vec> vs, Backend backend = Backend::Parallel,
                         std::size_t cap = static_cast<std::size_t>(-1));
  /// True iff every stored row of `other` lies in this space.
  bool contains(const Subspace& other) const;

 private:
  void reduce_in_place(Vec& v, std::size_t upto) const;

  std::size_t dim_;
  PrimeField field_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace spreadlab
