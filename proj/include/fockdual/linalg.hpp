#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fockdual/rational.hpp"

namespace fockdual {

// Sparse vector over an abstract 64-bit index space, entries sorted by index.
// Used both for Fock-space vectors (index = occupation bits) and for
// quadratic-operator coefficient vectors (index = monomial slot).
struct SparseVec {
  std::vector<std::pair<uint64_t, Rat>> entries;  // sorted, no zeros

  bool empty() const { return entries.empty(); }
  size_t support() const { return entries.size(); }
  const std::pair<uint64_t, Rat>& leading() const { return entries.front(); }

  void scale(const Rat& c);
  // *this += c * other
  void axpy(const Rat& c, const SparseVec& other);
  // divide so the leading coefficient becomes +1
  void normalize_leading();

  friend bool operator==(const SparseVec& a, const SparseVec& b) = default;
};

SparseVec sparse_from_map(const std::map<uint64_t, Rat>& m);

// Row-echelon accumulator with unit pivots, exact arithmetic throughout.
class Echelon {
 public:
  // Reduces v against the stored rows (in place). Returns what is left.
  SparseVec reduce(SparseVec v) const;
  // Reduce and, if independent, store with pivot scaled to +1. Returns true
  // if the vector enlarged the span.
  bool insert(SparseVec v);
  // Same, but hands back the stored row (nullptr if dependent).
  const SparseVec* insert_get(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  size_t rank() const { return rows_.size(); }
  const std::map<uint64_t, SparseVec>& rows() const { return rows_; }

 private:
  std::map<uint64_t, SparseVec> rows_;  // pivot index -> row
};

// Kernel of the linear map whose j-th column (image of unit vector j) is
// columns[j]. Returned vectors are coefficient tuples over 0..columns.size()-1,
// each normalized so its first nonzero coordinate is +1, in deterministic
// order (by index of the free variable).
std::vector<std::vector<Rat>> kernel_of_columns(const std::vector<SparseVec>& columns);

// Small dense exact matrix, for single-particle transformations and
// structure-constant checks.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix commutator(const RatMatrix& o) const { return *this * o - o * *this; }
  bool is_zero() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Exact sparse matrix in column-major form; rows/cols index a fixed basis.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(size_t rows, size_t cols) : nrows_(rows), cols_(cols) {}

  size_t rows() const { return nrows_; }
  size_t cols() const { return cols_.size(); }
  void set(size_t i, size_t j, const Rat& v);
  Rat get(size_t i, size_t j) const;
  const std::map<size_t, Rat>& column(size_t j) const { return cols_[j]; }

  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix commutator(const SparseMatrix& o) const { return *this * o - o * *this; }
  bool is_zero() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  size_t nrows_ = 0;
  std::vector<std::map<size_t, Rat>> cols_;
};

}  // namespace fockdual
