#pragma once

// Exact sparse linear algebra over the rationals. Everything graded in this
// library (sections, images, kernels, projective covers, periodic window
// solves) reduces to the incremental echelon form below.

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace semiflag {

using Rational = mpq_class;

// Sparse vector with strictly increasing indices and no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<int, Rational>;

  SparseVec() = default;
  static SparseVec unit(int index);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Rational get(int index) const;
  // Appends an entry; indices must arrive in increasing order.
  void push_back(int index, Rational value);
  // Adds a value at an arbitrary index (slow path, keeps order).
  void add(int index, const Rational& value);

  // this += a * x
  void axpy(const Rational& a, const SparseVec& x);
  void scale(const Rational& a);
  // Shifts all indices by `offset`.
  SparseVec shifted(int offset) const;

  bool operator==(const SparseVec& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Entry> entries_;
};

// Incremental row-echelon basis of a subspace of Q^n. Optionally tracks, for
// each stored row, the combination of inserted vectors that produced it; this
// yields kernels of column maps and solutions of linear systems.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  // Inserts v. Returns true when v was independent of the previous inserts.
  // When tracking, the i-th inserted vector is identified by index i.
  bool insert(const SparseVec& v);

  // Residual of v after reduction against the stored rows. With tracking and
  // a non-null `comb`, v == residual + sum_i comb[i] * input_i.
  SparseVec reduce(const SparseVec& v, SparseVec* comb = nullptr) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return inserted_; }

  // Dependencies found among inserted vectors: each c satisfies
  // sum_i c[i] * input_i == 0. Requires tracking.
  const std::vector<SparseVec>& kernel() const { return kernel_; }

  // Stored basis rows (pivot-normalized), in pivot order.
  std::vector<SparseVec> basis() const;

 private:
  struct Row {
    SparseVec vec;
    SparseVec comb;
  };
  bool track_;
  int inserted_ = 0;
  std::map<int, Row> rows_;  // keyed by pivot column
  std::vector<SparseVec> kernel_;
};

// Solves sum_j c_j * columns[j] == rhs. Returns false when inconsistent.
// On success `solution` is one particular solution and `kernel` (if
// non-null) a basis of the homogeneous solutions.
bool solve_columns(const std::vector<SparseVec>& columns, const SparseVec& rhs,
                   SparseVec& solution, std::vector<SparseVec>* kernel = nullptr);

}  // namespace semiflag
