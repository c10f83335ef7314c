#pragma once

// Degree-truncated graded modules over S = Q[y_0, ..., y_{m-1}] with
// deg y_i = 2. Internally degrees are polynomial degrees d (grading 2d).
// Every module lives inside a Layout: a direct sum of shifted copies of S or
// of S/(l) for linear forms l, with a fixed monomial basis in each degree.

#include <memory>
#include <utility>
#include <vector>

#include "semiflag/laurent.hpp"
#include "semiflag/linalg.hpp"
#include "semiflag/roots.hpp"

namespace semiflag {

class PolyRing {
 public:
  explicit PolyRing(int nvars);

  int nvars() const { return m_; }
  // C(d + m - 1, m - 1)
  int dim(int d) const;
  const IVec& monomial(int d, int i) const;
  int index(const IVec& exps) const;
  // Index of y_j * m_i, where m_i has degree d.
  int mul_var(int d, int i, int j) const;
  // m_i = y_j * m_p with j the first variable of m_i (d >= 1); returns {j, p}.
  std::pair<int, int> split(int d, int i) const;

 private:
  void ensure(int d) const;
  int m_;
  mutable std::vector<std::vector<IVec>> mons_;
  mutable std::vector<std::vector<std::vector<int>>> mul_;
  mutable std::vector<std::vector<std::pair<int, int>>> split_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;
PolyRingPtr poly_ring(int nvars);

// S/(l) presented as the polynomial ring in the variables other than the
// pivot (the last variable with nonzero coefficient in l).
class LinearQuotient {
 public:
  LinearQuotient(PolyRingPtr s, IVec form);

  const IVec& form() const { return form_; }
  int pivot() const { return pivot_; }
  int dim(int d) const { return r_->dim(d); }
  // Class of the S-monomial i of degree d.
  const SparseVec& reduce(int d, int i) const;
  // y_j * e for e of degree d.
  SparseVec mul_var(int d, const SparseVec& e, int j) const;

 private:
  PolyRingPtr s_, r_;
  IVec form_;
  int pivot_ = -1;
  std::vector<std::pair<int, Rational>> pivot_image_;  // y_pivot = sum c_k y'_k
  mutable std::vector<std::vector<SparseVec>> reduced_;
};

using QuotientPtr = std::shared_ptr<const LinearQuotient>;

struct Block {
  int shift = 0;         // generator in polynomial degree `shift`
  QuotientPtr quotient;  // null: a free copy of S
};

class Layout {
 public:
  Layout(PolyRingPtr s, std::vector<Block> blocks);

  const PolyRing& ring() const { return *s_; }
  const PolyRingPtr& ring_ptr() const { return s_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_dim(int b, int d) const;
  int dim(int d) const { return offset(d, num_blocks()); }
  // Index of the first basis vector of block b in degree d.
  int offset(int d, int b) const;
  // {block, local index} of a degree-d index.
  std::pair<int, int> locate(int d, int index) const;

  SparseVec mul_var(int d, const SparseVec& v, int j) const;

 private:
  void ensure(int d) const;
  PolyRingPtr s_;
  std::vector<Block> blocks_;
  mutable std::vector<std::vector<int>> offsets_;
};

using LayoutPtr = std::shared_ptr<const Layout>;

// A graded submodule of a layout, stored as a basis in each degree 0..maxdeg.
struct GradedModule {
  LayoutPtr ambient;
  int maxdeg = 0;
  std::vector<std::vector<SparseVec>> basis;

  int dim(int d) const { return d <= maxdeg ? static_cast<int>(basis[d].size()) : 0; }
  IVec dims() const;
};

// The S-span of `gens` ({degree, element}) truncated at maxdeg.
GradedModule generated_submodule(LayoutPtr ambient, const std::vector<std::pair<int, SparseVec>>& gens,
                                 int maxdeg);
// S_1 * M_{d-1} inside the ambient degree-d space.
Echelon lower_span(const GradedModule& m, int d);

struct FreeGradedModule {
  IVec degrees;                // polynomial degrees of the generators
  std::vector<SparseVec> reps; // generator images in the covered module's ambient
  LayoutPtr ambient;

  LaurentPoly graded_rank() const;
};

// sum_i v^{-2 d_i}
LaurentPoly graded_rank(const IVec& degrees);

// Minimal generators of M. With headroom h > 0, a generator in a degree
// above maxdeg - h raises CutoffError.
FreeGradedModule projective_cover(const GradedModule& m, int headroom = 2);

// Layout of the free module with generators in the given degrees.
LayoutPtr free_layout(PolyRingPtr s, const IVec& degrees);

// The degree-d images of the standard basis of a free layout under the
// S-linear map sending generator b to images[b] (an element of degree
// shift(b) of the target).
class FreeMap {
 public:
  FreeMap(LayoutPtr source, LayoutPtr target, std::vector<SparseVec> images);
  const std::vector<SparseVec>& columns(int d) const;
  SparseVec apply(int d, const SparseVec& v) const;
  const LayoutPtr& source() const { return source_; }
  const LayoutPtr& target() const { return target_; }

 private:
  LayoutPtr source_, target_;
  std::vector<SparseVec> images_;
  mutable std::vector<std::vector<SparseVec>> cols_;
};

}  // namespace semiflag
