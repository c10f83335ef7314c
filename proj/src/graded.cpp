#include "semiflag/graded.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "semiflag/error.hpp"

namespace semiflag {

namespace {

SparseVec from_map(const std::map<int, Rational>& acc) {
  SparseVec v;
  for (const auto& [i, c] : acc)
    if (c != 0) v.push_back(i, c);
  return v;
}

void fill(int m, int d, IVec& cur, int pos, std::vector<IVec>& out) {
  if (pos == m - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = e;
    fill(m, d - e, cur, pos + 1, out);
  }
}

}  // namespace

PolyRing::PolyRing(int nvars) : m_(nvars) {
  if (nvars < 1) throw std::invalid_argument("polynomial ring needs at least one variable");
}

void PolyRing::ensure(int d) const {
  while (static_cast<int>(mons_.size()) <= d) {
    int e = static_cast<int>(mons_.size());
    std::vector<IVec> out;
    IVec cur(m_, 0);
    fill(m_, e, cur, 0, out);
    mons_.push_back(std::move(out));
  }
}

int PolyRing::dim(int d) const {
  if (d < 0) return 0;
  ensure(d);
  return static_cast<int>(mons_[d].size());
}

const IVec& PolyRing::monomial(int d, int i) const {
  ensure(d);
  return mons_[d][i];
}

int PolyRing::index(const IVec& exps) const {
  // position in descending lex order, counted directly
  int d = 0;
  for (int e : exps) d += e;
  int idx = 0, rest = d;
  for (int pos = 0; pos + 1 < m_; ++pos) {
    // monomials with a larger exponent at pos come first
    for (int e = rest; e > exps[pos]; --e) {
      int left = rest - e, vars = m_ - pos - 1;
      // C(left + vars - 1, vars - 1)
      long long c = 1;
      for (int k = 1; k <= vars - 1; ++k) c = c * (left + k) / k;
      idx += static_cast<int>(c);
    }
    rest -= exps[pos];
  }
  return idx;
}

int PolyRing::mul_var(int d, int i, int j) const {
  ensure(d + 1);
  while (static_cast<int>(mul_.size()) <= d) {
    int e = static_cast<int>(mul_.size());
    std::vector<std::vector<int>> t(mons_[e].size(), std::vector<int>(m_));
    for (std::size_t k = 0; k < mons_[e].size(); ++k)
      for (int v = 0; v < m_; ++v) {
        IVec x = mons_[e][k];
        ++x[v];
        t[k][v] = index(x);
      }
    mul_.push_back(std::move(t));
  }
  return mul_[d][i][j];
}

std::pair<int, int> PolyRing::split(int d, int i) const {
  ensure(d);
  while (static_cast<int>(split_.size()) <= d) {
    int e = static_cast<int>(split_.size());
    std::vector<std::pair<int, int>> t(mons_[e].size(), {-1, -1});
    if (e > 0)
      for (std::size_t k = 0; k < mons_[e].size(); ++k) {
        IVec x = mons_[e][k];
        int j = 0;
        while (x[j] == 0) ++j;
        --x[j];
        t[k] = {j, index(x)};
      }
    split_.push_back(std::move(t));
  }
  return split_[d][i];
}

PolyRingPtr poly_ring(int nvars) {
  static std::mutex mu;
  static std::map<int, PolyRingPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& p = cache[nvars];
  if (!p) p = std::make_shared<PolyRing>(nvars);
  return p;
}

LinearQuotient::LinearQuotient(PolyRingPtr s, IVec form) : s_(std::move(s)), form_(std::move(form)) {
  int m = s_->nvars();
  if (static_cast<int>(form_.size()) != m) throw std::invalid_argument("linear form has the wrong length");
  for (int k = 0; k < m; ++k)
    if (form_[k]) pivot_ = k;
  if (pivot_ < 0) throw std::invalid_argument("quotient by the zero form");
  if (m < 2) throw std::invalid_argument("quotient of a one-variable ring");
  r_ = poly_ring(m - 1);
  for (int k = 0; k < m; ++k)
    if (k != pivot_ && form_[k]) pivot_image_.push_back({k < pivot_ ? k : k - 1, Rational(-form_[k], form_[pivot_])});
  for (auto& [k, c] : pivot_image_) c.canonicalize();
}

const SparseVec& LinearQuotient::reduce(int d, int i) const {
  while (static_cast<int>(reduced_.size()) <= d) {
    int e = static_cast<int>(reduced_.size());
    std::vector<SparseVec> t(s_->dim(e));
    for (int k = 0; k < s_->dim(e); ++k) {
      IVec a = s_->monomial(e, k);
      if (a[pivot_] == 0) {
        a.erase(a.begin() + pivot_);
        t[k] = SparseVec::unit(r_->index(a));
      } else {
        --a[pivot_];
        t[k] = mul_var(e - 1, reduced_[e - 1][s_->index(a)], pivot_);
      }
    }
    reduced_.push_back(std::move(t));
  }
  return reduced_[d][i];
}

SparseVec LinearQuotient::mul_var(int d, const SparseVec& e, int j) const {
  std::map<int, Rational> acc;
  if (j != pivot_) {
    int jj = j < pivot_ ? j : j - 1;
    for (const auto& [i, c] : e) acc[r_->mul_var(d, i, jj)] += c;
  } else {
    for (const auto& [i, c] : e)
      for (const auto& [k, a] : pivot_image_) acc[r_->mul_var(d, i, k)] += c * a;
  }
  return from_map(acc);
}

Layout::Layout(PolyRingPtr s, std::vector<Block> blocks) : s_(std::move(s)), blocks_(std::move(blocks)) {
  for (const Block& b : blocks_)
    if (b.shift < 0) throw std::invalid_argument("negative block shift");
}

int Layout::block_dim(int b, int d) const {
  int e = d - blocks_[b].shift;
  if (e < 0) return 0;
  return blocks_[b].quotient ? blocks_[b].quotient->dim(e) : s_->dim(e);
}

void Layout::ensure(int d) const {
  while (static_cast<int>(offsets_.size()) <= d) {
    int e = static_cast<int>(offsets_.size());
    std::vector<int> off(blocks_.size() + 1, 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b) off[b + 1] = off[b] + block_dim(static_cast<int>(b), e);
    offsets_.push_back(std::move(off));
  }
}

int Layout::offset(int d, int b) const {
  ensure(d);
  return offsets_[d][b];
}

std::pair<int, int> Layout::locate(int d, int index) const {
  ensure(d);
  const auto& off = offsets_[d];
  int b = static_cast<int>(std::upper_bound(off.begin(), off.end(), index) - off.begin()) - 1;
  if (b < 0 || b >= num_blocks()) throw std::out_of_range("layout index out of range");
  return {b, index - off[b]};
}

SparseVec Layout::mul_var(int d, const SparseVec& v, int j) const {
  std::map<int, Rational> acc;
  for (const auto& [idx, c] : v) {
    auto [b, loc] = locate(d, idx);
    int e = d - blocks_[b].shift, base = offset(d + 1, b);
    if (!blocks_[b].quotient) {
      acc[base + s_->mul_var(e, loc, j)] += c;
    } else {
      for (const auto& [k, a] : blocks_[b].quotient->mul_var(e, SparseVec::unit(loc), j)) acc[base + k] += c * a;
    }
  }
  return from_map(acc);
}

IVec GradedModule::dims() const {
  IVec out;
  for (int d = 0; d <= maxdeg; ++d) out.push_back(dim(d));
  return out;
}

Echelon lower_span(const GradedModule& m, int d) {
  Echelon ech;
  if (d >= 1 && d - 1 <= m.maxdeg)
    for (const SparseVec& b : m.basis[d - 1])
      for (int j = 0; j < m.ambient->ring().nvars(); ++j) ech.insert(m.ambient->mul_var(d - 1, b, j));
  return ech;
}

GradedModule generated_submodule(LayoutPtr ambient, const std::vector<std::pair<int, SparseVec>>& gens,
                                 int maxdeg) {
  GradedModule m;
  m.ambient = std::move(ambient);
  m.maxdeg = maxdeg;
  m.basis.resize(maxdeg + 1);
  for (int d = 0; d <= maxdeg; ++d) {
    Echelon ech = lower_span(m, d);
    for (const auto& [g, v] : gens)
      if (g == d) ech.insert(v);
    m.basis[d] = ech.basis();
  }
  return m;
}

LaurentPoly graded_rank(const IVec& degrees) {
  LaurentPoly r;
  for (int g : degrees) r += LaurentPoly::monomial(-2 * g);
  return r;
}

LaurentPoly FreeGradedModule::graded_rank() const { return semiflag::graded_rank(degrees); }

FreeGradedModule projective_cover(const GradedModule& m, int headroom) {
  FreeGradedModule f;
  f.ambient = m.ambient;
  for (int d = 0; d <= m.maxdeg; ++d) {
    Echelon ech = lower_span(m, d);
    for (const SparseVec& b : m.basis[d]) {
      if (!ech.insert(b)) continue;
      if (headroom > 0 && d > m.maxdeg - headroom)
        throw CutoffError("projective cover has a generator in degree " + std::to_string(2 * d) +
                              " near the cutoff " + std::to_string(2 * m.maxdeg) + "; raise the cutoff",
                          2 * m.maxdeg);
      f.degrees.push_back(d);
      f.reps.push_back(b);
    }
  }
  return f;
}

LayoutPtr free_layout(PolyRingPtr s, const IVec& degrees) {
  std::vector<Block> blocks;
  for (int g : degrees) blocks.push_back({g, nullptr});
  return std::make_shared<Layout>(std::move(s), std::move(blocks));
}

FreeMap::FreeMap(LayoutPtr source, LayoutPtr target, std::vector<SparseVec> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->num_blocks())
    throw std::invalid_argument("free map: one image per generator required");
  for (const Block& b : source_->blocks())
    if (b.quotient) throw std::invalid_argument("free map: source must be free");
}

const std::vector<SparseVec>& FreeMap::columns(int d) const {
  const PolyRing& s = source_->ring();
  while (static_cast<int>(cols_.size()) <= d) {
    int e = static_cast<int>(cols_.size());
    std::vector<SparseVec> col(source_->dim(e));
    for (int b = 0; b < source_->num_blocks(); ++b) {
      int k = e - source_->blocks()[b].shift;
      if (k < 0) continue;
      int base = source_->offset(e, b);
      for (int i = 0; i < s.dim(k); ++i) {
        if (k == 0) {
          col[base + i] = images_[b];
        } else {
          auto [j, p] = s.split(k, i);
          col[base + i] = target_->mul_var(e - 1, cols_[e - 1][source_->offset(e - 1, b) + p], j);
        }
      }
    }
    cols_.push_back(std::move(col));
  }
  return cols_[d];
}

SparseVec FreeMap::apply(int d, const SparseVec& v) const {
  const auto& cols = columns(d);
  SparseVec out;
  for (const auto& [i, c] : v) out.axpy(c, cols[i]);
  return out;
}

}  // namespace semiflag
