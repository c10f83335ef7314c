#include "semiflag/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiflag {

SparseVec SparseVec::unit(int index) {
  SparseVec v;
  v.entries_.emplace_back(index, Rational(1));
  return v;
}

Rational SparseVec::get(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, int i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

void SparseVec::push_back(int index, Rational value) {
  if (value == 0) return;
  if (!entries_.empty() && entries_.back().first >= index)
    throw std::invalid_argument("SparseVec::push_back: indices out of order");
  entries_.emplace_back(index, std::move(value));
}

void SparseVec::add(int index, const Rational& value) {
  if (value == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, int i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry(index, value));
  }
}

void SparseVec::axpy(const Rational& a, const SparseVec& x) {
  if (a == 0 || x.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Rational s = i->second + a * j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Rational& a) {
  if (a == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= a;
}

SparseVec SparseVec::shifted(int offset) const {
  SparseVec out;
  out.entries_ = entries_;
  for (auto& e : out.entries_) e.first += offset;
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v, SparseVec* comb) const {
  SparseVec r = v;
  if (comb) *comb = SparseVec();
  int cursor = -1;
  while (true) {
    // First entry of r at or beyond the cursor that sits on a pivot column.
    const SparseVec::Entry* hit = nullptr;
    for (const auto& e : r) {
      if (e.first <= cursor) continue;
      if (rows_.count(e.first)) {
        hit = &e;
        break;
      }
    }
    if (!hit) break;
    int pivot = hit->first;
    Rational a = hit->second;
    const Row& row = rows_.at(pivot);
    r.axpy(-a, row.vec);
    if (comb && track_) comb->axpy(a, row.comb);
    cursor = pivot;
  }
  return r;
}

bool Echelon::insert(const SparseVec& v) {
  int id = inserted_++;
  SparseVec comb;
  SparseVec r = reduce(v, track_ ? &comb : nullptr);
  if (r.empty()) {
    if (track_) {
      // v - comb(inputs) == 0
      SparseVec dep = comb;
      dep.scale(Rational(-1));
      dep.add(id, Rational(1));
      kernel_.push_back(std::move(dep));
    }
    return false;
  }
  // Normalize: pivot to 1. The tracked combination becomes (e_id - comb)/p.
  int pivot = r.entries().front().first;
  Rational inv = 1 / r.entries().front().second;
  r.scale(inv);
  Row row;
  row.vec = std::move(r);
  if (track_) {
    comb.scale(Rational(-1));
    comb.add(id, Rational(1));
    comb.scale(inv);
    row.comb = std::move(comb);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<SparseVec> Echelon::basis() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row.vec);
  return out;
}

bool solve_columns(const std::vector<SparseVec>& columns, const SparseVec& rhs,
                   SparseVec& solution, std::vector<SparseVec>* kernel) {
  Echelon ech(true);
  for (const auto& c : columns) ech.insert(c);
  SparseVec comb;
  SparseVec residual = ech.reduce(rhs, &comb);
  if (kernel) *kernel = ech.kernel();
  if (!residual.empty()) return false;
  solution = std::move(comb);
  return true;
}

}  // namespace semiflag
