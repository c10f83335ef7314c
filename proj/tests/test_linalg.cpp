#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "semiflag/linalg.hpp"

using namespace semiflag;

namespace {

SparseVec from_dense(const std::vector<int>& d) {
  SparseVec v;
  for (std::size_t i = 0; i < d.size(); ++i) v.push_back(static_cast<int>(i), Rational(d[i]));
  return v;
}

// Rank by plain dense Gaussian elimination.
int dense_rank(std::vector<std::vector<Rational>> m) {
  int rows = static_cast<int>(m.size());
  if (!rows) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("sparse axpy cancels exactly") {
  SparseVec a = from_dense({1, 2, 0, 3});
  SparseVec b = from_dense({0, 4, 5, 6});
  a.axpy(Rational(-1, 2), b);
  CHECK(a.get(0) == 1);
  CHECK(a.get(1) == 0);
  CHECK(a.get(2) == Rational(-5, 2));
  CHECK(a.get(3) == 0);
  CHECK(a.size() == 2);
}

TEST_CASE("echelon rank and kernel agree with dense elimination") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 1 + trial % 6, cols = 1 + (trial * 7) % 5;
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols));
    Echelon ech(true);
    std::vector<SparseVec> inputs;
    for (int i = 0; i < rows; ++i) {
      std::vector<int> d(cols);
      for (int j = 0; j < cols; ++j) dense[i][j] = d[j] = (val(rng) == 2 ? val(rng) : 0);
      inputs.push_back(from_dense(d));
      ech.insert(inputs.back());
    }
    int r = dense_rank(dense);
    CHECK(ech.rank() == r);
    CHECK(static_cast<int>(ech.kernel().size()) == rows - r);
    for (const auto& k : ech.kernel()) {
      SparseVec sum;
      for (const auto& [i, c] : k) sum.axpy(c, inputs[i]);
      CHECK(sum.empty());
    }
  }
}

TEST_CASE("solve_columns finds a solution or reports inconsistency") {
  std::vector<SparseVec> cols{from_dense({1, 0, 1}), from_dense({0, 1, 1}), from_dense({1, 1, 2})};
  SparseVec sol;
  std::vector<SparseVec> ker;
  REQUIRE(solve_columns(cols, from_dense({2, 3, 5}), sol, &ker));
  SparseVec check;
  for (const auto& [j, c] : sol) check.axpy(c, cols[j]);
  CHECK(check == from_dense({2, 3, 5}));
  CHECK(ker.size() == 1);
  CHECK_FALSE(solve_columns(cols, from_dense({1, 0, 0}), sol));
}
