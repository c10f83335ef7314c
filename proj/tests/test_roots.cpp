#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "semiflag/roots.hpp"

using namespace semiflag;

TEST_CASE("type strings parse case-insensitively and reject bad ranks") {
  CHECK(CartanType::parse("a2").name() == "A2");
  CHECK(CartanType::parse("G2").name() == "G2");
  CHECK_THROWS_AS(CartanType::parse("E5"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("Z2"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("A"), std::invalid_argument);
}

TEST_CASE("positive root counts and W0 orders") {
  struct Row {
    const char* t;
    int roots;
    int order;
  };
  for (Row r : {Row{"A1", 1, 2}, Row{"A2", 3, 6}, Row{"A3", 6, 24}, Row{"B2", 4, 8}, Row{"C2", 4, 8},
                Row{"G2", 6, 12}, Row{"B3", 9, 48}, Row{"C3", 9, 48}, Row{"D4", 12, 192}, Row{"F4", 24, 1152}}) {
    CAPTURE(r.t);
    RootSystem rs(CartanType::parse(r.t));
    CHECK(rs.num_positive() == r.roots);
    CHECK(rs.weyl_order() == r.order);
  }
}

TEST_CASE("Cartan matrices match the standard tables") {
  CHECK(RootSystem(CartanType::parse("A2")).cartan() == IMat{{2, -1}, {-1, 2}});
  // B2: alpha_2 short, so <alpha_1, alpha_2^vee> = -2.
  CHECK(RootSystem(CartanType::parse("B2")).cartan() == IMat{{2, -2}, {-1, 2}});
  CHECK(RootSystem(CartanType::parse("C2")).cartan() == IMat{{2, -1}, {-2, 2}});
  CHECK(RootSystem(CartanType::parse("G2")).cartan() == IMat{{2, -1}, {-3, 2}});
}

TEST_CASE("A2 roots, pairing and highest root") {
  RootSystem rs(CartanType::parse("A2"));
  CHECK(rs.positive_roots() == std::vector<IVec>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(rs.pair(IVec{1, 0}, 0) == 2);
  CHECK(rs.pair(IVec{1, 0}, 1) == -1);
  CHECK(rs.pair(IVec{1, 1}, 0) == 1);
  CHECK(rs.pair(QVec{Rational(1, 2), 0}, 0) == 1);
  CHECK_THROWS(rs.pair(QVec{1}, 0));
  CHECK(rs.highest_root() == IVec{1, 1});
}

TEST_CASE("A2 length generating function is 1+2t+2t^2+t^3") {
  RootSystem rs(CartanType::parse("A2"));
  std::map<int, int> gen;
  for (const auto& w : rs.weyl_group()) gen[w.length]++;
  CHECK(gen == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
}

TEST_CASE("structural invariants across types") {
  for (const char* t : {"A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3", "D4", "F4"}) {
    CAPTURE(t);
    RootSystem rs(CartanType::parse(t));
    int n = rs.rank();
    for (int a = 0; a < rs.num_positive(); ++a) {
      for (int c : rs.root(a)) CHECK(c >= 0);
      CHECK(rs.pair(rs.root(a), a) == 2);
    }
    for (int i = 0; i < n; ++i) CHECK(rs.pair(rs.highest_root(), rs.simple_index(i)) >= 0);
    std::set<IMat> mats;
    for (int x = 0; x < rs.weyl_order(); ++x) {
      const auto& w = rs.weyl(x);
      mats.insert(w.matrix);
      // length = number of positive roots sent negative, by direct matrix action
      int neg = 0;
      for (int a = 0; a < rs.num_positive(); ++a) {
        IVec img = rs.apply(x, rs.root(a));
        bool nonpos = true;
        for (int c : img) nonpos = nonpos && c <= 0;
        neg += nonpos;
      }
      CHECK(neg == w.length);
      CHECK(static_cast<int>(w.word.size()) == w.length);
      // the word evaluates to the matrix
      IMat m(n, IVec(n, 0));
      for (int i = 0; i < n; ++i) m[i][i] = 1;
      for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        int s = *it;
        for (int j = 0; j < n; ++j) {
          int c = 0;
          for (int r = 0; r < n; ++r) c += m[r][j] * rs.cartan()[r][s];
          m[s][j] -= c;
        }
      }
      CHECK(m == w.matrix);
      CHECK(rs.weyl_mul(x, rs.weyl_inverse(x)) == 0);
    }
    CHECK(static_cast<int>(mats.size()) == rs.weyl_order());
    for (int a = 0; a < rs.num_positive(); ++a) {
      int s = rs.reflection(a);
      CHECK(rs.weyl_mul(s, s) == 0);
      CHECK(rs.weyl_root_image(s, a) == -(a + 1));
    }
  }
}

TEST_CASE("fundamental weights are dual to simple coroots") {
  for (const char* t : {"A2", "B2", "G2", "C3"}) {
    RootSystem rs(CartanType::parse(t));
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(rs.pair(rs.fundamental_weight(i), rs.simple_index(j)) == (i == j ? 1 : 0));
  }
}
