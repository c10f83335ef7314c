#pragma once

#include <functional>

#include "semiflag/alcove.hpp"
#include "semiflag/laurent.hpp"

namespace testing_helpers {

using namespace semiflag;

// A_k in type A1: the alcove (k, k+1) in the <., alpha^vee> coordinate.
inline Alcove a1_alcove(int k) { return alcove_from_address(root_system("A1"), IVec{k}); }

// Index of an A1 alcove.
inline int a1_index(const Alcove& a) { return a.k(0); }

// Sum over multisets of positive roots adding up to theta (root coordinates)
// of v^(2 * number of parts), by direct enumeration.
inline LaurentPoly kostant_q(const RootSystem& rs, const IVec& theta) {
  const auto& roots = rs.positive_roots();
  LaurentPoly out;
  IVec rest = theta;
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int parts) {
    bool zero = true;
    for (int c : rest) {
      if (c < 0) return;
      zero = zero && c == 0;
    }
    if (zero) {
      out += LaurentPoly::monomial(2 * parts);
      return;
    }
    if (i == roots.size()) return;
    go(i + 1, parts);
    int k = 0;
    while (true) {
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= roots[i][j];
      ++k;
      bool ok = true;
      for (int c : rest) ok = ok && c >= 0;
      if (ok) go(i + 1, parts + k);
      if (!ok) break;
    }
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += k * roots[i][j];
  };
  go(0, 0);
  return out;
}

}  // namespace testing_helpers
