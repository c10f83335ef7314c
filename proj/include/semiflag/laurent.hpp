#pragma once

// Z[v, v^-1] with dense int64 storage and overflow checks.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace semiflag {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) { if (c) { lo_ = 0; c_ = {c}; } }  // NOLINT: implicit from integers
  static LaurentPoly monomial(int exponent, std::int64_t c = 1);
  static LaurentPoly from_map(const std::map<int, std::int64_t>& m);

  bool is_zero() const { return c_.empty(); }
  // Valid only when nonzero.
  int min_degree() const { return lo_; }
  int max_degree() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int e) const;
  std::map<int, std::int64_t> to_map() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // v -> v^-1
  LaurentPoly bar() const;
  LaurentPoly shift(int k) const;  // multiply by v^k
  bool in_positive_part() const;   // in vZ[v]
  bool nonnegative() const;        // all coefficients >= 0
  // Only even powers of v^-1 (including v^0) with nonnegative coefficients.
  bool in_nonneg_v_minus_2() const;

  // "v^2 - 3"
  std::string to_string() const;
  // {"2": 1, "0": -3} as a compact JSON object string, keys ascending.
  std::string to_json() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<std::int64_t> c_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace semiflag
