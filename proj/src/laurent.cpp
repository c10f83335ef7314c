#include "semiflag/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiflag {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t c) {
  LaurentPoly p;
  if (c) {
    p.lo_ = exponent;
    p.c_ = {c};
  }
  return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<int, std::int64_t>& m) {
  LaurentPoly p;
  for (const auto& [e, c] : m) p += monomial(e, c);
  return p;
}

void LaurentPoly::trim() {
  std::size_t a = 0;
  while (a < c_.size() && c_[a] == 0) ++a;
  if (a == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t b = c_.size();
  while (c_[b - 1] == 0) --b;
  c_ = std::vector<std::int64_t>(c_.begin() + a, c_.begin() + b);
  lo_ += static_cast<int>(a);
}

std::int64_t LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < lo_ || e > max_degree()) return 0;
  return c_[e - lo_];
}

std::map<int, std::int64_t> LaurentPoly::to_map() const {
  std::map<int, std::int64_t> m;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) m[lo_ + static_cast<int>(i)] = c_[i];
  return m;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  LaurentPoly r;
  r.lo_ = std::min(lo_, o.lo_);
  int hi = std::max(max_degree(), o.max_degree());
  r.c_.assign(hi - r.lo_ + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[lo_ - r.lo_ + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& x = r.c_[o.lo_ - r.lo_ + i];
    x = checked_add(x, o.c_[i]);
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = checked_mul(x, -1);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  LaurentPoly r;
  r.lo_ = lo_ + o.lo_;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  LaurentPoly r;
  r.lo_ = -max_degree();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

bool LaurentPoly::in_positive_part() const { return is_zero() || lo_ >= 1; }

bool LaurentPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x >= 0; });
}

bool LaurentPoly::in_nonneg_v_minus_2() const {
  if (is_zero()) return true;
  if (max_degree() > 0 || !nonnegative()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] && ((lo_ + static_cast<int>(i)) % 2 != 0)) return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = max_degree(); e >= lo_; --e) {
    std::int64_t c = coeff(e);
    if (!c) continue;
    std::uint64_t a = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    std::string mono = e == 0 ? "" : (e == 1 ? "v" : "v^" + std::to_string(e));
    if (mono.empty())
      s += std::to_string(a);
    else
      s += (a == 1 ? "" : std::to_string(a)) + mono;
  }
  return s;
}

std::string LaurentPoly::to_json() const {
  std::string s = "{";
  bool first = true;
  for (int e = lo_; !is_zero() && e <= max_degree(); ++e) {
    std::int64_t c = coeff(e);
    if (!c) continue;
    if (!first) s += ",";
    first = false;
    s += "\"" + std::to_string(e) + "\":" + std::to_string(c);
  }
  return s + "}";
}

}  // namespace semiflag
