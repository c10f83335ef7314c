#include "semiflag/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "semiflag/error.hpp"

namespace semiflag {

HeckeElt HeckeElt::standard(const Alcove& y, const LaurentPoly& c) {
  HeckeElt h;
  h.add(y, c);
  return h;
}

void HeckeElt::add(const Alcove& y, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(y);
  if (it == terms_.end()) {
    terms_.emplace(y, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly HeckeElt::coeff(const Alcove& y) const {
  auto it = terms_.find(y);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::vector<std::pair<Alcove, LaurentPoly>> HeckeElt::sorted() const {
  std::vector<Alcove> keys;
  for (const auto& [y, c] : terms_) keys.push_back(y);
  sort_canonical(keys);
  std::vector<std::pair<Alcove, LaurentPoly>> out;
  for (const auto& y : keys) out.emplace_back(y, terms_.at(y));
  return out;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  for (const auto& [y, c] : o.terms_) r.add(y, c);
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  HeckeElt r = *this;
  for (const auto& [y, c] : o.terms_) r.add(y, -c);
  return r;
}

HeckeElt HeckeElt::operator*(const LaurentPoly& c) const {
  HeckeElt r;
  for (const auto& [y, p] : terms_) r.add(y, p * c);
  return r;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [y, c] : terms_)
    if (o.coeff(y) != c) return false;
  return true;
}

HeckeElt mul_gen(const HeckeElt& h, int s) {
  HeckeElt r;
  const LaurentPoly v = LaurentPoly::monomial(1), vinv = LaurentPoly::monomial(-1);
  for (const auto& [y, c] : h.terms()) {
    Alcove ys = cross_wall(y, s);
    r.add(ys, c);
    r.add(y, c * (length(ys) > length(y) ? v : vinv));
  }
  return r;
}

HeckeElt mul_std_gen(const HeckeElt& h, int s) { return mul_gen(h, s) - h * LaurentPoly::monomial(1); }

HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt r;
  for (const auto& [y, c] : b.terms()) {
    HeckeElt t = a;
    for (int s : reduced_word(y)) t = mul_std_gen(t, s);
    r = r + t * c;
  }
  return r;
}

HeckeElt bar(const HeckeElt& h) {
  std::unordered_map<Alcove, HeckeElt, AlcoveHash> memo;
  const LaurentPoly vinv = LaurentPoly::monomial(-1);
  // bar(H_y) = bar(H_{ys}) (H_s + v - v^-1) for a right descent s of y.
  auto bar_std = [&](const Alcove& y) {
    IVec word = reduced_word(y);
    Alcove cur = fundamental_alcove(y.rs_ptr());
    HeckeElt acc = HeckeElt::standard(cur);
    for (int s : word) {
      cur = cross_wall(cur, s);
      auto it = memo.find(cur);
      if (it != memo.end()) {
        acc = it->second;
        continue;
      }
      acc = mul_gen(acc, s) - acc * vinv;
      memo.emplace(cur, acc);
    }
    return acc;
  };
  HeckeElt r;
  for (const auto& [y, c] : h.terms()) r = r + bar_std(y) * c.bar();
  return r;
}

void KLTable::check(const Alcove& w) const {
  if (length(w) > max_length_)
    throw std::invalid_argument("element of length " + std::to_string(length(w)) +
                                " exceeds the configured Hecke ball (max length " + std::to_string(max_length_) + ")");
}

const HeckeElt& KLTable::kl_basis(const Alcove& w) {
  auto it = basis_.find(w);
  if (it != basis_.end()) return it->second;
  check(w);
  HeckeElt result;
  int lw = length(w);
  if (lw == 0) {
    result = HeckeElt::standard(w);
  } else {
    int n = w.rs().rank();
    int s = -1;
    for (int i = 0; i <= n && s < 0; ++i)
      if (is_right_descent(w, i)) s = i;
    Alcove ws = cross_wall(w, s);
    HeckeElt prev = kl_basis(ws);
    result = mul_gen(prev, s);
    for (const auto& [z, c] : prev.terms()) {
      if (z == ws || !is_right_descent(z, s)) continue;
      std::int64_t m = c.coeff(1);
      if (m) result = result - kl_basis(z) * LaurentPoly(m);
    }
  }
  return basis_.emplace(w, std::move(result)).first->second;
}

LaurentPoly KLTable::kl_poly(const Alcove& y, const Alcove& w) {
  if (y == w) return 1;
  auto key = std::make_pair(y, w);
  auto it = pairs_.find(key);
  if (it != pairs_.end()) return it->second;
  check(w);
  LaurentPoly result;
  if (length(y) < length(w) && bruhat_leq(y, w)) {
    int n = w.rs().rank();
    int s = -1;
    for (int i = 0; i <= n && s < 0; ++i)
      if (is_right_descent(w, i)) s = i;
    Alcove ys = cross_wall(y, s);
    if (length(ys) > length(y)) {
      // s is a right descent of w and ys > y: h_{y,w} = v h_{ys,w}
      result = kl_poly(ys, w).shift(1);
    } else {
      // Coefficient of H_y in H_{ws} (H_s + v) minus the mu-corrections.
      Alcove ws = cross_wall(w, s);
      result = kl_poly(ys, ws) + kl_poly(y, ws).shift(-1);
      for (const Alcove& z : bruhat_interval_between(y, ws)) {
        if (z == ws || !is_right_descent(z, s)) continue;
        std::int64_t m = kl_poly(z, ws).coeff(1);
        if (m) result -= kl_poly(y, z) * LaurentPoly(m);
      }
    }
  }
  pairs_.emplace(key, result);
  return result;
}

std::int64_t KLTable::mu(const Alcove& y, const Alcove& w) { return kl_poly(y, w).coeff(1); }

const std::vector<Alcove>& KLTable::interval(const Alcove& w) {
  auto it = intervals_.find(w);
  if (it != intervals_.end()) return it->second;
  check(w);
  return intervals_.emplace(w, bruhat_interval(w)).first->second;
}

LaurentPoly KLTable::inverse_kl(const Alcove& u, const Alcove& w) {
  auto it = inverse_.find(w);
  if (it == inverse_.end()) {
    const auto& iv = interval(w);
    HeckeElt table;
    // Descending length; inv_{w,w} = 1.
    for (auto y = iv.rbegin(); y != iv.rend(); ++y) {
      if (*y == w) {
        table.add(w, 1);
        continue;
      }
      LaurentPoly acc;
      int ly = length(*y);
      for (const auto& [z, c] : table.terms()) {
        LaurentPoly h = kl_poly(*y, z);
        if (h.is_zero()) continue;
        LaurentPoly term = h * c;
        acc += ((ly - length(z)) % 2 == 0) ? term : -term;
      }
      table.add(*y, -acc);
    }
    it = inverse_.emplace(w, std::move(table)).first;
  }
  return it->second.coeff(u);
}

}  // namespace semiflag
