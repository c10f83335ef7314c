#pragma once

// The affine Hecke algebra in Soergel's normalisation: H_s^2 = (v^-1 - v) H_s
// + H_e, self-dual generators H_s + v. Elements are finite combinations of
// standard basis elements H_y, indexed by alcoves y(A0-).

#include <unordered_map>
#include <utility>
#include <vector>

#include "semiflag/alcove.hpp"
#include "semiflag/laurent.hpp"

namespace semiflag {

class HeckeElt {
 public:
  using Map = std::unordered_map<Alcove, LaurentPoly, AlcoveHash>;

  HeckeElt() = default;
  static HeckeElt standard(const Alcove& y, const LaurentPoly& c = 1);

  void add(const Alcove& y, const LaurentPoly& c);
  LaurentPoly coeff(const Alcove& y) const;
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Terms sorted by length, then canonical word.
  std::vector<std::pair<Alcove, LaurentPoly>> sorted() const;

  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt operator*(const LaurentPoly& c) const;
  bool operator==(const HeckeElt& o) const;
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

 private:
  Map terms_;
};

// h * (H_s + v): H_{ys} + v H_y if ys > y, else H_{ys} + v^-1 H_y.
HeckeElt mul_gen(const HeckeElt& h, int s);
// h * H_s
HeckeElt mul_std_gen(const HeckeElt& h, int s);
HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b);
// Skew-linear involution v -> v^-1, H_y -> (H_{y^-1})^-1.
HeckeElt bar(const HeckeElt& h);

// Memoized Kazhdan-Lusztig data. Elements above `max_length` are refused.
class KLTable {
 public:
  explicit KLTable(int max_length = 64) : max_length_(max_length) {}

  const HeckeElt& kl_basis(const Alcove& w);
  // h_{y,w}: coefficient of H_y in the self-dual element for w, computed by
  // the pair recursion on [y, w] (never materialises all of [e, w]).
  LaurentPoly kl_poly(const Alcove& y, const Alcove& w);
  // Coefficient of v in h_{y,w}.
  std::int64_t mu(const Alcove& y, const Alcove& w);
  // Solution of sum_y (-1)^{l(u)-l(y)} h_{u,y} inv_{y,w} = delta_{u,w}.
  LaurentPoly inverse_kl(const Alcove& u, const Alcove& w);
  const std::vector<Alcove>& interval(const Alcove& w);

 private:
  void check(const Alcove& w) const;
  int max_length_;
  std::unordered_map<Alcove, HeckeElt, AlcoveHash> basis_;
  std::unordered_map<Alcove, std::vector<Alcove>, AlcoveHash> intervals_;
  std::unordered_map<Alcove, HeckeElt, AlcoveHash> inverse_;  // w -> sum_u inv_{u,w} H_u
  struct PairHash {
    std::size_t operator()(const std::pair<Alcove, Alcove>& p) const { return p.first.hash() * 31 + p.second.hash(); }
  };
  std::unordered_map<std::pair<Alcove, Alcove>, LaurentPoly, PairHash> pairs_;
};

}  // namespace semiflag
