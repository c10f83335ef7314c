#pragma once

// Alcoves of the affine arrangement H_{alpha,n} = {<v, alpha^vee> = n} in
// V = ZR (x) R, identified with the affine Weyl group W = ZR x| W0 through
// w -> w(A0-). An alcove is stored as x(A0-) + lambda with x in W0 and
// lambda in ZR (root coordinates); the address k_alpha, characterised by
// k_alpha < <v, alpha^vee> < k_alpha + 1 on the alcove, is cached.
//
// Affine simple reflections are indexed 0..rank: 0 is the affine wall
// <v, theta^vee> = -1 of A0-, i >= 1 the finite wall <v, alpha_i^vee> = 0.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "semiflag/roots.hpp"

namespace semiflag {

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Shared, cached root system for a type string such as "A2".
RootSystemPtr root_system(const std::string& type);

class Alcove {
 public:
  Alcove() = default;
  Alcove(RootSystemPtr rs, int x, IVec lambda);

  const RootSystem& rs() const { return *rs_; }
  const RootSystemPtr& rs_ptr() const { return rs_; }
  int weyl() const { return x_; }
  const IVec& lambda() const { return lambda_; }
  const IVec& address() const { return address_; }
  int k(int a) const { return address_[a]; }
  bool valid() const { return rs_ != nullptr; }

  bool operator==(const Alcove& o) const { return x_ == o.x_ && lambda_ == o.lambda_; }
  bool operator!=(const Alcove& o) const { return !(*this == o); }
  // Arbitrary but deterministic total order (by address).
  bool operator<(const Alcove& o) const { return address_ < o.address_; }
  std::size_t hash() const { return IVecHash{}(address_); }

 private:
  RootSystemPtr rs_;
  int x_ = 0;
  IVec lambda_;
  IVec address_;
};

struct AlcoveHash {
  std::size_t operator()(const Alcove& a) const { return a.hash(); }
};

Alcove fundamental_alcove(RootSystemPtr rs);
// Throws std::invalid_argument when the address describes no alcove.
Alcove alcove_from_address(RootSystemPtr rs, const IVec& address);
// x(A0-) + lambda with lambda in fundamental-weight coordinates (lambda in Q).
Alcove alcove_from_literal(RootSystemPtr rs, const IVec& weight, const IVec& w0_word);

Alcove cross_wall(const Alcove& a, int i);
Alcove reflect(const Alcove& a, int root, int n);
// Left multiplication by the affine simple reflection s_i.
Alcove left_mul(int i, const Alcove& a);
Alcove translate(const Alcove& a, const IVec& weight);     // weight coordinates, in Q
Alcove translate_root(const Alcove& a, const IVec& root);  // root coordinates, in ZR

int length(const Alcove& a);
bool is_right_descent(const Alcove& a, int i);
// Canonical reduced word: the smallest right descent is stripped first.
IVec reduced_word(const Alcove& a);
Alcove from_word(RootSystemPtr rs, const IVec& word);
IVec parse_word(const std::string& text);
std::string format_word(const IVec& word);

// -sum_alpha k_alpha; strictly increases along the semi-infinite order.
int level(const Alcove& a);
// Signed separating-hyperplane count (+1 where a is on the positive side).
int semiinf_delta(const Alcove& a, const Alcove& b);
// True iff k_alpha <= -1 for every simple root.
bool is_stable(const Alcove& a);
// x(barycenter of A0-) + lambda, in root coordinates.
QVec interior_point(const Alcove& a);
bool contains_point(const Alcove& a, const QVec& p);

// {"t": [...], "w0": "s1 s2"} style data; t in fundamental-weight coordinates.
IVec literal_weight(const Alcove& a);
IVec literal_w0_word(const Alcove& a);
std::string to_string(const Alcove& a);
// A literal {"t":[...],"w0":"..."} or an affine word; std::invalid_argument on bad input.
Alcove parse_alcove(RootSystemPtr rs, const std::string& text);

// Sorts by length, then canonical word.
void sort_canonical(std::vector<Alcove>& v);

// Bruhat order on W via the lifting property; one recursive step per letter.
bool bruhat_leq(const Alcove& y, const Alcove& w);
// [e, w], sorted canonically.
std::vector<Alcove> bruhat_interval(const Alcove& w);
// Elements covered by w: t w with t a reflection and length one less.
std::vector<Alcove> bruhat_lower_covers(const Alcove& w);
// [y, w] by downward search from w, sorted canonically; empty unless y <= w.
std::vector<Alcove> bruhat_interval_between(const Alcove& y, const Alcove& w);
// All elements of length <= n, sorted canonically.
std::vector<Alcove> ball(RootSystemPtr rs, int n);

struct SemiInfConfig {
  int max_translation_depth = 40;
  int stabilization_window = 3;
};

struct Stabilization {
  bool value = false;
  int n0 = 0;      // first n of the accepted constant run
  int depth = 0;   // last n examined
};

// Antidominant direction gamma = -m rho, m minimal with gamma in ZR (root
// coordinates).
IVec antidominant_direction(const RootSystem& rs);

// Decides A <=_{oo/2} B through Bruhat comparisons of A + n gamma, B + n gamma.
// Throws UndecidedError when no constant run is seen within the depth.
bool semiinf_leq(const Alcove& a, const Alcove& b, const SemiInfConfig& cfg = {},
                 Stabilization* info = nullptr);

// {C | b <= C <= a}, sorted by level then address. Throws
// std::invalid_argument when b is not below a.
std::vector<Alcove> semiinf_interval(const Alcove& b, const Alcove& a, const SemiInfConfig& cfg = {});

// All single-reflection relations C < s_{alpha,n} C with level at most max_level.
std::vector<Alcove> semiinf_up_relations(const Alcove& c, int max_level);

}  // namespace semiflag

template <>
struct std::hash<semiflag::Alcove> {
  std::size_t operator()(const semiflag::Alcove& a) const { return a.hash(); }
};
