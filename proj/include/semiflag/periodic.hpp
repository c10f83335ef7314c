#pragma once

// The periodic module: formal combinations of alcoves with a right Hecke
// action through the semi-infinite order, the elements E_lambda, the
// self-dual basis of the submodule they generate (periodic polynomials) and
// the translation-stabilized generic polynomials.

#include <map>
#include <unordered_map>
#include <vector>

#include "semiflag/hecke.hpp"

namespace semiflag {

// Same storage as a Hecke element: alcove -> Laurent coefficient.
using PeriodicElt = HeckeElt;

// p * (H_s + v): As + vA if As is above A, As + v^-1 A otherwise.
PeriodicElt periodic_act_gen(const PeriodicElt& p, int s);
PeriodicElt periodic_act_std_gen(const PeriodicElt& p, int s);
PeriodicElt periodic_act(const PeriodicElt& p, const HeckeElt& h);

// sum_{x in W0} v^{l(x)} (x(A0-) + lambda), lambda in fundamental-weight
// coordinates.
PeriodicElt e_lambda(RootSystemPtr rs, const IVec& weight);

// Laurent polynomial with rational coefficients, used for witness
// coefficients produced by the exact solve.
using QLaurent = std::map<int, Rational>;

struct WitnessTerm {
  IVec weight;      // lambda
  HeckeElt h;
  QLaurent coeff;
};

// sum c * E_lambda * h
struct P0Witness {
  std::vector<WitnessTerm> terms;
  // Throws InternalError when the expansion has non-integral coefficients.
  PeriodicElt expand(RootSystemPtr rs) const;
  // The skew-linear involution fixing every E_lambda.
  P0Witness bar() const;
};

struct PeriodicWindow {
  int radius = -1;         // gallery radius around A for the E_mu centres; -1: rank + 1
  int hecke_length = -1;   // max length of x in E_mu * H(x); -1: rank + 1
  int degree = 1;          // max |d| in the symmetric multipliers v^d + v^-d
  int expansions = 3;      // grow all three bounds by one this many times
};

struct PeriodicResult {
  PeriodicElt element;
  P0Witness witness;
  int radius = 0, hecke_length = 0, degree = 0;
};

class PeriodicSolver {
 public:
  explicit PeriodicSolver(PeriodicWindow window = {}) : window_(window) {}

  // The self-dual element P(A) in A + sum vZ[v] B. Throws WindowTooSmall
  // when no window up to the expansion limit contains it.
  const PeriodicResult& basis(const Alcove& a);
  LaurentPoly poly(const Alcove& b, const Alcove& a) { return basis(a).element.coeff(b); }

  // Solve in one fixed window; returns false when the window is too small.
  bool solve(const Alcove& a, int radius, int hecke_length, int degree, PeriodicResult& out);

 private:
  const PeriodicElt& e_times_std(const IVec& weight, const Alcove& y);
  PeriodicWindow window_;
  KLTable kl_;
  std::unordered_map<Alcove, PeriodicResult, AlcoveHash> cache_;
  std::map<std::pair<IVec, IVec>, PeriodicElt> products_;  // (weight, address of y) -> E * H_y
};

struct GenericResult {
  LaurentPoly value;
  int n0 = 0;
  int depth = 0;
};

// q_{B,A} as the stabilized h_{y_n, w_n} for y_n, w_n the elements of
// B + n gamma, A + n gamma. Requires B <= A; throws UndecidedError when the
// run does not stabilize.
GenericResult generic_poly(const Alcove& b, const Alcove& a, KLTable& kl, const SemiInfConfig& cfg = {});

}  // namespace semiflag
