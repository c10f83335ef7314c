#pragma once

// Finite root systems and the finite Weyl group W0. Roots are integer vectors
// in the simple-root basis; weights are stored either in root coordinates
// (rational) or, for the integral weight lattice, by their pairings with the
// simple coroots ("fundamental-weight coordinates").

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "semiflag/linalg.hpp"

namespace semiflag {

using IVec = std::vector<int>;
using QVec = std::vector<Rational>;
using IMat = std::vector<IVec>;

struct CartanType {
  char family = 'A';
  int rank = 1;

  // "A2", "b2", "G2", ... Throws std::invalid_argument on bad input.
  static CartanType parse(const std::string& text);
  std::string name() const;
  bool operator==(const CartanType&) const = default;
};

struct IVecHash {
  std::size_t operator()(const IVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

struct FiniteWeylElt {
  IVec word;    // canonical reduced word, leftmost letter first
  IMat matrix;  // action on root coordinates: (x v)_i = sum_j matrix[i][j] v_j
  int length = 0;
};

class RootSystem {
 public:
  // Hard cap on |W0|; larger groups (E7, E8) are rejected.
  static constexpr std::size_t kMaxWeylOrder = 60000;

  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  const std::vector<QVec>& gram() const { return gram_; }
  // cartan()[i][j] = <alpha_i, alpha_j^vee>
  const IMat& cartan() const { return cartan_; }

  int num_positive() const { return static_cast<int>(pos_.size()); }
  const std::vector<IVec>& positive_roots() const { return pos_; }
  const IVec& root(int a) const { return pos_[a]; }
  // alpha^vee in simple-coroot coordinates.
  const IVec& coroot(int a) const { return copos_[a]; }
  int height(int a) const;
  // Index of the simple root alpha_i among the positive roots.
  int simple_index(int i) const { return simple_idx_[i]; }
  // Signed lookup: a+1 for the positive root a, -(a+1) for its negative, 0 if
  // v is not a root.
  int root_lookup(const IVec& v) const;

  const IVec& highest_root() const { return pos_[highest_]; }
  // The root theta whose coroot is the highest coroot; the affine wall of the
  // fundamental alcove is <v, theta^vee> = -1.
  int theta() const { return theta_; }

  // <v, alpha_a^vee> for v in root coordinates.
  int pair(const IVec& v, int a) const;
  Rational pair(const QVec& v, int a) const;
  // <lambda, alpha_a^vee> for lambda in fundamental-weight coordinates.
  int pair_weight(const IVec& t, int a) const;

  // Fundamental weight omega_i in root coordinates.
  const QVec& fundamental_weight(int i) const { return omega_[i]; }
  // Fundamental-weight coordinates -> root coordinates; false if not in ZR.
  bool weight_to_root(const IVec& t, IVec& out) const;
  IVec root_to_weight(const IVec& v) const;

  // Finite Weyl group.
  int weyl_order() const { return static_cast<int>(w0_.size()); }
  const FiniteWeylElt& weyl(int x) const { return w0_[x]; }
  const std::vector<FiniteWeylElt>& weyl_group() const { return w0_; }
  int weyl_identity() const { return 0; }
  int weyl_left(int i, int x) const { return left_[x][i]; }
  int weyl_right(int x, int i) const { return right_[x][i]; }
  int weyl_inverse(int x) const { return inverse_[x]; }
  int weyl_mul(int x, int y) const;
  // Signed index (as root_lookup) of x(alpha_a).
  int weyl_root_image(int x, int a) const { return root_image_[x][a]; }
  // Index of the reflection s_alpha_a in W0.
  int reflection(int a) const { return reflection_[a]; }
  // Element y with {a > 0 : y(alpha_a) < 0} equal to `mask`, or -1.
  int weyl_from_inversions(std::uint64_t mask) const;
  std::uint64_t inversion_mask(int x) const { return inv_mask_[x]; }
  IVec apply(int x, const IVec& v) const;
  QVec apply(int x, const QVec& v) const;

 private:
  void build_roots();
  void build_weyl();
  int lookup_matrix(const IMat& m) const;

  CartanType type_;
  std::vector<QVec> gram_;
  IMat cartan_;
  std::vector<IVec> pos_, copos_;
  std::unordered_map<IVec, int, IVecHash> root_index_;
  IVec simple_idx_;
  IMat pair_;  // pair_[i][a] = <alpha_i, alpha_a^vee>
  int highest_ = 0, theta_ = 0;
  std::vector<QVec> omega_;
  std::vector<QVec> cartan_inv_;  // inverse of cartan_, row i = omega_i

  std::vector<FiniteWeylElt> w0_;
  IMat left_, right_, root_image_;
  IVec inverse_, reflection_;
  std::vector<std::uint64_t> inv_mask_;
  std::unordered_map<std::uint64_t, int> by_mask_;
  std::unordered_map<IVec, int, IVecHash> by_key_;
  IVec key_vector_;  // 2*rho in root coordinates; x is keyed by x(2 rho)
};

}  // namespace semiflag
