#pragma once

// Moment graphs on Y = ZR^vee (+) Z delta whose vertices are alcoves. Two
// vertices are joined when they differ by an affine reflection s_{alpha,n};
// the edge carries the label alpha + n delta with alpha > 0.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semiflag/alcove.hpp"

namespace semiflag {

struct LatticeVec {
  IVec root;  // simple-coroot coordinates
  int delta = 0;
  bool operator==(const LatticeVec&) const = default;
  // "a1+a2-2d"
  std::string to_string() const;
};

enum class OrderKind { Bruhat, SemiInfinite, Explicit };

struct MomentEdge {
  int lower = 0, upper = 0;  // vertex ids, lower < upper in the order
  int root = 0;              // positive root index
  int n = 0;
  LatticeVec label;
};

class MomentGraph {
 public:
  // Builds the full subgraph on `vertices` with the given order. For
  // Explicit orders `relation[i][j]` (i <= j) must be supplied.
  MomentGraph(RootSystemPtr rs, std::vector<Alcove> vertices, OrderKind order, SemiInfConfig cfg = {},
              std::vector<std::vector<bool>> relation = {});

  const RootSystem& rs() const { return *rs_; }
  const RootSystemPtr& rs_ptr() const { return rs_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Alcove>& vertices() const { return vertices_; }
  const Alcove& vertex(int i) const { return vertices_[i]; }
  std::optional<int> find(const Alcove& a) const;
  const std::vector<MomentEdge>& edges() const { return edges_; }
  OrderKind order() const { return order_; }
  std::string order_name() const;
  // Rank of Y: the number of variables of S.
  int lattice_rank() const { return rs_->rank() + 1; }

  // Edge ids whose lower (resp. upper) end is v.
  const std::vector<int>& up_edges(int v) const { return up_[v]; }
  const std::vector<int>& down_edges(int v) const { return down_[v]; }

  // Grading compatible with the order: length (Bruhat) or level.
  int grade(int v) const { return grade_[v]; }
  // Order oracle, cached.
  bool leq(int i, int j) const;
  // The unique maximal vertex; throws std::invalid_argument if not unique.
  int top() const;
  // Vertices sorted by decreasing grade (a linear extension of the reversed
  // order), ties broken by vertex id.
  std::vector<int> top_down() const;

  std::string to_json() const;
  std::string to_dot() const;

 private:
  RootSystemPtr rs_;
  std::vector<Alcove> vertices_;
  OrderKind order_;
  SemiInfConfig cfg_;
  std::unordered_map<Alcove, int, AlcoveHash> index_;
  std::vector<MomentEdge> edges_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> grade_;
  mutable std::vector<std::vector<signed char>> rel_;  // -1 unknown
};

LatticeVec edge_label(const RootSystem& rs, int root, int n);

// Vertices [e, w], Bruhat order.
MomentGraph bruhat_graph(const Alcove& w);
// Vertices [b, a] in the semi-infinite order.
MomentGraph semiinf_graph(const Alcove& b, const Alcove& a, const SemiInfConfig& cfg = {});
// Membership in the stable part: k_alpha <= -1 for all simple alpha.
bool stable_subgraph_filter(const Alcove& a);

}  // namespace semiflag
