#include "semiflag/moment_graph.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace semiflag {

std::string LatticeVec::to_string() const {
  std::string s;
  auto term = [&](int c, const std::string& sym) {
    if (!c) return;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? "-" : "+";
    int a = std::abs(c);
    if (a != 1) s += std::to_string(a);
    s += sym;
  };
  for (std::size_t i = 0; i < root.size(); ++i) term(root[i], "a" + std::to_string(i + 1));
  term(delta, "d");
  return s.empty() ? "0" : s;
}

LatticeVec edge_label(const RootSystem& rs, int root, int n) { return {rs.coroot(root), n}; }

MomentGraph::MomentGraph(RootSystemPtr rs, std::vector<Alcove> vertices, OrderKind order, SemiInfConfig cfg,
                         std::vector<std::vector<bool>> relation)
    : rs_(std::move(rs)), vertices_(std::move(vertices)), order_(order), cfg_(cfg) {
  int nv = size();
  for (int i = 0; i < nv; ++i) {
    if (!index_.emplace(vertices_[i], i).second) throw std::invalid_argument("moment graph: repeated vertex");
    grade_.push_back(order_ == OrderKind::SemiInfinite ? level(vertices_[i]) : length(vertices_[i]));
  }
  rel_.assign(nv, std::vector<signed char>(nv, -1));
  if (order_ == OrderKind::Explicit) {
    if (static_cast<int>(relation.size()) != nv) throw std::invalid_argument("moment graph: relation table size");
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) rel_[i][j] = relation[i][j] ? 1 : 0;
  }
  up_.assign(nv, {});
  down_.assign(nv, {});
  int np = rs_->num_positive();
  for (int a = 0; a < np; ++a) {
    int kmin = INT_MAX, kmax = INT_MIN;
    for (const Alcove& v : vertices_) {
      kmin = std::min(kmin, v.k(a));
      kmax = std::max(kmax, v.k(a));
    }
    for (int i = 0; i < nv; ++i) {
      int k = vertices_[i].k(a);
      // reflected address 2n - k - 1 must stay in [kmin, kmax]
      int lo = (kmin + k + 1 + 1) / 2 - 1, hi = (kmax + k + 1) / 2 + 1;
      for (int n = lo; n <= hi; ++n) {
        Alcove r = reflect(vertices_[i], a, n);
        auto it = index_.find(r);
        if (it == index_.end() || it->second <= i) continue;
        int j = it->second;
        MomentEdge e;
        bool i_low = grade_[i] < grade_[j];
        if (grade_[i] == grade_[j]) throw std::logic_error("moment graph: edge within one grade");
        e.lower = i_low ? i : j;
        e.upper = i_low ? j : i;
        e.root = a;
        e.n = n;
        e.label = edge_label(*rs_, a, n);
        edges_.push_back(e);
      }
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const MomentEdge& p, const MomentEdge& q) {
    return std::tie(p.lower, p.upper) < std::tie(q.lower, q.upper);
  });
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    up_[edges_[e].lower].push_back(e);
    down_[edges_[e].upper].push_back(e);
  }
}

std::optional<int> MomentGraph::find(const Alcove& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string MomentGraph::order_name() const {
  switch (order_) {
    case OrderKind::Bruhat: return "bruhat";
    case OrderKind::SemiInfinite: return "semiinfinite";
    default: return "explicit";
  }
}

bool MomentGraph::leq(int i, int j) const {
  signed char& r = rel_[i][j];
  if (r < 0) {
    if (order_ == OrderKind::Bruhat)
      r = bruhat_leq(vertices_[i], vertices_[j]);
    else
      r = semiinf_leq(vertices_[i], vertices_[j], cfg_);
  }
  return r == 1;
}

int MomentGraph::top() const {
  int best = -1;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < size() && maximal; ++j)
      if (j != i && leq(i, j)) maximal = false;
    if (!maximal) continue;
    if (best >= 0) throw std::invalid_argument("moment graph has more than one maximal vertex");
    best = i;
  }
  if (best < 0) throw std::invalid_argument("moment graph has no maximal vertex");
  return best;
}

std::vector<int> MomentGraph::top_down() const {
  std::vector<int> ids(size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](int p, int q) { return grade_[p] > grade_[q]; });
  return ids;
}

std::string MomentGraph::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int i = 0; i < size(); ++i) {
    nlohmann::ordered_json a;
    a["t"] = literal_weight(vertices_[i]);
    a["w0"] = format_word(literal_w0_word(vertices_[i]));
    nlohmann::ordered_json v;
    v["id"] = i;
    v["alcove"] = a;
    v["word"] = format_word(reduced_word(vertices_[i]));
    j["vertices"].push_back(v);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : edges_) {
    nlohmann::ordered_json x;
    x["u"] = e.lower;
    x["v"] = e.upper;
    x["label"] = {{"root", e.label.root}, {"delta", e.label.delta}};
    j["edges"].push_back(x);
  }
  j["order"] = order_name();
  return j.dump();
}

std::string MomentGraph::to_dot() const {
  std::ostringstream out;
  out << "graph moment {\n";
  for (int i = 0; i < size(); ++i) {
    std::string w = format_word(reduced_word(vertices_[i]));
    out << "  v" << i << " [label=\"" << (w.empty() ? "e" : w) << "\"];\n";
  }
  for (const auto& e : edges_)
    out << "  v" << e.lower << " -- v" << e.upper << " [label=\"" << e.label.to_string() << "\"];\n";
  out << "}\n";
  return out.str();
}

MomentGraph bruhat_graph(const Alcove& w) {
  return MomentGraph(w.rs_ptr(), bruhat_interval(w), OrderKind::Bruhat);
}

MomentGraph semiinf_graph(const Alcove& b, const Alcove& a, const SemiInfConfig& cfg) {
  return MomentGraph(a.rs_ptr(), semiinf_interval(b, a, cfg), OrderKind::SemiInfinite, cfg);
}

bool stable_subgraph_filter(const Alcove& a) { return is_stable(a); }

}  // namespace semiflag
