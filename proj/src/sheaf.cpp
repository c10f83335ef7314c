#include "semiflag/sheaf.hpp"

#include <stdexcept>

namespace semiflag {

IVec label_form(const MomentEdge& e) {
  IVec f = e.label.root;
  f.push_back(e.label.delta);
  return f;
}

void SheafData::finalize_layouts() {
  const MomentGraph& g = *graph;
  PolyRingPtr s = poly_ring(g.lattice_rank());
  stalk_layouts.clear();
  edge_layouts.clear();
  edge_quotients.clear();
  for (int v = 0; v < g.size(); ++v) stalk_layouts.push_back(free_layout(s, stalk_degrees[v]));
  for (const MomentEdge& e : g.edges()) {
    auto q = std::make_shared<LinearQuotient>(s, label_form(e));
    std::vector<Block> blocks;
    for (int deg : stalk_degrees[e.upper]) blocks.push_back({deg, q});
    edge_quotients.push_back(q);
    edge_layouts.push_back(std::make_shared<Layout>(s, std::move(blocks)));
  }
  upper_maps_.clear();
  lower_maps_.clear();
  upper_maps_.resize(g.edges().size());
  lower_maps_.resize(g.edges().size());
}

const FreeMap& SheafData::restriction(int edge, bool upper) const {
  auto& slot = upper ? upper_maps_[edge] : lower_maps_[edge];
  if (!slot) {
    const MomentEdge& e = graph->edges()[edge];
    if (upper) {
      std::vector<SparseVec> images;
      const LayoutPtr& el = edge_layouts[edge];
      for (int i = 0; i < el->num_blocks(); ++i)
        images.push_back(SparseVec::unit(el->offset(el->blocks()[i].shift, i)));
      slot = std::make_unique<FreeMap>(stalk_layouts[e.upper], el, std::move(images));
    } else {
      slot = std::make_unique<FreeMap>(stalk_layouts[e.lower], edge_layouts[edge], lower_images[edge]);
    }
  }
  return *slot;
}

SheafData structure_sheaf(std::shared_ptr<const MomentGraph> g, int maxdeg) {
  SheafData sh;
  sh.graph = std::move(g);
  sh.maxdeg = maxdeg;
  sh.stalk_degrees.assign(sh.graph->size(), IVec{0});
  sh.lower_images.assign(sh.graph->edges().size(), {SparseVec::unit(0)});
  sh.finalize_layouts();
  return sh;
}

GradedModule sections_over(const SheafData& sheaf, const std::vector<int>& subset) {
  const MomentGraph& g = *sheaf.graph;
  PolyRingPtr s = poly_ring(g.lattice_rank());
  std::vector<int> pos(g.size(), -1);
  std::vector<Block> blocks;
  std::vector<int> first_block;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    int v = subset[k];
    if (pos[v] >= 0) throw std::invalid_argument("sections_over: repeated vertex");
    pos[v] = static_cast<int>(k);
    first_block.push_back(static_cast<int>(blocks.size()));
    for (int deg : sheaf.stalk_degrees[v]) blocks.push_back({deg, nullptr});
  }
  first_block.push_back(static_cast<int>(blocks.size()));
  auto ambient = std::make_shared<Layout>(s, std::move(blocks));

  std::vector<int> inner;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e)
    if (pos[g.edges()[e].lower] >= 0 && pos[g.edges()[e].upper] >= 0) inner.push_back(e);

  GradedModule m;
  m.ambient = ambient;
  m.maxdeg = sheaf.maxdeg;
  m.basis.resize(sheaf.maxdeg + 1);
  for (int d = 0; d <= sheaf.maxdeg; ++d) {
    // rows: the edge modules of inner edges stacked
    std::vector<int> row_off{0};
    for (int e : inner) row_off.push_back(row_off.back() + sheaf.edge_layouts[e]->dim(d));
    std::vector<SparseVec> cols(ambient->dim(d));
    for (std::size_t k = 0; k < subset.size(); ++k) {
      int v = subset[k];
      int base = ambient->offset(d, first_block[k]);
      int len = ambient->offset(d, first_block[k + 1]) - base;
      for (std::size_t r = 0; r < inner.size(); ++r) {
        const MomentEdge& e = g.edges()[inner[r]];
        if (e.upper != v && e.lower != v) continue;
        bool up = e.upper == v;
        const auto& rc = sheaf.restriction(inner[r], up).columns(d);
        for (int i = 0; i < len; ++i) cols[base + i].axpy(up ? 1 : -1, rc[i].shifted(row_off[r]));
      }
    }
    Echelon ech(true);
    for (const SparseVec& c : cols) ech.insert(c);
    Echelon kb;
    for (const SparseVec& k : ech.kernel()) kb.insert(k);
    m.basis[d] = kb.basis();
  }
  return m;
}

LayoutPtr upper_edge_layout(const SheafData& sheaf, int x) {
  std::vector<Block> blocks;
  for (int e : sheaf.graph->up_edges(x))
    for (const Block& b : sheaf.edge_layouts[e]->blocks()) blocks.push_back(b);
  return std::make_shared<Layout>(poly_ring(sheaf.graph->lattice_rank()), std::move(blocks));
}

GradedModule rho_delta_image(const SheafData& sheaf, int x) {
  const MomentGraph& g = *sheaf.graph;
  std::vector<int> above;
  for (int y = 0; y < g.size(); ++y)
    if (y != x && g.leq(x, y)) above.push_back(y);
  GradedModule gamma = sections_over(sheaf, above);
  LayoutPtr target = upper_edge_layout(sheaf, x);

  std::vector<int> pos(g.size(), -1), first_block(g.size(), 0);
  int nb = 0;
  for (std::size_t k = 0; k < above.size(); ++k) {
    pos[above[k]] = static_cast<int>(k);
    first_block[above[k]] = nb;
    nb += static_cast<int>(sheaf.stalk_degrees[above[k]].size());
  }
  GradedModule m;
  m.ambient = target;
  m.maxdeg = sheaf.maxdeg;
  m.basis.resize(sheaf.maxdeg + 1);
  for (int d = 0; d <= sheaf.maxdeg; ++d) {
    Echelon ech;
    for (const SparseVec& sec : gamma.basis[d]) {
      SparseVec img;
      int tb = 0;
      for (int e : g.up_edges(x)) {
        int y = g.edges()[e].upper;
        int lo = gamma.ambient->offset(d, first_block[y]);
        int hi = gamma.ambient->offset(d, first_block[y] + static_cast<int>(sheaf.stalk_degrees[y].size()));
        SparseVec fy;
        for (const auto& [i, c] : sec)
          if (i >= lo && i < hi) fy.push_back(i - lo, c);
        img.axpy(1, sheaf.restriction(e, true).apply(d, fy).shifted(target->offset(d, tb)));
        tb += sheaf.edge_layouts[e]->num_blocks();
      }
      ech.insert(img);
    }
    m.basis[d] = ech.basis();
  }
  return m;
}

GradedModule structure_sections(std::shared_ptr<const MomentGraph> g, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  SheafData sh = structure_sheaf(g, cutoff / 2);
  std::vector<int> all(g->size());
  for (int v = 0; v < g->size(); ++v) all[v] = v;
  return sections_over(sh, all);
}

IVec tensor_dims(const GradedModule& m) {
  IVec out(m.maxdeg + 1, 0);
  for (const int d : projective_cover(m, 0).degrees) ++out[d];
  return out;
}

}  // namespace semiflag
