#include "semiflag/bm.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "semiflag/error.hpp"

namespace semiflag {

int default_cutoff(const MomentGraph& g, int top) {
  int lo = g.grade(top);
  for (int v = 0; v < g.size(); ++v) lo = std::min(lo, g.grade(v));
  return 2 * (g.grade(top) - lo) + 4;
}

namespace {

void check_order(const MomentGraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.size()) throw std::invalid_argument("processing order has the wrong size");
  std::vector<int> pos(g.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    if (v < 0 || v >= g.size() || pos[v] >= 0) throw std::invalid_argument("processing order is not a permutation");
    pos[v] = static_cast<int>(k);
  }
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (x != y && pos[x] < pos[y] && g.leq(x, y))
        throw std::invalid_argument("processing order is not a linear extension of the reversed order");
}

struct Section {
  int deg = 0;
  std::vector<SparseVec> val;
};

}  // namespace

BMSheaf build_bm(std::shared_ptr<const MomentGraph> gp, int top, const BMOptions& opts) {
  const MomentGraph& g = *gp;
  if (top < 0 || top >= g.size()) throw std::invalid_argument("build_bm: top vertex out of range");
  if (g.top() != top) throw std::invalid_argument("build_bm: top is not the maximal vertex");
  int cutoff = opts.cutoff < 0 ? default_cutoff(g, top) : opts.cutoff;
  if (cutoff % 2) throw std::invalid_argument("build_bm: cutoff must be even");
  int maxdeg = cutoff / 2;
  std::vector<int> order = opts.order.empty() ? g.top_down() : opts.order;
  check_order(g, order);

  PolyRingPtr s = poly_ring(g.lattice_rank());
  int ne = static_cast<int>(g.edges().size());
  BMSheaf out;
  out.top = top;
  out.cutoff = cutoff;
  out.data.graph = gp;
  out.data.maxdeg = maxdeg;
  out.data.stalk_degrees.assign(g.size(), {});
  out.data.lower_images.assign(ne, {});

  std::vector<LayoutPtr> stalk(g.size());
  std::vector<LayoutPtr> edge_layout(ne);
  std::vector<std::unique_ptr<FreeMap>> upper_res(ne);
  std::vector<Section> sections;

  for (int x : order) {
    IVec& degs = out.data.stalk_degrees[x];
    const auto& ups = g.up_edges(x);
    if (x == top) {
      degs = {0};
      stalk[x] = free_layout(s, degs);
      Section sec{0, std::vector<SparseVec>(g.size())};
      sec.val[x] = SparseVec::unit(0);
      sections.push_back(std::move(sec));
    } else if (ups.empty()) {
      stalk[x] = free_layout(s, degs);
    } else {
      std::vector<Block> blocks;
      std::vector<int> first;
      for (int e : ups) {
        first.push_back(static_cast<int>(blocks.size()));
        for (const Block& b : edge_layout[e]->blocks()) blocks.push_back(b);
      }
      first.push_back(static_cast<int>(blocks.size()));
      auto target = std::make_shared<Layout>(s, std::move(blocks));

      std::vector<std::pair<int, SparseVec>> images;
      for (const Section& sec : sections) {
        SparseVec img;
        if (sec.deg <= maxdeg)
          for (std::size_t k = 0; k < ups.size(); ++k) {
            int e = ups[k], y = g.edges()[e].upper;
            img.axpy(1, upper_res[e]->apply(sec.deg, sec.val[y]).shifted(target->offset(sec.deg, first[k])));
          }
        images.push_back({sec.deg, std::move(img)});
      }
      GradedModule m = generated_submodule(target, images, maxdeg);
      FreeGradedModule cover = projective_cover(m, opts.headroom);
      degs = cover.degrees;
      stalk[x] = free_layout(s, degs);

      for (std::size_t k = 0; k < ups.size(); ++k) {
        int e = ups[k];
        for (std::size_t i = 0; i < degs.size(); ++i) {
          int lo = target->offset(degs[i], first[k]), hi = target->offset(degs[i], first[k + 1]);
          SparseVec part;
          for (const auto& [idx, c] : cover.reps[i])
            if (idx >= lo && idx < hi) part.push_back(idx - lo, c);
          out.data.lower_images[e].push_back(std::move(part));
        }
      }

      FreeMap p(stalk[x], target, cover.reps);
      std::vector<SparseVec> prev_kernel;
      std::vector<Section> fresh;
      for (int d = 0; d <= maxdeg; ++d) {
        Echelon ech(true);
        for (const SparseVec& c : p.columns(d)) ech.insert(c);
        for (std::size_t k = 0; k < sections.size(); ++k) {
          if (sections[k].deg != d) continue;
          SparseVec comb;
          if (!ech.reduce(images[k].second, &comb).empty())
            throw InternalError("BM construction: a section does not lift through the projective cover");
          sections[k].val[x] = std::move(comb);
        }
        Echelon span;
        for (const SparseVec& v : prev_kernel)
          for (int j = 0; j < s->nvars(); ++j) span.insert(stalk[x]->mul_var(d - 1, v, j));
        for (const SparseVec& k : ech.kernel())
          if (span.insert(k)) {
            Section sec{d, std::vector<SparseVec>(g.size())};
            sec.val[x] = k;
            fresh.push_back(std::move(sec));
          }
        prev_kernel = ech.kernel();
      }
      for (Section& sec : fresh) sections.push_back(std::move(sec));
    }

    for (int e : g.down_edges(x)) {
      std::vector<Block> blocks;
      auto q = std::make_shared<LinearQuotient>(s, label_form(g.edges()[e]));
      for (int deg : degs) blocks.push_back({deg, q});
      edge_layout[e] = std::make_shared<Layout>(s, std::move(blocks));
      std::vector<SparseVec> units;
      for (int i = 0; i < edge_layout[e]->num_blocks(); ++i)
        units.push_back(SparseVec::unit(edge_layout[e]->offset(degs[i], i)));
      upper_res[e] = std::make_unique<FreeMap>(stalk[x], edge_layout[e], std::move(units));
    }
  }

  out.data.finalize_layouts();
  for (Section& sec : sections) {
    out.section_degrees.push_back({sec.deg});
    out.sections.push_back(std::move(sec.val));
  }
  return out;
}

std::vector<int> random_linear_extension(const MomentGraph& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> remaining(g.size()), order;
  for (int v = 0; v < g.size(); ++v) remaining[v] = v;
  while (!remaining.empty()) {
    std::vector<int> cand;
    for (int x : remaining) {
      bool maximal = true;
      for (int y : remaining)
        if (y != x && g.leq(x, y)) {
          maximal = false;
          break;
        }
      if (maximal) cand.push_back(x);
    }
    int pick = cand[std::uniform_int_distribution<int>(0, static_cast<int>(cand.size()) - 1)(rng)];
    order.push_back(pick);
    remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
  }
  return order;
}

std::string IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = name;
  j["pass"] = pass;
  j["cases"] = nlohmann::ordered_json::array();
  for (const RankCase& c : cases) {
    nlohmann::ordered_json x;
    x["vertex"] = nlohmann::ordered_json::parse(to_string(c.vertex));
    x["word"] = format_word(reduced_word(c.vertex));
    x["rank_bm"] = nlohmann::ordered_json::parse(c.rank_bm.to_json());
    x["rank_hecke"] = nlohmann::ordered_json::parse(c.rank_hecke.to_json());
    x["equal"] = c.equal;
    j["cases"].push_back(x);
  }
  return j.dump();
}

namespace {

void add_case(IdentityReport& r, const Alcove& v, LaurentPoly lhs, LaurentPoly rhs) {
  RankCase c{v, std::move(lhs), std::move(rhs), false};
  c.equal = c.rank_bm == c.rank_hecke;
  r.pass = r.pass && c.equal;
  r.cases.push_back(std::move(c));
}

}  // namespace

IdentityReport verify_kl_identity(const Alcove& w, KLTable& kl, int cutoff) {
  auto g = std::make_shared<const MomentGraph>(bruhat_graph(w));
  BMSheaf sh = build_bm(g, *g->find(w), {cutoff, {}, 2});
  IdentityReport r;
  r.name = "kl-vs-bm";
  for (int v = 0; v < g->size(); ++v) {
    const Alcove& y = g->vertex(v);
    add_case(r, y, sh.stalk_rank(v), kl.kl_poly(y, w).shift(length(y) - length(w)));
  }
  return r;
}

IdentityReport verify_semiinf_identity(const Alcove& a, const Alcove& b, KLTable& kl, int cutoff,
                                       const SemiInfConfig& cfg) {
  auto g = std::make_shared<const MomentGraph>(semiinf_graph(b, a, cfg));
  BMSheaf sh = build_bm(g, *g->find(a), {cutoff, {}, 2});
  IdentityReport r;
  r.name = "semiinf";
  for (int v = 0; v < g->size(); ++v) {
    const Alcove& c = g->vertex(v);
    add_case(r, c, sh.stalk_rank(v), generic_poly(c, a, kl, cfg).value.shift(semiinf_delta(a, c)));
  }
  return r;
}

IdentityReport verify_translation_invariance(const Alcove& a, const Alcove& b, const IVec& gamma, int cutoff,
                                             const SemiInfConfig& cfg) {
  auto g1 = std::make_shared<const MomentGraph>(semiinf_graph(b, a, cfg));
  Alcove a2 = translate_root(a, gamma), b2 = translate_root(b, gamma);
  auto g2 = std::make_shared<const MomentGraph>(semiinf_graph(b2, a2, cfg));
  BMSheaf s1 = build_bm(g1, *g1->find(a), {cutoff, {}, 2});
  BMSheaf s2 = build_bm(g2, *g2->find(a2), {cutoff, {}, 2});
  IdentityReport r;
  r.name = "translation";
  if (g1->size() != g2->size()) r.pass = false;
  for (int v = 0; v < g1->size(); ++v) {
    auto w = g2->find(translate_root(g1->vertex(v), gamma));
    if (!w) {
      r.pass = false;
      continue;
    }
    add_case(r, g1->vertex(v), s1.stalk_rank(v), s2.stalk_rank(*w));
  }
  return r;
}

}  // namespace semiflag
