#include "semiflag/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "semiflag/error.hpp"

namespace semiflag {

void SuiteReport::add(std::string input, std::string lhs, std::string rhs, bool ok) {
  cases.push_back({std::move(input), std::move(lhs), std::move(rhs), ok});
  pass = pass && ok;
}

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CheckCase& c) { return !c.pass; }));
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["version"] = "semiflag 0.1.0";
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  j["config"] = cfg;
  j["pass"] = pass;
  j["cases_total"] = cases.size();
  j["cases_failed"] = failures();
  j["cases"] = nlohmann::ordered_json::array();
  for (const CheckCase& c : cases) j["cases"].push_back({{"input", c.input}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
  return j.dump();
}

std::string SuiteReport::to_text() const {
  std::string out = suite + ": " + (pass ? "PASS" : "FAIL") + " (" + std::to_string(cases.size() - failures()) + "/" +
                    std::to_string(cases.size()) + " cases)\n";
  for (const CheckCase& c : cases)
    if (!c.pass) out += "  failed: " + c.input + ": " + c.lhs + " != " + c.rhs + "\n";
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kl-vs-bm", "semiinf",      "translation",   "gkm",
                                              "hecke-axioms", "order-limit", "periodic-props"};
  return names;
}

namespace {

std::string word(const Alcove& a) {
  std::string w = format_word(reduced_word(a));
  return w.empty() ? "e" : w;
}

std::string hecke_string(const HeckeElt& h) {
  std::string out;
  for (const auto& [y, c] : h.sorted()) out += (out.empty() ? "" : " + ") + ("(" + c.to_string() + ")" + word(y));
  return out.empty() ? "0" : out;
}

std::string join_ranks(const BMSheaf& b) {
  std::string out;
  for (int v = 0; v < b.graph().size(); ++v) out += (v ? ", " : "") + b.stalk_rank(v).to_string();
  return out;
}

std::string dims_string(const IVec& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? " " : "") + std::to_string(d[i]);
  return out;
}

int pick(int value, int fallback) { return value >= 0 ? value : fallback; }

void echo(SuiteReport& r, const SuiteOptions& o, std::vector<std::pair<std::string, std::string>> extra) {
  r.config.push_back({"type", o.type});
  for (auto& kv : extra) r.config.push_back(std::move(kv));
  r.config.push_back({"max_translation_depth", std::to_string(o.cfg.max_translation_depth)});
  r.config.push_back({"stabilization_window", std::to_string(o.cfg.stabilization_window)});
  r.config.push_back({"cutoff", o.cutoff < 0 ? "auto" : std::to_string(o.cutoff)});
}

// Order of s * t in the affine Weyl group, 0 when infinite.
int braid_order(const RootSystemPtr& rs, int s, int t) {
  Alcove e = fundamental_alcove(rs), cur = e;
  for (int m = 1; m <= 12; ++m) {
    cur = cross_wall(cross_wall(cur, s), t);
    if (cur == e) return m;
  }
  return 0;
}

}  // namespace

std::vector<std::string> shuffled_ranks(std::shared_ptr<const MomentGraph> g, int top, int shuffles, unsigned seed,
                                        int cutoff) {
  std::vector<std::string> out;
  BMOptions o;
  o.cutoff = cutoff;
  out.push_back(join_ranks(build_bm(g, top, o)));
  for (int k = 0; k < shuffles; ++k) {
    o.order = random_linear_extension(*g, seed + static_cast<unsigned>(k));
    out.push_back(join_ranks(build_bm(g, top, o)));
  }
  return out;
}

HeckeElt kl_basis_by_solve(const Alcove& w) {
  auto iv = bruhat_interval(w);
  int lw = length(w);
  std::map<std::pair<IVec, int>, int> rows;
  auto row = [&](const Alcove& z, int e) { return rows.emplace(std::make_pair(z.address(), e), rows.size()).first->second; };
  auto to_vec = [&](const HeckeElt& h) {
    SparseVec out;
    for (const auto& [z, c] : h.terms())
      for (const auto& [e, x] : c.to_map()) out.add(row(z, e), Rational(static_cast<long>(x)));
    return out;
  };
  std::vector<SparseVec> cols;
  std::vector<std::pair<Alcove, int>> unknowns;
  for (const Alcove& y : iv) {
    if (y == w) continue;
    HeckeElt hy = HeckeElt::standard(y), by = bar(hy);
    for (int d = 1; d <= lw - length(y); ++d) {
      cols.push_back(to_vec(by * LaurentPoly::monomial(-d) - hy * LaurentPoly::monomial(d)));
      unknowns.emplace_back(y, d);
    }
  }
  HeckeElt hw = HeckeElt::standard(w);
  SparseVec sol;
  std::vector<SparseVec> ker;
  if (!solve_columns(cols, to_vec(hw - bar(hw)), sol, &ker) || !ker.empty())
    throw InternalError("bar-fixed element is not unique or does not exist");
  HeckeElt out = hw;
  for (const auto& [j, c] : sol) {
    if (c.get_den() != 1) throw InternalError("bar-fixed element has non-integral coefficients");
    out.add(unknowns[j].first, LaurentPoly::monomial(unknowns[j].second, c.get_num().get_si()));
  }
  return out;
}

std::vector<std::pair<Alcove, Alcove>> semiinf_intervals(const SuiteOptions& opts) {
  auto rs = root_system(opts.type);
  int radius = pick(opts.radius, rs->rank() == 1 ? 8 : rs->rank() == 2 ? 3 : 2);
  auto els = ball(rs, radius);
  std::vector<std::pair<Alcove, Alcove>> cand;
  for (const Alcove& a : els)
    for (const Alcove& b : els) {
      int d = level(a) - level(b);
      if (d <= 0 || d > opts.max_delta) continue;
      try {
        if (semiinf_leq(b, a, opts.cfg)) cand.push_back({b, a});
      } catch (const UndecidedError&) {
      }
    }
  std::stable_sort(cand.begin(), cand.end(), [](const auto& p, const auto& q) {
    return level(p.second) - level(p.first) > level(q.second) - level(q.first);
  });
  std::vector<std::pair<Alcove, Alcove>> out;
  int count = pick(opts.count, rs->rank() == 1 ? -1 : 12);
  for (const auto& [b, a] : cand) {
    if (count >= 0 && static_cast<int>(out.size()) >= count) break;
    if (static_cast<int>(semiinf_interval(b, a, opts.cfg).size()) <= opts.max_vertices) out.push_back({b, a});
  }
  return out;
}

SuiteReport suite_kl_vs_bm(const SuiteOptions& opts, KLTable& kl) {
  auto rs = root_system(opts.type);
  int ml = pick(opts.max_length, opts.type == "A1" ? 8 : opts.type == "A2" ? 5 : 3);
  SuiteReport r;
  r.suite = "kl-vs-bm";
  echo(r, opts, {{"max_length", std::to_string(ml)}, {"shuffles", std::to_string(opts.shuffles)}});
  for (const Alcove& w : ball(rs, ml)) {
    std::string in = "w=" + word(w);
    try {
      IdentityReport id = verify_kl_identity(w, kl, opts.cutoff);
      for (const RankCase& c : id.cases) {
        r.add_equal(in + " y=" + word(c.vertex), c.rank_bm.to_string(), c.rank_hecke.to_string());
        if (!c.rank_bm.in_nonneg_v_minus_2()) r.add(in + " y=" + word(c.vertex) + " rank in Z>=0[v^-2]", c.rank_bm.to_string(), "", false);
      }
      if (opts.shuffles > 0) {
        auto g = std::make_shared<const MomentGraph>(bruhat_graph(w));
        auto ranks = shuffled_ranks(g, *g->find(w), opts.shuffles, opts.seed, opts.cutoff);
        for (std::size_t k = 1; k < ranks.size(); ++k) r.add_equal(in + " shuffle " + std::to_string(k), ranks[0], ranks[k]);
      }
    } catch (const std::exception& e) {
      r.add(in, std::string("error: ") + e.what(), "", false);
    }
  }
  return r;
}

SuiteReport suite_semiinf(const SuiteOptions& opts, KLTable& kl) {
  SuiteReport r;
  r.suite = "semiinf";
  auto ivs = semiinf_intervals(opts);
  echo(r, opts,
       {{"radius", std::to_string(opts.radius)}, {"max_delta", std::to_string(opts.max_delta)},
        {"max_vertices", std::to_string(opts.max_vertices)}, {"intervals", std::to_string(ivs.size())},
        {"shuffles", std::to_string(opts.shuffles)}});
  for (const auto& [b, a] : ivs) {
    std::string in = "A=" + to_string(a) + " B=" + to_string(b);
    try {
      IdentityReport id = verify_semiinf_identity(a, b, kl, opts.cutoff, opts.cfg);
      for (const RankCase& c : id.cases) {
        r.add_equal(in + " C=" + to_string(c.vertex), c.rank_bm.to_string(), c.rank_hecke.to_string());
        if (!c.rank_bm.in_nonneg_v_minus_2()) r.add(in + " C=" + to_string(c.vertex) + " rank in Z>=0[v^-2]", c.rank_bm.to_string(), "", false);
      }
      if (opts.shuffles > 0) {
        auto g = std::make_shared<const MomentGraph>(semiinf_graph(b, a, opts.cfg));
        auto ranks = shuffled_ranks(g, *g->find(a), opts.shuffles, opts.seed, opts.cutoff);
        for (std::size_t k = 1; k < ranks.size(); ++k) r.add_equal(in + " shuffle " + std::to_string(k), ranks[0], ranks[k]);
      }
    } catch (const std::exception& e) {
      r.add(in, std::string("error: ") + e.what(), "", false);
    }
  }
  return r;
}

SuiteReport suite_translation(const SuiteOptions& opts) {
  auto rs = root_system(opts.type);
  IVec gamma = antidominant_direction(*rs);
  SuiteReport r;
  r.suite = "translation";
  auto ivs = semiinf_intervals(opts);
  std::string gs;
  for (int c : gamma) gs += (gs.empty() ? "" : " ") + std::to_string(c);
  echo(r, opts,
       {{"radius", std::to_string(opts.radius)}, {"max_delta", std::to_string(opts.max_delta)},
        {"max_vertices", std::to_string(opts.max_vertices)}, {"intervals", std::to_string(ivs.size())},
        {"gamma", gs}});
  for (const auto& [b, a] : ivs) {
    std::string in = "A=" + to_string(a) + " B=" + to_string(b);
    try {
      IdentityReport id = verify_translation_invariance(a, b, gamma, opts.cutoff, opts.cfg);
      if (!id.pass && id.cases.empty()) r.add(in, "vertex sets differ", "", false);
      for (const RankCase& c : id.cases) r.add_equal(in + " C=" + to_string(c.vertex), c.rank_bm.to_string(), c.rank_hecke.to_string());
      auto verts = semiinf_interval(b, a, opts.cfg);
      std::string lhs, rhs;
      for (const Alcove& x : verts)
        for (const Alcove& y : verts) {
          lhs += semiinf_leq(x, y, opts.cfg) ? '1' : '0';
          rhs += semiinf_leq(translate_root(x, gamma), translate_root(y, gamma), opts.cfg) ? '1' : '0';
        }
      r.add_equal(in + " order", lhs, rhs);
    } catch (const std::exception& e) {
      r.add(in, std::string("error: ") + e.what(), "", false);
    }
  }
  return r;
}

SuiteReport suite_gkm(const SuiteOptions& opts) {
  auto rs = root_system(opts.type);
  int ml = pick(opts.max_length, 4);
  SuiteReport r;
  r.suite = "gkm";
  echo(r, opts, {{"max_length", std::to_string(ml)}});
  for (const Alcove& w : ball(rs, ml)) {
    try {
      auto g = std::make_shared<const MomentGraph>(bruhat_graph(w));
      int cutoff = opts.cutoff < 0 ? 2 * length(w) + 4 : opts.cutoff;
      IVec t = tensor_dims(structure_sections(g, cutoff));
      IVec expect(cutoff / 2 + 1, 0);
      for (const Alcove& y : g->vertices())
        if (length(y) <= cutoff / 2) ++expect[length(y)];
      r.add_equal("w=" + word(w), dims_string(t), dims_string(expect));
    } catch (const std::exception& e) {
      r.add("w=" + word(w), std::string("error: ") + e.what(), "", false);
    }
  }
  return r;
}

SuiteReport suite_hecke_axioms(const SuiteOptions& opts, KLTable& kl) {
  auto rs = root_system(opts.type);
  int ml = pick(opts.max_length, 4);
  SuiteReport r;
  r.suite = "hecke-axioms";
  echo(r, opts, {{"max_length", std::to_string(ml)}});
  const LaurentPoly v = LaurentPoly::monomial(1), vinv = LaurentPoly::monomial(-1);
  auto els = ball(rs, ml);
  int n = rs->rank();
  for (const Alcove& x : els) {
    HeckeElt hx = HeckeElt::standard(x);
    for (int s = 0; s <= n; ++s) {
      HeckeElt hs = mul_std_gen(hx, s);
      r.add_equal("quadratic x=" + word(x) + " s=" + std::to_string(s), hecke_string(mul_std_gen(hs, s)),
                  hecke_string(hx + hs * (vinv - v)));
      for (int t = s + 1; t <= n; ++t) {
        int m = braid_order(rs, s, t);
        if (!m) continue;
        HeckeElt a = hx, b = hx;
        for (int j = 0; j < m; ++j) {
          a = mul_std_gen(a, j % 2 ? t : s);
          b = mul_std_gen(b, j % 2 ? s : t);
        }
        r.add_equal("braid x=" + word(x) + " s=" + std::to_string(s) + " t=" + std::to_string(t), hecke_string(a),
                    hecke_string(b));
      }
    }
    r.add_equal("bar^2 x=" + word(x), hecke_string(bar(bar(hx))), hecke_string(hx));
  }
  for (const Alcove& w : els) {
    try {
      const HeckeElt& b = kl.kl_basis(w);
      r.add_equal("bar-fixed w=" + word(w), hecke_string(bar(b)), hecke_string(b));
      bool shape = b.coeff(w) == LaurentPoly(1);
      for (const auto& [y, c] : b.terms())
        if (y != w && !c.in_positive_part()) shape = false;
      r.add("degree w=" + word(w), hecke_string(b), "H_w + sum vZ[v] H_y", shape);
      const auto& iv = kl.interval(w);
      bool inv = true;
      for (const Alcove& u : iv) {
        LaurentPoly sum;
        for (const Alcove& y : iv) {
          LaurentPoly term = kl.kl_poly(u, y) * kl.inverse_kl(y, w);
          sum += ((length(u) - length(y)) % 2 == 0) ? term : -term;
        }
        if (sum != LaurentPoly(u == w ? 1 : 0)) inv = false;
      }
      r.add("inverse w=" + word(w), inv ? "identity" : "mismatch", "identity", inv);
    } catch (const std::exception& e) {
      r.add("w=" + word(w), std::string("error: ") + e.what(), "", false);
    }
  }
  int oracle = 0;
  for (const Alcove& w : ball(rs, std::max(ml, 6))) {
    if (bruhat_interval(w).size() > 12) continue;
    ++oracle;
    try {
      r.add_equal("brute-force w=" + word(w), hecke_string(kl.kl_basis(w)), hecke_string(kl_basis_by_solve(w)));
    } catch (const std::exception& e) {
      r.add("brute-force w=" + word(w), std::string("error: ") + e.what(), "", false);
    }
  }
  r.config.push_back({"brute_force_intervals", std::to_string(oracle)});
  return r;
}

SuiteReport suite_order_limit(const SuiteOptions& opts) {
  auto rs = root_system(opts.type);
  int radius = pick(opts.radius, 4), count = pick(opts.count, 100);
  SuiteReport r;
  r.suite = "order-limit";
  echo(r, opts, {{"radius", std::to_string(radius)}, {"pairs", std::to_string(count)}, {"seed", std::to_string(opts.seed)}});
  auto els = ball(rs, radius);
  IVec gamma = antidominant_direction(*rs);
  std::mt19937 rng(opts.seed);
  std::uniform_int_distribution<int> dist(0, static_cast<int>(els.size()) - 1);
  for (int k = 0; k < count; ++k) {
    const Alcove &a = els[dist(rng)], &b = els[dist(rng)];
    std::string in = "A=" + to_string(a) + " B=" + to_string(b);
    try {
      Stabilization info;
      bool value = semiinf_leq(a, b, opts.cfg, &info);
      r.add("n0 " + in, std::to_string(info.n0), "<= 40", info.n0 <= 40);
      std::string run, expect(11, value ? '1' : '0');
      for (int n = info.n0; n <= info.n0 + 10; ++n) {
        IVec shift = gamma;
        for (int& c : shift) c *= n;
        run += bruhat_leq(translate_root(a, shift), translate_root(b, shift)) ? '1' : '0';
      }
      r.add_equal("run " + in, run, expect);
    } catch (const std::exception& e) {
      r.add(in, std::string("error: ") + e.what(), "", false);
    }
  }
  return r;
}

SuiteReport suite_periodic_props(const SuiteOptions& opts) {
  auto rs = root_system(opts.type);
  int radius = pick(opts.radius, 2);
  SuiteReport r;
  r.suite = "periodic-props";
  echo(r, opts, {{"radius", std::to_string(radius)}, {"window_radius", std::to_string(opts.window.radius)}});
  PeriodicSolver solver(opts.window);
  auto els = ball(rs, radius);
  for (const Alcove& a : els) {
    std::string in = "A=" + to_string(a);
    try {
      const PeriodicResult& p = solver.basis(a);
      r.add_equal("p_AA " + in, p.element.coeff(a).to_string(), "1");
      bool pos = true;
      for (const auto& [b, c] : p.element.terms())
        if (b != a && !c.in_positive_part()) pos = false;
      r.add("positive part " + in, pos ? "vZ[v]" : "outside", "vZ[v]", pos);
      r.add_equal("witness " + in, hecke_string(p.witness.expand(rs)), hecke_string(p.element));
      r.add_equal("self-dual " + in, hecke_string(p.witness.bar().expand(rs)), hecke_string(p.element));
    } catch (const std::exception& e) {
      r.add(in, std::string("error: ") + e.what(), "", false);
    }
  }
  // module axioms on a sample element
  PeriodicElt p;
  for (std::size_t k = 0; k < els.size() && k < 6; ++k) p.add(els[k], LaurentPoly::monomial(static_cast<int>(k % 3) - 1, 1 + static_cast<int>(k)));
  const LaurentPoly v = LaurentPoly::monomial(1), vinv = LaurentPoly::monomial(-1);
  for (int s = 0; s <= rs->rank(); ++s) {
    PeriodicElt q = periodic_act_std_gen(p, s);
    r.add_equal("quadratic s=" + std::to_string(s), hecke_string(periodic_act_std_gen(q, s)), hecke_string(p + q * (vinv - v)));
    for (int t = s + 1; t <= rs->rank(); ++t) {
      int m = braid_order(rs, s, t);
      if (!m) continue;
      PeriodicElt a = p, b = p;
      for (int j = 0; j < m; ++j) {
        a = periodic_act_std_gen(a, j % 2 ? t : s);
        b = periodic_act_std_gen(b, j % 2 ? s : t);
      }
      r.add_equal("braid s=" + std::to_string(s) + " t=" + std::to_string(t), hecke_string(a), hecke_string(b));
    }
  }
  return r;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  KLTable kl;
  if (name == "kl-vs-bm") return suite_kl_vs_bm(opts, kl);
  if (name == "semiinf") return suite_semiinf(opts, kl);
  if (name == "translation") return suite_translation(opts);
  if (name == "gkm") return suite_gkm(opts);
  if (name == "hecke-axioms") return suite_hecke_axioms(opts, kl);
  if (name == "order-limit") return suite_order_limit(opts);
  if (name == "periodic-props") return suite_periodic_props(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace semiflag
