#include "semiflag/periodic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "semiflag/error.hpp"

namespace semiflag {

PeriodicElt periodic_act_gen(const PeriodicElt& p, int s) {
  PeriodicElt r;
  const LaurentPoly v = LaurentPoly::monomial(1), vinv = LaurentPoly::monomial(-1);
  for (const auto& [a, c] : p.terms()) {
    Alcove as = cross_wall(a, s);
    r.add(as, c);
    r.add(a, c * (level(as) > level(a) ? v : vinv));
  }
  return r;
}

PeriodicElt periodic_act_std_gen(const PeriodicElt& p, int s) {
  return periodic_act_gen(p, s) - p * LaurentPoly::monomial(1);
}

PeriodicElt periodic_act(const PeriodicElt& p, const HeckeElt& h) {
  PeriodicElt r;
  for (const auto& [y, c] : h.terms()) {
    PeriodicElt t = p;
    for (int s : reduced_word(y)) t = periodic_act_std_gen(t, s);
    r = r + t * c;
  }
  return r;
}

PeriodicElt e_lambda(RootSystemPtr rs, const IVec& weight) {
  PeriodicElt e;
  for (int x = 0; x < rs->weyl_order(); ++x) {
    Alcove a(rs, x, IVec(rs->rank(), 0));
    e.add(translate(a, weight), LaurentPoly::monomial(rs->weyl(x).length));
  }
  return e;
}

namespace {

// Accumulates rational multiples of integral Laurent combinations.
struct QAccumulator {
  std::unordered_map<Alcove, QLaurent, AlcoveHash> terms;

  void add(const PeriodicElt& p, const QLaurent& c) {
    for (const auto& [a, poly] : p.terms()) {
      QLaurent& dst = terms[a];
      for (const auto& [e, x] : poly.to_map())
        for (const auto& [d, q] : c) {
          Rational& slot = dst[e + d];
          slot += q * static_cast<long>(x);
        }
    }
  }

  PeriodicElt finish() const {
    PeriodicElt out;
    for (const auto& [a, ql] : terms) {
      std::map<int, std::int64_t> m;
      for (const auto& [e, q] : ql) {
        if (q == 0) continue;
        if (q.get_den() != 1) throw InternalError("periodic element has a non-integral coefficient");
        if (!q.get_num().fits_slong_p()) throw std::overflow_error("periodic coefficient overflow");
        m[e] = q.get_num().get_si();
      }
      out.add(a, LaurentPoly::from_map(m));
    }
    return out;
  }
};

QLaurent symmetric(int d, const Rational& a) {
  QLaurent c;
  c[d] += a;
  if (d) c[-d] += a;
  return c;
}

// mu with A0- + mu == c, if any (weight coordinates).
bool translate_of_fundamental(const Alcove& c, IVec& weight) {
  const RootSystem& r = c.rs();
  weight.assign(r.rank(), 0);
  for (int i = 0; i < r.rank(); ++i) weight[i] = c.k(r.simple_index(i)) + 1;
  for (int a = 0; a < r.num_positive(); ++a)
    if (c.k(a) + 1 != r.pair_weight(weight, a)) return false;
  return true;
}

}  // namespace

PeriodicElt P0Witness::expand(RootSystemPtr rs) const {
  QAccumulator acc;
  for (const auto& t : terms) acc.add(periodic_act(e_lambda(rs, t.weight), t.h), t.coeff);
  return acc.finish();
}

P0Witness P0Witness::bar() const {
  P0Witness out;
  for (const auto& t : terms) {
    WitnessTerm b;
    b.weight = t.weight;
    b.h = semiflag::bar(t.h);
    for (const auto& [e, q] : t.coeff) b.coeff[-e] += q;
    out.terms.push_back(std::move(b));
  }
  return out;
}

const PeriodicElt& PeriodicSolver::e_times_std(const IVec& weight, const Alcove& y) {
  auto key = std::make_pair(weight, y.address());
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;
  PeriodicElt value;
  if (length(y) == 0) {
    value = e_lambda(y.rs_ptr(), weight);
  } else {
    int s = -1;
    for (int i = 0; i <= y.rs().rank() && s < 0; ++i)
      if (is_right_descent(y, i)) s = i;
    value = periodic_act_std_gen(e_times_std(weight, cross_wall(y, s)), s);
  }
  return products_.emplace(key, std::move(value)).first->second;
}

bool PeriodicSolver::solve(const Alcove& a, int radius, int hecke_length, int degree, PeriodicResult& out) {
  RootSystemPtr rs = a.rs_ptr();
  // Centres mu with A0- + mu within the gallery ball around a.
  std::vector<Alcove> near{a};
  std::unordered_map<Alcove, int, AlcoveHash> dist{{a, 0}};
  for (std::size_t j = 0; j < near.size(); ++j) {
    int d = dist[near[j]];
    if (d == radius) continue;
    for (int i = 0; i <= rs->rank(); ++i) {
      Alcove b = cross_wall(near[j], i);
      if (dist.emplace(b, d + 1).second) near.push_back(b);
    }
  }
  std::set<IVec> centres;
  for (const Alcove& c : near) {
    IVec mu;
    if (translate_of_fundamental(c, mu)) centres.insert(mu);
  }
  std::vector<Alcove> xs = ball(rs, hecke_length);

  struct Family {
    IVec weight;
    Alcove x;
    PeriodicElt f;
  };
  std::vector<Family> family;
  for (const IVec& mu : centres)
    for (const Alcove& x : xs) {
      PeriodicElt f;
      for (const auto& [y, c] : kl_.kl_basis(x).terms()) f = f + e_times_std(mu, y) * c;
      if (!f.is_zero()) family.push_back({mu, x, std::move(f)});
    }

  // Rows: (alcove, exponent <= 0).
  std::map<std::pair<IVec, int>, int> rows;
  auto row = [&](const Alcove& b, int e) {
    auto key = std::make_pair(b.address(), e);
    auto it = rows.find(key);
    if (it != rows.end()) return it->second;
    int id = static_cast<int>(rows.size());
    rows.emplace(key, id);
    return id;
  };
  std::vector<SparseVec> cols;
  std::vector<std::pair<int, int>> unknown;  // (family index, d)
  for (std::size_t j = 0; j < family.size(); ++j)
    for (int d = 0; d <= degree; ++d) {
      SparseVec col;
      for (const auto& [b, c] : family[j].f.terms())
        for (const auto& [e, x] : c.to_map()) {
          Rational q(static_cast<long>(x));
          if (e + d <= 0) col.add(row(b, e + d), q);
          if (d && e - d <= 0) col.add(row(b, e - d), q);
        }
      cols.push_back(std::move(col));
      unknown.emplace_back(static_cast<int>(j), d);
    }
  SparseVec rhs;
  rhs.add(row(a, 0), Rational(1));
  SparseVec sol;
  std::vector<SparseVec> kernel;
  if (!solve_columns(cols, rhs, sol, &kernel)) return false;

  auto build = [&](const SparseVec& coeffs) {
    QAccumulator acc;
    for (const auto& [u, q] : coeffs) {
      auto [j, d] = unknown[u];
      acc.add(family[j].f, symmetric(d, q));
    }
    return acc;
  };
  for (const auto& k : kernel) {
    QAccumulator acc = build(k);
    for (const auto& [b, ql] : acc.terms)
      for (const auto& [e, q] : ql)
        if (q != 0) throw InternalError("two distinct self-dual solutions for " + to_string(a) + " in one window");
  }
  out.element = build(sol).finish();
  out.witness = P0Witness();
  std::map<int, QLaurent> by_family;
  for (const auto& [u, q] : sol) {
    auto [j, d] = unknown[u];
    for (const auto& [e, x] : symmetric(d, q)) by_family[j][e] += x;
  }
  for (auto& [j, c] : by_family) out.witness.terms.push_back({family[j].weight, kl_.kl_basis(family[j].x), c});
  out.radius = radius;
  out.hecke_length = hecke_length;
  out.degree = degree;
  for (const auto& [b, c] : out.element.terms())
    if (!(b == a ? c - LaurentPoly(1) : c).in_positive_part())
      throw InternalError("periodic solve violated the normalization");
  if (!out.element.coeff(a).in_positive_part() && out.element.coeff(a).coeff(0) != 1)
    throw InternalError("periodic solve lost the leading term");
  return true;
}

const PeriodicResult& PeriodicSolver::basis(const Alcove& a) {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  int r = a.rs().rank();
  int radius = window_.radius >= 0 ? window_.radius : r + 1;
  int hl = window_.hecke_length >= 0 ? window_.hecke_length : r + 1;
  int deg = window_.degree;
  PeriodicResult res;
  for (int step = 0; step <= window_.expansions; ++step) {
    if (solve(a, radius, hl, deg, res)) return cache_.emplace(a, std::move(res)).first->second;
    ++radius;
    ++hl;
    ++deg;
  }
  throw WindowTooSmall("no self-dual periodic element for " + to_string(a) + " within radius " +
                       std::to_string(radius - 1) + ", Hecke length " + std::to_string(hl - 1));
}

GenericResult generic_poly(const Alcove& b, const Alcove& a, KLTable& kl, const SemiInfConfig& cfg) {
  if (!semiinf_leq(b, a, cfg)) throw std::invalid_argument("generic_poly: lower alcove is not below the upper one");
  if (a == b) return {LaurentPoly(1), 0, 0};
  IVec gamma = antidominant_direction(a.rs());
  auto antidominant = [](const Alcove& c) {
    return std::all_of(c.address().begin(), c.address().end(), [](int k) { return k <= -1; });
  };
  Alcove an = a, bn = b;
  int n = 0;
  while (n <= cfg.max_translation_depth && !(antidominant(an) && antidominant(bn))) {
    an = translate_root(an, gamma);
    bn = translate_root(bn, gamma);
    ++n;
  }
  LaurentPoly last;
  int run = 0, start = n;
  for (; n <= cfg.max_translation_depth; ++n) {
    LaurentPoly q = kl.kl_poly(bn, an);
    if (run > 0 && q == last) {
      ++run;
    } else {
      run = 1;
      last = q;
      start = n;
    }
    if (run >= cfg.stabilization_window) return {last, start, n};
    an = translate_root(an, gamma);
    bn = translate_root(bn, gamma);
  }
  throw UndecidedError("generic polynomial did not stabilize within depth " + std::to_string(cfg.max_translation_depth),
                       cfg.max_translation_depth);
}

}  // namespace semiflag
