#include "semiflag/alcove.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "semiflag/error.hpp"

namespace semiflag {

RootSystemPtr root_system(const std::string& type) {
  static std::mutex mu;
  static std::map<std::string, RootSystemPtr> cache;
  CartanType t = CartanType::parse(type);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.name());
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(t);
  cache[t.name()] = rs;
  return rs;
}

Alcove::Alcove(RootSystemPtr rs, int x, IVec lambda) : rs_(std::move(rs)), x_(x), lambda_(std::move(lambda)) {
  const RootSystem& r = *rs_;
  int np = r.num_positive();
  int xinv = r.weyl_inverse(x_);
  address_.resize(np);
  for (int a = 0; a < np; ++a) {
    int p = r.pair(lambda_, a);
    address_[a] = r.weyl_root_image(xinv, a) > 0 ? p - 1 : p;
  }
}

Alcove fundamental_alcove(RootSystemPtr rs) {
  int n = rs->rank();
  return Alcove(rs, 0, IVec(n, 0));
}

Alcove alcove_from_address(RootSystemPtr rs, const IVec& address) {
  const RootSystem& r = *rs;
  int n = r.rank();
  int np = r.num_positive();
  if (static_cast<int>(address.size()) != np) throw std::invalid_argument("alcove address has wrong length");
  // <lambda, alpha_i^vee> is k_i or k_i + 1 on simple roots.
  for (int bits = 0; bits < (1 << n); ++bits) {
    IVec t(n);
    for (int i = 0; i < n; ++i) t[i] = address[r.simple_index(i)] + ((bits >> i) & 1);
    IVec lambda;
    if (!r.weight_to_root(t, lambda)) continue;
    std::uint64_t mask = 0;
    bool ok = true;
    for (int a = 0; a < np && ok; ++a) {
      int d = r.pair(lambda, a) - address[a];
      if (d == 0)
        mask |= std::uint64_t(1) << a;
      else if (d != 1)
        ok = false;
    }
    if (!ok) continue;
    int xinv = r.weyl_from_inversions(mask);
    if (xinv < 0) continue;
    return Alcove(rs, r.weyl_inverse(xinv), lambda);
  }
  throw std::invalid_argument("address does not describe an alcove");
}

Alcove alcove_from_literal(RootSystemPtr rs, const IVec& weight, const IVec& w0_word) {
  const RootSystem& r = *rs;
  if (static_cast<int>(weight.size()) != r.rank())
    throw std::invalid_argument("alcove literal: translation has wrong length");
  int x = 0;
  for (int i : w0_word) {
    if (i < 1 || i > r.rank()) throw std::invalid_argument("alcove literal: w0 letter out of range");
    x = r.weyl_right(x, i - 1);
  }
  return translate(Alcove(rs, x, IVec(r.rank(), 0)), weight);
}

Alcove cross_wall(const Alcove& a, int i) {
  const RootSystem& r = a.rs();
  if (i < 0 || i > r.rank()) throw std::invalid_argument("simple reflection index out of range");
  if (i >= 1) return Alcove(a.rs_ptr(), r.weyl_right(a.weyl(), i - 1), a.lambda());
  int th = r.theta();
  int x = a.weyl();
  IVec img = r.apply(x, r.root(th));
  IVec lam = a.lambda();
  for (int j = 0; j < r.rank(); ++j) lam[j] -= img[j];
  return Alcove(a.rs_ptr(), r.weyl_mul(x, r.reflection(th)), lam);
}

Alcove reflect(const Alcove& a, int root, int n) {
  const RootSystem& r = a.rs();
  // s_{alpha,n} t_lambda x = t_{s_alpha(lambda) + n alpha} s_alpha x
  int c = r.pair(a.lambda(), root);
  IVec lam = a.lambda();
  const IVec& al = r.root(root);
  for (int j = 0; j < r.rank(); ++j) lam[j] += (n - c) * al[j];
  return Alcove(a.rs_ptr(), r.weyl_mul(r.reflection(root), a.weyl()), lam);
}

Alcove left_mul(int i, const Alcove& a) {
  const RootSystem& r = a.rs();
  if (i < 0 || i > r.rank()) throw std::invalid_argument("simple reflection index out of range");
  if (i == 0) return reflect(a, r.theta(), -1);
  return reflect(a, r.simple_index(i - 1), 0);
}

Alcove translate(const Alcove& a, const IVec& weight) {
  const RootSystem& r = a.rs();
  if (static_cast<int>(weight.size()) != r.rank()) throw std::invalid_argument("translation has wrong length");
  IVec lam;
  if (r.weight_to_root(weight, lam)) return translate_root(a, lam);
  IVec k = a.address();
  for (int b = 0; b < r.num_positive(); ++b) k[b] += r.pair_weight(weight, b);
  return alcove_from_address(a.rs_ptr(), k);
}

Alcove translate_root(const Alcove& a, const IVec& root) {
  IVec lam = a.lambda();
  if (lam.size() != root.size()) throw std::invalid_argument("translation has wrong length");
  for (std::size_t j = 0; j < lam.size(); ++j) lam[j] += root[j];
  return Alcove(a.rs_ptr(), a.weyl(), lam);
}

int length(const Alcove& a) {
  int l = 0;
  for (int k : a.address()) l += std::abs(k + 1);
  return l;
}

bool is_right_descent(const Alcove& a, int i) { return length(cross_wall(a, i)) < length(a); }

IVec reduced_word(const Alcove& a) {
  IVec rev;
  Alcove cur = a;
  int l = length(cur);
  int n = a.rs().rank();
  while (l > 0) {
    bool found = false;
    for (int i = 0; i <= n; ++i) {
      Alcove next = cross_wall(cur, i);
      int ln = length(next);
      if (ln < l) {
        rev.push_back(i);
        cur = next;
        l = ln;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no descent found for an element of positive length");
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

Alcove from_word(RootSystemPtr rs, const IVec& word) {
  Alcove a = fundamental_alcove(rs);
  for (int i : word) a = cross_wall(a, i);
  return a;
}

IVec parse_word(const std::string& text) {
  IVec out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::string digits = tok;
    if (!digits.empty() && (digits[0] == 's' || digits[0] == 'S')) digits = digits.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("bad word token '" + tok + "'");
    out.push_back(std::stoi(digits));
  }
  return out;
}

Alcove parse_alcove(RootSystemPtr rs, const std::string& text) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(" \t"));
  if (t.empty() || t[0] != '{') return from_word(rs, parse_word(t));
  nlohmann::json j = nlohmann::json::parse(t, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("alcove literal is not valid JSON: " + text);
  if (!j.contains("t") || !j["t"].is_array()) throw std::invalid_argument("alcove literal needs a \"t\" array");
  IVec weight;
  for (const auto& c : j["t"]) {
    if (!c.is_number_integer()) throw std::invalid_argument("alcove literal: translation coordinates must be integers");
    weight.push_back(c.get<int>());
  }
  const auto w0 = j.find("w0");
  if (w0 != j.end() && !w0->is_string()) throw std::invalid_argument("alcove literal: \"w0\" must be a word string");
  return alcove_from_literal(rs, weight, parse_word(w0 == j.end() ? "" : w0->get<std::string>()));
}

std::string format_word(const IVec& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(word[i]);
  }
  return s;
}

int level(const Alcove& a) {
  int h = 0;
  for (int k : a.address()) h -= k;
  return h;
}

int semiinf_delta(const Alcove& a, const Alcove& b) { return level(b) - level(a); }

bool is_stable(const Alcove& a) {
  const RootSystem& r = a.rs();
  for (int i = 0; i < r.rank(); ++i)
    if (a.k(r.simple_index(i)) > -1) return false;
  return true;
}

QVec interior_point(const Alcove& a) {
  const RootSystem& r = a.rs();
  int n = r.rank();
  // Vertices of A0-: 0 and -omega_i / c_i, theta^vee = sum c_i alpha_i^vee.
  QVec bary(n, Rational(0));
  const IVec& c = r.coroot(r.theta());
  for (int i = 0; i < n; ++i) {
    const QVec& w = r.fundamental_weight(i);
    for (int j = 0; j < n; ++j) bary[j] -= w[j] / c[i];
  }
  for (auto& x : bary) x /= (n + 1);
  QVec p = r.apply(a.weyl(), bary);
  for (int j = 0; j < n; ++j) p[j] += a.lambda()[j];
  return p;
}

bool contains_point(const Alcove& a, const QVec& p) {
  const RootSystem& r = a.rs();
  for (int b = 0; b < r.num_positive(); ++b) {
    Rational v = r.pair(p, b);
    if (!(v > a.k(b) && v < a.k(b) + 1)) return false;
  }
  return true;
}

IVec literal_weight(const Alcove& a) {
  // a = x(A0-) + lambda with lambda in ZR; weight coordinates are integral.
  return a.rs().root_to_weight(a.lambda());
}

IVec literal_w0_word(const Alcove& a) {
  IVec w = a.rs().weyl(a.weyl()).word;
  for (auto& i : w) i += 1;
  return w;
}

std::string to_string(const Alcove& a) {
  std::string s = "{\"t\":[";
  IVec t = literal_weight(a);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  s += "],\"w0\":\"" + format_word(literal_w0_word(a)) + "\"}";
  return s;
}

void sort_canonical(std::vector<Alcove>& v) {
  std::vector<std::pair<std::pair<int, IVec>, Alcove>> keyed;
  keyed.reserve(v.size());
  for (auto& a : v) keyed.push_back({{length(a), reduced_word(a)}, a});
  std::sort(keyed.begin(), keyed.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = keyed[i].second;
}

bool bruhat_leq(const Alcove& y0, const Alcove& w0) {
  Alcove y = y0, w = w0;
  int ly = length(y), lw = length(w);
  int n = w.rs().rank();
  while (true) {
    if (ly > lw) return false;
    if (ly == lw) return y == w;
    if (ly == 0) return true;
    for (int i = 0; i <= n; ++i) {
      Alcove ws = cross_wall(w, i);
      if (length(ws) >= lw) continue;
      Alcove ys = cross_wall(y, i);
      int lys = length(ys);
      if (lys < ly) {
        y = ys;
        ly = lys;
      }
      w = ws;
      --lw;
      break;
    }
  }
}

std::vector<Alcove> bruhat_interval(const Alcove& w) {
  // Subword property: [e, w] is the set of subword products.
  IVec word = reduced_word(w);
  std::vector<Alcove> items{fundamental_alcove(w.rs_ptr())};
  std::unordered_set<Alcove, AlcoveHash> seen(items.begin(), items.end());
  for (int i : word) {
    std::size_t m = items.size();
    for (std::size_t j = 0; j < m; ++j) {
      Alcove b = cross_wall(items[j], i);
      if (seen.insert(b).second) items.push_back(b);
    }
  }
  sort_canonical(items);
  return items;
}

std::vector<Alcove> bruhat_lower_covers(const Alcove& w) {
  std::vector<Alcove> out;
  int lw = length(w);
  const RootSystem& r = w.rs();
  // t w < w iff the wall of t separates A0- from w.
  for (int a = 0; a < r.num_positive(); ++a) {
    int k = w.k(a);
    int lo = k >= 0 ? 0 : k + 1, hi = k >= 0 ? k : -1;
    for (int n = lo; n <= hi; ++n) {
      Alcove t = reflect(w, a, n);
      if (length(t) == lw - 1) out.push_back(t);
    }
  }
  return out;
}

std::vector<Alcove> bruhat_interval_between(const Alcove& y, const Alcove& w) {
  if (!bruhat_leq(y, w)) return {};
  std::vector<Alcove> items{w};
  std::unordered_set<Alcove, AlcoveHash> seen{w};
  int ly = length(y);
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (length(items[j]) <= ly) continue;
    for (const Alcove& z : bruhat_lower_covers(items[j]))
      if (seen.insert(z).second && bruhat_leq(y, z)) items.push_back(z);
  }
  sort_canonical(items);
  return items;
}

std::vector<Alcove> ball(RootSystemPtr rs, int n) {
  std::vector<Alcove> items{fundamental_alcove(rs)};
  std::unordered_set<Alcove, AlcoveHash> seen(items.begin(), items.end());
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (length(items[j]) >= n) continue;
    for (int i = 0; i <= rs->rank(); ++i) {
      Alcove b = cross_wall(items[j], i);
      if (length(b) <= n && seen.insert(b).second) items.push_back(b);
    }
  }
  sort_canonical(items);
  return items;
}

IVec antidominant_direction(const RootSystem& rs) {
  IVec out;
  for (int m = 1; m <= 2; ++m) {
    IVec t(rs.rank(), -m);
    if (rs.weight_to_root(t, out)) return out;
  }
  // Never reached: 2 rho is a sum of roots.
  throw InternalError("no antidominant root-lattice direction");
}

bool semiinf_leq(const Alcove& a, const Alcove& b, const SemiInfConfig& cfg, Stabilization* info) {
  if (cfg.stabilization_window < 2 || cfg.max_translation_depth < cfg.stabilization_window)
    throw std::invalid_argument("need max_translation_depth >= stabilization_window >= 2");
  if (a == b) {
    if (info) *info = {true, 0, 0};
    return true;
  }
  IVec gamma = antidominant_direction(a.rs());
  auto antidominant = [](const Alcove& c) {
    for (int k : c.address())
      if (k > -1) return false;
    return true;
  };
  Alcove an = a, bn = b;
  int n = 0;
  while (n <= cfg.max_translation_depth && !(antidominant(an) && antidominant(bn))) {
    an = translate_root(an, gamma);
    bn = translate_root(bn, gamma);
    ++n;
  }
  int run = 0;
  bool last = false;
  int start = n;
  for (; n <= cfg.max_translation_depth; ++n) {
    bool v = bruhat_leq(an, bn);
    if (run > 0 && v == last) {
      ++run;
    } else {
      run = 1;
      last = v;
      start = n;
    }
    if (run >= cfg.stabilization_window) {
      if (info) *info = {last, start, n};
      return last;
    }
    an = translate_root(an, gamma);
    bn = translate_root(bn, gamma);
  }
  throw UndecidedError("semi-infinite comparison did not stabilize within depth " +
                           std::to_string(cfg.max_translation_depth),
                       cfg.max_translation_depth);
}

std::vector<Alcove> semiinf_up_relations(const Alcove& c, int max_level) {
  std::vector<Alcove> out;
  const RootSystem& r = c.rs();
  int lc = level(c);
  for (int a = 0; a < r.num_positive(); ++a) {
    // c < s_{alpha,n} c iff k_alpha >= n; the level grows as n decreases.
    int prev = lc;
    for (int n = c.k(a);; --n) {
      Alcove up = reflect(c, a, n);
      int l = level(up);
      if (l <= prev) throw InternalError("semi-infinite level is not monotone along a reflection family");
      prev = l;
      if (l > max_level) break;
      out.push_back(up);
    }
  }
  return out;
}

std::vector<Alcove> semiinf_interval(const Alcove& b, const Alcove& a, const SemiInfConfig& cfg) {
  if (!semiinf_leq(b, a, cfg)) throw std::invalid_argument("semiinf_interval: lower end is not below upper end");
  int top = level(a);
  std::vector<Alcove> items{b};
  std::unordered_set<Alcove, AlcoveHash> seen{b};
  for (std::size_t j = 0; j < items.size(); ++j) {
    for (const Alcove& c : semiinf_up_relations(items[j], top)) {
      if (!seen.insert(c).second) continue;
      if (semiinf_leq(c, a, cfg)) items.push_back(c);
    }
  }
  std::sort(items.begin(), items.end(), [](const Alcove& p, const Alcove& q) {
    int lp = level(p), lq = level(q);
    if (lp != lq) return lp < lq;
    return p < q;
  });
  return items;
}

}  // namespace semiflag
