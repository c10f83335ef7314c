#include "semiflag/roots.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace semiflag {

namespace {

std::vector<QVec> inverse_matrix(const IMat& m) {
  int n = static_cast<int>(m.size());
  std::vector<QVec> a(n, QVec(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<QVec> out(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::vector<QVec> gram_matrix(const CartanType& t) {
  int n = t.rank;
  std::vector<QVec> g(n, QVec(n, Rational(0)));
  auto link = [&](int i, int j, Rational v) { g[i][j] = g[j][i] = v; };
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      g[n - 1][n - 1] = 1;
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      g[n - 1][n - 1] = 4;
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, Rational(-1, 2));
      g[2][2] = g[3][3] = 1;
      break;
    case 'G':
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

}  // namespace

CartanType CartanType::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2) throw std::invalid_argument("bad Cartan type '" + text + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string digits = s.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 2)
    throw std::invalid_argument("bad Cartan type '" + text + "'");
  t.rank = std::stoi(digits);
  bool ok = false;
  switch (t.family) {
    case 'A': ok = t.rank >= 1; break;
    case 'B': ok = t.rank >= 2; break;
    case 'C': ok = t.rank >= 2; break;
    case 'D': ok = t.rank >= 4; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default: throw std::invalid_argument("unknown Cartan family '" + std::string(1, s[0]) + "'");
  }
  if (!ok) throw std::invalid_argument("rank " + digits + " is not admissible for family " + t.family);
  return t;
}

std::string CartanType::name() const { return std::string(1, family) + std::to_string(rank); }

RootSystem::RootSystem(CartanType type) : type_(type) {
  // Re-validate in case the struct was filled by hand.
  type_ = CartanType::parse(type.name());
  gram_ = gram_matrix(type_);
  int n = rank();
  cartan_.assign(n, IVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = 2 * gram_[i][j] / gram_[j][j];
      cartan_[i][j] = static_cast<int>(c.get_num().get_si());
    }
  cartan_inv_ = inverse_matrix(cartan_);
  omega_ = cartan_inv_;
  build_roots();
  build_weyl();
}

void RootSystem::build_roots() {
  int n = rank();
  auto norm = [&](const IVec& v) {
    Rational s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += v[i] * v[j] * gram_[i][j];
    return s;
  };
  // Closure by root strings: beta + alpha_i is a root iff q > 0 where
  // p - q = <beta, alpha_i^vee> and p is the downward string length.
  std::vector<IVec> roots;
  std::unordered_map<IVec, int, IVecHash> seen;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    seen[e] = static_cast<int>(roots.size());
    roots.push_back(e);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    IVec beta = roots[k];
    for (int i = 0; i < n; ++i) {
      int p = 0;
      IVec down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      int c = 0;
      for (int j = 0; j < n; ++j) c += beta[j] * cartan_[j][i];
      int q = p - c;
      if (q > 0) {
        IVec up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = static_cast<int>(roots.size());
          roots.push_back(up);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const IVec& a, const IVec& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;  // alpha_1 before alpha_2 within a height
  });
  pos_ = roots;
  int np = num_positive();
  if (np > 64) throw std::invalid_argument("root system " + type_.name() + " is too large");
  root_index_.clear();
  for (int a = 0; a < np; ++a) root_index_[pos_[a]] = a;
  simple_idx_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    simple_idx_[i] = root_index_.at(e);
  }
  copos_.assign(np, IVec(n));
  pair_.assign(n, IVec(np));
  for (int a = 0; a < np; ++a) {
    Rational len = norm(pos_[a]);
    for (int i = 0; i < n; ++i) {
      Rational c = pos_[a][i] * gram_[i][i] / len;
      copos_[a][i] = static_cast<int>(c.get_num().get_si());
      Rational ip = 0;
      for (int j = 0; j < n; ++j) ip += pos_[a][j] * gram_[i][j];
      Rational pr = 2 * ip / len;
      pair_[i][a] = static_cast<int>(pr.get_num().get_si());
    }
  }
  highest_ = np - 1;
  int best = -1;
  for (int a = 0; a < np; ++a) {
    int h = 0;
    for (int x : copos_[a]) h += x;
    if (h > best) {
      best = h;
      theta_ = a;
    }
  }
}

int RootSystem::height(int a) const {
  int h = 0;
  for (int x : pos_[a]) h += x;
  return h;
}

int RootSystem::root_lookup(const IVec& v) const {
  auto it = root_index_.find(v);
  if (it != root_index_.end()) return it->second + 1;
  IVec neg(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  it = root_index_.find(neg);
  if (it != root_index_.end()) return -(it->second + 1);
  return 0;
}

int RootSystem::pair(const IVec& v, int a) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += v[i] * pair_[i][a];
  return s;
}

Rational RootSystem::pair(const QVec& v, int a) const {
  if (static_cast<int>(v.size()) != rank()) throw std::invalid_argument("pairing: dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) s += v[i] * pair_[i][a];
  return s;
}

int RootSystem::pair_weight(const IVec& t, int a) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += t[i] * copos_[a][i];
  return s;
}

bool RootSystem::weight_to_root(const IVec& t, IVec& out) const {
  int n = rank();
  out.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += t[j] * cartan_inv_[j][i];
    if (s.get_den() != 1) return false;
    out[i] = static_cast<int>(s.get_num().get_si());
  }
  return true;
}

IVec RootSystem::root_to_weight(const IVec& v) const {
  int n = rank();
  IVec t(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) t[j] += v[i] * cartan_[i][j];
  return t;
}

IVec RootSystem::apply(int x, const IVec& v) const {
  const IMat& m = w0_[x].matrix;
  int n = rank();
  IVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

QVec RootSystem::apply(int x, const QVec& v) const {
  const IMat& m = w0_[x].matrix;
  int n = rank();
  QVec out(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

int RootSystem::weyl_mul(int x, int y) const {
  IVec k = apply(x, apply(y, key_vector_));
  return by_key_.at(k);
}

int RootSystem::weyl_from_inversions(std::uint64_t mask) const {
  auto it = by_mask_.find(mask);
  return it == by_mask_.end() ? -1 : it->second;
}

void RootSystem::build_weyl() {
  int n = rank();
  int np = num_positive();
  // 2 rho: the sum of the positive roots.
  key_vector_.assign(n, 0);
  for (const auto& r : pos_)
    for (int i = 0; i < n; ++i) key_vector_[i] += r[i];

  auto reflect = [&](int i, IVec v) {
    int c = 0;
    for (int j = 0; j < n; ++j) c += v[j] * cartan_[j][i];
    v[i] -= c;
    return v;
  };

  FiniteWeylElt e;
  e.matrix.assign(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) e.matrix[i][i] = 1;
  w0_.push_back(e);
  std::vector<IVec> keys{key_vector_};
  by_key_[key_vector_] = 0;
  for (std::size_t k = 0; k < w0_.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      IVec key = reflect(i, keys[k]);
      if (by_key_.count(key)) continue;
      if (w0_.size() >= kMaxWeylOrder)
        throw std::invalid_argument("finite Weyl group of " + type_.name() + " exceeds the supported size");
      FiniteWeylElt y;
      y.word.push_back(i);
      y.word.insert(y.word.end(), w0_[k].word.begin(), w0_[k].word.end());
      y.length = w0_[k].length + 1;
      y.matrix = w0_[k].matrix;
      // Left multiplication by s_i acts on the image vectors (columns).
      for (int j = 0; j < n; ++j) {
        int c = 0;
        for (int r = 0; r < n; ++r) c += y.matrix[r][j] * cartan_[r][i];
        y.matrix[i][j] -= c;
      }
      by_key_[key] = static_cast<int>(w0_.size());
      keys.push_back(key);
      w0_.push_back(std::move(y));
    }
  }
  int order = weyl_order();
  left_.assign(order, IVec(n));
  right_.assign(order, IVec(n));
  root_image_.assign(order, IVec(np));
  inverse_.assign(order, 0);
  inv_mask_.assign(order, 0);
  for (int x = 0; x < order; ++x) {
    for (int i = 0; i < n; ++i) {
      left_[x][i] = by_key_.at(reflect(i, keys[x]));
      IVec k = keys[x];
      IVec img = apply(x, pos_[simple_idx_[i]]);
      for (int j = 0; j < n; ++j) k[j] -= 2 * img[j];
      right_[x][i] = by_key_.at(k);
    }
    std::uint64_t mask = 0;
    for (int a = 0; a < np; ++a) {
      root_image_[x][a] = root_lookup(apply(x, pos_[a]));
      if (root_image_[x][a] < 0) mask |= (std::uint64_t(1) << a);
    }
    inv_mask_[x] = mask;
    by_mask_[mask] = x;
    if (std::popcount(mask) != w0_[x].length) throw std::logic_error("W0 length mismatch");
  }
  for (int x = 0; x < order; ++x) {
    int y = 0;
    for (int i : w0_[x].word) y = left_[y][i];
    inverse_[x] = y;
  }
  reflection_.assign(np, 0);
  for (int a = 0; a < np; ++a) {
    IVec k = key_vector_;
    int c = pair(k, a);
    for (int j = 0; j < n; ++j) k[j] -= c * pos_[a][j];
    reflection_[a] = by_key_.at(k);
  }
}

}  // namespace semiflag
