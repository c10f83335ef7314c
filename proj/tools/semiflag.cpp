// semiflag: command line front end.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "semiflag/bm.hpp"
#include "semiflag/error.hpp"
#include "semiflag/verify.hpp"

using namespace semiflag;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr int kCacheVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One JSON file per (type, family); never trusted when malformed.
class Cache {
 public:
  Cache(std::string dir, std::string type) : dir_(std::move(dir)), type_(std::move(type)) {}

  std::optional<json> get(const std::string& family, const std::string& key) {
    if (dir_.empty()) return std::nullopt;
    const json& e = load(family)["entries"];
    auto it = e.find(key);
    if (it == e.end()) return std::nullopt;
    return *it;
  }

  void put(const std::string& family, const std::string& key, json value) {
    if (dir_.empty()) return;
    load(family)["entries"][key] = std::move(value);
    dirty_[family] = true;
  }

  // Drops a malformed entry and warns.
  void reject(const std::string& family, const std::string& key) {
    std::cerr << "warning: ignoring malformed cache entry in " << path(family) << "\n";
    load(family)["entries"].erase(key);
    dirty_[family] = true;
  }

  void flush() {
    for (auto& [family, d] : dirty_) {
      if (!d) continue;
      std::error_code ec;
      fs::create_directories(dir_, ec);
      std::string p = path(family), tmp = p + ".tmp";
      {
        std::ofstream out(tmp);
        if (!out) {
          std::cerr << "warning: cannot write cache file " << p << "\n";
          continue;
        }
        out << files_[family].dump() << "\n";
      }
      fs::rename(tmp, p, ec);
      if (ec) std::cerr << "warning: cannot write cache file " << p << "\n";
    }
  }

 private:
  std::string path(const std::string& family) const { return (fs::path(dir_) / ("semiflag-" + type_ + "-" + family + ".json")).string(); }

  json fresh(const std::string& family) const {
    return json{{"format", "semiflag-cache"}, {"version", kCacheVersion}, {"type", type_}, {"family", family},
                {"entries", json::object()}};
  }

  json& load(const std::string& family) {
    auto it = files_.find(family);
    if (it != files_.end()) return it->second;
    json j = fresh(family);
    std::ifstream in(path(family));
    if (in) {
      try {
        json f = json::parse(in);
        if (f.value("format", "") == "semiflag-cache" && f.value("version", 0) == kCacheVersion &&
            f.value("type", "") == type_ && f.value("family", "") == family && f.contains("entries") &&
            f["entries"].is_object())
          j = std::move(f);
        else
          std::cerr << "warning: ignoring cache file with an unexpected header: " << path(family) << "\n";
      } catch (const std::exception&) {
        std::cerr << "warning: ignoring corrupt cache file " << path(family) << "\n";
      }
    }
    return files_[family] = std::move(j);
  }

  std::string dir_, type_;
  std::map<std::string, json> files_;
  std::map<std::string, bool> dirty_;
};

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent polynomial must be an object");
  std::map<int, std::int64_t> m;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    int e = std::stoi(k, &used);
    if (used != k.size() || !v.is_number_integer()) throw std::invalid_argument("bad Laurent polynomial entry");
    m[e] = v.get<std::int64_t>();
  }
  return LaurentPoly::from_map(m);
}

json poly_json(const LaurentPoly& p) { return json::parse(p.to_json()); }

struct Config {
  std::string type = "A1";
  std::string cutoff = "auto";
  std::string cache_dir;
  std::string format = "json";
  int max_depth = 40;
  int window = 3;
  int window_radius = -1;

  int cutoff_value() const {
    if (cutoff == "auto") return -1;
    std::size_t used = 0;
    int c = -1;
    try {
      c = std::stoi(cutoff, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cutoff.size() || c < 0 || c % 2) throw UsageError("--cutoff must be 'auto' or an even integer >= 0");
    return c;
  }
  SemiInfConfig semiinf() const { return {max_depth, window}; }
};

std::string word_or_e(const Alcove& a) {
  std::string w = format_word(reduced_word(a));
  return w.empty() ? "e" : w;
}

void emit(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

void require_format(const Config& cfg, bool dot_ok) {
  if (cfg.format != "json" && cfg.format != "text" && !(dot_ok && cfg.format == "dot"))
    throw UsageError("unsupported --format for this command: " + cfg.format);
}

LaurentPoly cached_poly(Cache& cache, const std::string& family, const std::string& key,
                        const std::function<LaurentPoly()>& compute) {
  if (auto hit = cache.get(family, key)) {
    try {
      return poly_from_json(*hit);
    } catch (const std::exception&) {
      cache.reject(family, key);
    }
  }
  LaurentPoly p = compute();
  cache.put(family, key, poly_json(p));
  return p;
}

int cmd_kl(const Config& cfg, Cache& cache, const std::string& w_text, const std::string& y_text, bool inverse) {
  require_format(cfg, false);
  auto rs = root_system(cfg.type);
  Alcove w = from_word(rs, parse_word(w_text));
  KLTable kl;
  std::string family = inverse ? "inverse-kl" : "kl";
  auto value = [&](const Alcove& y) {
    return cached_poly(cache, family, word_or_e(y) + "|" + word_or_e(w),
                       [&] { return inverse ? kl.inverse_kl(y, w) : kl.kl_poly(y, w); });
  };
  const char* name = inverse ? "inverse" : "h";
  json j{{"type", cfg.type}, {"w", word_or_e(w)}};
  std::string text;
  if (!y_text.empty()) {
    Alcove y = from_word(rs, parse_word(y_text));
    LaurentPoly p = value(y);
    j["y"] = word_or_e(y);
    j[name] = poly_json(p);
    text = p.to_string() + "\n";
  } else {
    j["values"] = json::array();
    for (const Alcove& y : bruhat_interval(w)) {
      LaurentPoly p = value(y);
      j["values"].push_back({{"y", word_or_e(y)}, {name, poly_json(p)}});
      text += word_or_e(y) + "\t" + p.to_string() + "\n";
    }
  }
  emit(cfg, j, text);
  return 0;
}

int cmd_periodic(const Config& cfg, Cache& cache, const std::string& a_text, const std::string& b_text) {
  require_format(cfg, false);
  auto rs = root_system(cfg.type);
  Alcove a = parse_alcove(rs, a_text);
  PeriodicWindow win;
  win.radius = cfg.window_radius;
  std::string key = to_string(a) + "|r" + std::to_string(cfg.window_radius);
  json entry;
  bool have = false;
  if (auto hit = cache.get("periodic", key)) {
    try {
      for (const auto& t : (*hit)["terms"]) (void)poly_from_json(t.at("p"));
      (void)(*hit).at("window").at("radius").get<int>();
      entry = *hit;
      have = true;
    } catch (const std::exception&) {
      cache.reject("periodic", key);
    }
  }
  if (!have) {
    PeriodicSolver solver(win);
    const PeriodicResult& r = solver.basis(a);
    entry["terms"] = json::array();
    for (const auto& [c, p] : r.element.sorted()) entry["terms"].push_back({{"alcove", json::parse(to_string(c))}, {"p", poly_json(p)}});
    entry["window"] = {{"radius", r.radius}, {"hecke_length", r.hecke_length}, {"degree", r.degree}};
    cache.put("periodic", key, entry);
  }
  json j{{"type", cfg.type}, {"A", json::parse(to_string(a))}};
  std::string text;
  if (!b_text.empty()) {
    Alcove b = parse_alcove(rs, b_text);
    LaurentPoly p;
    std::string bl = to_string(b);
    for (const auto& t : entry["terms"])
      if (t["alcove"].dump() == json::parse(bl).dump()) p = poly_from_json(t["p"]);
    j["B"] = json::parse(bl);
    j["p"] = poly_json(p);
    text = p.to_string() + "\n";
  } else {
    j["terms"] = entry["terms"];
    for (const auto& t : entry["terms"]) text += t["alcove"].dump() + "\t" + poly_from_json(t["p"]).to_string() + "\n";
  }
  j["window"] = entry["window"];
  emit(cfg, j, text);
  return 0;
}

int cmd_generic(const Config& cfg, Cache& cache, const std::string& a_text, const std::string& b_text) {
  require_format(cfg, false);
  auto rs = root_system(cfg.type);
  Alcove a = parse_alcove(rs, a_text), b = parse_alcove(rs, b_text);
  SemiInfConfig sc = cfg.semiinf();
  std::string key = to_string(b) + "|" + to_string(a) + "|d" + std::to_string(sc.max_translation_depth) + "w" +
                    std::to_string(sc.stabilization_window);
  GenericResult r;
  bool have = false;
  if (auto hit = cache.get("generic", key)) {
    try {
      r.value = poly_from_json(hit->at("q"));
      r.n0 = hit->at("n0").get<int>();
      r.depth = hit->at("depth").get<int>();
      have = true;
    } catch (const std::exception&) {
      cache.reject("generic", key);
    }
  }
  if (!have) {
    KLTable kl;
    r = generic_poly(b, a, kl, sc);
    cache.put("generic", key, {{"q", poly_json(r.value)}, {"n0", r.n0}, {"depth", r.depth}});
  }
  json j{{"type", cfg.type},
         {"A", json::parse(to_string(a))},
         {"B", json::parse(to_string(b))},
         {"q", poly_json(r.value)},
         {"n0", r.n0},
         {"depth", r.depth},
         {"max_translation_depth", sc.max_translation_depth},
         {"stabilization_window", sc.stabilization_window}};
  emit(cfg, j, r.value.to_string() + "\n");
  return 0;
}

int cmd_bm(const Config& cfg, std::shared_ptr<const MomentGraph> g, const Alcove& top, json head) {
  require_format(cfg, false);
  BMOptions o;
  o.cutoff = cfg.cutoff_value();
  BMSheaf sh = build_bm(g, *g->find(top), o);
  head["cutoff"] = sh.cutoff;
  head["vertices"] = json::array();
  std::string text;
  for (int v = 0; v < g->size(); ++v) {
    const Alcove& y = g->vertex(v);
    head["vertices"].push_back({{"alcove", json::parse(to_string(y))}, {"word", word_or_e(y)}, {"rank", poly_json(sh.stalk_rank(v))}});
    text += word_or_e(y) + "\t" + sh.stalk_rank(v).to_string() + "\n";
  }
  emit(cfg, head, text);
  return 0;
}

int cmd_graph(const Config& cfg, const std::string& kind, const std::string& w_text, const std::string& a_text,
              const std::string& b_text, const std::optional<std::string>& output) {
  if (cfg.format != "json" && cfg.format != "dot") throw UsageError("graph supports --format json or dot");
  if (output && output->empty()) throw UsageError("empty output path");
  auto rs = root_system(cfg.type);
  std::optional<MomentGraph> g;
  if (kind == "bruhat") {
    if (w_text.empty() && !a_text.empty()) throw UsageError("bruhat graph needs --w");
    g.emplace(bruhat_graph(from_word(rs, parse_word(w_text))));
  } else if (kind == "semiinf") {
    if (a_text.empty() || b_text.empty()) throw UsageError("semi-infinite graph needs --a and --b");
    g.emplace(semiinf_graph(parse_alcove(rs, b_text), parse_alcove(rs, a_text), cfg.semiinf()));
  } else {
    throw UsageError("--kind must be bruhat or semiinf");
  }
  std::string body = cfg.format == "dot" ? g->to_dot() : g->to_json() + "\n";
  if (output) {
    std::ofstream out(*output);
    if (!out) throw std::runtime_error("cannot open " + *output);
    out << body;
    if (!out) throw std::runtime_error("cannot write " + *output);
  } else {
    std::cout << body;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alcoves, Kazhdan-Lusztig and periodic polynomials, moment graphs and BM sheaves"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::optional<std::string> cache_flag;
  app.add_option("--type", cfg.type, "Cartan type, e.g. A1, A2, B2");
  app.add_option("--cutoff", cfg.cutoff, "grading cutoff: auto or an even integer");
  app.add_option("--cache-dir", cache_flag, "cache directory (default: $SEMIFLAG_CACHE_DIR, else no cache)");
  app.add_option("--format", cfg.format, "json, text or dot");
  app.add_option("--max-translation-depth", cfg.max_depth);
  app.add_option("--stabilization-window", cfg.window);
  app.add_option("--window-radius", cfg.window_radius, "periodic solve window radius (-1: rank + 1)");

  std::string w, y, a, b, kind = "bruhat", suite;
  std::optional<std::string> output;
  SuiteOptions so;
  bool timing = false;

  auto* kl = app.add_subcommand("kl", "h_{y,w} for y <= w");
  kl->add_option("--w", w, "affine Weyl word")->required();
  kl->add_option("--y", y);
  auto* ikl = app.add_subcommand("inverse-kl", "inverse polynomials for y <= w");
  ikl->add_option("--w", w)->required();
  ikl->add_option("--y", y);
  auto* per = app.add_subcommand("periodic", "periodic self-dual element of A, or p_{B,A}");
  per->add_option("--a", a, "alcove literal or word")->required();
  per->add_option("--b", b);
  auto* gen = app.add_subcommand("generic", "q_{B,A} by translation stabilization");
  gen->add_option("--a", a)->required();
  gen->add_option("--b", b)->required();
  auto* bmb = app.add_subcommand("bm-bruhat", "BM stalk ranks on [e, w]");
  bmb->add_option("--w", w)->required();
  auto* bms = app.add_subcommand("bm-semiinf", "BM stalk ranks on the semi-infinite interval [B, A]");
  bms->add_option("--a", a)->required();
  bms->add_option("--b", b)->required();
  auto* gr = app.add_subcommand("graph", "export a moment graph");
  gr->add_option("--kind", kind, "bruhat or semiinf");
  gr->add_option("--w", w);
  gr->add_option("--a", a);
  gr->add_option("--b", b);
  gr->add_option("--output", output);
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite)->required();
  ver->add_option("--max-length", so.max_length);
  ver->add_option("--radius", so.radius);
  ver->add_option("--max-delta", so.max_delta);
  ver->add_option("--max-vertices", so.max_vertices);
  ver->add_option("--count", so.count);
  ver->add_option("--seed", so.seed);
  ver->add_option("--shuffles", so.shuffles);
  ver->add_flag("--timing", timing, "include wall-clock seconds in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cache_flag)
    cfg.cache_dir = *cache_flag;
  else if (const char* env = std::getenv("SEMIFLAG_CACHE_DIR"))
    cfg.cache_dir = env;
  Cache cache(cfg.cache_dir, cfg.type);

  int code = 0;
  try {
    if (cfg.window < 2 || cfg.max_depth < cfg.window)
      throw UsageError("need --max-translation-depth >= --stabilization-window >= 2");
    (void)cfg.cutoff_value();
    CartanType::parse(cfg.type);
    auto rs = root_system(cfg.type);
    if (*kl) {
      code = cmd_kl(cfg, cache, w, y, false);
    } else if (*ikl) {
      code = cmd_kl(cfg, cache, w, y, true);
    } else if (*per) {
      code = cmd_periodic(cfg, cache, a, b);
    } else if (*gen) {
      code = cmd_generic(cfg, cache, a, b);
    } else if (*bmb) {
      Alcove top = from_word(rs, parse_word(w));
      code = cmd_bm(cfg, std::make_shared<const MomentGraph>(bruhat_graph(top)), top,
                    {{"type", cfg.type}, {"w", word_or_e(top)}});
    } else if (*bms) {
      Alcove top = parse_alcove(rs, a), bot = parse_alcove(rs, b);
      code = cmd_bm(cfg, std::make_shared<const MomentGraph>(semiinf_graph(bot, top, cfg.semiinf())), top,
                    {{"type", cfg.type}, {"A", json::parse(to_string(top))}, {"B", json::parse(to_string(bot))}});
    } else if (*gr) {
      code = cmd_graph(cfg, kind, w, a, b, output);
    } else if (*ver) {
      require_format(cfg, false);
      so.type = cfg.type;
      so.cutoff = cfg.cutoff_value();
      so.cfg = cfg.semiinf();
      so.window.radius = cfg.window_radius;
      auto t0 = std::chrono::steady_clock::now();
      SuiteReport r = run_suite(suite, so);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (cfg.format == "json") {
        json j = json::parse(r.to_json());
        if (timing) j["seconds"] = secs;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << r.to_text();
        if (timing) std::cout << "seconds: " << secs << "\n";
      }
      code = r.pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << " (depth reached " << e.depth_reached() << ")\n";
    code = 3;
  } catch (const WindowTooSmall& e) {
    std::cerr << "window too small: " << e.what() << "\n";
    code = 3;
  } catch (const CutoffError& e) {
    std::cerr << "cutoff: " << e.what() << "\n";
    code = 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 1;
  }
  cache.flush();
  return code;
}
