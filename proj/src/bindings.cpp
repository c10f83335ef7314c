#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "semiflag/error.hpp"
#include "semiflag/verify.hpp"

namespace py = pybind11;
using namespace semiflag;

namespace {

using Poly = std::map<int, std::int64_t>;

Poly to_dict(const LaurentPoly& p) { return p.to_map(); }

SemiInfConfig semiinf_config(int depth, int window) {
  SemiInfConfig c;
  c.max_translation_depth = depth;
  c.stabilization_window = window;
  return c;
}

Alcove word_alcove(const std::string& type, const std::string& text) { return parse_alcove(root_system(type), text); }

std::string word_or_e(const Alcove& a) {
  std::string s = format_word(reduced_word(a));
  return s.empty() ? "e" : s;
}

std::map<std::string, Poly> sheaf_ranks(const BMSheaf& sh, bool by_word) {
  std::map<std::string, Poly> out;
  const MomentGraph& g = sh.graph();
  for (int v = 0; v < g.size(); ++v)
    out[by_word ? word_or_e(g.vertex(v)) : to_string(g.vertex(v))] = to_dict(sh.stalk_rank(v));
  return out;
}

py::object parse_json(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

}  // namespace

PYBIND11_MODULE(semiflag, m) {
  m.doc() = "Affine alcove combinatorics, Kazhdan-Lusztig type polynomials and Braden-MacPherson sheaves";

  py::register_exception<UndecidedError>(m, "UndecidedError", PyExc_RuntimeError);
  py::register_exception<WindowTooSmall>(m, "WindowTooSmall", PyExc_RuntimeError);
  py::register_exception<CutoffError>(m, "CutoffError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("canonical", [](const std::string& type, const std::string& a) { return to_string(word_alcove(type, a)); },
        py::arg("type"), py::arg("alcove"), "Canonical literal of an alcove given as a literal or a word.");
  m.def("word", [](const std::string& type, const std::string& a) { return word_or_e(word_alcove(type, a)); },
        py::arg("type"), py::arg("alcove"));
  m.def("length", [](const std::string& type, const std::string& a) { return length(word_alcove(type, a)); },
        py::arg("type"), py::arg("alcove"));
  m.def("level", [](const std::string& type, const std::string& a) { return level(word_alcove(type, a)); },
        py::arg("type"), py::arg("alcove"));
  m.def(
      "semiinf_delta",
      [](const std::string& type, const std::string& a, const std::string& b) {
        return semiinf_delta(word_alcove(type, a), word_alcove(type, b));
      },
      py::arg("type"), py::arg("a"), py::arg("b"));

  m.def(
      "bruhat_leq",
      [](const std::string& type, const std::string& y, const std::string& w) {
        return bruhat_leq(word_alcove(type, y), word_alcove(type, w));
      },
      py::arg("type"), py::arg("y"), py::arg("w"));
  m.def(
      "semiinf_leq",
      [](const std::string& type, const std::string& a, const std::string& b, int depth, int window) {
        return semiinf_leq(word_alcove(type, a), word_alcove(type, b), semiinf_config(depth, window));
      },
      py::arg("type"), py::arg("a"), py::arg("b"), py::arg("max_translation_depth") = 40,
      py::arg("stabilization_window") = 3);
  m.def(
      "semiinf_interval",
      [](const std::string& type, const std::string& b, const std::string& a, int depth, int window) {
        std::vector<std::string> out;
        for (const Alcove& c : semiinf_interval(word_alcove(type, b), word_alcove(type, a), semiinf_config(depth, window)))
          out.push_back(to_string(c));
        return out;
      },
      py::arg("type"), py::arg("b"), py::arg("a"), py::arg("max_translation_depth") = 40,
      py::arg("stabilization_window") = 3);

  m.def(
      "kl_poly",
      [](const std::string& type, const std::string& y, const std::string& w) {
        KLTable kl(400);
        return to_dict(kl.kl_poly(word_alcove(type, y), word_alcove(type, w)));
      },
      py::arg("type"), py::arg("y"), py::arg("w"), "h_{y,w} as {exponent: coefficient}.");
  m.def(
      "kl_table",
      [](const std::string& type, const std::string& w) {
        KLTable kl(400);
        std::map<std::string, Poly> out;
        for (const auto& [y, p] : kl.kl_basis(word_alcove(type, w)).sorted()) out[word_or_e(y)] = to_dict(p);
        return out;
      },
      py::arg("type"), py::arg("w"), "All h_{y,w}, keyed by the reduced word of y.");
  m.def(
      "inverse_kl",
      [](const std::string& type, const std::string& y, const std::string& w) {
        KLTable kl(400);
        return to_dict(kl.inverse_kl(word_alcove(type, y), word_alcove(type, w)));
      },
      py::arg("type"), py::arg("y"), py::arg("w"));
  m.def(
      "periodic_poly",
      [](const std::string& type, const std::string& b, const std::string& a, int radius) {
        PeriodicWindow win;
        win.radius = radius;
        PeriodicSolver ps(win);
        return to_dict(ps.poly(word_alcove(type, b), word_alcove(type, a)));
      },
      py::arg("type"), py::arg("b"), py::arg("a"), py::arg("window_radius") = -1, "p_{B,A}.");
  m.def(
      "generic_poly",
      [](const std::string& type, const std::string& b, const std::string& a, int depth, int window) {
        KLTable kl(400);
        GenericResult r = generic_poly(word_alcove(type, b), word_alcove(type, a), kl, semiinf_config(depth, window));
        py::dict d;
        d["q"] = to_dict(r.value);
        d["n0"] = r.n0;
        d["depth"] = r.depth;
        return d;
      },
      py::arg("type"), py::arg("b"), py::arg("a"), py::arg("max_translation_depth") = 40,
      py::arg("stabilization_window") = 3, "q_{B,A} by translation stabilization, with the stabilization point.");

  m.def(
      "bm_bruhat",
      [](const std::string& type, const std::string& w, int cutoff) {
        Alcove top = word_alcove(type, w);
        auto g = std::make_shared<const MomentGraph>(bruhat_graph(top));
        BMOptions opts;
        opts.cutoff = cutoff;
        return sheaf_ranks(build_bm(g, *g->find(top), opts), true);
      },
      py::arg("type"), py::arg("w"), py::arg("cutoff") = -1, "BM stalk ranks on [e, w], keyed by reduced word.");
  m.def(
      "bm_semiinf",
      [](const std::string& type, const std::string& a, const std::string& b, int cutoff, int depth, int window) {
        Alcove top = word_alcove(type, a);
        auto g = std::make_shared<const MomentGraph>(semiinf_graph(word_alcove(type, b), top, semiinf_config(depth, window)));
        BMOptions opts;
        opts.cutoff = cutoff;
        return sheaf_ranks(build_bm(g, *g->find(top), opts), false);
      },
      py::arg("type"), py::arg("a"), py::arg("b"), py::arg("cutoff") = -1, py::arg("max_translation_depth") = 40,
      py::arg("stabilization_window") = 3, "BM stalk ranks on the semi-infinite interval [B, A], keyed by literal.");
  m.def(
      "moment_graph",
      [](const std::string& type, const std::string& kind, const std::string& w, const std::string& a,
         const std::string& b, const std::string& format) {
        MomentGraph g = kind == "bruhat"    ? bruhat_graph(word_alcove(type, w))
                        : kind == "semiinf" ? semiinf_graph(word_alcove(type, b), word_alcove(type, a))
                                            : throw std::invalid_argument("kind must be bruhat or semiinf");
        if (format == "dot") return py::object(py::str(g.to_dot()));
        if (format == "json") return parse_json(g.to_json());
        throw std::invalid_argument("format must be json or dot");
      },
      py::arg("type"), py::arg("kind"), py::arg("w") = "", py::arg("a") = "", py::arg("b") = "",
      py::arg("format") = "json");

  m.def(
      "verify",
      [](const std::string& suite, const std::string& type, int max_length, int radius, int count, int shuffles,
         unsigned seed) {
        SuiteOptions o;
        o.type = type;
        o.max_length = max_length;
        o.radius = radius;
        o.count = count;
        o.shuffles = shuffles;
        o.seed = seed;
        return parse_json(run_suite(suite, o).to_json());
      },
      py::arg("suite"), py::arg("type") = "A1", py::arg("max_length") = -1, py::arg("radius") = -1,
      py::arg("count") = -1, py::arg("shuffles") = 0, py::arg("seed") = 1, "Run a verification suite; returns the report.");
  m.attr("suites") = suite_names();
  m.attr("__version__") = "0.1.0";
}
