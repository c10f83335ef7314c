#pragma once

// Verification suites shared by the command line tool and the acceptance
// run. Every case records its input, both sides and whether they agree; an
// exception inside a case fails that case only.

#include <string>
#include <utility>
#include <vector>

#include "semiflag/bm.hpp"

namespace semiflag {

struct SuiteOptions {
  std::string type = "A1";
  int max_length = -1;    // kl-vs-bm, gkm, hecke-axioms; -1: per-type default
  int radius = -1;        // semiinf, translation, order-limit, periodic-props window
  int max_delta = 6;      // semiinf/translation: |delta(A,B)| bound
  int max_vertices = 20;  // semiinf/translation: interval size bound
  int count = -1;         // semiinf/translation: number of intervals (-1: all in A1, 12 otherwise); order-limit: pairs
  unsigned seed = 1;
  int shuffles = 0;       // random linear extensions per BM graph
  int cutoff = -1;
  SemiInfConfig cfg;
  PeriodicWindow window;
};

struct CheckCase {
  std::string input, lhs, rhs;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckCase> cases;
  bool pass = true;

  void add(std::string input, std::string lhs, std::string rhs, bool ok);
  void add_equal(std::string input, std::string lhs, std::string rhs) {
    bool ok = lhs == rhs;
    add(std::move(input), std::move(lhs), std::move(rhs), ok);
  }
  int failures() const;
  std::string to_json() const;
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

SuiteReport suite_kl_vs_bm(const SuiteOptions& opts, KLTable& kl);
SuiteReport suite_semiinf(const SuiteOptions& opts, KLTable& kl);
SuiteReport suite_translation(const SuiteOptions& opts);
SuiteReport suite_gkm(const SuiteOptions& opts);
SuiteReport suite_hecke_axioms(const SuiteOptions& opts, KLTable& kl);
SuiteReport suite_order_limit(const SuiteOptions& opts);
SuiteReport suite_periodic_props(const SuiteOptions& opts);

// Intervals B < A (as {B, A}) used by the semi-infinite suites: B, A in the
// ball of the given radius, |delta| <= max_delta, at most max_vertices
// vertices; ordered by decreasing |delta|, then canonically; at most count.
std::vector<std::pair<Alcove, Alcove>> semiinf_intervals(const SuiteOptions& opts);

// Self-dual element for w found by solving bar(X) = X directly over the
// coefficients, without the recursion.
HeckeElt kl_basis_by_solve(const Alcove& w);

// Processing-order independence: ranks for the default order and for
// `shuffles` random linear extensions.
std::vector<std::string> shuffled_ranks(std::shared_ptr<const MomentGraph> g, int top, int shuffles, unsigned seed,
                                        int cutoff = -1);

}  // namespace semiflag
