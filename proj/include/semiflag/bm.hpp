#pragma once

// Braden-MacPherson sheaves on finite moment graphs and the two rank
// identities against the Hecke side.

#include <memory>
#include <string>
#include <vector>

#include "semiflag/hecke.hpp"
#include "semiflag/periodic.hpp"
#include "semiflag/sheaf.hpp"

namespace semiflag {

struct BMOptions {
  int cutoff = -1;          // grading degree; -1: 2 * (grade(top) - min grade) + 4
  std::vector<int> order;   // processing order (a linear extension of the reversed order); empty: top_down()
  int headroom = 2;
};

struct BMSheaf {
  SheafData data;  // stalks and rho maps
  int top = 0;
  int cutoff = 0;
  // Generators of the global sections: one value per vertex (in the stalk
  // layout, empty for zero), and their polynomial degree.
  std::vector<IVec> section_degrees;
  std::vector<std::vector<SparseVec>> sections;

  const MomentGraph& graph() const { return *data.graph; }
  LaurentPoly stalk_rank(int v) const { return graded_rank(data.stalk_degrees.at(v)); }
};

int default_cutoff(const MomentGraph& g, int top);

BMSheaf build_bm(std::shared_ptr<const MomentGraph> g, int top, const BMOptions& opts = {});

// A uniformly random linear extension of the reversed order.
std::vector<int> random_linear_extension(const MomentGraph& g, unsigned seed);

struct RankCase {
  Alcove vertex;
  LaurentPoly rank_bm, rank_hecke;
  bool equal = false;
};

struct IdentityReport {
  std::string name;
  std::vector<RankCase> cases;
  bool pass = true;
  std::string to_json() const;
};

// rk B(w)^y == v^{l(y)-l(w)} h_{y,w} for all y <= w.
IdentityReport verify_kl_identity(const Alcove& w, KLTable& kl, int cutoff = -1);

// rk B(A)^C == v^{delta(A,C)} q_{C,A} on the interval graph [B, A], for every
// vertex C (the case C = B is the identity proper).
IdentityReport verify_semiinf_identity(const Alcove& a, const Alcove& b, KLTable& kl, int cutoff = -1,
                                       const SemiInfConfig& cfg = {});

// Stalk ranks on [B, A] and [B + gamma, A + gamma] agree vertex by vertex
// (gamma in root coordinates); also compares the two vertex sets.
IdentityReport verify_translation_invariance(const Alcove& a, const Alcove& b, const IVec& gamma, int cutoff = -1,
                                             const SemiInfConfig& cfg = {});

}  // namespace semiflag
