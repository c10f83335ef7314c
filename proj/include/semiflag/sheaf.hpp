#pragma once

// Sheaves on a moment graph with free stalks. For an edge E = (x, y) with y
// above x the edge module is stalk(y) / l(E) stalk(y), rho^{y,E} is the
// canonical quotient and rho^{x,E} is given by the images of the generators
// of stalk(x). Both the structure sheaf and BM sheaves have this shape.

#include <memory>
#include <vector>

#include "semiflag/graded.hpp"
#include "semiflag/moment_graph.hpp"

namespace semiflag {

struct SheafData {
  std::shared_ptr<const MomentGraph> graph;
  int maxdeg = 0;  // polynomial degree cutoff
  std::vector<IVec> stalk_degrees;
  // lower_images[e][i] = rho^{lower,E}(generator i of the lower stalk), an
  // element of edge_layouts[e] in the generator's degree.
  std::vector<std::vector<SparseVec>> lower_images;

  std::vector<LayoutPtr> stalk_layouts;
  std::vector<LayoutPtr> edge_layouts;
  std::vector<QuotientPtr> edge_quotients;

  // Fills the layouts from stalk_degrees and the edge labels.
  void finalize_layouts();
  // rho^{v,E} as an S-linear map stalk(v) -> edge module; v is an end of E.
  const FreeMap& restriction(int edge, bool upper) const;

 private:
  mutable std::vector<std::unique_ptr<FreeMap>> upper_maps_, lower_maps_;
};

// Linear form of an edge label in the variables (simple roots..., delta).
IVec label_form(const MomentEdge& e);

// Stalks S and edge modules S / l(E).
SheafData structure_sheaf(std::shared_ptr<const MomentGraph> g, int maxdeg);

// Gamma(I) inside the direct sum of the stalks over `subset` (in the given
// order), truncated at sheaf.maxdeg.
GradedModule sections_over(const SheafData& sheaf, const std::vector<int>& subset);

// Edge-module sum at x: the edge layouts of the upward edges of x, in edge order.
LayoutPtr upper_edge_layout(const SheafData& sheaf, int x);

// rho^{delta x}(Gamma({> x})) inside upper_edge_layout(x), computed from
// scratch by solving for sections over {> x}.
GradedModule rho_delta_image(const SheafData& sheaf, int x);

// The structure algebra Z of g truncated at grading degree `cutoff`.
GradedModule structure_sections(std::shared_ptr<const MomentGraph> g, int cutoff);

// Dimensions of M / S_+ M in each polynomial degree.
IVec tensor_dims(const GradedModule& m);

}  // namespace semiflag
