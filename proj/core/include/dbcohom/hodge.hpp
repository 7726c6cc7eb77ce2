#pragma once

#include <vector>

#include "dbcohom/cochain.hpp"

namespace dbcohom {

// Diagonal Hodge star operators from circumcentric primal/dual volume
// ratios, plus the codifferential assembled as star^-1 d^T star. Weights
// must come out strictly positive; meshes with obtuse-triangle sign flips
// are rejected with the offending simplices named.
class HodgeStructure {
 public:
  explicit HodgeStructure(const SimplicialComplex& complex);

  const SimplicialComplex& complex() const { return *complex_; }

  // star weight of the p-simplex with parent index i
  double star(int p, SimplexIndex i) const { return stars_[p][i]; }
  const std::vector<double>& star_diagonal(int p) const { return stars_[p]; }

  // L2 norm of a p-cochain over the whole complex (or a cochain on a
  // subcomplex, using the parent weights).
  double l2_norm(const Cochain<double>& c) const;

  // codifferential of a 1-cochain: (delta w)(v) = star0(v)^-1 *
  // sum_e [d0]^T(v,e) star1(e) w(e); for 2-cochains analogously.
  Cochain<double> codifferential(const Cochain<double>& c) const;

  bool is_boundary_vertex(VertexId v) const { return boundary_vertex_[v]; }
  bool is_boundary_edge(SimplexIndex e) const { return boundary_edge_[e]; }

  // Lumped normal flux of a 1-cochain at a boundary vertex: the star1
  // weighted sum over incident non-boundary edges, oriented out of v. The
  // discrete form of the zero-normal-flux (tangentiality) condition.
  double boundary_normal_flux(const Cochain<double>& omega, VertexId v) const;

 private:
  const SimplicialComplex* complex_;
  std::vector<std::vector<double>> stars_;  // [p][simplex]
  std::vector<char> boundary_vertex_;
  std::vector<char> boundary_edge_;
};

HodgeStructure build_hodge(const SimplicialComplex& complex);

}  // namespace dbcohom
