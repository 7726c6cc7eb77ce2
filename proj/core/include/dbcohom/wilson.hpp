#pragma once

#include "dbcohom/hodge.hpp"

namespace dbcohom {

// The regularized Wilson 1-form on a flat annulus: closed, co-closed up to
// the discrete minimum, tangential at both boundary circles, with period
// 2*pi*n around either ring. The coefficient vector is kept as exact dyadic
// rationals, so the closure identity d(Omega) = 0 holds exactly; co-closure
// and tangentiality are variational residuals that shrink under refinement.
struct WilsonForm {
  int level = 0;                       // the integer n
  Cochain<Rational> omega_exact;       // exactly closed representative
  Cochain<double> omega;               // double view of the same values
  double closure_residual = 0;         // exact-rational check, always 0
  double coclosure_residual = 0;       // L2 over interior vertices
  double tangentiality_residual = 0;   // L2 of near-boundary normal parts
  double period_inner = 0;
  double period_outer = 0;
};

// Finds the co-closure-minimizing closed 1-cochain with period 2*pi*n in the
// affine family n*Omega0 + du, with the lumped normal flux pinned to zero at
// every boundary vertex. Deterministic sparse KKT solve.
WilsonForm solve_harmonic_form(const SimplicialComplex& annulus, int n);

// integral over `region` of the cup product a ^ Omega; bilinear.
double wilson_line_value(const Cochain<double>& a, const WilsonForm& omega,
                         const Subcomplex& region);

// Ring subcomplexes of the structured annulus.
Subcomplex inner_ring(const SimplicialComplex& annulus);
Subcomplex outer_ring(const SimplicialComplex& annulus);

// Oriented fundamental chain of a ring, running in the +theta direction
// regardless of how the ring sits inside the annulus boundary. The circle
// slice of the boundary stratum is oriented this way by convention (opposite
// to the orientation induced from the annulus).
Chain<double> ring_cycle(const SimplicialComplex& annulus,
                         const Subcomplex& ring);

}  // namespace dbcohom
