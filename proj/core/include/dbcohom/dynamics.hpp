#pragma once

#include <memory>
#include <optional>

#include "dbcohom/fields.hpp"
#include "dbcohom/wilson.hpp"

namespace dbcohom {

// Equal-time boundary data: the annulus slice of the codimension-1 stratum,
// its inner boundary circle (the codimension-2 stratum, oriented +theta,
// opposite to the orientation induced from the annulus), the dressed field,
// the dual connection and dual edge mode, the Wilson form, and the supplied
// bulk restriction. Couplings k != 0, p and the Wilson level n.
struct BoundaryState {
  const SimplicialComplex* annulus = nullptr;
  const GoodCover* annulus_cover = nullptr;
  std::shared_ptr<const GoodCover> ring_cover;  // induced on the inner ring
  Subcomplex ring;

  Cochain<double> a;                        // dressed field, closed on shell
  U1Connection<double> a_tilde;             // dual connection (global layers)
  MinusOneGerbeConnection<double> phi_tilde;  // dual edge mode on the ring
  std::optional<Cochain<double>> star_f;    // supplied bulk restriction (2-form)
  std::optional<WilsonForm> omega;

  long long k = 1;
  long long p = 0;
  long long n = 0;
  double e2 = 1.0;

  std::shared_ptr<const HodgeStructure> hodge;  // annulus metric
};

struct EOMReport {
  double duality_residual = 0;     // |star_f - e2 (k/2pi) d A~| on the annulus
  bool duality_evaluated = false;  // false when no bulk data was supplied
  double omega_residual = 0;       // |(k/2pi) a~ - (p/2pi) Omega| on the ring
  double flatness_residual = 0;    // |d a| on the annulus (F = 0 on Delta)
  double maxwell_residual = 0;     // d(star_f): trivially zero on 2d slices
  bool maxwell_evaluated = false;
  bool feasible = true;
  IntCoeff winding = 0;
};

struct QuantizationResult {
  bool feasible = false;
  IntCoeff winding = 0;       // p*n/k when feasible
  long long k = 0, p = 0, n = 0;
};

// Feasibility of the boundary equation of motion: k*2pi*w = p*2pi*n needs
// k | p*n; the required winding is w = p*n/k.
QuantizationResult quantization_check(long long k, long long p, long long n);

// Constructs the dual edge mode and global remainder connection solving
// k*(d phi_i - A~) = p*Omega on the circle slice. Throws
// QuantizationObstructionError when k does not divide p*n (with a trivial
// gerbe the equation is unsolvable: d phi~ would integrate to zero).
std::pair<MinusOneGerbeConnection<double>, Cochain<double>>
solve_dual_edge_mode(long long k, long long p, long long n,
                     const WilsonForm& omega, const GoodCover& ring_cover);

EOMReport eom_residuals(const BoundaryState& state);

// L2 norm of a cochain living on a 1-dimensional ring, from edge lengths.
double ring_l2_norm(const SimplicialComplex& complex, const Cochain<double>& c);

struct PresymplecticValue {
  double value = 0;
  bool used_on_shell_form = false;
};

// On-shell presymplectic potential
//   theta = bulk + (k/2pi) int_Delta dphi ^ dA~ - (k/2pi) int_Delta a ^ dA~slot
//           + (k/2pi) int_ring a ^ dphi~
// with the variation filling the delta slots; off shell the two extra ring
// terms -(k/2pi) dphi^a~ + (p/2pi) dphi^Omega are kept and the result is
// flagged. Linear in the variation.
PresymplecticValue presymplectic_potential(const BoundaryState& state,
                                           const FieldVariation<double>& var,
                                           double on_shell_tolerance = 1e-8);

// Q^E = (k/2pi) int_region alpha ^ dA~.
double electric_charge(const Cochain<double>& alpha,
                       const U1Connection<double>& a_tilde,
                       const Subcomplex& region, long long k);

// Q^M_i = (k/2pi) int_ring a ^ alpha~_i, weighted per chart with the
// edge-multiplicity partition of unity so the chart totals sum consistently.
std::vector<double> magnetic_charges(const GoodCover& ring_cover,
                                     const Cochain<double>& a,
                                     const std::vector<Cochain<double>>& alpha_tilde,
                                     long long k);

// {Q^E, Q^M} = -(k/2pi) int_circle alpha ^ d(alpha~), where the chart
// derivatives d(alpha~_i) glue to one global 1-cochain; non-constant jumps
// between charts are rejected. `cover` may be a standalone circle cover or
// an induced ring cover.
double charge_bracket(const GoodCover& circle_cover,
                      const Cochain<double>& alpha,
                      const std::vector<Cochain<double>>& alpha_tilde,
                      long long k);

// Q = int_sphere alpha ^ d(psi) for the scalar-2-form duality slice.
double scalar_two_form_charge(const Cochain<double>& alpha,
                              const Cochain<double>& psi);

// Appendix-B style drift of theta under a gauge transformation with
// field-dependent parameter direction. Both vanish on shell:
//   dual:  -(k/2pi) int_Delta a ^ d(mu) + (k/2pi) int_ring a ^ mu
//          = -(k/2pi) int_Delta d(a) ^ mu   (exact discrete Leibniz/Stokes)
//   phi:   -(1/e2) int_Delta eps ^ star_f + (k/2pi) int_Delta eps ^ dA~
//          - (k/2pi) int_ring eps ^ a~ + (p/2pi) int_ring eps ^ Omega.
// mu/eps must vanish on the outer collar (the regularization cutoff).
double theta_drift_dual(const BoundaryState& state, const Cochain<double>& mu);
double theta_drift_phi(const BoundaryState& state, const Cochain<double>& eps);

// The state transformed by a morphism-valid dual gauge parameter (a DB
// 0-cocycle on the annulus cover): A~ += d(eps~), phi~ += eps~ restricted to
// the ring. Residuals and charges are unchanged on shell.
BoundaryState apply_dual_gauge(const BoundaryState& state,
                               const MinusOneGerbeConnection<double>& eps_tilde);

// Full circle-slice integral of a ring cochain in the +theta orientation.
double ring_integral(const BoundaryState& state, const Cochain<double>& c);

}  // namespace dbcohom
