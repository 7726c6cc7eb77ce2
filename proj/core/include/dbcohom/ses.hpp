#pragma once

#include <optional>
#include <variant>

#include "dbcohom/fields.hpp"

namespace dbcohom {

// The four maps of the short exact sequences classifying DB cohomology in
// degree 1:
//   0 -> Omega^1(Y)/Omega^1_Z(Y) --delta_check--> H^1_DB(Y;Z) --u--> H^2(Y;Z) -> 0
//   0 -> H^1(Y;R/Z) --v--> H^1_DB(Y;Z) --d--> Omega^2_Z(Y) -> 0
enum class SesMap { delta_check, u, v, d };

// delta_check: lift a global 1-form to the DB cocycle with zero transition
// layers (restrictions to the charts, no gluing data).
template <class T>
DBCochain<T> ses_delta_lift(const GoodCover& cover,
                            const Cochain<T>& global_form) {
  if (global_form.degree() != 1) {
    throw ShapeMismatchError("delta_check lifts 1-forms");
  }
  DBCochain<T> out(&cover, 1, 1);
  for (int i = 0; i < cover.chart_count(); ++i) {
    out.form_layer(0)[i] = global_form.restrict_to(cover.chart(i));
  }
  return out;
}

// u: the Cech class of the integer layer in H^2(Y; Z).
template <class T>
CohomologyClass ses_u(const U1Connection<T>& connection) {
  return cech_class(connection.cover().nerve(), 2,
                    connection.db().integer_layer());
}

// v: inject a flat R/Z class given by constant lifts m_ij (units of 2*pi,
// one per double overlap): layers (0, inject(m_ij), cech(m)). The input must
// be an R/Z cocycle: cech(m) integral.
DBCochain<double> ses_v(const GoodCover& cover,
                        const std::vector<double>& m_lift);
DBCochain<Rational> ses_v(const GoodCover& cover,
                          const std::vector<Rational>& m_lift);

// d: the curvature (dA_i)_i, glued to a global 2-cochain.
template <class T>
Cochain<T> ses_d(const U1Connection<T>& connection) {
  return connection.curvature();
}

// External dispatcher over the four maps (double mode).
using SesInput =
    std::variant<Cochain<double>, DBCochain<double>, std::vector<double>>;
using SesOutput =
    std::variant<DBCochain<double>, CohomologyClass, Cochain<double>>;
SesOutput apply_ses_map(SesMap map_id, const GoodCover& cover,
                        const SesInput& x);

// Generators of H_1 of the realized mesh as integer cycles (the angular
// loop for circles and annuli, empty for spheres and disks).
std::vector<Chain<double>> one_cycle_basis(const SimplicialComplex& complex);

// Membership test for Omega^p_Z: closed and all periods over the homology
// basis in 2*pi*Z. A numerical check (tolerance), not an exact one: the
// periods are floating-point integrals.
bool has_integral_periods(const Cochain<double>& form, double tolerance);

// Gauge-equivalence search: find q with to - from = D^[k,k-1] q, layer by
// layer (chart potentials for the form part, integer snapping across
// overlaps, Smith-form solve for the integer layer). Returns the parameter
// or nullopt when the search certifies infeasibility (the holonomy or class
// obstruction). `tolerance` controls double-mode integer snapping; rational
// mode is exact with tolerance ignored.
template <class T>
std::optional<DBCochain<T>> find_gauge_equivalence(const DBCochain<T>& from,
                                                   const DBCochain<T>& to,
                                                   double tolerance = 1e-8);

// Gauge-transform a u-trivial cocycle (integer-layer class zero) to the
// image of delta_check: kills the integer layer by a Smith-form solve, then
// the transition functions by the partition-of-unity contraction. Returns
// the gauge parameter q; gauge_transform(x, q) then has zero transition
// layers. Throws when u(x) != 0.
template <class T>
DBCochain<T> trivializing_gauge(const U1Connection<T>& connection);

}  // namespace dbcohom
