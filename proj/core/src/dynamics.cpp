#include "dbcohom/dynamics.hpp"

#include <cmath>
#include <numeric>

#include "dbcohom/mesh_builders.hpp"

namespace dbcohom {

QuantizationResult quantization_check(long long k, long long p, long long n) {
  if (k == 0) throw InvalidParameterError("quantization_check needs k != 0");
  QuantizationResult out;
  out.k = k;
  out.p = p;
  out.n = n;
  long long pn = p * n;
  out.feasible = (pn % k == 0);
  out.winding = out.feasible ? pn / k : 0;
  return out;
}

std::pair<MinusOneGerbeConnection<double>, Cochain<double>>
solve_dual_edge_mode(long long k, long long p, long long n,
                     const WilsonForm& omega, const GoodCover& ring_cover) {
  QuantizationResult q = quantization_check(k, p, n);
  if (!q.feasible) {
    throw QuantizationObstructionError(
        k, p, n,
        "no integral winding solves k*a~ = p*Omega: required w = " +
            std::to_string(p * n) + "/" + std::to_string(k) +
            " is not an integer (the gerbe class cannot be fractional)");
  }
  Cochain<double> tau = omega.omega.restrict_to(ring_cover.region());
  tau *= static_cast<double>(p) / static_cast<double>(k);
  auto [phi, remainder] = integrate_to_edge_mode(ring_cover, tau);
  // remainder = d(phi_i) - tau; the global dual connection A~ on the ring
  // satisfies a~ = d(phi_i) - A~ = tau exactly when A~ = remainder
  return {std::move(phi), std::move(remainder)};
}

double ring_l2_norm(const SimplicialComplex& complex, const Cochain<double>& c) {
  double acc = 0;
  const auto& members = c.domain().members(1);
  for (size_t m = 0; m < members.size(); ++m) {
    const auto& verts = complex.simplex(1, members[m]).vertices;
    const auto& a = complex.coordinate(verts[0]);
    const auto& b = complex.coordinate(verts[1]);
    double len = std::hypot(b[0] - a[0], b[1] - a[1], b[2] - a[2]);
    acc += c[static_cast<int>(m)] * c[static_cast<int>(m)] / len;
  }
  return std::sqrt(acc);
}

namespace {

Cochain<double> ring_dressed_field(const BoundaryState& state) {
  Cochain<double> d_phi = state.phi_tilde.global_differential();
  Cochain<double> a_tilde_ring =
      state.a_tilde.glued_form().restrict_to(state.ring);
  return d_phi - a_tilde_ring;
}

}  // namespace

double ring_integral(const BoundaryState& state, const Cochain<double>& c) {
  Chain<double> cycle = ring_cycle(*state.annulus, state.ring);
  return integrate(c, cycle);
}

EOMReport eom_residuals(const BoundaryState& state) {
  EOMReport report;
  const double k = static_cast<double>(state.k);
  const double p = static_cast<double>(state.p);

  Cochain<double> curvature = state.a_tilde.curvature();
  if (state.star_f) {
    Cochain<double> gap =
        *state.star_f - (state.e2 * k / two_pi) * curvature;
    report.duality_residual = state.hodge->l2_norm(gap);
    report.duality_evaluated = true;

    Cochain<double> d_star_f = coboundary(*state.star_f);
    report.maxwell_residual = d_star_f.max_abs();  // top degree: empty, 0
    report.maxwell_evaluated = true;
  }

  Cochain<double> a_tilde_dressed = ring_dressed_field(state);
  Cochain<double> omega_gap = (k / two_pi) * a_tilde_dressed;
  if (state.omega) {
    omega_gap -= (p / two_pi) * state.omega->omega.restrict_to(state.ring);
  }
  report.omega_residual = ring_l2_norm(*state.annulus, omega_gap);

  report.flatness_residual = state.hodge->l2_norm(coboundary(state.a));

  QuantizationResult q = quantization_check(state.k, state.p, state.n);
  report.feasible = q.feasible;
  report.winding = winding_number(state.phi_tilde);
  return report;
}

static PresymplecticValue presymplectic_potential_impl(const BoundaryState& state,
                                              const FieldVariation<double>& var,
                                              bool on_shell) {
  const double k = static_cast<double>(state.k);
  const double p = static_cast<double>(state.p);
  double value = var.supplied_bulk_term;

  Cochain<double> curvature = state.a_tilde.curvature();
  Subcomplex whole = Subcomplex::whole(*state.annulus);
  Chain<double> cycle = ring_cycle(*state.annulus, state.ring);

  if (var.delta_phi) {
    value += (k / two_pi) *
             integrate(cup_product(*var.delta_phi, curvature), whole);
    if (!on_shell) {
      Cochain<double> delta_phi_ring = var.delta_phi->restrict_to(state.ring);
      Cochain<double> a_tilde_dressed = ring_dressed_field(state);
      value -= (k / two_pi) *
               integrate(cup_product(delta_phi_ring, a_tilde_dressed), cycle);
      if (state.omega) {
        value += (p / two_pi) *
                 integrate(cup_product(delta_phi_ring,
                                       state.omega->omega.restrict_to(state.ring)),
                           cycle);
      }
    }
  }
  if (var.delta_connection) {
    value -= (k / two_pi) *
             integrate(cup_product(state.a, *var.delta_connection), whole);
  }
  if (var.delta_edge_mode) {
    Cochain<double> a_ring = state.a.restrict_to(state.ring);
    value += (k / two_pi) *
             integrate(cup_product(a_ring, *var.delta_edge_mode), cycle);
  }
  PresymplecticValue out;
  out.value = value;
  out.used_on_shell_form = on_shell;
  return out;
}

PresymplecticValue presymplectic_potential(const BoundaryState& state,
                                           const FieldVariation<double>& var,
                                           double on_shell_tolerance) {
  EOMReport report = eom_residuals(state);
  bool on_shell = report.omega_residual <= on_shell_tolerance &&
                  report.flatness_residual <= on_shell_tolerance &&
                  (!report.duality_evaluated ||
                   report.duality_residual <= on_shell_tolerance);
  return presymplectic_potential_impl(state, var, on_shell);
}

double electric_charge(const Cochain<double>& alpha,
                       const U1Connection<double>& a_tilde,
                       const Subcomplex& region, long long k) {
  if (alpha.degree() != 0) {
    throw ShapeMismatchError("electric_charge smears a function");
  }
  Cochain<double> curvature = a_tilde.curvature();
  return (static_cast<double>(k) / two_pi) *
         integrate(cup_product(alpha, curvature), region);
}

std::vector<double> magnetic_charges(
    const GoodCover& ring_cover, const Cochain<double>& a,
    const std::vector<Cochain<double>>& alpha_tilde, long long k) {
  if (static_cast<int>(alpha_tilde.size()) != ring_cover.chart_count()) {
    throw ShapeMismatchError("one smearing function per chart");
  }
  const SimplicialComplex& complex = ring_cover.complex();
  Chain<double> cycle = ring_cycle(complex, ring_cover.region());

  // edge-multiplicity partition of unity: chart totals sum to the full
  // integral for a global smearing
  std::vector<double> charges(ring_cover.chart_count(), 0.0);
  for (const auto& [edge, orientation] : cycle.coefficients) {
    int multiplicity = 0;
    for (int i = 0; i < ring_cover.chart_count(); ++i) {
      if (ring_cover.chart(i).contains(1, edge)) multiplicity += 1;
    }
    if (multiplicity == 0) throw Error("ring edge outside every chart");
    const auto& verts = complex.simplex(1, edge).vertices;
    for (int i = 0; i < ring_cover.chart_count(); ++i) {
      if (!ring_cover.chart(i).contains(1, edge)) continue;
      // front-face/back-face rule: a on the edge, alpha~ at the back vertex
      auto back = complex.find(0, {verts[1]});
      double cup = a.at_parent(edge) * alpha_tilde[i].at_parent(*back);
      charges[i] += (static_cast<double>(k) / two_pi) * orientation * cup /
                    multiplicity;
    }
  }
  return charges;
}

double charge_bracket(const GoodCover& circle_cover,
                      const Cochain<double>& alpha,
                      const std::vector<Cochain<double>>& alpha_tilde,
                      long long k) {
  if (static_cast<int>(alpha_tilde.size()) != circle_cover.chart_count()) {
    throw ShapeMismatchError("one smearing function per chart");
  }
  const Nerve& nerve = circle_cover.nerve();
  // jumps must be constant so the d(alpha~_i) glue to one global 1-cochain
  for (int m = 0; m < nerve.count(1); ++m) {
    const auto& pair = nerve.simplex(1, m);
    const Subcomplex& overlap = circle_cover.intersection(1, m);
    Cochain<double> gap = alpha_tilde[pair[0]].restrict_to(overlap) -
                          alpha_tilde[pair[1]].restrict_to(overlap);
    for (int c = 1; c < gap.size(); ++c) {
      if (std::abs(gap[c] - gap[0]) > 1e-8 * (1.0 + std::abs(gap[0]))) {
        throw InvalidParameterError(
            "charge_bracket: chart jumps are not constant, d(alpha~) is not "
            "global");
      }
    }
  }
  std::vector<Cochain<double>> local_d;
  local_d.reserve(alpha_tilde.size());
  for (const auto& f : alpha_tilde) local_d.push_back(coboundary(f));
  Cochain<double> d_alpha = glue_local_layers(circle_cover, local_d, 1);

  const SimplicialComplex& complex = circle_cover.complex();
  Chain<double> cycle;
  if (complex.kind() == MeshKind::circle) {
    cycle = fundamental_chain<double>(circle_cover.region());
  } else {
    cycle = ring_cycle(complex, circle_cover.region());
  }
  Cochain<double> alpha_on_region = alpha.restrict_to(circle_cover.region());
  return -(static_cast<double>(k) / two_pi) *
         integrate(cup_product(alpha_on_region, d_alpha), cycle);
}

double scalar_two_form_charge(const Cochain<double>& alpha,
                              const Cochain<double>& psi) {
  if (alpha.degree() != 1 || psi.degree() != 0) {
    throw ShapeMismatchError(
        "scalar_two_form_charge expects a 1-form and a function");
  }
  const SimplicialComplex& sphere = alpha.complex();
  return integrate(cup_product(alpha, coboundary(psi)),
                   Subcomplex::whole(sphere));
}

double theta_drift_dual(const BoundaryState& state, const Cochain<double>& mu) {
  const double k = static_cast<double>(state.k);
  Subcomplex whole = Subcomplex::whole(*state.annulus);
  Chain<double> cycle = ring_cycle(*state.annulus, state.ring);
  double bulk = -(k / two_pi) *
                integrate(cup_product(state.a, coboundary(mu)), whole);
  Cochain<double> a_ring = state.a.restrict_to(state.ring);
  Cochain<double> mu_ring = mu.restrict_to(state.ring);
  double edge = (k / two_pi) * integrate(cup_product(a_ring, mu_ring), cycle);
  return bulk + edge;
}

double theta_drift_phi(const BoundaryState& state, const Cochain<double>& eps) {
  const double k = static_cast<double>(state.k);
  const double p = static_cast<double>(state.p);
  Subcomplex whole = Subcomplex::whole(*state.annulus);
  Chain<double> cycle = ring_cycle(*state.annulus, state.ring);

  double value = 0;
  if (state.star_f) {
    value -= (1.0 / state.e2) *
             integrate(cup_product(eps, *state.star_f), whole);
  }
  value += (k / two_pi) *
           integrate(cup_product(eps, state.a_tilde.curvature()), whole);
  Cochain<double> eps_ring = eps.restrict_to(state.ring);
  value -= (k / two_pi) *
           integrate(cup_product(eps_ring, ring_dressed_field(state)), cycle);
  if (state.omega) {
    value += (p / two_pi) *
             integrate(cup_product(eps_ring,
                                   state.omega->omega.restrict_to(state.ring)),
                       cycle);
  }
  return value;
}

BoundaryState apply_dual_gauge(const BoundaryState& state,
                               const MinusOneGerbeConnection<double>& eps_tilde) {
  if (&eps_tilde.cover() != state.annulus_cover) {
    throw ShapeMismatchError("gauge parameter lives on the annulus cover");
  }
  BoundaryState out = state;

  // A~ -> A~ + d(eps~): the differential is globally defined
  Cochain<double> d_eps = eps_tilde.global_differential();
  DBCochain<double> conn = state.a_tilde.db();
  for (int i = 0; i < state.annulus_cover->chart_count(); ++i) {
    conn.form_layer(0)[i] += d_eps.restrict_to(state.annulus_cover->chart(i));
  }
  out.a_tilde = U1Connection<double>(std::move(conn), 1e-6);

  // phi~ -> phi~ + eps~ restricted to the ring cover (charts correspond by
  // index; jumps add)
  const GoodCover& ring_cover = *state.ring_cover;
  DBCochain<double> edge(&ring_cover, 0, 0);
  for (int i = 0; i < ring_cover.chart_count(); ++i) {
    edge.form_layer(0)[i] =
        state.phi_tilde.chart_functions()[i] +
        eps_tilde.chart_functions()[i].restrict_to(ring_cover.chart(i));
  }
  for (int m = 0; m < ring_cover.nerve().count(1); ++m) {
    const auto& pair = ring_cover.nerve().simplex(1, m);
    int bulk_idx = state.annulus_cover->nerve().find(1, pair);
    edge.integer_layer()[m] =
        state.phi_tilde.jumps()[m] + eps_tilde.jumps()[bulk_idx];
  }
  out.phi_tilde = MinusOneGerbeConnection<double>(std::move(edge), 1e-6);
  return out;
}

}  // namespace dbcohom
