#include "dbcohom/fields.hpp"

#include <cmath>


#include "dbcohom/mesh_builders.hpp"

namespace dbcohom {

std::vector<Cochain<double>> chart_angle_lifts(const GoodCover& cover) {
  Cochain<double> omega0 = reference_angular_cochain(cover.complex());
  StructuredGrid grid = grid_of(cover.complex());
  const double c = two_pi / grid.n_theta;

  std::vector<Cochain<double>> lifts;
  for (int i = 0; i < cover.chart_count(); ++i) {
    const Subcomplex& chart = cover.chart(i);
    if (chart.count(0) == 0) throw InvalidParameterError("empty chart");
    VertexId base = cover.complex().simplex(0, chart.members(0)[0]).vertices[0];
    int col = (grid.has_center ? (base - 1) : base) % grid.n_theta;
    lifts.push_back(tree_potential(chart, omega0, 0, col * c));
  }
  return lifts;
}

std::pair<MinusOneGerbeConnection<double>, Cochain<double>>
integrate_to_edge_mode(const GoodCover& ring_cover, const Cochain<double>& tau) {
  if (ring_cover.cyclic_order().empty()) {
    throw InvalidParameterError(
        "edge-mode integration needs a cyclically ordered cover");
  }
  if (tau.degree() != 1) {
    throw ShapeMismatchError("integrate_to_edge_mode expects a 1-cochain");
  }

  const GoodCover& cover = ring_cover;
  DBCochain<double> data(&cover, 0, 0);
  for (int i = 0; i < cover.chart_count(); ++i) {
    Cochain<double> tau_i = tau.restrict_to(cover.chart(i));
    data.form_layer(0)[i] = tree_potential(cover.chart(i), tau_i, 0, 0.0);
  }
  // phi_i - phi_j is constant on each overlap since d phi = tau on both
  // sides. Walking the charts in cyclic order, shift each next chart so the
  // jump becomes an exact 2*pi multiple; the closing overlap is left as is
  // and carries the loop residue, which vanishes when tau has an integral
  // period (quantization).
  const auto& order = cover.cyclic_order();
  int n = static_cast<int>(order.size());
  for (int s = 0; s < n; ++s) {
    int i = order[s], j = order[(s + 1) % n];
    int idx = cover.nerve().find(1, {std::min(i, j), std::max(i, j)});
    if (idx < 0) throw Error("consecutive ring charts do not overlap");
    const Subcomplex& overlap = cover.intersection(1, idx);
    if (overlap.count(0) == 0) throw Error("empty overlap on ring cover");
    SimplexIndex probe = overlap.members(0)[0];
    double gap = data.form_layer(0)[i].at_parent(probe) -
                 data.form_layer(0)[j].at_parent(probe);
    IntCoeff m_dir = static_cast<IntCoeff>(std::llround(-gap / two_pi));
    data.integer_layer()[idx] = (i < j) ? m_dir : -m_dir;
    if (s + 1 < n) {
      double correction = gap + two_pi * m_dir;  // makes the jump exact
      auto& phi_j = data.form_layer(0)[j];
      for (int c = 0; c < phi_j.size(); ++c) phi_j[c] += correction;
    }
  }

  MinusOneGerbeConnection<double> phi(std::move(data), 1e-8);
  // remainder A := d(phi_i) - tau, chartwise; global by construction
  std::vector<Cochain<double>> local;
  for (int i = 0; i < cover.chart_count(); ++i) {
    local.push_back(coboundary(phi.chart_functions()[i]) -
                    tau.restrict_to(cover.chart(i)));
  }
  Cochain<double> remainder = glue_local_layers(cover, local, 1);
  return {std::move(phi), std::move(remainder)};
}

MinusOneGerbeConnection<double> make_winding_edge_mode(
    const GoodCover& ring_cover, IntCoeff winding) {
  Cochain<double> omega0 =
      reference_angular_cochain(ring_cover.complex());
  Cochain<double> tau =
      static_cast<double>(winding) * omega0.restrict_to(ring_cover.region());
  return integrate_to_edge_mode(ring_cover, tau).first;
}

}  // namespace dbcohom
