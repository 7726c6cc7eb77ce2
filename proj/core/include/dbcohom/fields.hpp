#pragma once

#include <optional>

#include "dbcohom/cohomology.hpp"
#include "dbcohom/db_cochain.hpp"

namespace dbcohom {

// U(1) connection: a DB cocycle at truncation 1, diagonal 1 with layers
// (A_i, Lambda_ij, n_ijk). `global` when all transition layers vanish, in
// which case the local forms glue to one cochain on the covered region.
template <class T>
class U1Connection {
 public:
  U1Connection() = default;
  explicit U1Connection(DBCochain<T> data, double tolerance = 1e-10)
      : data_(std::move(data)) {
    if (data_.truncation() != 1 || data_.diagonal() != 1) {
      throw ShapeMismatchError("U(1) connection must be a (1,1) DB cochain");
    }
    auto [ok, residual] = is_cocycle(data_, tolerance);
    if (!ok) {
      throw InvalidParameterError("U(1) connection violates the descent equations");
    }
  }

  const DBCochain<T>& db() const { return data_; }
  const GoodCover& cover() const { return data_.cover(); }

  bool global() const {
    for (const auto& c : data_.form_layer(1)) {
      if (!c.is_identically_zero()) return false;
    }
    for (IntCoeff w : data_.integer_layer()) {
      if (w != 0) return false;
    }
    return true;
  }

  const std::vector<Cochain<T>>& local_forms() const {
    return data_.form_layer(0);
  }

  // Local forms glued over the covered region. For a global connection the
  // chart values agree on overlaps; values are taken from the lowest chart.
  Cochain<T> glued_form() const {
    if (!global()) {
      throw InvalidParameterError("connection is not global");
    }
    return glue_local_layers<T>(cover(), local_forms(), 1);
  }

  // Curvature (dA_i)_i glued over the region; globally well defined for any
  // cocycle since dA_i - dA_j = d(d Lambda_ij) = 0.
  Cochain<T> curvature() const {
    std::vector<Cochain<T>> local;
    local.reserve(local_forms().size());
    for (const auto& a : local_forms()) local.push_back(coboundary(a));
    return glue_local_layers<T>(cover(), local, 2);
  }

 private:
  DBCochain<T> data_;
};

// Glue chart-local p-cochains into one cochain on the covered region, taking
// each simplex value from the lowest chart containing it. Callers are
// responsible for overlap consistency (exact for cocycles in rational mode).
template <class T>
Cochain<T> glue_local_layers(const GoodCover& cover,
                             const std::vector<Cochain<T>>& local, int degree) {
  const Subcomplex& region = cover.region();
  Cochain<T> out(region, degree);
  const auto& members = region.members(degree);
  for (size_t m = 0; m < members.size(); ++m) {
    bool found = false;
    for (int i = 0; i < cover.chart_count() && !found; ++i) {
      int li = cover.chart(i).local_index(degree, members[m]);
      if (li >= 0) {
        out[static_cast<int>(m)] = local[i][li];
        found = true;
      }
    }
    if (!found) throw Error("glue: simplex not covered");
  }
  return out;
}

// Connection over a (-1)-gerbe: a DB 0-cocycle (phi_i, m_ij) whose chart
// functions jump by exact multiples of 2*pi across overlaps. The exponential
// of phi is a globally defined U(1)-valued map; the class of (m_ij) in
// H^1(Y; Z) indexes the gerbe.
template <class T>
class MinusOneGerbeConnection {
 public:
  MinusOneGerbeConnection() = default;
  explicit MinusOneGerbeConnection(DBCochain<T> data, double tolerance = 1e-10)
      : data_(std::move(data)) {
    if (data_.truncation() != 0 || data_.diagonal() != 0) {
      throw ShapeMismatchError("(-1)-gerbe connection must be a (0,0) DB cochain");
    }
    auto [ok, residual] = is_cocycle(data_, tolerance);
    if (!ok) {
      throw InvalidParameterError(
          "(-1)-gerbe connection violates phi_i - phi_j = -2*pi*m_ij");
    }
  }

  const DBCochain<T>& db() const { return data_; }
  const GoodCover& cover() const { return data_.cover(); }
  const std::vector<Cochain<T>>& chart_functions() const {
    return data_.form_layer(0);
  }
  const std::vector<IntCoeff>& jumps() const { return data_.integer_layer(); }

  bool global() const {
    for (IntCoeff w : jumps()) {
      if (w != 0) return false;
    }
    return true;
  }

  // d(phi_i) glued over the region: globally defined even when phi is not,
  // since d kills the constant 2*pi jumps.
  Cochain<T> global_differential() const {
    std::vector<Cochain<T>> local;
    local.reserve(chart_functions().size());
    for (const auto& f : chart_functions()) local.push_back(coboundary(f));
    return glue_local_layers<T>(cover(), local, 1);
  }

 private:
  DBCochain<T> data_;
};

// Extended field: a connection on the bulk-side stratum plus the edge mode
// on its boundary stratum (whose cover is induced from the bulk cover).
template <class T>
struct ExtendedField {
  U1Connection<T> connection;                // on the covered region
  MinusOneGerbeConnection<T> edge_mode;      // on the boundary stratum
  const GoodCover* boundary_cover = nullptr;
};

// Globally defined variation direction: integer layers never vary (gerbe
// classes are locally constant in field space), so a variation of the edge
// mode is one global function and a variation of the connection is one
// global form. Construction from DB-shaped data rejects any nonzero integer
// layer.
template <class T>
struct FieldVariation {
  std::optional<Cochain<T>> delta_phi;         // global function on the region
  std::optional<Cochain<T>> delta_connection;  // global 1-form on the region
  std::optional<Cochain<T>> delta_edge_mode;   // global function on the stratum
  // Bulk contribution to the presymplectic potential, precomputed from
  // supplied bulk data (bulk meshes are out of scope).
  double supplied_bulk_term = 0;

  static FieldVariation edge_mode_direction(const DBCochain<T>& delta) {
    for (IntCoeff w : delta.integer_layer()) {
      if (w != 0) {
        throw InvalidParameterError(
            "variations must not change the gerbe class (delta m != 0)");
      }
    }
    FieldVariation out;
    out.delta_edge_mode = glue_local_layers<T>(delta.cover(),
                                               delta.form_layer(0), 0);
    return out;
  }
};

// Reinterpret a diagonal-0 cochain (functions plus integer jumps) at another
// truncation level; the layer shapes agree for every k >= 0.
template <class T>
DBCochain<T> with_truncation(const DBCochain<T>& x, int truncation) {
  if (x.diagonal() != 0) {
    throw ShapeMismatchError("with_truncation expects a diagonal-0 cochain");
  }
  DBCochain<T> out(&x.cover(), truncation, 0);
  out.form_layer(0) = x.form_layer(0);
  out.integer_layer() = x.integer_layer();
  return out;
}

// Dressed field a := d(phi) - A for a globally defined connection form.
// Gauge invariant: dress(A + d eps, phi + eps) = dress(A, phi) exactly.
template <class T>
Cochain<T> dress(const Cochain<T>& a_global, const Cochain<T>& phi) {
  if (a_global.degree() != 1 || phi.degree() != 0) {
    throw ShapeMismatchError("dress expects a global 1-form and a function");
  }
  return coboundary(phi) - a_global;
}

template <class T>
Cochain<T> dress(const U1Connection<T>& connection, const Cochain<T>& phi) {
  if (!connection.global()) {
    throw InvalidParameterError(
        "dress needs a global connection; use covariant_derivative instead");
  }
  return dress(connection.glued_form(), phi);
}

// Covariant derivative of the dual edge mode:
//   D_A(phi) = (d phi_i - A_i, -Lambda_ij, -n_ijk),
// a (1,1) DB cochain. When the connection is global its top layer glues to
// the dressed field d(phi_i) - A.
template <class T>
DBCochain<T> covariant_derivative(const MinusOneGerbeConnection<T>& phi,
                                  const U1Connection<T>& connection) {
  if (&phi.cover() != &connection.cover()) {
    throw ShapeMismatchError("covariant_derivative: cover mismatch");
  }
  const GoodCover& cover = phi.cover();
  DBCochain<T> out(&cover, 1, 1);
  for (int m = 0; m < cover.nerve().count(0); ++m) {
    out.form_layer(0)[m] =
        coboundary(phi.chart_functions()[m]) - connection.local_forms()[m];
  }
  for (int m = 0; m < cover.nerve().count(1); ++m) {
    out.form_layer(1)[m] = T(-1) * connection.db().form_layer(1)[m];
  }
  for (size_t m = 0; m < out.integer_layer().size(); ++m) {
    out.integer_layer()[m] = -connection.db().integer_layer()[m];
  }
  return out;
}

// The dressed field for a global connection, glued over the region.
template <class T>
Cochain<T> dressed_field(const MinusOneGerbeConnection<T>& phi,
                         const U1Connection<T>& connection) {
  return phi.global_differential() - connection.glued_form();
}

// Winding number of a dual edge mode on a circle stratum: the exact integer
// w with 2*pi*w = integral of d(phi) around the loop, computed by arc
// decomposition as w = -sum of the overlap jumps m_{i,i+1} taken in cyclic
// chart order. Invariant under gauge transformations by integer cochains.
template <class T>
IntCoeff winding_number(const MinusOneGerbeConnection<T>& phi) {
  const GoodCover& cover = phi.cover();
  const auto& order = cover.cyclic_order();
  if (order.size() < 3 || cover.region().dimension() != 1) {
    throw InvalidParameterError("winding number needs a circle stratum");
  }
  IntCoeff total = 0;
  int n = static_cast<int>(order.size());
  for (int s = 0; s < n; ++s) {
    int i = order[s], j = order[(s + 1) % n];
    // stored on ascending tuples; m_{ji} = -m_{ij}
    int idx = cover.nerve().find(1, {std::min(i, j), std::max(i, j)});
    if (idx < 0) throw Error("winding: consecutive charts do not overlap");
    IntCoeff m = phi.jumps()[idx];
    total += (i < j) ? m : -m;
  }
  return -total;
}

// Cech class of the jump layer in H^1(stratum; Z); equals the winding
// integer on a circle under the loop-pairing identification.
template <class T>
CohomologyClass gerbe_class(const MinusOneGerbeConnection<T>& phi) {
  const GoodCover& cover = phi.cover();
  CohomologyClass cls =
      cech_class(cover.nerve(), 1, phi.jumps());
  if (!cover.cyclic_order().empty() && cls.free_coordinates.size() == 1) {
    // orient the identification H^1(S^1; Z) ~ Z so that class = winding
    IntCoeff w = winding_number(phi);
    if (w != 0 && cls.free_coordinates[0] != 0 &&
        ((w > 0) != (cls.free_coordinates[0] > 0))) {
      cls.free_coordinates[0] = -cls.free_coordinates[0];
    }
  }
  return cls;
}

// Morphism test for extended fields: eps must be a DB 0-cocycle on the bulk
// cover, the connections must differ by the gauge transformation with
// parameter eps, and the edge modes must differ by the restriction of eps to
// the boundary cover. Boundary charts correspond to bulk charts by index
// (the induced-cover layout for every stratum in scope).
template <class T>
bool is_morphism(const ExtendedField<T>& src, const ExtendedField<T>& dst,
                 const DBCochain<T>& eps, double tolerance = 1e-10) {
  if (&src.connection.cover() != &eps.cover() ||
      &dst.connection.cover() != &eps.cover() || eps.diagonal() != 0) {
    return false;
  }
  auto [cocycle_ok, residual] = is_cocycle(with_truncation(eps, 0), tolerance);
  if (!cocycle_ok) return false;

  DBCochain<T> transformed =
      gauge_transform(src.connection.db(), with_truncation(eps, 1));
  DBCochain<T> conn_diff = dst.connection.db() - transformed;
  if (conn_diff.max_abs() > tolerance) return false;

  const GoodCover* boundary = src.boundary_cover;
  if (boundary == nullptr || boundary != dst.boundary_cover) return false;
  if (boundary->chart_count() != eps.cover().chart_count()) return false;

  for (int i = 0; i < boundary->chart_count(); ++i) {
    Cochain<T> expected = src.edge_mode.chart_functions()[i] +
                          eps.form_layer(0)[i].restrict_to(boundary->chart(i));
    Cochain<T> diff = dst.edge_mode.chart_functions()[i] - expected;
    if (diff.max_abs() > tolerance) return false;
  }
  for (int m = 0; m < boundary->nerve().count(1); ++m) {
    const auto& pair = boundary->nerve().simplex(1, m);
    int bulk_idx = eps.cover().nerve().find(1, pair);
    if (bulk_idx < 0) return false;
    IntCoeff expected =
        src.edge_mode.jumps()[m] + eps.integer_layer()[bulk_idx];
    if (dst.edge_mode.jumps()[m] != expected) return false;
  }
  return true;
}

// Per-chart branches of the angular coordinate on a circle-like cover:
// theta lifted continuously over each chart by integrating the reference
// angular cochain from the chart's first column.
std::vector<Cochain<double>> chart_angle_lifts(const GoodCover& cover);

// Chart potentials of a closed 1-cochain tau on a circle stratum: integrates
// tau within every chart, rounds the overlap mismatches to exact 2*pi
// multiples (the jump layer), and returns the edge mode together with the
// global remainder form A = d(phi_i) - tau. When tau has period 2*pi*w the
// edge mode has winding w and A is numerically zero.
std::pair<MinusOneGerbeConnection<double>, Cochain<double>>
integrate_to_edge_mode(const GoodCover& ring_cover,
                       const Cochain<double>& tau);

// Edge mode with prescribed winding: chart functions w * theta_i.
MinusOneGerbeConnection<double> make_winding_edge_mode(
    const GoodCover& ring_cover, IntCoeff winding);

}  // namespace dbcohom
