#include "dbcohom/cochain.hpp"

#include <cmath>

namespace dbcohom {

Cochain<double> to_real(const Cochain<Rational>& c, double scale) {
  std::vector<double> vals(c.size());
  for (int k = 0; k < c.size(); ++k) vals[k] = scale * to_double(c[k]);
  return Cochain<double>(c.domain(), c.degree(), std::move(vals));
}

Cochain<Rational> to_exact_units(const Cochain<double>& c) {
  std::vector<Rational> vals(c.size());
  for (int k = 0; k < c.size(); ++k) {
    // doubles are dyadic rationals; this conversion is exact
    vals[k] = Rational(c[k]);
  }
  return Cochain<Rational>(c.domain(), c.degree(), std::move(vals));
}

Cochain<double> sample_function(const Subcomplex& domain, const PointFn& f) {
  const auto& parent = domain.parent();
  if (!parent.has_coordinates()) {
    throw InvalidParameterError("sampling needs vertex coordinates");
  }
  Cochain<double> out(domain, 0);
  const auto& members = domain.members(0);
  for (size_t k = 0; k < members.size(); ++k) {
    VertexId v = parent.simplex(0, members[k]).vertices[0];
    out[static_cast<int>(k)] = f(parent.coordinate(v));
  }
  return out;
}

Cochain<double> sample_one_form(const Subcomplex& domain, const CovectorFn& f) {
  const auto& parent = domain.parent();
  if (!parent.has_coordinates()) {
    throw InvalidParameterError("sampling needs vertex coordinates");
  }
  // two-point Gauss rule along the straight chord
  const double g = 1.0 / std::sqrt(3.0);
  Cochain<double> out(domain, 1);
  const auto& members = domain.members(1);
  for (size_t k = 0; k < members.size(); ++k) {
    const auto& verts = parent.simplex(1, members[k]).vertices;
    const auto& a = parent.coordinate(verts[0]);
    const auto& b = parent.coordinate(verts[1]);
    std::array<double, 3> mid, half, p1, p2;
    for (int c = 0; c < 3; ++c) {
      mid[c] = 0.5 * (a[c] + b[c]);
      half[c] = 0.5 * (b[c] - a[c]);
      p1[c] = mid[c] - g * half[c];
      p2[c] = mid[c] + g * half[c];
    }
    auto f1 = f(p1);
    auto f2 = f(p2);
    double acc = 0;
    for (int c = 0; c < 3; ++c) acc += 0.5 * (f1[c] + f2[c]) * (b[c] - a[c]);
    out[static_cast<int>(k)] = acc;
  }
  return out;
}

Cochain<double> sample_two_form(const Subcomplex& domain, const PointFn& f) {
  const auto& parent = domain.parent();
  if (!parent.has_coordinates()) {
    throw InvalidParameterError("sampling needs vertex coordinates");
  }
  Cochain<double> out(domain, 2);
  const auto& members = domain.members(2);
  for (size_t k = 0; k < members.size(); ++k) {
    const auto& verts = parent.simplex(2, members[k]).vertices;
    const auto& a = parent.coordinate(verts[0]);
    const auto& b = parent.coordinate(verts[1]);
    const auto& c = parent.coordinate(verts[2]);
    std::array<double, 3> centroid, u, v, n;
    for (int m = 0; m < 3; ++m) {
      centroid[m] = (a[m] + b[m] + c[m]) / 3.0;
      u[m] = b[m] - a[m];
      v[m] = c[m] - a[m];
    }
    n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
         u[0] * v[1] - u[1] * v[0]};
    double doubled_area = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    // the canonical (ascending) vertex order carries orientation sign
    // relative to the global orientation of the mesh
    int orient = parent.simplex(2, members[k]).orientation;
    out[static_cast<int>(k)] = f(centroid) * 0.5 * doubled_area * orient;
  }
  return out;
}

}  // namespace dbcohom
