#include "dbcohom/hodge.hpp"

#include <cmath>
#include <sstream>

namespace dbcohom {

namespace {

double dist(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double s = 0;
  for (int c = 0; c < 3; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
  return std::sqrt(s);
}

// cotangent of the angle at vertex `apex` of triangle (apex, u, v)
double cotangent(const std::array<double, 3>& apex,
                 const std::array<double, 3>& u,
                 const std::array<double, 3>& v) {
  std::array<double, 3> e1, e2;
  for (int c = 0; c < 3; ++c) {
    e1[c] = u[c] - apex[c];
    e2[c] = v[c] - apex[c];
  }
  double dot = e1[0] * e2[0] + e1[1] * e2[1] + e1[2] * e2[2];
  std::array<double, 3> cr = {e1[1] * e2[2] - e1[2] * e2[1],
                              e1[2] * e2[0] - e1[0] * e2[2],
                              e1[0] * e2[1] - e1[1] * e2[0]};
  double norm = std::sqrt(cr[0] * cr[0] + cr[1] * cr[1] + cr[2] * cr[2]);
  return dot / norm;
}

}  // namespace

HodgeStructure::HodgeStructure(const SimplicialComplex& complex)
    : complex_(&complex) {
  if (!complex.has_coordinates()) {
    throw InvalidParameterError("hodge structure needs vertex coordinates");
  }
  const int dim = complex.dimension();
  stars_.assign(dim + 1, {});
  boundary_vertex_.assign(complex.count(0), 0);
  boundary_edge_.assign(complex.count(1), 0);

  if (dim == 1) {
    // dual of a vertex is half of each incident edge; dual of an edge is a
    // point with weight one over the edge length
    std::vector<double>& s0 = stars_[0];
    std::vector<double>& s1 = stars_[1];
    s0.assign(complex.count(0), 0.0);
    s1.assign(complex.count(1), 0.0);
    for (SimplexIndex e = 0; e < complex.count(1); ++e) {
      const auto& verts = complex.simplex(1, e).vertices;
      double len = dist(complex.coordinate(verts[0]), complex.coordinate(verts[1]));
      if (len <= 0) {
        throw MeshQualityError("degenerate edge " + std::to_string(e));
      }
      s1[e] = 1.0 / len;
      s0[verts[0]] += 0.5 * len;
      s0[verts[1]] += 0.5 * len;
    }
    return;
  }

  if (dim != 2) {
    throw InvalidParameterError("hodge structure supports 1- and 2-meshes");
  }

  for (SimplexIndex e : complex.boundary_simplices()) {
    boundary_edge_[e] = 1;
    for (VertexId v : complex.simplex(1, e).vertices) boundary_vertex_[v] = 1;
  }

  std::vector<double>& s0 = stars_[0];
  std::vector<double>& s1 = stars_[1];
  std::vector<double>& s2 = stars_[2];
  s0.assign(complex.count(0), 0.0);
  s1.assign(complex.count(1), 0.0);
  s2.assign(complex.count(2), 0.0);

  std::ostringstream offenders;
  int offender_count = 0;

  for (SimplexIndex t = 0; t < complex.count(2); ++t) {
    const auto& verts = complex.simplex(2, t).vertices;
    const auto& a = complex.coordinate(verts[0]);
    const auto& b = complex.coordinate(verts[1]);
    const auto& c = complex.coordinate(verts[2]);
    double cot_a = cotangent(a, b, c);
    double cot_b = cotangent(b, a, c);
    double cot_c = cotangent(c, a, b);

    double lab = dist(a, b), lac = dist(a, c), lbc = dist(b, c);

    // dual length contribution of each edge: half cot of the opposite angle
    auto edge_index = [&](VertexId u, VertexId v) {
      auto idx = complex.find(1, {std::min(u, v), std::max(u, v)});
      return *idx;
    };
    s1[edge_index(verts[0], verts[1])] += 0.5 * cot_c;
    s1[edge_index(verts[0], verts[2])] += 0.5 * cot_b;
    s1[edge_index(verts[1], verts[2])] += 0.5 * cot_a;

    // circumcentric dual area at each corner
    s0[verts[0]] += (lab * lab * cot_c + lac * lac * cot_b) / 8.0;
    s0[verts[1]] += (lab * lab * cot_c + lbc * lbc * cot_a) / 8.0;
    s0[verts[2]] += (lac * lac * cot_b + lbc * lbc * cot_a) / 8.0;

    double s = 0.5 * (lab + lac + lbc);
    double area2 = s * (s - lab) * (s - lac) * (s - lbc);
    if (area2 <= 0) {
      throw MeshQualityError("degenerate triangle " + std::to_string(t));
    }
    s2[t] = 1.0 / std::sqrt(area2);
  }

  for (SimplexIndex e = 0; e < complex.count(1); ++e) {
    if (s1[e] <= 0) {
      if (offender_count++ < 8) offenders << " edge " << e;
    }
  }
  for (VertexId v = 0; v < complex.count(0); ++v) {
    if (s0[v] <= 0) {
      if (offender_count++ < 8) offenders << " vertex " << v;
    }
  }
  if (offender_count > 0) {
    throw MeshQualityError(
        "non-positive circumcentric dual weights (obtuse-heavy mesh):" +
        offenders.str());
  }
}

double HodgeStructure::l2_norm(const Cochain<double>& c) const {
  const int p = c.degree();
  double acc = 0;
  const auto& members = c.domain().members(p);
  for (size_t k = 0; k < members.size(); ++k) {
    acc += stars_[p][members[k]] * c[static_cast<int>(k)] * c[static_cast<int>(k)];
  }
  return std::sqrt(acc);
}

Cochain<double> HodgeStructure::codifferential(const Cochain<double>& c) const {
  const int p = c.degree();
  if (p < 1 || p > complex_->dimension()) {
    throw ShapeMismatchError("codifferential degree out of range");
  }
  Cochain<double> out(c.domain(), p - 1);
  const auto& members = c.domain().members(p);
  for (size_t k = 0; k < members.size(); ++k) {
    double weighted = stars_[p][members[k]] * c[static_cast<int>(k)];
    for (const FaceRef& f : complex_->faces(p, members[k])) {
      int fl = c.domain().local_index(p - 1, f.index);
      if (fl < 0) throw ShapeMismatchError("codifferential: open domain");
      out[fl] += f.coefficient * weighted;
    }
  }
  for (size_t k = 0; k < out.domain().members(p - 1).size(); ++k) {
    out[static_cast<int>(k)] /= stars_[p - 1][out.domain().members(p - 1)[k]];
  }
  return out;
}

double HodgeStructure::boundary_normal_flux(const Cochain<double>& omega,
                                            VertexId v) const {
  auto vi = complex_->find(0, {v});
  if (!vi || !boundary_vertex_[v]) {
    throw InvalidParameterError("not a boundary vertex");
  }
  double flux = 0;
  for (SimplexIndex e = 0; e < complex_->count(1); ++e) {
    if (boundary_edge_[e]) continue;
    const auto& verts = complex_->simplex(1, e).vertices;
    if (verts[0] != v && verts[1] != v) continue;
    double value = omega.at_parent(e);
    // orient out of v: canonical direction is verts[0] -> verts[1]
    flux += stars_[1][e] * ((verts[0] == v) ? value : -value);
  }
  return flux;
}

HodgeStructure build_hodge(const SimplicialComplex& complex) {
  return HodgeStructure(complex);
}

}  // namespace dbcohom
