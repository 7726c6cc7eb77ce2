#include "dbcohom/cover.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dbcohom/cohomology.hpp"
#include "dbcohom/mesh_builders.hpp"

namespace dbcohom {

Nerve::Nerve(std::vector<std::vector<std::vector<int>>> simplices)
    : simplices_(std::move(simplices)) {
  while (!simplices_.empty() && simplices_.back().empty()) {
    simplices_.pop_back();
  }
  for (auto& level : simplices_) {
    std::sort(level.begin(), level.end());
  }
}

int Nerve::find(int q, const std::vector<int>& tuple) const {
  if (q < 0 || q > dimension()) return -1;
  const auto& level = simplices_[q];
  auto it = std::lower_bound(level.begin(), level.end(), tuple);
  if (it == level.end() || *it != tuple) return -1;
  return static_cast<int>(it - level.begin());
}

namespace {

constexpr int kMaxDepth = 4;  // intersection lattice depth

void gather_tuples(int n_charts, int depth, std::vector<int>& tuple,
                   int first, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(tuple.size()) == depth) {
    out.push_back(tuple);
    return;
  }
  for (int i = first; i < n_charts; ++i) {
    tuple.push_back(i);
    gather_tuples(n_charts, depth, tuple, i + 1, out);
    tuple.pop_back();
  }
}

}  // namespace

GoodCover::GoodCover(const SimplicialComplex* complex, Subcomplex region,
                     std::vector<Subcomplex> charts,
                     std::vector<int> cyclic_order)
    : complex_(complex),
      region_(std::move(region)),
      charts_(std::move(charts)),
      cyclic_order_(std::move(cyclic_order)) {
  if (charts_.empty()) throw InvalidParameterError("cover needs charts");

  std::vector<std::vector<std::vector<int>>> nerve_levels(kMaxDepth);
  for (int depth = 1; depth <= kMaxDepth; ++depth) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> scratch;
    gather_tuples(chart_count(), depth, scratch, 0, tuples);
    for (auto& tuple : tuples) {
      Subcomplex inter = charts_[tuple[0]];
      for (int m = 1; m < depth; ++m) {
        inter = inter.intersect(charts_[tuple[m]]);
      }
      if (!inter.empty()) {
        nerve_levels[depth - 1].push_back(tuple);
      }
      intersections_.emplace(tuple, std::move(inter));
    }
  }
  nerve_ = Nerve(std::move(nerve_levels));

  // partition of unity: chart-membership indicator over multiplicity
  int n_vertices = complex_->count(0);
  pou_.assign(chart_count(), std::vector<double>(n_vertices, 0.0));
  multiplicity_.assign(n_vertices, 0);
  for (int i = 0; i < chart_count(); ++i) {
    for (SimplexIndex s : charts_[i].members(0)) {
      VertexId v = complex_->simplex(0, s).vertices[0];
      multiplicity_[v] += 1;
    }
  }
  for (int i = 0; i < chart_count(); ++i) {
    for (SimplexIndex s : charts_[i].members(0)) {
      VertexId v = complex_->simplex(0, s).vertices[0];
      pou_[i][v] = 1.0 / multiplicity_[v];
    }
  }
}

const Subcomplex& GoodCover::intersection(const std::vector<int>& tuple) const {
  auto it = intersections_.find(tuple);
  if (it == intersections_.end()) {
    throw ShapeMismatchError("intersection tuple out of range");
  }
  return it->second;
}

const Subcomplex& GoodCover::intersection(int q, int nerve_index) const {
  return intersection(nerve_.simplex(q, nerve_index));
}

void GoodCover::verify_certificates() const {
  // coverage of the region
  for (int p = 0; p <= region_.dimension(); ++p) {
    for (SimplexIndex s : region_.members(p)) {
      bool covered = false;
      for (const auto& chart : charts_) {
        if (chart.contains(p, s)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        throw Error("cover certificate: region simplex not covered");
      }
    }
  }
  // contractibility of every nonempty intersection
  for (const auto& [tuple, inter] : intersections_) {
    if (inter.empty()) continue;
    if (!is_acyclic(inter)) {
      throw Error("cover certificate: intersection is not acyclic");
    }
  }
}

namespace {

// Chart arc [first_edge, first_edge + width) on a circle-like ring of
// `n` edges. edge_ids maps ring position to parent edge index.
Subcomplex arc_subcomplex(const SimplicialComplex& parent,
                          const std::vector<SimplexIndex>& edge_ids, int first,
                          int width) {
  std::vector<SimplexIndex> edges;
  int n = static_cast<int>(edge_ids.size());
  for (int m = 0; m < width; ++m) {
    edges.push_back(edge_ids[((first + m) % n + n) % n]);
  }
  return Subcomplex::from_simplices(parent, 1, edges);
}

std::vector<int> cycle_order(int n_charts) {
  std::vector<int> order(n_charts);
  for (int i = 0; i < n_charts; ++i) order[i] = i;
  return order;
}

GoodCover ring_cover(const SimplicialComplex& parent, const Subcomplex& region,
                     const std::vector<SimplexIndex>& ring_edges,
                     int n_charts) {
  int n = static_cast<int>(ring_edges.size());
  if (n_charts < 3) {
    throw InvalidParameterError(
        "no good cover with empty triple overlaps exists below 3 charts");
  }
  if (n < 3 * n_charts) {
    throw InvalidParameterError(
        "ring resolution too small for the requested chart count");
  }
  std::vector<Subcomplex> charts;
  for (int i = 0; i < n_charts; ++i) {
    int b0 = static_cast<int>(static_cast<long long>(i) * n / n_charts);
    int b1 = static_cast<int>(static_cast<long long>(i + 1) * n / n_charts);
    charts.push_back(arc_subcomplex(parent, ring_edges, b0 - 1, b1 - b0 + 2));
  }
  return GoodCover(&parent, region, std::move(charts), cycle_order(n_charts));
}

}  // namespace

GoodCover build_circle_cover(const SimplicialComplex& circle, int n_charts) {
  if (circle.kind() != MeshKind::circle) {
    throw InvalidParameterError("build_circle_cover needs a circle mesh");
  }
  // circle edges are already in loop order by construction
  std::vector<SimplexIndex> ring(circle.count(1));
  for (int e = 0; e < circle.count(1); ++e) ring[e] = e;
  return ring_cover(circle, Subcomplex::whole(circle), ring, n_charts);
}

GoodCover build_annulus_cover(const SimplicialComplex& annulus, int n_charts) {
  if (annulus.kind() != MeshKind::annulus) {
    throw InvalidParameterError("build_annulus_cover needs an annulus mesh");
  }
  StructuredGrid grid = grid_of(annulus);
  int nt = grid.n_theta;
  if (n_charts < 3) {
    throw InvalidParameterError(
        "no good cover with empty triple overlaps exists below 3 charts");
  }
  if (nt < 3 * n_charts) {
    throw InvalidParameterError(
        "angular resolution too small for the requested chart count");
  }

  // angular column of a triangle = minimum angular index of its vertices,
  // taken cyclically; charts are consecutive column bands
  auto column_of_vertex = [&](VertexId v) { return static_cast<int>(v) % nt; };
  std::vector<std::vector<SimplexIndex>> column_triangles(nt);
  for (SimplexIndex t = 0; t < annulus.count(2); ++t) {
    const auto& verts = annulus.simplex(2, t).vertices;
    // columns of the three vertices are {j, j+1} cyclically; the triangle
    // belongs to column j
    std::set<int> cols;
    for (VertexId v : verts) cols.insert(column_of_vertex(v));
    int col;
    if (cols.size() == 1) {
      col = *cols.begin();
    } else if (cols.count(0) && cols.count(nt - 1)) {
      col = nt - 1;  // wrap column
    } else {
      col = *cols.begin();
    }
    column_triangles[col].push_back(t);
  }

  std::vector<Subcomplex> charts;
  for (int i = 0; i < n_charts; ++i) {
    int b0 = static_cast<int>(static_cast<long long>(i) * nt / n_charts);
    int b1 = static_cast<int>(static_cast<long long>(i + 1) * nt / n_charts);
    std::vector<SimplexIndex> tris;
    for (int m = -1; m < b1 - b0 + 1; ++m) {
      int col = ((b0 + m) % nt + nt) % nt;
      tris.insert(tris.end(), column_triangles[col].begin(),
                  column_triangles[col].end());
    }
    charts.push_back(Subcomplex::from_simplices(annulus, 2, tris));
  }
  return GoodCover(&annulus, Subcomplex::whole(annulus), std::move(charts),
                   cycle_order(n_charts));
}

GoodCover build_sphere_cover(const SimplicialComplex& sphere) {
  if (sphere.kind() != MeshKind::sphere) {
    throw InvalidParameterError("build_sphere_cover needs a sphere mesh");
  }
  int s = sphere_subdivision(sphere);
  if (s < 2) {
    throw InvalidParameterError(
        "sphere cover needs subdivision >= 2 so triple overlaps are resolved");
  }
  const int N = 1 << s;
  const auto& tags = sphere_vertex_tags(sphere);
  auto weight_toward = [&](VertexId v, VertexId coarse) -> int {
    const auto& tag = tags[v];
    for (int m = 0; m < 3; ++m) {
      if (tag.coarse[m] == coarse) return tag.weights[m];
    }
    return 0;
  };

  std::vector<Subcomplex> charts;
  for (VertexId a = 0; a < sphere_coarse_vertex_count(); ++a) {
    std::vector<SimplexIndex> tris;
    for (SimplexIndex t = 0; t < sphere.count(2); ++t) {
      const auto& verts = sphere.simplex(2, t).vertices;
      bool inside = true;
      for (VertexId v : verts) {
        if (4 * weight_toward(v, a) < N) {
          inside = false;
          break;
        }
      }
      if (inside) tris.push_back(t);
    }
    charts.push_back(Subcomplex::from_simplices(sphere, 2, tris));
  }
  return GoodCover(&sphere, Subcomplex::whole(sphere), std::move(charts));
}

GoodCover build_trivial_cover(const SimplicialComplex& complex) {
  std::vector<Subcomplex> charts = {Subcomplex::whole(complex)};
  return GoodCover(&complex, Subcomplex::whole(complex), std::move(charts));
}

GoodCover build_cover(const SimplicialComplex& complex, int n_charts) {
  switch (complex.kind()) {
    case MeshKind::circle: return build_circle_cover(complex, n_charts);
    case MeshKind::annulus: return build_annulus_cover(complex, n_charts);
    case MeshKind::sphere: return build_sphere_cover(complex);
    case MeshKind::disk: return build_trivial_cover(complex);
    case MeshKind::generic: break;
  }
  throw InvalidParameterError("no cover construction for this mesh kind");
}

GoodCover induce_cover_on_ring(const GoodCover& cover, const Subcomplex& ring) {
  if (ring.dimension() != 1) {
    throw InvalidParameterError("induced ring cover needs a 1-dimensional ring");
  }
  std::vector<Subcomplex> charts;
  std::vector<int> order;
  for (int i = 0; i < cover.chart_count(); ++i) {
    Subcomplex restricted = cover.chart(i).intersect(ring);
    if (!restricted.empty()) {
      charts.push_back(std::move(restricted));
      order.push_back(static_cast<int>(order.size()));
    }
  }
  return GoodCover(&cover.complex(), ring, std::move(charts), order);
}

CechIntFamily cech_coboundary(const CechIntFamily& family) {
  const GoodCover& cover = *family.cover;
  const int q = family.cech_degree;
  if (static_cast<int>(family.members.size()) != cover.nerve().count(q)) {
    throw ShapeMismatchError("cech family member count mismatch");
  }
  CechIntFamily out;
  out.cover = family.cover;
  out.cech_degree = q + 1;
  out.members.assign(cover.nerve().count(q + 1), 0);
  std::vector<int> face;
  for (int t = 0; t < cover.nerve().count(q + 1); ++t) {
    const auto& tuple = cover.nerve().simplex(q + 1, t);
    face.assign(tuple.size() - 1, 0);
    IntCoeff acc = 0;
    for (size_t m = 0; m < tuple.size(); ++m) {
      int pos = 0;
      for (size_t r = 0; r < tuple.size(); ++r) {
        if (r != m) face[pos++] = tuple[r];
      }
      int fi = cover.nerve().find(q, face);
      if (fi < 0) throw Error("cech_coboundary: missing family member");
      int sign = ((tuple.size() - 1 - m) % 2 == 0) ? 1 : -1;
      acc += sign * family.members[fi];
    }
    out.members[t] = acc;
  }
  return out;
}

}  // namespace dbcohom
