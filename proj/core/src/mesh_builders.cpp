#include "dbcohom/mesh_builders.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace dbcohom {

namespace {

struct BuilderInfo {
  StructuredGrid grid;
  std::vector<SphereVertexTag> tags;
  int subdivision = -1;
};

double signed_area_xy(const std::array<double, 3>& a,
                      const std::array<double, 3>& b,
                      const std::array<double, 3>& c) {
  return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

double det3(const std::array<double, 3>& a, const std::array<double, 3>& b,
            const std::array<double, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) -
         a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Simplex oriented_triangle(VertexId u, VertexId v, VertexId w, int sign) {
  Simplex s;
  s.vertices = {u, v, w};
  std::sort(s.vertices.begin(), s.vertices.end());
  s.orientation = sign;
  return s;
}

// Sign of the permutation taking (u,v,w) to sorted order.
int sort_parity(VertexId u, VertexId v, VertexId w) {
  int swaps = 0;
  VertexId a = u, b = v, c = w;
  if (a > b) { std::swap(a, b); ++swaps; }
  if (b > c) { std::swap(b, c); ++swaps; }
  if (a > b) { std::swap(a, b); ++swaps; }
  return (swaps % 2 == 0) ? 1 : -1;
}

std::vector<Simplex> edges_of_triangles(const std::vector<Simplex>& tris) {
  std::set<std::vector<VertexId>> seen;
  std::vector<Simplex> edges;
  for (const auto& t : tris) {
    const auto& v = t.vertices;
    for (auto pair : {std::pair{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}}) {
      std::vector<VertexId> e = {pair.first, pair.second};
      if (seen.insert(e).second) edges.push_back({e, 1});
    }
  }
  return edges;
}

}  // namespace

SimplicialComplex build_circle(const CircleParams& params) {
  int n = params.nodes;
  if (n < 3) {
    throw InvalidParameterError("circle needs at least 3 nodes");
  }
  std::vector<std::array<double, 3>> coords(n);
  for (int j = 0; j < n; ++j) {
    double th = two_pi * j / n;
    coords[j] = {params.radius * std::cos(th), params.radius * std::sin(th),
                 0.0};
  }
  std::vector<Simplex> vertices(n);
  for (int j = 0; j < n; ++j) vertices[j] = {{j}, 1};
  std::vector<Simplex> edges(n);
  for (int j = 0; j < n - 1; ++j) edges[j] = {{j, j + 1}, 1};
  // The wrap edge [0, n-1] traverses the loop backwards in canonical order.
  edges[n - 1] = {{0, n - 1}, -1};

  SimplicialComplex out({vertices, edges}, std::move(coords),
                        MeshKind::circle);
  auto info = std::make_shared<BuilderInfo>();
  info->grid = {0, n, false};
  out.annotate(info);
  return out;
}

SimplicialComplex build_annulus(const AnnulusParams& params) {
  int nr = params.n_r, nt = params.n_theta;
  if (nr < 1 || nt < 3) {
    throw InvalidParameterError("annulus needs n_r >= 1 and n_theta >= 3");
  }
  if (!(params.r_outer > params.r_inner) || params.r_inner <= 0.0) {
    throw InvalidParameterError("annulus needs 0 < r_inner < r_outer");
  }
  auto vid = [nt](int i, int j) { return i * nt + ((j % nt + nt) % nt); };
  std::vector<std::array<double, 3>> coords((nr + 1) * nt);
  for (int i = 0; i <= nr; ++i) {
    double r = params.r_inner + (params.r_outer - params.r_inner) * i / nr;
    for (int j = 0; j < nt; ++j) {
      double th = two_pi * j / nt;
      coords[vid(i, j)] = {r * std::cos(th), r * std::sin(th), 0.0};
    }
  }

  std::vector<Simplex> vertices(coords.size());
  for (size_t v = 0; v < coords.size(); ++v) {
    vertices[v] = {{static_cast<VertexId>(v)}, 1};
  }
  std::vector<Simplex> triangles;
  triangles.reserve(2 * nr * nt);
  auto push_ccw = [&](VertexId a, VertexId b, VertexId c) {
    double area = signed_area_xy(coords[a], coords[b], coords[c]);
    int parity = sort_parity(a, b, c);
    triangles.push_back(oriented_triangle(a, b, c, (area > 0 ? 1 : -1) * parity));
  };
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nt; ++j) {
      push_ccw(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1));
      push_ccw(vid(i, j), vid(i + 1, j + 1), vid(i, j + 1));
    }
  }
  auto edges = edges_of_triangles(triangles);
  SimplicialComplex out({vertices, edges, triangles}, std::move(coords),
                        MeshKind::annulus);
  auto info = std::make_shared<BuilderInfo>();
  info->grid = {nr, nt, false};
  out.annotate(info);
  return out;
}

SimplicialComplex build_disk(const DiskParams& params) {
  int nr = params.n_r, nt = params.n_theta;
  if (nr < 1 || nt < 3) {
    throw InvalidParameterError("disk needs n_r >= 1 and n_theta >= 3");
  }
  auto vid = [nt](int i, int j) {
    return 1 + (i - 1) * nt + ((j % nt + nt) % nt);
  };
  std::vector<std::array<double, 3>> coords(1 + nr * nt);
  coords[0] = {0.0, 0.0, 0.0};
  for (int i = 1; i <= nr; ++i) {
    double r = params.radius * i / nr;
    for (int j = 0; j < nt; ++j) {
      double th = two_pi * j / nt;
      coords[vid(i, j)] = {r * std::cos(th), r * std::sin(th), 0.0};
    }
  }
  std::vector<Simplex> vertices(coords.size());
  for (size_t v = 0; v < coords.size(); ++v) {
    vertices[v] = {{static_cast<VertexId>(v)}, 1};
  }
  std::vector<Simplex> triangles;
  auto push_ccw = [&](VertexId a, VertexId b, VertexId c) {
    double area = signed_area_xy(coords[a], coords[b], coords[c]);
    int parity = sort_parity(a, b, c);
    triangles.push_back(oriented_triangle(a, b, c, (area > 0 ? 1 : -1) * parity));
  };
  for (int j = 0; j < nt; ++j) {
    push_ccw(0, vid(1, j), vid(1, j + 1));
  }
  for (int i = 1; i < nr; ++i) {
    for (int j = 0; j < nt; ++j) {
      push_ccw(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1));
      push_ccw(vid(i, j), vid(i + 1, j + 1), vid(i, j + 1));
    }
  }
  auto edges = edges_of_triangles(triangles);
  SimplicialComplex out({vertices, edges, triangles}, std::move(coords),
                        MeshKind::disk);
  auto info = std::make_shared<BuilderInfo>();
  info->grid = {nr, nt, true};
  out.annotate(info);
  return out;
}

namespace {

struct Icosahedron {
  std::vector<std::array<double, 3>> vertices;  // 12, unit norm
  std::vector<std::array<VertexId, 3>> faces;   // 20, ascending tuples
};

Icosahedron make_icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> raw = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  Icosahedron ico;
  for (auto& v : raw) {
    double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    ico.vertices.push_back({v[0] / len, v[1] / len, v[2] / len});
  }
  // Faces are the mutually nearest triples: each vertex has exactly five
  // neighbors at the minimal pairwise distance.
  double min_d2 = 1e30;
  auto d2 = [&](int a, int b) {
    double s = 0;
    for (int c = 0; c < 3; ++c) {
      double diff = ico.vertices[a][c] - ico.vertices[b][c];
      s += diff * diff;
    }
    return s;
  };
  for (int a = 0; a < 12; ++a) {
    for (int b = a + 1; b < 12; ++b) min_d2 = std::min(min_d2, d2(a, b));
  }
  auto adjacent = [&](int a, int b) { return d2(a, b) < min_d2 * 1.2; };
  for (VertexId a = 0; a < 12; ++a) {
    for (VertexId b = a + 1; b < 12; ++b) {
      if (!adjacent(a, b)) continue;
      for (VertexId c = b + 1; c < 12; ++c) {
        if (adjacent(a, c) && adjacent(b, c)) {
          ico.faces.push_back({a, b, c});
        }
      }
    }
  }
  return ico;
}

}  // namespace

SimplicialComplex build_sphere(const SphereParams& params) {
  if (params.subdivision < 0) {
    throw InvalidParameterError("sphere subdivision must be >= 0");
  }
  Icosahedron ico = make_icosahedron();
  const int N = 1 << params.subdivision;

  // Fine vertices are keyed by their canonical barycentric tag so that
  // vertices on shared coarse edges are identified across faces.
  using Key = std::vector<std::pair<VertexId, int>>;
  std::map<Key, VertexId> lookup;
  std::vector<std::array<double, 3>> coords;
  std::vector<SphereVertexTag> tags;

  auto fine_vertex = [&](const std::array<VertexId, 3>& face, int wa, int wb,
                         int wc) -> VertexId {
    Key key;
    if (wa > 0) key.push_back({face[0], wa});
    if (wb > 0) key.push_back({face[1], wb});
    if (wc > 0) key.push_back({face[2], wc});
    std::sort(key.begin(), key.end());
    auto it = lookup.find(key);
    if (it != lookup.end()) return it->second;

    std::array<double, 3> pos = {0, 0, 0};
    for (int c = 0; c < 3; ++c) {
      pos[c] = (wa * ico.vertices[face[0]][c] + wb * ico.vertices[face[1]][c] +
                wc * ico.vertices[face[2]][c]) /
               N;
    }
    double len = std::sqrt(pos[0] * pos[0] + pos[1] * pos[1] + pos[2] * pos[2]);
    for (int c = 0; c < 3; ++c) pos[c] /= len;

    VertexId id = static_cast<VertexId>(coords.size());
    coords.push_back(pos);
    SphereVertexTag tag;
    tag.coarse = {-1, -1, -1};
    tag.weights = {0, 0, 0};
    for (size_t m = 0; m < key.size(); ++m) {
      tag.coarse[m] = key[m].first;
      tag.weights[m] = key[m].second;
    }
    tags.push_back(tag);
    lookup.emplace(std::move(key), id);
    return id;
  };

  std::vector<Simplex> triangles;
  for (const auto& face : ico.faces) {
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j + i < N; ++j) {
        int k = N - 1 - i - j;
        // Upward triangle (i+1,j,k),(i,j+1,k),(i,j,k+1).
        VertexId a = fine_vertex(face, i + 1, j, k);
        VertexId b = fine_vertex(face, i, j + 1, k);
        VertexId c = fine_vertex(face, i, j, k + 1);
        double orient = det3(coords[a], coords[b], coords[c]);
        triangles.push_back(
            oriented_triangle(a, b, c, (orient > 0 ? 1 : -1) * sort_parity(a, b, c)));
        // Downward triangle exists when i+j+k = N-1 with k >= 1.
        if (k >= 1) {
          VertexId d = fine_vertex(face, i, j + 1, k);
          VertexId e = fine_vertex(face, i + 1, j, k);
          VertexId f = fine_vertex(face, i + 1, j + 1, k - 1);
          double o2 = det3(coords[d], coords[e], coords[f]);
          triangles.push_back(oriented_triangle(
              d, e, f, (o2 > 0 ? 1 : -1) * sort_parity(d, e, f)));
        }
      }
    }
  }

  std::vector<Simplex> vertices(coords.size());
  for (size_t v = 0; v < coords.size(); ++v) {
    vertices[v] = {{static_cast<VertexId>(v)}, 1};
  }
  auto edges = edges_of_triangles(triangles);
  SimplicialComplex out({vertices, edges, triangles}, std::move(coords),
                        MeshKind::sphere);
  auto info = std::make_shared<BuilderInfo>();
  info->tags = std::move(tags);
  info->subdivision = params.subdivision;
  out.annotate(info);
  return out;
}

StructuredGrid grid_of(const SimplicialComplex& complex) {
  const auto* info = complex.annotation<BuilderInfo>();
  if (info == nullptr || complex.kind() == MeshKind::sphere ||
      complex.kind() == MeshKind::generic) {
    throw InvalidParameterError("complex has no structured grid layout");
  }
  return info->grid;
}

VertexId grid_vertex(const StructuredGrid& grid, int ring, int column) {
  int j = (column % grid.n_theta + grid.n_theta) % grid.n_theta;
  if (grid.has_center) {
    if (ring == 0) return 0;
    return 1 + (ring - 1) * grid.n_theta + j;
  }
  return ring * grid.n_theta + j;
}

const std::vector<SphereVertexTag>& sphere_vertex_tags(
    const SimplicialComplex& complex) {
  const auto* info = complex.annotation<BuilderInfo>();
  if (info == nullptr || complex.kind() != MeshKind::sphere) {
    throw InvalidParameterError("not a sphere complex");
  }
  return info->tags;
}

int sphere_subdivision(const SimplicialComplex& complex) {
  const auto* info = complex.annotation<BuilderInfo>();
  if (info == nullptr || complex.kind() != MeshKind::sphere) {
    throw InvalidParameterError("not a sphere complex");
  }
  return info->subdivision;
}

int sphere_coarse_vertex_count() { return 12; }

Cochain<double> reference_angular_cochain(const SimplicialComplex& complex) {
  StructuredGrid grid = grid_of(complex);
  const int nt = grid.n_theta;
  const double c = two_pi / nt;
  Subcomplex whole = Subcomplex::whole(complex);
  Cochain<double> out(whole, 1);
  for (int e = 0; e < complex.count(1); ++e) {
    const auto& verts = complex.simplex(1, e).vertices;
    if (grid.has_center && (verts[0] == 0 || verts[1] == 0)) {
      continue;  // disk spokes at the center carry no angular step
    }
    int col0 = (grid.has_center ? (verts[0] - 1) : verts[0]) % nt;
    int col1 = (grid.has_center ? (verts[1] - 1) : verts[1]) % nt;
    int dc = col1 - col0;
    if (dc > nt / 2) dc -= nt;
    if (dc < -nt / 2) dc += nt;
    if (dc > 1 || dc < -1) throw Error("angular cochain: non-local edge");
    out[e] = dc * c;
  }
  return out;
}

}  // namespace dbcohom
