#pragma once

#include "dbcohom/simplicial_complex.hpp"

namespace dbcohom {

struct CircleParams {
  int nodes = 12;          // vertices on the loop, >= 3
  double radius = 1.0;
};

struct AnnulusParams {
  int n_r = 4;             // radial intervals, >= 1
  int n_theta = 16;        // angular intervals, >= 3
  double r_inner = 1.0;
  double r_outer = 2.0;
};

struct DiskParams {
  int n_r = 4;             // radial rings around the center vertex, >= 1
  int n_theta = 16;        // angular intervals, >= 3
  double radius = 1.0;
};

struct SphereParams {
  int subdivision = 0;     // each icosahedron edge is split into 2^s pieces
};

// Uniform cycle graph embedded in the plane. chi = 0.
SimplicialComplex build_circle(const CircleParams& params);

// Structured polar triangulation of a flat annulus, quads split by the
// (i,j)->(i+1,j+1) diagonal, oriented counterclockwise. chi = 0.
SimplicialComplex build_annulus(const AnnulusParams& params);

// Polar triangulation of a flat disk with a center vertex. chi = 1.
SimplicialComplex build_disk(const DiskParams& params);

// Icosahedral sphere, subdivided 4-to-1 `subdivision` times and projected to
// the unit sphere, oriented outward. chi = 2.
SimplicialComplex build_sphere(const SphereParams& params);

// Angular index of a circle/annulus/disk vertex and radial row bookkeeping,
// used by covers and by the reference closed 1-cochain.
struct StructuredGrid {
  int n_r = 0;       // number of rings minus one (0 for the circle)
  int n_theta = 0;   // angular resolution
  bool has_center = false;  // disk center vertex is id 0
};
StructuredGrid grid_of(const SimplicialComplex& complex);

// Vertex id helpers for the structured meshes.
VertexId grid_vertex(const StructuredGrid& grid, int ring, int column);

// Barycentric tags for subdivided sphere vertices: the coarse face each fine
// vertex came from and its integer barycentric coordinates over that face.
struct SphereVertexTag {
  std::array<VertexId, 3> coarse;  // coarse icosahedron vertices, ascending
  std::array<int, 3> weights;      // nonnegative, summing to 2^subdivision
};

// Tags are only available for complexes produced by build_sphere.
const std::vector<SphereVertexTag>& sphere_vertex_tags(
    const SimplicialComplex& complex);
int sphere_subdivision(const SimplicialComplex& complex);
int sphere_coarse_vertex_count();

}  // namespace dbcohom

#include "dbcohom/cochain.hpp"

namespace dbcohom {

// The combinatorial angular 1-cochain on a circle or annulus mesh: value
// c = 2*pi/n_theta on every edge advancing one angular column, -c against,
// 0 on radial edges. Each triangle sums the same constant with both signs,
// so the coboundary is identically zero in floating point, and the period
// around any ring is n_theta * c. This is the reference closed generator
// with period 2*pi used by Wilson forms and winding constructions.
Cochain<double> reference_angular_cochain(const SimplicialComplex& complex);

}  // namespace dbcohom
