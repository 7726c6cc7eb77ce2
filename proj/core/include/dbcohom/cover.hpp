#pragma once

#include <map>
#include <vector>

#include "dbcohom/cochain.hpp"
#include "dbcohom/simplicial_complex.hpp"

namespace dbcohom {

// Abstract simplicial complex on chart indices: a q-simplex is present iff
// the (q+1)-fold intersection is nonempty. Closed under faces by
// construction. Stored up to q = 3 (intersection depth 4).
class Nerve {
 public:
  Nerve() = default;
  explicit Nerve(std::vector<std::vector<std::vector<int>>> simplices);

  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  int count(int q) const {
    return (q < 0 || q > dimension())
               ? 0
               : static_cast<int>(simplices_[q].size());
  }
  const std::vector<int>& simplex(int q, int i) const {
    return simplices_[q][i];
  }
  const std::vector<std::vector<int>>& simplices(int q) const {
    static const std::vector<std::vector<int>> none;
    return (q < 0 || q > dimension()) ? none : simplices_[q];
  }
  int find(int q, const std::vector<int>& tuple) const;  // -1 when absent

 private:
  std::vector<std::vector<std::vector<int>>> simplices_;  // [q] -> tuples
};

// Good cover of a region of a complex: ordered charts, the intersection
// lattice to depth 4, the nerve, and contractibility certificates (computed
// reduced homology of every nonempty entry must vanish; checked at build).
class GoodCover {
 public:
  GoodCover(const SimplicialComplex* complex, Subcomplex region,
            std::vector<Subcomplex> charts,
            std::vector<int> cyclic_order = {});

  const SimplicialComplex& complex() const { return *complex_; }
  const Subcomplex& region() const { return region_; }
  int chart_count() const { return static_cast<int>(charts_.size()); }
  const Subcomplex& chart(int i) const { return charts_[i]; }
  const std::vector<Subcomplex>& charts() const { return charts_; }

  // Intersection of the charts named by the ascending tuple (size 1..4).
  // Present (possibly empty) for every tuple up to depth 4.
  const Subcomplex& intersection(const std::vector<int>& tuple) const;
  const Subcomplex& intersection(int q, int nerve_index) const;

  const Nerve& nerve() const { return nerve_; }

  // Charts listed in consecutive loop order; nonempty only for circle-like
  // covers (circle meshes and rings), where the nerve is a cycle.
  const std::vector<int>& cyclic_order() const { return cyclic_order_; }

  // Vertex-based partition of unity subordinate to the cover: weights of
  // chart i are indexed by parent vertex, supported inside the chart, and
  // sum to one over the region's vertices (1/multiplicity on overlaps).
  const std::vector<double>& partition_of_unity(int i) const {
    return pou_[i];
  }
  // Number of charts containing each vertex; 1/multiplicity is the exact
  // partition-of-unity weight.
  const std::vector<int>& vertex_multiplicity() const { return multiplicity_; }

  // Verifies cover invariants: charts cover the region and every stored
  // nonempty intersection has vanishing reduced homology. Throws on failure.
  void verify_certificates() const;

 private:
  const SimplicialComplex* complex_;
  Subcomplex region_;
  std::vector<Subcomplex> charts_;
  std::map<std::vector<int>, Subcomplex> intersections_;
  Nerve nerve_;
  std::vector<int> cyclic_order_;
  std::vector<std::vector<double>> pou_;
  std::vector<int> multiplicity_;
};

// Consecutive-overlap arc charts on a circle mesh; overlap is one vertex
// wide on each side of the chart boundary, so triple intersections are
// empty and the nerve is the n_charts-cycle.
GoodCover build_circle_cover(const SimplicialComplex& circle, int n_charts);

// Angular-sector charts on the structured annulus; nerve is again a cycle.
GoodCover build_annulus_cover(const SimplicialComplex& annulus, int n_charts);

// Vertex-star charts of the coarse icosahedron on a subdivided sphere
// (subdivision >= 2): chart i holds the fine triangles all of whose vertices
// have barycentric weight >= 1/4 toward coarse vertex i. The nerve is the
// icosahedron surface (12, 30, 20).
GoodCover build_sphere_cover(const SimplicialComplex& sphere);

// Single-chart cover of a contractible mesh (disk).
GoodCover build_trivial_cover(const SimplicialComplex& complex);

// Dispatch on the mesh kind. n_charts is ignored for sphere/disk.
GoodCover build_cover(const SimplicialComplex& complex, int n_charts);

// Cover of a circle-like 1-dimensional subcomplex (e.g. the inner boundary
// ring of an annulus) induced by chart-with-region intersections.
GoodCover induce_cover_on_ring(const GoodCover& cover, const Subcomplex& ring);

// A family of p-form cochains indexed by the nerve q-simplices; member k
// lives on intersection(q, k). Form degree -1 is stored separately as
// CechIntFamily.
template <class T>
struct CechFormFamily {
  const GoodCover* cover = nullptr;
  int cech_degree = 0;
  int form_degree = 0;
  std::vector<Cochain<T>> members;
};

struct CechIntFamily {
  const GoodCover* cover = nullptr;
  int cech_degree = 0;
  std::vector<IntCoeff> members;  // one integer (unit 2*pi) per intersection
};

// Alternating sum of restrictions on (q+1)-fold intersections. The sign
// convention drops tuple indices from the right:
//   (delta f)_{i0..i_{q+1}} = sum_m (-1)^(q+1-m) f_{i0..^im..i_{q+1}},
// so on double overlaps (delta f)_{ij} = f_i - f_j, matching the descent
// equations of the Deligne-Beilinson differential. delta o delta = 0.
template <class T>
CechFormFamily<T> cech_coboundary(const CechFormFamily<T>& family) {
  const GoodCover& cover = *family.cover;
  const int q = family.cech_degree;
  if (static_cast<int>(family.members.size()) != cover.nerve().count(q)) {
    throw ShapeMismatchError("cech family member count mismatch");
  }
  CechFormFamily<T> out;
  out.cover = family.cover;
  out.cech_degree = q + 1;
  out.form_degree = family.form_degree;
  for (int t = 0; t < cover.nerve().count(q + 1); ++t) {
    const auto& tuple = cover.nerve().simplex(q + 1, t);
    const Subcomplex& target = cover.intersection(q + 1, t);
    Cochain<T> acc(target, family.form_degree);
    std::vector<int> face(tuple.size() - 1);
    for (size_t m = 0; m < tuple.size(); ++m) {
      int pos = 0;
      for (size_t r = 0; r < tuple.size(); ++r) {
        if (r != m) face[pos++] = tuple[r];
      }
      int fi = cover.nerve().find(q, face);
      if (fi < 0) throw Error("cech_coboundary: missing family member");
      Cochain<T> piece = family.members[fi].restrict_to(target);
      int sign = ((tuple.size() - 1 - m) % 2 == 0) ? 1 : -1;
      if (sign > 0) {
        acc += piece;
      } else {
        acc -= piece;
      }
    }
    out.members.push_back(std::move(acc));
  }
  return out;
}

CechIntFamily cech_coboundary(const CechIntFamily& family);

}  // namespace dbcohom
