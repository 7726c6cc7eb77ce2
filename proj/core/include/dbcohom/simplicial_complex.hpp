#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dbcohom/errors.hpp"
#include "dbcohom/numbers.hpp"

namespace dbcohom {

using VertexId = std::int32_t;
using SimplexIndex = std::int32_t;

enum class MeshKind { circle, annulus, disk, sphere, generic };

std::string to_string(MeshKind kind);

// One oriented simplex. Vertices are stored sorted ascending; `orientation`
// is +/-1 and records how the canonical (ascending) ordering sits inside the
// global orientation of the mesh. It is meaningful for top-dimensional
// simplices (the fundamental chain is sum of orientation * simplex) and +1
// elsewhere.
struct Simplex {
  std::vector<VertexId> vertices;  // sorted ascending
  int orientation = 1;
};

// A face of a (p)-simplex together with its incidence coefficient in the
// canonical boundary formula: face i carries (-1)^i.
struct FaceRef {
  SimplexIndex index;  // index into the (p-1)-simplex list
  int coefficient;     // +1 or -1
};

// Oriented simplicial complex with exact integer boundary incidence.
// Immutable after construction; all operations on it are pure.
class SimplicialComplex {
 public:
  // `simplices[p]` lists the p-simplices; faces of every stored simplex must
  // themselves be stored (checked). Vertex coordinates are optional and only
  // required by metric-dependent operations.
  SimplicialComplex(std::vector<std::vector<Simplex>> simplices,
                    std::vector<std::array<double, 3>> coordinates,
                    MeshKind kind = MeshKind::generic);

  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  MeshKind kind() const { return kind_; }

  int count(int p) const {
    return (p < 0 || p > dimension()) ? 0
                                      : static_cast<int>(simplices_[p].size());
  }
  const Simplex& simplex(int p, SimplexIndex i) const {
    return simplices_[p][i];
  }
  const std::vector<Simplex>& simplices(int p) const { return simplices_[p]; }

  // Faces with canonical alternating-sign coefficients; empty for p = 0.
  const std::vector<FaceRef>& faces(int p, SimplexIndex i) const {
    return faces_[p][i];
  }

  // Index of the simplex with the given sorted vertex tuple, if stored.
  std::optional<SimplexIndex> find(int p,
                                   const std::vector<VertexId>& sorted) const;

  bool has_coordinates() const { return !coords_.empty(); }
  const std::array<double, 3>& coordinate(VertexId v) const {
    return coords_[v];
  }

  long long euler_characteristic() const;

  // Checks closure under faces, boundary-of-boundary = 0 on the incidence
  // tables, and orientation consistency of the top-dimensional layer
  // (interior faces cancel in the boundary of the fundamental chain).
  // Throws on violation.
  void validate() const;

  // Boundary of the fundamental chain restricted to the top dimension:
  // the (dim-1)-simplices with nonzero coefficient, i.e. the mesh boundary.
  std::vector<SimplexIndex> boundary_simplices() const;

  // Opaque builder metadata (structured grid layout, sphere barycentric
  // tags). Set once by the mesh builders; shared across copies.
  void annotate(std::shared_ptr<const void> payload) {
    annotation_ = std::move(payload);
  }
  template <class T>
  const T* annotation() const {
    return static_cast<const T*>(annotation_.get());
  }

 private:
  std::shared_ptr<const void> annotation_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::vector<std::vector<FaceRef>>> faces_;  // [p][i]
  std::vector<std::map<std::vector<VertexId>, SimplexIndex>> index_;
  std::vector<std::array<double, 3>> coords_;
  MeshKind kind_;
};

// A subcomplex given by per-dimension sorted lists of parent simplex indices,
// closed under faces. Local forms on charts are cochains over subcomplexes of
// one common complex, so restriction is plain coefficient selection.
class Subcomplex {
 public:
  Subcomplex() = default;
  Subcomplex(const SimplicialComplex* parent,
             std::vector<std::vector<SimplexIndex>> members);

  static Subcomplex whole(const SimplicialComplex& parent);

  // Builds the closure of the given top-level members.
  static Subcomplex from_simplices(const SimplicialComplex& parent, int p,
                                   const std::vector<SimplexIndex>& members);

  const SimplicialComplex& parent() const { return *parent_; }
  bool empty() const;
  int dimension() const;

  int count(int p) const {
    return (p < 0 || p >= static_cast<int>(members_.size()))
               ? 0
               : static_cast<int>(members_[p].size());
  }
  const std::vector<SimplexIndex>& members(int p) const {
    static const std::vector<SimplexIndex> none;
    return (p < 0 || p >= static_cast<int>(members_.size())) ? none
                                                             : members_[p];
  }
  // Position of parent simplex `i` inside members(p), or -1.
  int local_index(int p, SimplexIndex i) const;

  bool contains(int p, SimplexIndex i) const { return local_index(p, i) >= 0; }

  // Set intersection, dimension by dimension.
  Subcomplex intersect(const Subcomplex& other) const;

  bool operator==(const Subcomplex& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }

 private:
  const SimplicialComplex* parent_ = nullptr;
  std::vector<std::vector<SimplexIndex>> members_;  // sorted per dimension
};

// Sparse chain with exact coefficients, used for integration regions and the
// discrete Stokes identity.
template <class T>
struct Chain {
  const SimplicialComplex* complex = nullptr;
  int degree = 0;
  std::map<SimplexIndex, T> coefficients;

  void add(SimplexIndex i, const T& c) {
    auto [it, inserted] = coefficients.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) coefficients.erase(it);
    }
  }
};

template <class T>
Chain<T> boundary(const Chain<T>& chain) {
  Chain<T> out;
  out.complex = chain.complex;
  out.degree = chain.degree - 1;
  if (chain.degree == 0) return out;
  for (const auto& [idx, coeff] : chain.coefficients) {
    for (const FaceRef& f : chain.complex->faces(chain.degree, idx)) {
      out.add(f.index, coeff * T(f.coefficient));
    }
  }
  return out;
}

// Fundamental chain of a region: orientation-weighted sum of its
// top-dimensional simplices.
template <class T>
Chain<T> fundamental_chain(const Subcomplex& region) {
  Chain<T> out;
  out.complex = &region.parent();
  out.degree = region.dimension();
  for (SimplexIndex i : region.members(out.degree)) {
    out.add(i, T(region.parent().simplex(out.degree, i).orientation));
  }
  return out;
}

}  // namespace dbcohom
