#include "dbcohom/simplicial_complex.hpp"

#include <algorithm>
#include <sstream>

namespace dbcohom {

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  return Rational(s);
}

std::string to_string(MeshKind kind) {
  switch (kind) {
    case MeshKind::circle: return "circle";
    case MeshKind::annulus: return "annulus";
    case MeshKind::disk: return "disk";
    case MeshKind::sphere: return "sphere";
    case MeshKind::generic: return "generic";
  }
  return "generic";
}

SimplicialComplex::SimplicialComplex(
    std::vector<std::vector<Simplex>> simplices,
    std::vector<std::array<double, 3>> coordinates, MeshKind kind)
    : simplices_(std::move(simplices)),
      coords_(std::move(coordinates)),
      kind_(kind) {
  while (!simplices_.empty() && simplices_.back().empty()) {
    simplices_.pop_back();
  }
  if (simplices_.empty()) {
    throw InvalidParameterError("complex must contain at least one vertex");
  }

  index_.resize(simplices_.size());
  for (int p = 0; p <= dimension(); ++p) {
    for (SimplexIndex i = 0; i < count(p); ++i) {
      auto& s = simplices_[p][i];
      if (static_cast<int>(s.vertices.size()) != p + 1) {
        throw InvalidParameterError("simplex vertex count does not match dimension");
      }
      if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
          std::adjacent_find(s.vertices.begin(), s.vertices.end()) !=
              s.vertices.end()) {
        throw InvalidParameterError("simplex vertices must be strictly ascending");
      }
      if (s.orientation != 1 && s.orientation != -1) {
        throw InvalidParameterError("orientation signs must be +1 or -1");
      }
      if (!index_[p].emplace(s.vertices, i).second) {
        throw InvalidParameterError("duplicate simplex");
      }
    }
  }

  faces_.resize(simplices_.size());
  for (int p = 1; p <= dimension(); ++p) {
    faces_[p].resize(count(p));
    for (SimplexIndex i = 0; i < count(p); ++i) {
      const auto& verts = simplices_[p][i].vertices;
      std::vector<VertexId> face(verts.size() - 1);
      for (int drop = 0; drop <= p; ++drop) {
        int pos = 0;
        for (int m = 0; m <= p; ++m) {
          if (m != drop) face[pos++] = verts[m];
        }
        auto found = find(p - 1, face);
        if (!found) {
          throw InvalidParameterError("complex is not closed under faces");
        }
        faces_[p][i].push_back({*found, (drop % 2 == 0) ? 1 : -1});
      }
    }
  }
}

std::optional<SimplexIndex> SimplicialComplex::find(
    int p, const std::vector<VertexId>& sorted) const {
  if (p < 0 || p > dimension()) return std::nullopt;
  auto it = index_[p].find(sorted);
  if (it == index_[p].end()) return std::nullopt;
  return it->second;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int p = 0; p <= dimension(); ++p) {
    chi += (p % 2 == 0) ? count(p) : -count(p);
  }
  return chi;
}

void SimplicialComplex::validate() const {
  // boundary of boundary vanishes on every basis chain
  for (int p = 2; p <= dimension(); ++p) {
    for (SimplexIndex i = 0; i < count(p); ++i) {
      std::map<SimplexIndex, long long> acc;
      for (const FaceRef& f : faces_[p][i]) {
        for (const FaceRef& g : faces_[p - 1][f.index]) {
          acc[g.index] += static_cast<long long>(f.coefficient) * g.coefficient;
        }
      }
      for (auto& [idx, c] : acc) {
        if (c != 0) throw Error("boundary-of-boundary is nonzero");
      }
    }
  }

  // orientation signs of the top layer must cancel on interior faces
  int d = dimension();
  if (d >= 1) {
    std::map<SimplexIndex, long long> acc;
    std::map<SimplexIndex, int> touch;
    for (SimplexIndex i = 0; i < count(d); ++i) {
      int o = simplices_[d][i].orientation;
      for (const FaceRef& f : faces_[d][i]) {
        acc[f.index] += static_cast<long long>(o) * f.coefficient;
        touch[f.index] += 1;
      }
    }
    for (auto& [idx, times] : touch) {
      long long c = acc[idx];
      if (times == 2 && c != 0) {
        throw Error("orientation signs inconsistent with incidence table");
      }
      if (times == 1 && (c != 1 && c != -1)) {
        throw Error("boundary face coefficient is not a unit");
      }
      if (times > 2) {
        throw Error("non-manifold face");
      }
    }
  }
}

std::vector<SimplexIndex> SimplicialComplex::boundary_simplices() const {
  int d = dimension();
  std::vector<SimplexIndex> out;
  if (d < 1) return out;
  std::map<SimplexIndex, long long> acc;
  for (SimplexIndex i = 0; i < count(d); ++i) {
    int o = simplices_[d][i].orientation;
    for (const FaceRef& f : faces_[d][i]) {
      acc[f.index] += static_cast<long long>(o) * f.coefficient;
    }
  }
  for (auto& [idx, c] : acc) {
    if (c != 0) out.push_back(idx);
  }
  return out;
}

Subcomplex::Subcomplex(const SimplicialComplex* parent,
                       std::vector<std::vector<SimplexIndex>> members)
    : parent_(parent), members_(std::move(members)) {
  members_.resize(parent_->dimension() + 1);
  for (auto& level : members_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
}

Subcomplex Subcomplex::whole(const SimplicialComplex& parent) {
  std::vector<std::vector<SimplexIndex>> members(parent.dimension() + 1);
  for (int p = 0; p <= parent.dimension(); ++p) {
    members[p].resize(parent.count(p));
    for (SimplexIndex i = 0; i < parent.count(p); ++i) members[p][i] = i;
  }
  return Subcomplex(&parent, std::move(members));
}

Subcomplex Subcomplex::from_simplices(const SimplicialComplex& parent, int p,
                                      const std::vector<SimplexIndex>& members) {
  std::vector<std::vector<SimplexIndex>> levels(parent.dimension() + 1);
  levels[p] = members;
  for (int q = p; q >= 1; --q) {
    for (SimplexIndex i : levels[q]) {
      for (const FaceRef& f : parent.faces(q, i)) {
        levels[q - 1].push_back(f.index);
      }
    }
    auto& lower = levels[q - 1];
    std::sort(lower.begin(), lower.end());
    lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
  }
  return Subcomplex(&parent, std::move(levels));
}

bool Subcomplex::empty() const {
  for (const auto& level : members_) {
    if (!level.empty()) return false;
  }
  return true;
}

int Subcomplex::dimension() const {
  for (int p = static_cast<int>(members_.size()) - 1; p >= 0; --p) {
    if (!members_[p].empty()) return p;
  }
  return -1;
}

int Subcomplex::local_index(int p, SimplexIndex i) const {
  if (p < 0 || p >= static_cast<int>(members_.size())) return -1;
  const auto& level = members_[p];
  auto it = std::lower_bound(level.begin(), level.end(), i);
  if (it == level.end() || *it != i) return -1;
  return static_cast<int>(it - level.begin());
}

Subcomplex Subcomplex::intersect(const Subcomplex& other) const {
  if (parent_ != other.parent_) {
    throw ShapeMismatchError("subcomplexes of different parents");
  }
  std::vector<std::vector<SimplexIndex>> members(members_.size());
  for (int p = 0; p < static_cast<int>(members_.size()); ++p) {
    std::set_intersection(members_[p].begin(), members_[p].end(),
                          other.members_[p].begin(), other.members_[p].end(),
                          std::back_inserter(members[p]));
  }
  return Subcomplex(parent_, std::move(members));
}

}  // namespace dbcohom
