#include "dbcohom/cohomology.hpp"

#include <algorithm>

namespace dbcohom {

IntegerMatrix boundary_matrix(const Subcomplex& sub, int p) {
  const auto& parent = sub.parent();
  IntegerMatrix m(sub.count(p - 1), sub.count(p));
  if (p < 1) return m;
  const auto& cols = sub.members(p);
  for (size_t c = 0; c < cols.size(); ++c) {
    for (const FaceRef& f : parent.faces(p, cols[c])) {
      int r = sub.local_index(p - 1, f.index);
      if (r < 0) throw Error("subcomplex not closed under faces");
      m(r, static_cast<int>(c)) += f.coefficient;
    }
  }
  return m;
}

IntegerMatrix subcomplex_coboundary_matrix(const Subcomplex& sub, int p) {
  return boundary_matrix(sub, p + 1).transpose();
}

IntegerMatrix nerve_coboundary_matrix(const Nerve& nerve, int q) {
  IntegerMatrix m(nerve.count(q + 1), nerve.count(q));
  std::vector<int> face;
  for (int t = 0; t < nerve.count(q + 1); ++t) {
    const auto& tuple = nerve.simplex(q + 1, t);
    face.assign(tuple.size() - 1, 0);
    for (size_t drop = 0; drop < tuple.size(); ++drop) {
      int pos = 0;
      for (size_t r = 0; r < tuple.size(); ++r) {
        if (r != drop) face[pos++] = tuple[r];
      }
      int fi = nerve.find(q, face);
      if (fi < 0) throw Error("nerve not closed under faces");
      int sign = ((tuple.size() - 1 - drop) % 2 == 0) ? 1 : -1;
      m(t, fi) += sign;
    }
  }
  return m;
}

namespace {

// ker/im quotient from the two consecutive exact-integer matrices:
// incoming : C -> C' (image), outgoing : C' -> C'' (kernel).
CohomologyGroup quotient_group(const IntegerMatrix& outgoing,
                               const IntegerMatrix& incoming) {
  int dim = outgoing.cols();
  SNFResult out_snf = smith_normal_form(outgoing);
  SNFResult in_snf = smith_normal_form(incoming);
  CohomologyGroup g;
  g.free_rank = (dim - out_snf.rank) - in_snf.rank;
  for (const BigInt& d : in_snf.invariant_factors) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

}  // namespace

CohomologyGroup reduced_homology(const Subcomplex& sub, int p) {
  if (sub.empty()) return {};
  if (p < 0 || p > sub.parent().dimension()) return {};
  if (p == 0) {
    // augmented chain complex: H~_0 = ker(aug) / im(d1)
    IntegerMatrix aug(1, sub.count(0));
    for (int c = 0; c < sub.count(0); ++c) aug(0, c) = 1;
    return quotient_group(aug, boundary_matrix(sub, 1));
  }
  return quotient_group(boundary_matrix(sub, p), boundary_matrix(sub, p + 1));
}

bool is_acyclic(const Subcomplex& sub) {
  if (sub.empty()) return false;
  for (int p = 0; p <= sub.dimension(); ++p) {
    if (!reduced_homology(sub, p).trivial()) return false;
  }
  return true;
}

CohomologyGroup integral_cohomology(const Nerve& nerve, int degree) {
  if (degree < 0 || degree > nerve.dimension()) return {};
  return quotient_group(nerve_coboundary_matrix(nerve, degree),
                        nerve_coboundary_matrix(nerve, degree - 1));
}

CohomologyGroup simplicial_cohomology(const SimplicialComplex& complex,
                                      int degree) {
  if (degree < 0 || degree > complex.dimension()) return {};
  Subcomplex whole = Subcomplex::whole(complex);
  return quotient_group(subcomplex_coboundary_matrix(whole, degree),
                        subcomplex_coboundary_matrix(whole, degree - 1));
}

std::vector<std::vector<BigInt>> nerve_homology_generators(const Nerve& nerve,
                                                           int q) {
  // cycles: nullspace of the boundary (transpose of coboundary into q)
  IntegerMatrix boundary_q = nerve_coboundary_matrix(nerve, q - 1).transpose();
  std::vector<std::vector<BigInt>> cycles = integer_nullspace(boundary_q);

  // keep only cycles independent modulo boundaries from q+1
  IntegerMatrix boundary_up = nerve_coboundary_matrix(nerve, q).transpose();
  CohomologyGroup hq = integral_cohomology(nerve, q);

  std::vector<std::vector<BigInt>> kept;
  for (const auto& z : cycles) {
    if (static_cast<long long>(kept.size()) == hq.free_rank) break;
    // z is redundant if z plus the span of `kept` lies in im(boundary_up).
    int n = nerve.count(q);
    int extra = static_cast<int>(kept.size());
    IntegerMatrix m(n, boundary_up.cols() + extra);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < boundary_up.cols(); ++c) m(r, c) = boundary_up(r, c);
      for (int c = 0; c < extra; ++c) {
        m(r, boundary_up.cols() + c) = kept[c][r];
      }
    }
    std::vector<BigInt> rhs(n);
    for (int r = 0; r < n; ++r) rhs[r] = z[r];
    if (!solve_integer_system(m, rhs)) {
      kept.push_back(z);
    }
  }
  return kept;
}

CohomologyClass cech_class(const Nerve& nerve, int q,
                           const std::vector<IntCoeff>& cocycle) {
  if (static_cast<int>(cocycle.size()) != nerve.count(q)) {
    throw ShapeMismatchError("cech_class: cochain size mismatch");
  }
  CohomologyClass cls;
  cls.group = integral_cohomology(nerve, q);
  if (!cls.group.torsion.empty()) {
    throw Error("cech_class: torsion groups are out of scope");
  }
  auto generators = nerve_homology_generators(nerve, q);
  for (const auto& z : generators) {
    BigInt pairing = 0;
    for (int i = 0; i < nerve.count(q); ++i) {
      if (z[i] != 0 && cocycle[i] != 0) pairing += z[i] * BigInt(cocycle[i]);
    }
    cls.free_coordinates.push_back(pairing);
  }
  return cls;
}

}  // namespace dbcohom
