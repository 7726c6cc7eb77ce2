#pragma once

#include <vector>

#include "dbcohom/cover.hpp"
#include "dbcohom/snf.hpp"

namespace dbcohom {

// Finitely generated abelian group: free rank plus torsion coefficients,
// each > 1 and each dividing the next.
struct CohomologyGroup {
  long long free_rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const CohomologyGroup& other) const {
    return free_rank == other.free_rank && torsion == other.torsion;
  }
};

// An element of a cohomology group in generator coordinates (free part only;
// every group in this artifact is torsion free).
struct CohomologyClass {
  CohomologyGroup group;
  std::vector<BigInt> free_coordinates;

  bool trivial_class() const {
    for (const auto& c : free_coordinates) {
      if (c != 0) return false;
    }
    return true;
  }
};

// Boundary matrix d_p : C_p -> C_{p-1} of a subcomplex, canonical
// alternating-sign convention, exact integers.
IntegerMatrix boundary_matrix(const Subcomplex& sub, int p);

// Cech coboundary matrix on nerve cochains, drop-from-the-right signs (the
// same convention as cech_coboundary on families).
IntegerMatrix nerve_coboundary_matrix(const Nerve& nerve, int q);

// Simplicial coboundary matrix of a subcomplex (transpose of boundary).
IntegerMatrix subcomplex_coboundary_matrix(const Subcomplex& sub, int p);

// Reduced integer homology of a subcomplex in degree p (augmented at p = 0).
CohomologyGroup reduced_homology(const Subcomplex& sub, int p);

// True iff all reduced homology groups vanish (and the subcomplex is
// nonempty): the contractibility certificate used by good covers.
bool is_acyclic(const Subcomplex& sub);

// Integer Cech cohomology of the nerve. Out-of-range degrees give the zero
// group. Valid as manifold cohomology when the cover certificates hold.
CohomologyGroup integral_cohomology(const Nerve& nerve, int degree);

// Simplicial integer cohomology of the realized complex (nerve theorem
// cross-check).
CohomologyGroup simplicial_cohomology(const SimplicialComplex& complex,
                                      int degree);

// Generators of H_q(nerve; Z) as integer q-cycles (columns indexed by nerve
// q-simplices). Used to pair cocycles with homology to read off classes.
std::vector<std::vector<BigInt>> nerve_homology_generators(const Nerve& nerve,
                                                           int q);

// Class of an integer Cech q-cocycle via the homology pairing. Requires the
// group to be torsion free (true for every cover in scope).
CohomologyClass cech_class(const Nerve& nerve, int q,
                           const std::vector<IntCoeff>& cocycle);

}  // namespace dbcohom
