#pragma once

#include <nlohmann/json.hpp>

#include "dbcohom/cohomology.hpp"
#include "dbcohom/db_cochain.hpp"

namespace dbcohom {

using json = nlohmann::ordered_json;

// Simplex lists as integer tuples with orientation signs; coordinates kept
// at full double precision.
json mesh_to_json(const SimplicialComplex& complex);
SimplicialComplex mesh_from_json(const json& j);

// Charts as per-dimension parent-index lists plus the cyclic order; the
// intersection lattice and nerve are rebuilt on load.
json cover_to_json(const GoodCover& cover);
GoodCover cover_from_json(const json& j, const SimplicialComplex& complex);

// Rational coefficients as "num/den" strings, doubles as numbers. The
// domain is the caller's responsibility on load.
json cochain_to_json(const Cochain<Rational>& c);
json cochain_to_json(const Cochain<double>& c);
Cochain<Rational> rational_cochain_from_json(const json& j,
                                             const Subcomplex& domain);
Cochain<double> real_cochain_from_json(const json& j, const Subcomplex& domain);

// truncation, diagonal, form layers keyed by Cech degree, integer layer as
// an integer array.
json db_cochain_to_json(const DBCochain<Rational>& x);
json db_cochain_to_json(const DBCochain<double>& x);
DBCochain<Rational> rational_db_cochain_from_json(const json& j,
                                                  const GoodCover& cover);
DBCochain<double> real_db_cochain_from_json(const json& j,
                                            const GoodCover& cover);

json group_to_json(const CohomologyGroup& g);

}  // namespace dbcohom
