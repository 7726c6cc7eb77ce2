#include "dbcohom/serialization.hpp"

namespace dbcohom {

namespace {

MeshKind kind_from_string(const std::string& s) {
  if (s == "circle") return MeshKind::circle;
  if (s == "annulus") return MeshKind::annulus;
  if (s == "disk") return MeshKind::disk;
  if (s == "sphere") return MeshKind::sphere;
  return MeshKind::generic;
}

}  // namespace

json mesh_to_json(const SimplicialComplex& complex) {
  json j;
  j["kind"] = to_string(complex.kind());
  j["dimension"] = complex.dimension();
  json levels = json::array();
  for (int p = 0; p <= complex.dimension(); ++p) {
    json level = json::array();
    for (int i = 0; i < complex.count(p); ++i) {
      const Simplex& s = complex.simplex(p, i);
      json entry;
      entry["v"] = s.vertices;
      entry["o"] = s.orientation;
      level.push_back(entry);
    }
    levels.push_back(level);
  }
  j["simplices"] = levels;
  if (complex.has_coordinates()) {
    json coords = json::array();
    for (int v = 0; v < complex.count(0); ++v) {
      const auto& x = complex.coordinate(v);
      coords.push_back({x[0], x[1], x[2]});
    }
    j["coordinates"] = coords;
  }
  return j;
}

SimplicialComplex mesh_from_json(const json& j) {
  std::vector<std::vector<Simplex>> simplices;
  for (const auto& level : j.at("simplices")) {
    std::vector<Simplex> out;
    for (const auto& entry : level) {
      Simplex s;
      s.vertices = entry.at("v").get<std::vector<VertexId>>();
      s.orientation = entry.at("o").get<int>();
      out.push_back(std::move(s));
    }
    simplices.push_back(std::move(out));
  }
  std::vector<std::array<double, 3>> coords;
  if (j.contains("coordinates")) {
    for (const auto& c : j.at("coordinates")) {
      coords.push_back({c.at(0).get<double>(), c.at(1).get<double>(),
                        c.at(2).get<double>()});
    }
  }
  return SimplicialComplex(std::move(simplices), std::move(coords),
                           kind_from_string(j.at("kind").get<std::string>()));
}

json cover_to_json(const GoodCover& cover) {
  json j;
  json charts = json::array();
  for (int i = 0; i < cover.chart_count(); ++i) {
    json levels = json::array();
    for (int p = 0; p <= cover.complex().dimension(); ++p) {
      levels.push_back(cover.chart(i).members(p));
    }
    charts.push_back(levels);
  }
  j["charts"] = charts;
  j["cyclic_order"] = cover.cyclic_order();
  json region = json::array();
  for (int p = 0; p <= cover.complex().dimension(); ++p) {
    region.push_back(cover.region().members(p));
  }
  j["region"] = region;
  return j;
}

GoodCover cover_from_json(const json& j, const SimplicialComplex& complex) {
  std::vector<Subcomplex> charts;
  for (const auto& levels : j.at("charts")) {
    std::vector<std::vector<SimplexIndex>> members;
    for (const auto& level : levels) {
      members.push_back(level.get<std::vector<SimplexIndex>>());
    }
    charts.emplace_back(&complex, std::move(members));
  }
  std::vector<std::vector<SimplexIndex>> region_members;
  for (const auto& level : j.at("region")) {
    region_members.push_back(level.get<std::vector<SimplexIndex>>());
  }
  Subcomplex region(&complex, std::move(region_members));
  return GoodCover(&complex, std::move(region), std::move(charts),
                   j.at("cyclic_order").get<std::vector<int>>());
}

json cochain_to_json(const Cochain<Rational>& c) {
  json j;
  j["degree"] = c.degree();
  j["mode"] = "exact";
  json values = json::array();
  for (int i = 0; i < c.size(); ++i) {
    values.push_back({numerator(c[i]).str(), denominator(c[i]).str()});
  }
  j["values"] = values;
  return j;
}

json cochain_to_json(const Cochain<double>& c) {
  json j;
  j["degree"] = c.degree();
  j["mode"] = "real";
  j["values"] = c.values();
  return j;
}

Cochain<Rational> rational_cochain_from_json(const json& j,
                                             const Subcomplex& domain) {
  std::vector<Rational> values;
  for (const auto& pair : j.at("values")) {
    BigInt num(pair.at(0).get<std::string>());
    BigInt den(pair.at(1).get<std::string>());
    values.push_back(Rational(num, den));
  }
  return Cochain<Rational>(domain, j.at("degree").get<int>(),
                           std::move(values));
}

Cochain<double> real_cochain_from_json(const json& j,
                                       const Subcomplex& domain) {
  return Cochain<double>(domain, j.at("degree").get<int>(),
                         j.at("values").get<std::vector<double>>());
}

namespace {

template <class T>
json db_to_json_impl(const DBCochain<T>& x) {
  json j;
  j["truncation"] = x.truncation();
  j["diagonal"] = x.diagonal();
  json layers;
  for (int q = db_layer_min(x.truncation(), x.diagonal()); q <= x.diagonal();
       ++q) {
    json layer = json::array();
    for (const auto& member : x.form_layer(q)) {
      layer.push_back(cochain_to_json(member));
    }
    layers[std::to_string(q)] = layer;
  }
  j["layers"] = layers;
  j["integers"] = x.integer_layer();
  return j;
}

template <class T>
DBCochain<T> db_from_json_impl(const json& j, const GoodCover& cover) {
  DBCochain<T> out(&cover, j.at("truncation").get<int>(),
                   j.at("diagonal").get<int>());
  for (int q = db_layer_min(out.truncation(), out.diagonal());
       q <= out.diagonal(); ++q) {
    const json& layer = j.at("layers").at(std::to_string(q));
    for (int m = 0; m < cover.nerve().count(q); ++m) {
      if constexpr (std::is_same_v<T, Rational>) {
        out.form_layer(q)[m] =
            rational_cochain_from_json(layer.at(m), cover.intersection(q, m));
      } else {
        out.form_layer(q)[m] =
            real_cochain_from_json(layer.at(m), cover.intersection(q, m));
      }
    }
  }
  out.integer_layer() = j.at("integers").get<std::vector<IntCoeff>>();
  return out;
}

}  // namespace

json db_cochain_to_json(const DBCochain<Rational>& x) {
  return db_to_json_impl(x);
}
json db_cochain_to_json(const DBCochain<double>& x) {
  return db_to_json_impl(x);
}
DBCochain<Rational> rational_db_cochain_from_json(const json& j,
                                                  const GoodCover& cover) {
  return db_from_json_impl<Rational>(j, cover);
}
DBCochain<double> real_db_cochain_from_json(const json& j,
                                            const GoodCover& cover) {
  return db_from_json_impl<double>(j, cover);
}

json group_to_json(const CohomologyGroup& g) {
  json j;
  j["free_rank"] = g.free_rank;
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(t.str());
  j["torsion"] = torsion;
  return j;
}

}  // namespace dbcohom
