#include "berkdyn/serialize.hpp"

#include <stdexcept>

namespace berkdyn {

namespace {

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw std::invalid_argument(std::string("missing rational string field '") + key + "'");
  return parse_rational(j.at(key).get<std::string>());
}

std::vector<Rational> rational_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument(std::string("missing array field '") + key + "'");
  std::vector<Rational> out;
  for (const auto& x : j.at(key)) {
    if (x.is_string()) out.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) out.emplace_back(x.get<long>());
    else throw std::invalid_argument(std::string("non-rational entry in '") + key + "'");
  }
  return out;
}

}  // namespace

Json to_json(const BerkPoint& x) {
  if (x.is_type_one())
    return Json{{"type", "I"}, {"value", x.is_infinity() ? std::string("inf") : to_string(x.center())}};
  return Json{{"type", "II"}, {"center", to_string(x.center())}, {"height", to_string(x.height())}};
}

BerkPoint point_from_json(const Json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    return s == "inf" ? BerkPoint::infinity() : BerkPoint::type_one(parse_rational(s));
  }
  if (!j.is_object() || !j.contains("type")) throw std::invalid_argument("point must be an object with 'type'");
  auto type = j.at("type").get<std::string>();
  if (type == "I") {
    if (!j.contains("value")) throw std::invalid_argument("type I point without 'value'");
    auto v = j.at("value").get<std::string>();
    return v == "inf" ? BerkPoint::infinity() : BerkPoint::type_one(parse_rational(v));
  }
  if (type == "II") return BerkPoint::type_two(rational_field(j, "center"), rational_field(j, "height"));
  throw std::invalid_argument("unknown point type '" + type + "'");
}

Json to_json(const RationalMap& r) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : r.num().coeffs()) num.push_back(to_string(c));
  for (const auto& c : r.den().coeffs()) den.push_back(to_string(c));
  return Json{{"p", r.prime().value()}, {"numerator", num}, {"denominator", den}};
}

RationalMap map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.at("p").is_number_integer())
    throw std::invalid_argument("map config needs integer 'p'");
  Prime p(j.at("p").get<long>());
  return RationalMap(RatPoly(rational_list(j, "numerator")), RatPoly(rational_list(j, "denominator")), p);
}

Json to_json(const FiniteTree& t) {
  Json verts = Json::array(), edges = Json::array();
  for (size_t i = 0; i < t.vertices().size(); ++i) {
    const auto& v = t.vertices()[i];
    Json jv{{"id", i}, {"point", to_json(v.point)}};
    if (v.end) jv["end"] = to_json(*v.end);
    verts.push_back(jv);
  }
  for (size_t e = 0; e < t.edges().size(); ++e) {
    const auto& ed = t.edges()[e];
    edges.push_back(Json{{"id", e}, {"from", ed.from}, {"to", ed.to}, {"length", to_string(ed.length)}});
  }
  return Json{{"p", t.prime().value()}, {"root", t.root()}, {"vertices", verts}, {"edges", edges}};
}

FiniteTree tree_from_json(const Json& j) {
  Prime p(j.at("p").get<long>());
  std::vector<TreeVertex> verts;
  for (const auto& v : j.at("vertices")) {
    TreeVertex tv{point_from_json(v.at("point")), std::nullopt};
    if (v.contains("end")) tv.end = point_from_json(v.at("end"));
    verts.push_back(tv);
  }
  std::vector<TreeEdge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), rational_field(e, "length")});
  return FiniteTree(p, std::move(verts), std::move(edges), j.at("root").get<int>());
}

Json atoms_to_json(const ProjectedMeasure& m) {
  const FiniteTree& t = m.tree();
  Json out = Json::array();
  for (const auto& [pos, w] : m.atoms()) {
    Json a;
    if (pos.is_vertex()) {
      a["vertex"] = pos.vertex;
      const auto& inc = t.incident(pos.vertex);
      if (inc.empty()) {
        a["edge"] = -1;
        a["offset"] = "0";
      } else {
        const auto& ed = t.edges()[static_cast<size_t>(inc.front())];
        a["edge"] = inc.front();
        a["offset"] = ed.from == pos.vertex ? std::string("0") : to_string(ed.length);
      }
    } else {
      a["edge"] = pos.edge;
      a["offset"] = to_string(pos.offset);
    }
    a["point"] = to_json(canonical(t.point_at(pos), t.prime()));
    a["mass"] = to_string(w);
    out.push_back(a);
  }
  return out;
}

Json to_json(const PiecewiseAffinePotential& g) {
  Json values = Json::object();
  for (size_t i = 0; i < g.values.size(); ++i) values[std::to_string(i)] = to_string(g.values[i]);
  return Json{{"vertex_values", values}};
}

Json to_json(const ReductionReport& r) {
  auto coeffs = [](const RatPoly& f) {
    Json a = Json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_string(c));
    return a;
  };
  auto fp = [](const FpPoly& f) {
    Json a = Json::array();
    for (long c : f.coeffs()) a.push_back(c);
    return a;
  };
  return Json{{"normalized_numerator", coeffs(r.normalized_num)},
              {"normalized_denominator", coeffs(r.normalized_den)},
              {"reduced_numerator", fp(r.reduced_num)},
              {"reduced_denominator", fp(r.reduced_den)},
              {"reduced_degree", r.reduced_degree},
              {"good", r.good},
              {"resultant_val", to_string(r.resultant_val)}};
}

Json to_json(const ExceptionalSet& e) {
  Json pts = Json::array(), unresolved = Json::array();
  for (const auto& x : e.points) pts.push_back(to_json(x));
  for (const auto& f : e.unresolved) unresolved.push_back(f.to_string());
  return Json{{"points", pts}, {"unknown", e.unknown}, {"unresolved", unresolved}};
}

}  // namespace berkdyn
