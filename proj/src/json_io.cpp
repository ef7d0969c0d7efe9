#include "bruhat/json_io.hpp"

#include "bruhat/errors.hpp"
#include "bruhat/version.hpp"

namespace bruhat {

namespace {

std::string exponent_key(const Exponents& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "]";
}

RootSystemId parse_system(const std::string& text) {
  if (text.size() < 2) throw InvalidInput("malformed system name '" + text + "'");
  RootSystemId id{text[0], 0};
  try {
    std::size_t used = 0;
    id.rank = std::stoi(text.substr(1), &used);
    if (used != text.size() - 1) throw InvalidInput("malformed system name '" + text + "'");
  } catch (const std::logic_error&) {
    throw InvalidInput("malformed system name '" + text + "'");
  }
  validate(id);
  return id;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RadScalar& r) {
  return Json{{"coeff", to_string(r.coeff())}, {"radicand", to_string(Rational(r.radicand()))}};
}

Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& q : v.entries()) a.push_back(to_string(q));
  return a;
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

Json to_json(const MPoly& p) {
  Json o = Json::object();
  for (const auto& [exps, c] : p.terms()) o[exponent_key(exps)] = to_string(c);
  return o;
}

Json to_json(const AffineElement& w, const std::vector<int>* word) {
  Json o{{"linear", to_json(w.linear)}, {"translation", to_json(w.translation)}};
  if (word) o["word"] = *word;
  return o;
}

Json to_json(const VolumePolynomial& v) {
  return Json{{"J", v.J.to_string()}, {"rel_poly", to_json(v.rel_poly)}, {"gram", to_string(v.gram)}};
}

Json to_json(const FaceDescriptor& f, const Coweight& lambda) {
  Json verts = Json::array();
  for (const auto& v : f.vertices) verts.push_back(to_json(v));
  return Json{{"lambda", lambda}, {"J", f.J.to_string()}, {"dim", f.dim}, {"vertices", verts}};
}

Json to_json(const RootSystemData& d) {
  auto list = [](const std::vector<QVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
  };
  return Json{{"system", d.id.to_string()},
              {"rank", d.n},
              {"ambient_dim", d.ambient_dim},
              {"simple_roots", list(d.simple_roots)},
              {"simple_coroots", list(d.simple_coroots)},
              {"fundamental_coweights", list(d.fundamental_coweights)},
              {"fundamental_weights", list(d.fundamental_weights)},
              {"cartan", d.cartan},
              {"highest_root", to_json(d.highest_root)},
              {"marks", d.marks},
              {"minuscule", d.minuscule},
              {"positive_root_count", d.positive_roots.size()},
              {"index_of_connection", d.index_of_connection},
              {"wf_order", d.wf_order.get_str()},
              {"det_coweight_lattice", to_json(d.det_coweight_lattice)},
              {"alcove_volume", to_json(d.alcove_volume)},
              {"schema", kSchema}};
}

Json to_json(const GeometricCoefficients& c) {
  Json mu = Json::object(), prov = Json::object(), gram = Json::object();
  for (const auto& [J, q] : c.mu_prime) mu[J.to_string()] = to_string(q);
  for (const auto& [J, p] : c.provenance) prov[J.to_string()] = to_string(p);
  for (const auto& [J, g] : c.gram) gram[J.to_string()] = to_string(g);
  return Json{{"system", c.system.to_string()},
              {"mu_prime", mu},
              {"provenance", prov},
              {"gram", gram},
              {"version", kVersion},
              {"schema", kSchema}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidInput("expected a rational string");
  return parse_rational(j.get<std::string>());
}

GeometricCoefficients coefficients_from_json(const Json& j) {
  try {
    if (j.at("schema").get<int>() != kSchema) throw InvalidInput("unsupported coefficient schema");
    GeometricCoefficients c;
    c.system = parse_system(j.at("system").get<std::string>());
    for (const auto& [key, value] : j.at("mu_prime").items()) {
      c.mu_prime[NodeSet::parse(key)] = rational_from_json(value);
    }
    for (const auto& [key, value] : j.at("gram").items()) {
      c.gram[NodeSet::parse(key)] = rational_from_json(value);
    }
    for (const auto& [key, value] : j.at("provenance").items()) {
      c.provenance[NodeSet::parse(key)] = parse_provenance(value.get<std::string>());
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed coefficient file: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bruhat
