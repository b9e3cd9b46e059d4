#include "mvtop/document.hpp"

#include <set>

namespace mvtop {

namespace {

void render_into(const Json& v, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      render_into(it.value(), out, indent + 1);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array()) {
    const bool flat = std::none_of(v.begin(), v.end(), [](const Json& e) {
      return e.is_array() || e.is_object();
    });
    if (v.empty()) {
      out += "[]";
    } else if (flat) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].dump();
      }
      out += "]";
    } else {
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        render_into(v[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
    }
  } else {
    out += v.dump();
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

long long as_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<long long>();
}

Chain chain_of(const Json& j) {
  const bool has_chain = j.contains("chain");
  const bool has_n = j.contains("n");
  if (has_chain == has_n) throw InputError("document must give exactly one of \"chain\" or \"n\"");
  return Chain(static_cast<int>(std::clamp<long long>(
      as_integer(j.at(has_chain ? "chain" : "n"), "chain"), -1, kMaxResolution + 1)));
}

Carrier points_of(const Json& j) {
  if (!j.contains("points") || !j.at("points").is_array()) {
    throw InputError("document needs a \"points\" array");
  }
  std::vector<std::string> labels;
  for (const auto& p : j.at("points")) {
    if (!p.is_string()) throw InputError("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  return Carrier(std::move(labels));
}

FuzzySet fuzzy_of(const MvAlgebra& algebra, const Json& j) {
  if (!j.is_array()) throw InputError("fuzzy sets must be arrays of integers");
  std::vector<long long> raw;
  for (const auto& v : j) raw.push_back(as_integer(v, "membership value"));
  return algebra.make(raw);
}

Family family_of(const MvAlgebra& algebra, const Json& j) {
  if (!j.is_array()) throw InputError("families must be arrays of fuzzy sets");
  std::vector<FuzzySet> members;
  for (const auto& s : j) members.push_back(fuzzy_of(algebra, s));
  return Family(std::move(members));
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known) {
  const std::set<std::string> allowed(known.begin(), known.end());
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw InputError("unknown field \"" + it.key() + "\"");
  }
}

Rational rational_of(const Json& j) {
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    return make_rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  }
  throw InputError("rationals are integers or [numerator, denominator] pairs");
}

}  // namespace

std::string render(const Json& value) {
  std::string out;
  render_into(value, out, 0);
  return out + "\n";
}

std::string_view role_name(FamilyRole role) {
  switch (role) {
    case FamilyRole::subbase: return "subbase";
    case FamilyRole::opens: return "opens";
    case FamilyRole::family: return "family";
  }
  return "opens";
}

SpaceDocument space_document_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("space document must be a JSON object");
  reject_unknown(j, {"chain", "n", "name", "max_opens", "points", "subbase", "opens", "family"});
  Chain chain = chain_of(j);
  Carrier points = points_of(j);
  const MvAlgebra algebra(chain, points.size());
  std::optional<FamilyRole> role;
  for (FamilyRole r : {FamilyRole::subbase, FamilyRole::opens, FamilyRole::family}) {
    if (j.contains(std::string(role_name(r)))) {
      if (role) throw InputError("document must declare exactly one of subbase/opens/family");
      role = r;
    }
  }
  if (!role) throw InputError("document must declare one of subbase/opens/family");
  SpaceDocument doc{chain, std::move(points), *role,
                    family_of(algebra, j.at(std::string(role_name(*role)))), {}, {}};
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw InputError("name must be a string");
    doc.name = j.at("name").get<std::string>();
  }
  if (j.contains("max_opens")) {
    const long long cap = as_integer(j.at("max_opens"), "max_opens");
    if (cap < 1) throw InputError("max_opens must be positive");
    doc.max_opens = static_cast<std::size_t>(cap);
  }
  return doc;
}

SpaceDocument parse_space_document(std::string_view text) {
  return space_document_from_json(parse_json(text));
}

Json fuzzy_to_json(const FuzzySet& s) {
  Json j = Json::array();
  for (Value v : s.values()) j.push_back(int{v});
  return j;
}

Json family_to_json(const Family& f) {
  Json j = Json::array();
  for (const auto& s : f) j.push_back(fuzzy_to_json(s));
  return j;
}

Json certificate_to_json(const CoverCertificate& cert) {
  Json entries = Json::array();
  for (const auto& e : cert.entries()) {
    Json entry = Json::object();
    entry["set"] = fuzzy_to_json(e.set);
    entry["multiplicity"] = e.multiplicity;
    entries.push_back(std::move(entry));
  }
  return entries;
}

Json to_json(const SpaceDocument& doc) {
  Json j = Json::object();
  j["chain"] = doc.chain.resolution();
  if (doc.name) j["name"] = *doc.name;
  if (doc.max_opens) j["max_opens"] = *doc.max_opens;
  j["points"] = doc.points.labels();
  j[std::string(role_name(doc.role))] = family_to_json(doc.family);
  return j;
}

std::string write_space_document(const SpaceDocument& doc) { return render(to_json(doc)); }

SpaceDocument to_document(const Topology& tau, std::optional<std::string> name) {
  SpaceDocument doc{tau.chain(), tau.carrier(), FamilyRole::opens, tau.opens(), {}, {}};
  doc.name = std::move(name);
  return doc;
}

Topology topology_of(const SpaceDocument& doc, std::size_t max_opens) {
  switch (doc.role) {
    case FamilyRole::opens:
      return Topology::from_opens(doc.points, doc.chain, doc.family);
    case FamilyRole::subbase:
      return generate_from_subbase(doc.points, doc.chain, doc.family,
                                   doc.max_opens.value_or(max_opens));
    case FamilyRole::family:
      break;
  }
  throw InputError("a bare family does not describe a space; use opens or subbase");
}

MetricDocument parse_metric_document(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw InputError("metric document must be a JSON object");
  reject_unknown(j, {"chain", "n", "name", "points", "dist", "centers", "radii"});
  Chain chain = chain_of(j);
  Carrier points = points_of(j);
  if (!j.contains("dist") || !j.at("dist").is_array()) {
    throw InputError("metric document needs a \"dist\" matrix");
  }
  std::vector<std::vector<Rational>> dist;
  for (const auto& row : j.at("dist")) {
    if (!row.is_array()) throw InputError("distance rows must be arrays");
    auto& r = dist.emplace_back();
    for (const auto& d : row) r.push_back(rational_of(d));
  }
  Metric metric(std::move(points), std::move(dist));
  std::vector<FuzzyPoint> centers;
  if (j.contains("centers")) {
    for (const auto& c : j.at("centers")) {
      if (!c.is_array() || c.size() != 2) throw InputError("centers are [point, value] pairs");
      const long long x = as_integer(c[0], "center point");
      const long long v = as_integer(c[1], "center value");
      if (x < 0 || static_cast<std::size_t>(x) >= metric.points()) {
        throw InputError("center point out of range");
      }
      if (v < 1) throw InputError("center value must be positive");
      centers.push_back(FuzzyPoint{static_cast<std::size_t>(x), chain.element(v)});
    }
  } else {
    centers = default_centers(metric, chain);
  }
  std::vector<Rational> radii;
  if (j.contains("radii")) {
    for (const auto& r : j.at("radii")) {
      radii.push_back(rational_of(r));
      if (radii.back().num == 0) throw InputError("radii must be positive");
    }
  } else {
    radii = default_radii(metric);
  }
  return MetricDocument{chain, std::move(metric), std::move(centers), std::move(radii)};
}

MapDocument parse_map_document(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw InputError("map document must be a JSON object");
  reject_unknown(j, {"domain", "codomain", "map"});
  for (const char* key : {"domain", "codomain", "map"}) {
    if (!j.contains(key)) throw InputError(std::string("map document needs \"") + key + "\"");
  }
  SpaceDocument domain = space_document_from_json(j.at("domain"));
  SpaceDocument codomain = space_document_from_json(j.at("codomain"));
  if (!j.at("map").is_array()) throw InputError("map must be an array of codomain indices");
  std::vector<std::size_t> images;
  for (const auto& y : j.at("map")) {
    const long long v = as_integer(y, "map image");
    if (v < 0) throw InputError("map images must be nonnegative");
    images.push_back(static_cast<std::size_t>(v));
  }
  PointMap map(domain.points.size(), codomain.points.size(), std::move(images));
  return MapDocument{std::move(domain), std::move(codomain), std::move(map)};
}

}  // namespace mvtop
