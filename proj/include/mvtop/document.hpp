#pragma once

// JSON documents exchanged by the command-line tool and the C API.
//
// Space document (exactly one of "subbase", "opens", "family"):
//   {"chain": 2, "name": "...", "max_opens": 100, "points": ["a", "b"],
//    "opens": [[0, 0], [1, 2], ...]}
// "n" is accepted as an alias of "chain" on input. Families are written
// in canonical order, one fuzzy set per line, so identical inputs give
// byte-identical output.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mvtop/covers.hpp"
#include "mvtop/topology.hpp"

namespace mvtop {

using Json = nlohmann::ordered_json;

/// Renders JSON with two-space indentation, keeping arrays of scalars on
/// one line.
std::string render(const Json& value);

enum class FamilyRole { subbase, opens, family };

std::string_view role_name(FamilyRole role);

struct SpaceDocument {
  Chain chain;
  Carrier points;
  FamilyRole role = FamilyRole::opens;
  Family family;
  std::optional<std::string> name;
  std::optional<std::size_t> max_opens;

  MvAlgebra algebra() const { return MvAlgebra(chain, points.size()); }
  bool operator==(const SpaceDocument&) const = default;
};

/// Throws InputError on malformed text or values.
SpaceDocument parse_space_document(std::string_view text);
SpaceDocument space_document_from_json(const Json& j);
Json to_json(const SpaceDocument& doc);
std::string write_space_document(const SpaceDocument& doc);

SpaceDocument to_document(const Topology& tau, std::optional<std::string> name = {});
/// Opens are validated; a subbase is generated. A bare family is rejected.
Topology topology_of(const SpaceDocument& doc, std::size_t max_opens = kDefaultMaxOpens);

Json fuzzy_to_json(const FuzzySet& s);
Json family_to_json(const Family& f);
Json certificate_to_json(const CoverCertificate& cert);

struct MetricDocument {
  Chain chain;
  Metric metric;
  std::vector<FuzzyPoint> centers;  // defaults filled in when absent
  std::vector<Rational> radii;
};

/// {"chain": n, "points": [...], "dist": [[d, ...], ...],
///  "centers": [[point, value], ...], "radii": [r, ...]}
/// where each distance or radius is an integer or a [num, den] pair.
MetricDocument parse_metric_document(std::string_view text);

struct MapDocument {
  SpaceDocument domain;
  SpaceDocument codomain;
  PointMap map;
};

/// {"domain": {...}, "codomain": {...}, "map": [codomain index, ...]}
/// with both spaces given inline.
MapDocument parse_map_document(std::string_view text);

}  // namespace mvtop
