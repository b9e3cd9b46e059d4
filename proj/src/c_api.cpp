#include "mvtop/mvtop.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mvtop/covers.hpp"
#include "mvtop/document.hpp"
#include "mvtop/verify.hpp"

struct mvt_space {
  mvtop::SpaceDocument doc;
};

namespace {

using namespace mvtop;

thread_local std::string last_error;

template <typename F>
mvt_status guard(F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    last_error = e.what();
    return MVT_E_INPUT;
  } catch (const ResourceError& e) {
    last_error = e.what();
    return MVT_E_RESOURCE;
  } catch (const PreconditionError& e) {
    last_error = e.what();
    return MVT_E_PRECONDITION;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MVT_E_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MVT_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return MVT_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw InputError(std::string(what) + " is null");
}

mvt_options options_or_default(const mvt_options* options) {
  return options ? *options : mvt_default_options();
}

char* dup(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

mvt_status emit(const Json& report, char** out, bool verdict) {
  *out = dup(render(report));
  return verdict ? MVT_OK : MVT_FALSE;
}

Json point_json(const Carrier& carrier, std::size_t x) { return carrier.label(x); }

// A binary operation or the zero/one requirement that the family misses.
Json topology_defect(const MvAlgebra& alg, const Family& f) {
  if (!f.contains(alg.zero())) return {{"missing", fuzzy_to_json(alg.zero())}};
  if (!f.contains(alg.one())) return {{"missing", fuzzy_to_json(alg.one())}};
  for (const auto& a : f) {
    for (const auto& b : f) {
      const std::pair<const char*, FuzzySet> results[] = {{"oplus", alg.oplus(a, b)},
                                                          {"odot", alg.odot(a, b)},
                                                          {"meet", alg.meet(a, b)},
                                                          {"join", alg.join(a, b)}};
      for (const auto& [op, r] : results) {
        if (!f.contains(r)) {
          return {{"op", op},
                  {"left", fuzzy_to_json(a)},
                  {"right", fuzzy_to_json(b)},
                  {"result", fuzzy_to_json(r)}};
        }
      }
    }
  }
  return nullptr;
}

Json compactness_json(const CompactnessReport& r) {
  Json j = Json::object();
  j["mode"] = r.mode == CompactnessMode::oracle ? "oracle" : "analytic";
  j["covers_checked"] = r.covers_checked;
  Json certs = Json::array();
  for (const auto& [cover, cert] : r.certificates) {
    certs.push_back({{"cover", family_to_json(cover)}, {"certificate", certificate_to_json(cert)}});
  }
  j["certificates"] = std::move(certs);
  j["counterexample"] = r.counterexample ? family_to_json(*r.counterexample) : Json(nullptr);
  return j;
}

Json hausdorff_json(const Topology& tau, const HausdorffReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"x", point_json(tau.carrier(), w.x)},
                         {"y", point_json(tau.carrier(), w.y)},
                         {"open_x", fuzzy_to_json(w.open_x)},
                         {"open_y", fuzzy_to_json(w.open_y)}});
  }
  Json j = Json::object();
  j["witnesses"] = std::move(witnesses);
  if (r.failing_pair) {
    j["failing_pair"] = {point_json(tau.carrier(), r.failing_pair->first),
                         point_json(tau.carrier(), r.failing_pair->second)};
  } else {
    j["failing_pair"] = nullptr;
  }
  return j;
}

// First open that is not the join of the clopens below it.
Json zerodim_defect(const Topology& tau) {
  const MvAlgebra alg = tau.algebra();
  const Family cl = clopens(tau);
  for (const auto& o : tau.opens()) {
    FuzzySet acc = alg.zero();
    for (const auto& c : cl) {
      if (c.leq(o)) acc = alg.join(acc, c);
    }
    if (acc != o) return {{"open", fuzzy_to_json(o)}, {"clopen_join", fuzzy_to_json(acc)}};
  }
  return nullptr;
}

Json large_subbase_defect(const MvAlgebra& alg, const Family& s) {
  for (const auto& a : s) {
    for (int k = 2; k <= alg.chain().resolution(); ++k) {
      const FuzzySet m = alg.scale(k, a);
      if (!s.contains(m)) {
        return {{"set", fuzzy_to_json(a)}, {"multiple", k}, {"missing", fuzzy_to_json(m)}};
      }
    }
  }
  return nullptr;
}

mvt_status run_check(const SpaceDocument& doc, std::string_view kind, const mvt_options& opt,
                     char** out) {
  Json report = Json::object();
  report["kind"] = kind;
  const MvAlgebra alg = doc.algebra();
  bool verdict = false;
  if (kind == "topology") {
    if (doc.role == FamilyRole::subbase) {
      throw InputError("check topology needs an opens or family document");
    }
    verdict = is_topology(alg, doc.family);
    report["verdict"] = verdict;
    report["defect"] = verdict ? Json(nullptr) : topology_defect(alg, doc.family);
    return emit(report, out, verdict);
  }
  if (kind == "large-subbase") {
    verdict = is_large_subbase(alg, doc.family);
    report["verdict"] = verdict;
    report["defect"] = large_subbase_defect(alg, doc.family);
    return emit(report, out, verdict);
  }
  const Topology tau = topology_of(doc, opt.max_opens);
  const CompactnessMode mode = opt.oracle ? CompactnessMode::oracle : CompactnessMode::analytic;
  if (kind == "compact" || kind == "strong-compact") {
    const auto r = kind == "compact" ? check_compact(tau, mode) : check_strongly_compact(tau, mode);
    verdict = r.holds;
    report["verdict"] = verdict;
    report.update(compactness_json(r));
  } else if (kind == "hausdorff") {
    const auto r = check_hausdorff(tau);
    verdict = r.hausdorff;
    report["verdict"] = verdict;
    report.update(hausdorff_json(tau, r));
  } else if (kind == "zerodim") {
    verdict = is_zero_dimensional(tau);
    report["verdict"] = verdict;
    report["clopens"] = family_to_json(clopens(tau));
    report["defect"] = zerodim_defect(tau);
  } else if (kind == "stone") {
    const auto compact = check_compact(tau, mode);
    const auto hausdorff = check_hausdorff(tau);
    const bool zerodim = is_zero_dimensional(tau);
    verdict = compact.holds && hausdorff.hausdorff && zerodim;
    report["verdict"] = verdict;
    report["compact"] = compact.holds;
    report["hausdorff"] = hausdorff.hausdorff;
    report["zero_dimensional"] = zerodim;
    report["failing_pair"] = hausdorff_json(tau, hausdorff)["failing_pair"];
    report["defect"] = zerodim_defect(tau);
  } else {
    throw InputError("unknown check kind \"" + std::string(kind) +
                     "\" (expected topology, compact, strong-compact, hausdorff, zerodim, "
                     "stone or large-subbase)");
  }
  return emit(report, out, verdict);
}

Json family_header(const SpaceDocument& doc) {
  Json j = Json::object();
  j["chain"] = doc.chain.resolution();
  j["points"] = doc.points.labels();
  j["family"] = family_to_json(doc.family);
  return j;
}

}  // namespace

extern "C" {

mvt_options mvt_default_options(void) {
  return mvt_options{kDefaultMaxOpens, kDefaultMaxNodes, 0, 0, 0};
}

const char* mvt_version(void) { return "1.0.0"; }

const char* mvt_status_name(mvt_status status) {
  switch (status) {
    case MVT_OK: return "ok";
    case MVT_FALSE: return "false";
    case MVT_E_INPUT: return "input error";
    case MVT_E_RESOURCE: return "resource error";
    case MVT_E_PRECONDITION: return "precondition error";
    case MVT_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mvt_last_error(void) { return last_error.c_str(); }

void mvt_string_free(char* text) { std::free(text); }

mvt_status mvt_space_parse(const char* json, mvt_space** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new mvt_space{parse_space_document(json)};
    return MVT_OK;
  });
}

void mvt_space_free(mvt_space* space) { delete space; }

mvt_status mvt_space_to_json(const mvt_space* space, char** out) {
  return guard([&] {
    need(space, "space");
    need(out, "out");
    *out = dup(write_space_document(space->doc));
    return MVT_OK;
  });
}

mvt_status mvt_space_points(const mvt_space* space, size_t* out) {
  return guard([&] {
    need(space, "space");
    need(out, "out");
    *out = space->doc.points.size();
    return MVT_OK;
  });
}

mvt_status mvt_space_chain(const mvt_space* space, int* out) {
  return guard([&] {
    need(space, "space");
    need(out, "out");
    *out = space->doc.chain.resolution();
    return MVT_OK;
  });
}

mvt_status mvt_space_family_size(const mvt_space* space, size_t* out) {
  return guard([&] {
    need(space, "space");
    need(out, "out");
    *out = space->doc.family.size();
    return MVT_OK;
  });
}

mvt_status mvt_generate(const mvt_space* space, const mvt_options* options, mvt_space** out) {
  return guard([&] {
    need(space, "space");
    need(out, "out");
    const mvt_options opt = options_or_default(options);
    *out = new mvt_space{to_document(topology_of(space->doc, opt.max_opens), space->doc.name)};
    return MVT_OK;
  });
}

mvt_status mvt_check(const mvt_space* space, const char* kind, const mvt_options* options,
                     char** report) {
  return guard([&] {
    need(space, "space");
    need(kind, "kind");
    need(report, "report");
    return run_check(space->doc, kind, options_or_default(options), report);
  });
}

mvt_status mvt_product(const mvt_space* const* factors, size_t count,
                       const mvt_options* options, char** out) {
  return guard([&] {
    need(factors, "factors");
    need(out, "out");
    if (count == 0) throw InputError("a product needs at least one factor");
    const mvt_options opt = options_or_default(options);
    std::vector<Topology> spaces;
    for (size_t i = 0; i < count; ++i) {
      need(factors[i], "factor");
      spaces.push_back(topology_of(factors[i]->doc, opt.max_opens));
    }
    const ProductSpace product(std::move(spaces));
    SpaceDocument doc{product.chain(), product.carrier(), FamilyRole::subbase,
                      product.subbase(), {}, {}};
    if (!opt.subbase_only) {
      doc.role = FamilyRole::opens;
      doc.family = product.topology(opt.max_opens).opens();
    }
    *out = dup(write_space_document(doc));
    return MVT_OK;
  });
}

mvt_status mvt_mincover(const mvt_space* family, const mvt_options* options, char** out) {
  return guard([&] {
    need(family, "family");
    need(out, "out");
    const mvt_options opt = options_or_default(options);
    const auto r = minimal_additive_cover(family->doc.algebra(), family->doc.family,
                                          SolverLimits{opt.max_nodes});
    Json report = family_header(family->doc);
    report["feasible"] = r.solution.has_value();
    if (r.solution) {
      report["entries"] = certificate_to_json(*r.solution);
      report["total"] = r.solution->total();
    } else {
      report["infeasible"] = true;
    }
    report["nodes"] = r.nodes;
    return emit(report, out, r.solution.has_value());
  });
}

mvt_status mvt_subcover(const mvt_space* family, const mvt_options* options, char** out) {
  return guard([&] {
    need(family, "family");
    need(out, "out");
    const mvt_options opt = options_or_default(options);
    const auto r = minimal_subcover(family->doc.algebra(), family->doc.family,
                                    SolverLimits{opt.max_nodes});
    Json report = family_header(family->doc);
    report["feasible"] = r.solution.has_value();
    if (r.solution) {
      report["subcover"] = family_to_json(*r.solution);
      report["size"] = r.solution->size();
    } else {
      report["infeasible"] = true;
    }
    report["nodes"] = r.nodes;
    return emit(report, out, r.solution.has_value());
  });
}

mvt_status mvt_metric(const char* metric_json, const mvt_options* options, char** out) {
  return guard([&] {
    need(metric_json, "metric_json");
    need(out, "out");
    const mvt_options opt = options_or_default(options);
    const MetricDocument m = parse_metric_document(metric_json);
    SpaceDocument doc{m.chain, m.metric.carrier(), FamilyRole::subbase,
                      ball_family(m.metric, m.chain, m.centers, m.radii), {}, {}};
    if (!opt.subbase_only) {
      doc.role = FamilyRole::opens;
      doc.family = metric_induced(m.metric, m.chain, m.centers, m.radii, opt.max_opens).opens();
    }
    *out = dup(write_space_document(doc));
    return MVT_OK;
  });
}

mvt_status mvt_continuity(const char* map_json, const mvt_options* options, char** report) {
  return guard([&] {
    need(map_json, "map_json");
    need(report, "report");
    const mvt_options opt = options_or_default(options);
    const MapDocument m = parse_map_document(map_json);
    const Topology domain = topology_of(m.domain, opt.max_opens);
    const Topology codomain = topology_of(m.codomain, opt.max_opens);
    const MapCheck r = check_continuous(m.map, domain, codomain);
    Json j = Json::object();
    j["continuous"] = r.holds;
    j["counterexample"] = r.counterexample ? fuzzy_to_json(*r.counterexample) : Json(nullptr);
    if (r.counterexample) j["preimage"] = fuzzy_to_json(mv_preimage(m.map, *r.counterexample));
    return emit(j, report, r.holds);
  });
}

mvt_status mvt_verify(const char* suite, uint64_t seed, uint64_t cases,
                      const mvt_options* options, char** report) {
  return guard([&] {
    need(suite, "suite");
    need(report, "report");
    const mvt_options opt = options_or_default(options);
    verify::SuiteOptions so;
    so.inject_noncover = opt.inject_noncover != 0;
    const auto r = verify::run_suite(suite, seed, cases, so);
    return emit(verify::to_json(r), report, r.ok());
  });
}

}  // extern "C"
