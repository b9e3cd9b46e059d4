// mvtop command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvtop/mvtop.h"

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUsage = 2, kResource = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpaceDeleter {
  void operator()(mvt_space* s) const { mvt_space_free(s); }
};
using SpaceHandle = std::unique_ptr<mvt_space, SpaceDeleter>;

struct TextDeleter {
  void operator()(char* s) const { mvt_string_free(s); }
};
using Text = std::unique_ptr<char, TextDeleter>;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

int exit_code(mvt_status status) {
  switch (status) {
    case MVT_OK: return kTrue;
    case MVT_FALSE: return kFalse;
    case MVT_E_INPUT:
    case MVT_E_PRECONDITION: return kUsage;
    case MVT_E_RESOURCE: return kResource;
    case MVT_E_INTERNAL: return kInternal;
  }
  return kInternal;
}

int report_error(mvt_status status) {
  std::cerr << "mvtop: " << mvt_status_name(status) << ": " << mvt_last_error() << "\n";
  return exit_code(status);
}

SpaceHandle parse_space(const std::string& path) {
  const std::string text = read_input(path);
  mvt_space* raw = nullptr;
  const mvt_status s = mvt_space_parse(text.c_str(), &raw);
  if (s != MVT_OK) throw s;
  return SpaceHandle(raw);
}

// Replaces "domain"/"codomain" given as file paths by the documents they
// name, resolved relative to the map document's directory.
std::string inline_map_spaces(const std::string& text, const std::string& path) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) return text;
  const std::filesystem::path base =
      path.empty() || path == "-" ? std::filesystem::current_path()
                                  : std::filesystem::path(path).parent_path();
  for (const char* key : {"domain", "codomain"}) {
    if (!j.contains(key) || !j[key].is_string()) continue;
    std::filesystem::path ref = j[key].get<std::string>();
    if (ref.is_relative()) ref = base / ref;
    try {
      j[key] = nlohmann::ordered_json::parse(read_input(ref.string()));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(ref.string() + ": malformed JSON: " + e.what());
    }
  }
  return j.dump();
}

int finish(mvt_status status, Text& out, const std::string& output) {
  if (status != MVT_OK && status != MVT_FALSE) return report_error(status);
  write_output(output, out.get());
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite MV-topological spaces over Lukasiewicz chains"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(mvt_version()));

  mvt_options options = mvt_default_options();
  std::string output;
  app.add_option("--max-opens", options.max_opens, "Cap on generated opens")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", options.max_nodes, "Node cap for the cover solvers")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "Output file (default stdout)");

  std::string input;
  auto input_option = [&input](CLI::App* cmd) {
    cmd->add_option("input", input, "Input document (default stdin)");
  };

  auto* gen = app.add_subcommand("gen", "Generate the topology of a subbase document");
  input_option(gen);

  std::string kind;
  bool oracle = false;
  auto* check = app.add_subcommand("check", "Decide a property of a space");
  check->add_option("kind", kind, "topology|compact|strong-compact|hausdorff|zerodim|stone|large-subbase")
      ->required();
  input_option(check);
  check->add_flag("--oracle", oracle, "Brute-force compactness with certificates");

  std::vector<std::string> inputs;
  bool subbase_only = false;
  auto* product = app.add_subcommand("product", "Product of spaces over one chain");
  product->add_option("inputs", inputs, "Factor documents")->required();
  product->add_flag("--subbase-only", subbase_only, "Emit the product subbase");

  auto* mincover = app.add_subcommand("mincover", "Minimum-total additive cover of a family");
  input_option(mincover);
  auto* subcover = app.add_subcommand("subcover", "Minimum-size subcover of a family");
  input_option(subcover);

  auto* metric = app.add_subcommand("metric", "Topology induced by a finite metric");
  input_option(metric);
  metric->add_flag("--subbase-only", subbase_only, "Emit the ball family");

  auto* continuity = app.add_subcommand("continuity", "Decide continuity of a map");
  input_option(continuity);

  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t cases = 100;
  bool inject = false;
  auto* verify = app.add_subcommand("verify", "Run a seeded randomized suite");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--seed", seed, "Seed");
  verify->add_option("--cases", cases, "Number of cases");
  verify->add_flag("--inject-noncover", inject, "lemma1: feed non-covers on purpose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  options.oracle = oracle;
  options.subbase_only = subbase_only;
  options.inject_noncover = inject;

  try {
    char* raw = nullptr;
    mvt_status status = MVT_OK;
    if (gen->parsed()) {
      SpaceHandle space = parse_space(input);
      mvt_space* generated = nullptr;
      status = mvt_generate(space.get(), &options, &generated);
      if (status != MVT_OK) return report_error(status);
      SpaceHandle owned(generated);
      status = mvt_space_to_json(owned.get(), &raw);
    } else if (check->parsed()) {
      SpaceHandle space = parse_space(input);
      status = mvt_check(space.get(), kind.c_str(), &options, &raw);
    } else if (product->parsed()) {
      std::vector<SpaceHandle> spaces;
      std::vector<const mvt_space*> handles;
      for (const auto& path : inputs) {
        spaces.push_back(parse_space(path));
        handles.push_back(spaces.back().get());
      }
      status = mvt_product(handles.data(), handles.size(), &options, &raw);
    } else if (mincover->parsed()) {
      SpaceHandle space = parse_space(input);
      status = mvt_mincover(space.get(), &options, &raw);
    } else if (subcover->parsed()) {
      SpaceHandle space = parse_space(input);
      status = mvt_subcover(space.get(), &options, &raw);
    } else if (metric->parsed()) {
      const std::string text = read_input(input);
      status = mvt_metric(text.c_str(), &options, &raw);
    } else if (continuity->parsed()) {
      const std::string text = inline_map_spaces(read_input(input), input);
      status = mvt_continuity(text.c_str(), &options, &raw);
    } else if (verify->parsed()) {
      status = mvt_verify(suite.c_str(), seed, cases, &options, &raw);
    }
    Text out(raw);
    return finish(status, out, output);
  } catch (mvt_status status) {
    return report_error(status);
  } catch (const UsageError& e) {
    std::cerr << "mvtop: " << e.what() << "\n";
    return kUsage;
  }
}
