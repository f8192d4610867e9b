// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "test_support.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

namespace ormt::testing {
namespace fs = std::filesystem;

std::string fixture_path(const std::string& name) {
  return std::string(ORMT_TEST_FIXTURE_DIR) + "/" + name;
}

std::string scheme_path(const std::string& name) {
  return std::string(ORMT_TEST_SCHEME_DIR) + "/" + name + ".scheme";
}

std::string golden_path(const std::string& name) {
  return std::string(ORMT_TEST_GOLDEN_DIR) + "/" + name;
}

Schema fixture_schema(const std::string& name) { return load_schema(fixture_path(name)); }

DomainBounds fixture_bounds(const std::string& name) {
  return parse_bounds(read_file(fixture_path(name)));
}

TransformationScheme shipped_scheme(const std::string& name) {
  return parse_scheme(read_file(scheme_path(name)));
}

std::vector<std::string> shipped_scheme_names() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(ORMT_TEST_SCHEME_DIR)) {
    if (e.path().extension() == ".scheme") out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

InstantiatedTransformation instance(const std::string& scheme, const std::string& parlist,
                                    const std::string& context) {
  const bool file = scheme.size() > 7 && scheme.ends_with(".scheme");
  auto t = parse_scheme(read_file(file ? fixture_path(scheme) : scheme_path(scheme)));
  auto x = parse_parlist(read_file(fixture_path(parlist)));
  if (context.empty()) return instantiate(t, x);
  Schema ctx = fixture_schema(context);
  return instantiate(t, x, &ctx);
}

InstantiatedTransformation olympics() {
  return instance("ot-emission", "olympics.parlist", "olympics-b.schema");
}

Schema axiom_base() { return fixture_schema("axioms/base.schema"); }

std::vector<AxiomCase> failing_axiom_cases() {
  std::vector<AxiomCase> out;
  std::istringstream in(read_file(fixture_path("axioms/expected.txt")));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto gap = line.find("  ");
    std::string file = line.substr(0, gap);
    std::string axiom = line.substr(line.find_first_not_of(' ', gap));
    out.push_back({file, axiom, load_schema(fixture_path("axioms/" + file), NameCheck::Deferred)});
  }

  // Schema text always closes SUBOF transitively, so this case is built
  // directly: three levels with the long edge missing.
  Schema s = axiom_base();
  s.universe.object_types.insert("Manager");
  s.version.types.insert("Manager");
  s.universe.sub_of.insert({"Manager", "Employee"});
  out.push_back({"", std::string(axiom::kTransitive), s});
  return out;
}

}  // namespace ormt::testing
