#include "tcfw/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tcfw/errors.hpp"

namespace tcfw {

namespace {

ComplexPtr make(const std::vector<std::vector<long>>& facets, std::string name) {
  return std::make_shared<const SimplicialComplex>(build_complex(facets, std::move(name)));
}

std::vector<std::vector<long>> boundary_of_simplex(int n) {
  std::vector<std::vector<long>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<long> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return facets;
}

int parse_parameter(const std::string& spec, std::size_t colon) {
  const std::string digits = spec.substr(colon + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6)
    throw FixtureError("bad fixture parameter in '" + spec + "'");
  return std::stoi(digits);
}

}  // namespace

ComplexPtr point_complex() { return make({{0}}, "point"); }

ComplexPtr circle(int n) {
  if (n < 3) throw FixtureError("circle needs at least 3 vertices");
  std::vector<std::vector<long>> facets;
  for (long i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
  return make(facets, n == 3 ? "s1" : "s1:" + std::to_string(n));
}

ComplexPtr sphere(int n) {
  if (n < 1) throw FixtureError("sphere dimension must be positive");
  if (n > 22) throw FixtureError("sphere dimension too large");
  const std::string name = n == 1 ? "s1" : n == 2 ? "s2" : n == 3 ? "s3" : "sn:" + std::to_string(n);
  return make(boundary_of_simplex(n + 1), name);
}

ComplexPtr torus() {
  std::vector<std::vector<long>> facets;
  for (long i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return make(facets, "t2");
}

ComplexPtr projective_plane() {
  return make({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
               {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}},
              "rp2");
}

ComplexPtr wedge_circle_sphere() {
  return make({{0, 1}, {1, 2}, {0, 2}, {0, 3, 4}, {0, 3, 5}, {0, 4, 5}, {3, 4, 5}}, "wedge");
}

ComplexPtr interval(int k) {
  if (k < 1) throw FixtureError("interval needs at least one edge");
  std::vector<std::vector<long>> facets;
  for (long i = 0; i < k; ++i) facets.push_back({i, i + 1});
  return make(facets, "interval:" + std::to_string(k));
}

ComplexPtr complex_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FixtureError(std::string("fixture is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
    throw FixtureError("fixture must be an object with a 'facets' array");
  std::string name = "custom";
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw FixtureError("fixture 'name' must be a string");
    name = j["name"].get<std::string>();
  }
  std::vector<std::vector<long>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw FixtureError("each facet must be an array of integers");
    std::vector<long> facet;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw FixtureError("vertex labels must be integers");
      facet.push_back(v.get<long>());
    }
    facets.push_back(std::move(facet));
  }
  try {
    return make(facets, std::move(name));
  } catch (const FixtureError&) {
    throw;
  } catch (const Error& e) {
    throw FixtureError(std::string("malformed fixture: ") + e.what());
  }
}

ComplexPtr load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return complex_from_json(buf.str());
}

ComplexPtr resolve_complex(const std::string& spec) {
  if (spec == "point") return point_complex();
  if (spec == "s1") return circle(3);
  if (spec == "s2") return sphere(2);
  if (spec == "s3") return sphere(3);
  if (spec == "t2") return torus();
  if (spec == "rp2") return projective_plane();
  if (spec == "wedge") return wedge_circle_sphere();
  if (spec.rfind("s1:", 0) == 0) return circle(parse_parameter(spec, 2));
  if (spec.rfind("sn:", 0) == 0) return sphere(parse_parameter(spec, 2));
  if (spec.rfind("interval:", 0) == 0) return interval(parse_parameter(spec, 8));
  if (std::filesystem::exists(spec)) return load_complex_file(spec);
  throw FixtureError("unknown complex '" + spec + "'");
}

const std::vector<std::string>& standard_fixture_names() {
  static const std::vector<std::string> names = {"point", "s1", "s2", "s3", "t2", "rp2", "wedge"};
  return names;
}

}  // namespace tcfw
