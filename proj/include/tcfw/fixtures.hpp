#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tcfw/complex.hpp"

namespace tcfw {

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

ComplexPtr point_complex();
// Boundary of the n-gon; vertex i sits at angle i/n of a full turn.
ComplexPtr circle(int n);
// Boundary of the (n+1)-simplex.
ComplexPtr sphere(int n);
ComplexPtr torus();              // 7 vertices
ComplexPtr projective_plane();   // 6 vertices
ComplexPtr wedge_circle_sphere();
// Path 0 - 1 - ... - k; vertex i sits at position i/k.
ComplexPtr interval(int k);

/// {"name": string, "facets": [[int, ...], ...]}. FixtureError on malformed input.
ComplexPtr complex_from_json(const std::string& text);
ComplexPtr load_complex_file(const std::string& path);

/// Built-in name (point, s1, s1:<n>, s2, s3, sn:<n>, t2, rp2, wedge,
/// interval:<k>) or a path to a JSON file.
ComplexPtr resolve_complex(const std::string& spec);

// Names of the fixtures every acceptance suite runs over.
const std::vector<std::string>& standard_fixture_names();

}  // namespace tcfw
