#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcfw/rational.hpp"

namespace tcfw {

// Sorted list of vertex indices.
using Simplex = std::vector<int>;

/**
 * Finite abstract simplicial complex with a fixed total order on its
 * vertices. Simplices are stored closed under faces, bucketed by dimension
 * and sorted lexicographically inside each bucket; all orientation signs in
 * the library come from this order.
 */
class SimplicialComplex {
 public:
  // `facets` are given in vertex-index space [0, labels.size()).
  SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& facets,
                    std::string name = {});

  const std::string& name() const { return name_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::string& label(int v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> vertex_of(const std::string& label) const;

  // k-simplices in canonical order; empty for k outside [0, dim].
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t total_count() const;

  // Position of `s` inside simplices(s.size()-1).
  std::optional<int> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  // Simplices that are not a proper face of another simplex.
  std::vector<Simplex> maximal_simplices() const;
  long euler_characteristic() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, int> index_;
};

// Closure of integer-labelled facets. Vertices are ordered by ascending label.
SimplicialComplex build_complex(const std::vector<std::vector<long>>& facets, std::string name = {});

/// Point of |K| in exact barycentric coordinates. Only positive weights are
/// stored, sorted by vertex index; their support is a simplex of K.
class BaryPoint {
 public:
  using Weights = std::vector<std::pair<int, Rational>>;

  BaryPoint(const SimplicialComplex& complex, Weights weights);
  static BaryPoint vertex(const SimplicialComplex& complex, int v);

  const SimplicialComplex& complex() const { return *complex_; }
  const Weights& weights() const { return weights_; }
  Rational weight(int v) const;
  Simplex support() const;

  friend bool operator==(const BaryPoint& a, const BaryPoint& b) {
    return a.complex_ == b.complex_ && a.weights_ == b.weights_;
  }

 private:
  BaryPoint() = default;
  friend BaryPoint combine(const Rational&, const BaryPoint&, const Rational&, const BaryPoint&);

  const SimplicialComplex* complex_ = nullptr;
  Weights weights_;
};

/// a*x + b*y with a, b >= 0 and a + b = 1. The supports of x and y must span
/// a common simplex, otherwise DomainError.
BaryPoint combine(const Rational& a, const BaryPoint& x, const Rational& b, const BaryPoint& y);

// Sum of absolute coordinate differences.
Rational l1_distance(const BaryPoint& x, const BaryPoint& y);

std::string to_string(const BaryPoint& p);

struct ProductPoint {
  BaryPoint first;
  BaryPoint second;

  bool is_diagonal() const { return first == second; }
  friend bool operator==(const ProductPoint&, const ProductPoint&) = default;
};

std::string to_string(const ProductPoint& p);

/// Open subset described by an exact membership predicate.
template <class Point>
struct OpenSetOf {
  std::function<bool(const Point&)> contains;
  std::string description;

  bool operator()(const Point& p) const { return contains(p); }
};

using OpenSet = OpenSetOf<ProductPoint>;
using BaseOpenSet = OpenSetOf<BaryPoint>;

// Open star of a vertex: { x : x_beta > 0 }.
BaseOpenSet star_neighborhood(const SimplicialComplex& complex, int vertex);

/// Staircase triangulation of |K| x |L|. Vertex (i, j) has index
/// i * L.vertex_count() + j, so the lexicographic pair order is the vertex order.
SimplicialComplex product_complex(const SimplicialComplex& k, const SimplicialComplex& l);

struct SimplicialMap {
  const SimplicialComplex* source;
  const SimplicialComplex* target;
  std::vector<int> vertex_map;

  Simplex apply(const Simplex& s) const;
};

// v -> (v, v), into product_complex(K, K).
SimplicialMap diagonal_map(const SimplicialComplex& k, const SimplicialComplex& product);

/// Deterministic interior point of `simplex` (all weights positive).
BaryPoint random_point(const SimplicialComplex& complex, const Simplex& simplex, std::uint64_t seed);

/// Seeded mixture of product points used by every sampled verification:
/// diagonal points, perturbations of the diagonal inside one simplex, pairs in
/// one simplex, pairs in overlapping simplices and unrelated pairs.
std::vector<ProductPoint> sample_product_points(const SimplicialComplex& complex,
                                                std::size_t count, std::uint64_t seed);

// Vertex points on the diagonal, one per vertex.
std::vector<ProductPoint> diagonal_vertex_points(const SimplicialComplex& complex);

}  // namespace tcfw
