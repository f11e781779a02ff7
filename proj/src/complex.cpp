#include "tcfw/complex.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "tcfw/errors.hpp"

namespace tcfw {

namespace {

constexpr std::size_t kMaxFacetSize = 24;

void check_facet(const Simplex& f, int vertex_count) {
  if (f.empty()) throw MalformedSimplex("empty facet");
  if (f.size() > kMaxFacetSize) throw MalformedSimplex("facet too large to close");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] >= vertex_count) throw MalformedSimplex("vertex index out of range");
    if (i > 0 && f[i] == f[i - 1]) throw MalformedSimplex("duplicate vertex within a facet");
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& facets,
                                     std::string name)
    : name_(std::move(name)), labels_(std::move(labels)) {
  if (facets.empty()) throw MalformedSimplex("complex needs at least one facet");
  std::set<Simplex> closure;
  std::vector<bool> used(labels_.size(), false);
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    check_facet(f, vertex_count());
    const std::uint32_t n = static_cast<std::uint32_t>(f.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::uint32_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(f[i]);
      closure.insert(std::move(face));
    }
    for (int v : f) used[v] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw MalformedSimplex("vertex label not used by any facet");

  for (const Simplex& s : closure) {
    const std::size_t k = s.size() - 1;
    if (by_dim_.size() <= k) by_dim_.resize(k + 1);
    by_dim_[k].push_back(s);
  }
  // std::set iteration is already lexicographic within each dimension.
  for (const auto& bucket : by_dim_)
    for (std::size_t i = 0; i < bucket.size(); ++i) index_.emplace(bucket[i], static_cast<int>(i));
}

std::optional<int> SimplicialComplex::vertex_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> kEmpty;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[k];
}

std::size_t SimplicialComplex::total_count() const { return index_.size(); }

std::optional<int> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dimension(); ++k) {
    std::vector<bool> is_face(count(k), false);
    for (const Simplex& t : simplices(k + 1)) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        Simplex f = t;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        is_face[*index_of(f)] = true;
      }
    }
    for (std::size_t i = 0; i < is_face.size(); ++i)
      if (!is_face[i]) out.push_back(simplices(k)[i]);
  }
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
  return chi;
}

SimplicialComplex build_complex(const std::vector<std::vector<long>>& facets, std::string name) {
  std::vector<long> labels;
  for (const auto& f : facets) labels.insert(labels.end(), f.begin(), f.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::vector<Simplex> indexed;
  indexed.reserve(facets.size());
  for (const auto& f : facets) {
    Simplex s;
    for (long l : f) s.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw MalformedSimplex("duplicate vertex within a facet");
    indexed.push_back(std::move(s));
  }
  std::vector<std::string> names;
  for (long l : labels) names.push_back(std::to_string(l));
  return SimplicialComplex(std::move(names), indexed, std::move(name));
}

// ---------------------------------------------------------------------------

BaryPoint::BaryPoint(const SimplicialComplex& complex, Weights weights) : complex_(&complex) {
  std::sort(weights.begin(), weights.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& [v, w] = weights[i];
    if (v < 0 || v >= complex.vertex_count()) throw LookupError("unknown vertex in barycentric weights");
    if (i > 0 && weights[i - 1].first == v) throw DomainError("repeated vertex in barycentric weights");
    if (sgn(w) < 0) throw DomainError("negative barycentric weight");
    total += w;
    if (sgn(w) > 0) weights_.emplace_back(v, w);
  }
  if (total != 1) throw DomainError("barycentric weights must sum to 1");
  if (!complex.contains(support())) throw DomainError("support of point is not a simplex");
}

BaryPoint BaryPoint::vertex(const SimplicialComplex& complex, int v) {
  if (v < 0 || v >= complex.vertex_count()) throw LookupError("unknown vertex");
  BaryPoint p;
  p.complex_ = &complex;
  p.weights_.emplace_back(v, Rational(1));
  return p;
}

Rational BaryPoint::weight(int v) const {
  auto it = std::lower_bound(weights_.begin(), weights_.end(), v,
                             [](const auto& e, int key) { return e.first < key; });
  if (it != weights_.end() && it->first == v) return it->second;
  return 0;
}

Simplex BaryPoint::support() const {
  Simplex s;
  s.reserve(weights_.size());
  for (const auto& e : weights_) s.push_back(e.first);
  return s;
}

BaryPoint combine(const Rational& a, const BaryPoint& x, const Rational& b, const BaryPoint& y) {
  if (&x.complex() != &y.complex()) throw DomainError("points from different complexes");
  if (sgn(a) < 0 || sgn(b) < 0 || a + b != 1) throw DomainError("not a convex combination");
  if (sgn(b) == 0) return x;
  if (sgn(a) == 0) return y;
  BaryPoint out;
  out.complex_ = &x.complex();
  const auto& xw = x.weights();
  const auto& yw = y.weights();
  std::size_t i = 0, j = 0;
  while (i < xw.size() || j < yw.size()) {
    if (j == yw.size() || (i < xw.size() && xw[i].first < yw[j].first)) {
      out.weights_.emplace_back(xw[i].first, a * xw[i].second);
      ++i;
    } else if (i == xw.size() || yw[j].first < xw[i].first) {
      out.weights_.emplace_back(yw[j].first, b * yw[j].second);
      ++j;
    } else {
      out.weights_.emplace_back(xw[i].first, a * xw[i].second + b * yw[j].second);
      ++i;
      ++j;
    }
  }
  if (!out.complex().contains(out.support())) throw DomainError("segment leaves every simplex of the complex");
  return out;
}

Rational l1_distance(const BaryPoint& x, const BaryPoint& y) {
  Rational d = 0;
  const auto& xw = x.weights();
  const auto& yw = y.weights();
  std::size_t i = 0, j = 0;
  while (i < xw.size() || j < yw.size()) {
    if (j == yw.size() || (i < xw.size() && xw[i].first < yw[j].first)) {
      d += xw[i++].second;
    } else if (i == xw.size() || yw[j].first < xw[i].first) {
      d += yw[j++].second;
    } else {
      d += abs(xw[i].second - yw[j].second);
      ++i;
      ++j;
    }
  }
  return d;
}

std::string to_string(const BaryPoint& p) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [v, w] : p.weights()) {
    if (!first) os << ',';
    first = false;
    os << p.complex().label(v) << ':' << w.get_str();
  }
  os << ']';
  return os.str();
}

std::string to_string(const ProductPoint& p) { return "(" + to_string(p.first) + ", " + to_string(p.second) + ")"; }

BaseOpenSet star_neighborhood(const SimplicialComplex& complex, int vertex) {
  if (vertex < 0 || vertex >= complex.vertex_count()) throw LookupError("unknown vertex for star neighbourhood");
  return BaseOpenSet{[vertex](const BaryPoint& x) { return sgn(x.weight(vertex)) > 0; },
                     "open star of vertex " + complex.label(vertex)};
}

// ---------------------------------------------------------------------------

namespace {

// Every monotone lattice path from (0,0) to (p,q), emitted as a product simplex.
void staircases(const Simplex& s, const Simplex& t, int width, std::vector<Simplex>& out) {
  const std::size_t p = s.size() - 1, q = t.size() - 1;
  Simplex chain;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
    chain.push_back(s[i] * width + t[j]);
    if (i == p && j == q) {
      out.push_back(chain);
    } else {
      if (i < p) walk(i + 1, j);
      if (j < q) walk(i, j + 1);
    }
    chain.pop_back();
  };
  walk(0, 0);
}

}  // namespace

SimplicialComplex product_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
  const int width = l.vertex_count();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(k.vertex_count()) * width);
  for (int i = 0; i < k.vertex_count(); ++i)
    for (int j = 0; j < width; ++j) labels.push_back("(" + k.label(i) + "," + l.label(j) + ")");

  std::vector<Simplex> facets;
  const auto kf = k.maximal_simplices();
  const auto lf = l.maximal_simplices();
  for (const Simplex& s : kf)
    for (const Simplex& t : lf) staircases(s, t, width, facets);
  std::string name = (k.name().empty() ? "K" : k.name()) + " x " + (l.name().empty() ? "L" : l.name());
  return SimplicialComplex(std::move(labels), facets, std::move(name));
}

Simplex SimplicialMap::apply(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back(vertex_map.at(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialMap diagonal_map(const SimplicialComplex& k, const SimplicialComplex& product) {
  const int n = k.vertex_count();
  if (product.vertex_count() != n * n) throw DomainError("target is not the product of the complex with itself");
  SimplicialMap map{&k, &product, {}};
  for (int v = 0; v < n; ++v) map.vertex_map.push_back(v * n + v);
  return map;
}

// ---------------------------------------------------------------------------

BaryPoint random_point(const SimplicialComplex& complex, const Simplex& simplex, std::uint64_t seed) {
  if (!complex.contains(simplex)) throw LookupError("simplex not in complex");
  if (simplex.size() == 1) return BaryPoint::vertex(complex, simplex[0]);
  std::mt19937_64 rng(seed);
  std::vector<long> draws;
  long total = 0;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    draws.push_back(1 + static_cast<long>(rng() % 16));
    total += draws.back();
  }
  BaryPoint::Weights w;
  for (std::size_t i = 0; i < simplex.size(); ++i) w.emplace_back(simplex[i], make_rational(draws[i], total));
  return BaryPoint(complex, std::move(w));
}

std::vector<ProductPoint> diagonal_vertex_points(const SimplicialComplex& complex) {
  std::vector<ProductPoint> out;
  for (int v = 0; v < complex.vertex_count(); ++v) {
    auto p = BaryPoint::vertex(complex, v);
    out.push_back({p, p});
  }
  return out;
}

std::vector<ProductPoint> sample_product_points(const SimplicialComplex& complex, std::size_t count,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<const Simplex*> all;
  for (int k = 0; k <= complex.dimension(); ++k)
    for (const auto& s : complex.simplices(k)) all.push_back(&s);
  const auto facets = complex.maximal_simplices();
  std::vector<std::vector<std::size_t>> facets_at(complex.vertex_count());
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (int v : facets[f]) facets_at[v].push_back(f);

  auto random_face = [&](const Simplex& f) {
    Simplex face;
    while (face.empty()) {
      const std::uint64_t mask = rng();
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) face.push_back(f[i]);
    }
    return face;
  };
  auto point_in = [&](const Simplex& s) { return random_point(complex, s, rng()); };

  std::vector<ProductPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Simplex& facet = facets[pick(facets.size())];
    switch (i % 5) {
      case 0: {
        auto x = point_in(*all[pick(all.size())]);
        out.push_back({x, x});
        break;
      }
      case 1: {
        auto x = point_in(random_face(facet));
        auto z = point_in(facet);
        const Rational eps = make_rational(1 + static_cast<long>(pick(23)), 24);
        auto y = combine(1 - eps, x, eps, z);
        if ((i / 5) % 2 == 0)
          out.push_back({x, y});
        else
          out.push_back({y, x});
        break;
      }
      case 2:
        out.push_back({point_in(random_face(facet)), point_in(random_face(facet))});
        break;
      case 3: {
        const int shared = facet[pick(facet.size())];
        const auto& around = facets_at[shared];
        const Simplex& other = facets[around[pick(around.size())]];
        out.push_back({point_in(random_face(facet)), point_in(random_face(other))});
        break;
      }
      default:
        out.push_back({point_in(*all[pick(all.size())]), point_in(*all[pick(all.size())])});
        break;
    }
  }
  return out;
}

}  // namespace tcfw
