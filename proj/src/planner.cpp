#include "tcfw/planner.hpp"

#include <algorithm>
#include <random>

#include "tcfw/errors.hpp"
#include "tcfw/ring.hpp"

namespace tcfw {

namespace {

BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational fractional_part(const Rational& r) { return r - Rational(floor_of(r)); }

long to_long(const BigInt& z) { return z.get_si(); }

const Rational kHalf = make_rational(1, 2);
const Rational kThird = make_rational(1, 3);
const Rational kTwoThirds = make_rational(2, 3);

std::string describe(const ProductPoint& p) { return to_string(p); }

}  // namespace

// --- PLPath ---------------------------------------------------------------

PLPath::PLPath(std::vector<Breakpoint> breakpoints) : points_(std::move(breakpoints)) {
  if (points_.size() < 2) throw DomainError("a PL path needs at least two breakpoints");
  if (sgn(points_.front().first) != 0 || points_.back().first != 1)
    throw DomainError("PL path times must run from 0 to 1");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].first <= points_[i - 1].first) throw DomainError("PL path times must increase strictly");
    // carrier condition: throws unless both ends span one simplex
    (void)combine(kHalf, points_[i - 1].second, kHalf, points_[i].second);
  }
}

PLPath PLPath::constant(const BaryPoint& b) { return PLPath({{Rational(0), b}, {Rational(1), b}}); }

BaryPoint PLPath::operator()(const Rational& t) const {
  if (sgn(t) < 0 || t > 1) throw DomainError("path time outside [0, 1]");
  auto it = std::lower_bound(points_.begin(), points_.end(), t,
                             [](const Breakpoint& b, const Rational& x) { return b.first < x; });
  if (it->first == t) return it->second;
  const auto& [t1, p1] = *it;
  const auto& [t0, p0] = *(it - 1);
  const Rational a = (t - t0) / (t1 - t0);
  return combine(1 - a, p0, a, p1);
}

// --- translations ---------------------------------------------------------

namespace {

void require_endpoints(const Path& path, const ProductPoint& p, const std::string& name) {
  if (!(path(Rational(0)) == p.first) || !(path(Rational(1)) == p.second))
    throw SectionInvalid("section " + name + " violates the endpoint contract at " + describe(p));
}

void require_compression(const FibrewiseHomotopy& h, const ProductPoint& p) {
  if (!(h.evaluate(p, Rational(0)) == p))
    throw CompressionInvalid("compression " + h.name + " does not start at the identity at " + describe(p));
  const ProductPoint end = h.evaluate(p, Rational(1));
  if (!(end.first == p.second && end.second == p.second))
    throw CompressionInvalid("compression " + h.name + " does not end on the diagonal at " + describe(p));
}

}  // namespace

FibrewiseHomotopy section_to_compression(const Section& s, std::span<const ProductPoint> probes) {
  for (const auto& p : probes)
    if (s.domain(p)) require_endpoints(s.path(p), p, s.name);
  FibrewiseHomotopy h;
  h.domain = s.domain;
  h.name = "compression of " + s.name;
  h.evaluate = [s](const ProductPoint& p, const Rational& t) {
    const Path path = s.path(p);
    require_endpoints(path, p, s.name);
    return ProductPoint{path(t), p.second};
  };
  return h;
}

Section compression_to_section(const FibrewiseHomotopy& h, std::span<const ProductPoint> probes) {
  for (const auto& p : probes)
    if (h.domain(p)) require_compression(h, p);
  Section s;
  s.domain = h.domain;
  s.name = "section of " + h.name;
  s.path = [h](const ProductPoint& p) -> Path {
    require_compression(h, p);
    return [h, p](const Rational& t) { return h.evaluate(p, t).first; };
  };
  return s;
}

FibrewiseHomotopy strom_compression(const StromStructure& strom, const Rational& level) {
  FibrewiseHomotopy h;
  h.domain = OpenSet{[u = strom.u, level](const ProductPoint& p) { return u(p) < level; },
                     "u < " + to_string(level)};
  h.evaluate = strom.h;
  h.name = "h on u < " + to_string(level);
  return h;
}

bool stationary_on_diagonal(const FibrewiseHomotopy& h, std::span<const ProductPoint> probes) {
  for (const auto& p : probes) {
    if (!p.is_diagonal()) continue;
    if (!h.domain(p)) return false;
    for (const auto& t : probe_times())
      if (!(h.evaluate(p, t) == p)) return false;
  }
  return true;
}

bool constant_on_diagonal(const Section& s, std::span<const ProductPoint> probes) {
  for (const auto& p : probes) {
    if (!p.is_diagonal()) continue;
    if (!s.domain(p)) return false;
    const Path path = s.path(p);
    for (const auto& t : probe_times())
      if (!(path(t) == p.first)) return false;
  }
  return true;
}

// --- planner validation ---------------------------------------------------

namespace {

enum PlannerCheck : std::size_t { kCoverage, kEndpoints, kDiagonalContainment, kConstantOnDiagonal };

std::size_t planner_zcl(const SimplicialComplex& complex) {
  std::size_t zcl = 0;
  for (const auto& c : {Coefficients::rationals(), Coefficients::prime_field(2), Coefficients::prime_field(3)})
    zcl = std::max(zcl, zero_divisor_cup_length(complex, c));
  return zcl;
}

}  // namespace

PlannerReport validate_planner(const MotionPlanner& planner, std::size_t sample_count, std::uint64_t seed,
                               Execution exec) {
  const SimplicialComplex& complex = *planner.complex;
  std::vector<ProductPoint> points = sample_product_points(complex, sample_count, seed);
  const auto vertices = diagonal_vertex_points(complex);
  points.insert(points.end(), vertices.begin(), vertices.end());
  std::mt19937_64 rng(seed ^ 0x27d4eb2fu);
  std::vector<Rational> times(points.size());
  for (auto& t : times) t = make_rational(static_cast<long>(rng() % 97), 96);

  static const std::vector<std::string> names = {"coverage", "endpoint_contract", "monoidal_diagonal_containment",
                                                 "monoidal_constant_paths"};
  PlannerReport out;
  out.report = run_sampled(planner.name, sample_count, names, points.size(), exec, [&](std::size_t i, SampleLog& log) {
    const ProductPoint& p = points[i];
    bool covered = false;
    for (const Section& s : planner.sections) {
      const bool inside = s.domain(p);
      covered = covered || inside;
      if (planner.monoidal && p.is_diagonal())
        log.record(kDiagonalContainment, inside, [&] { return s.name + " misses " + describe(p); });
      if (!inside) continue;
      const Path path = s.path(p);
      (void)path(times[i]);
      log.record(kEndpoints, path(Rational(0)) == p.first && path(Rational(1)) == p.second,
                 [&] { return s.name + " at " + describe(p); });
      if (planner.monoidal && p.is_diagonal()) {
        bool constant = true;
        for (const auto& t : probe_times()) constant = constant && path(t) == p.first;
        log.record(kConstantOnDiagonal, constant, [&] { return s.name + " moves " + describe(p); });
      }
    }
    log.record(kCoverage, covered, [&] { return describe(p) + " lies in no set"; });
  });
  if (!planner.monoidal) {
    auto& checks = out.report.checks;
    checks.erase(std::remove_if(checks.begin(), checks.end(),
                                [](const Check& c) { return c.name.rfind("monoidal_", 0) == 0; }),
                 checks.end());
    auto& w = out.report.warnings;
    w.erase(std::remove_if(w.begin(), w.end(), [](const std::string& s) { return s.find("monoidal_") != std::string::npos; }),
            w.end());
  }
  if (planner.demo_fixture) out.report.warnings.push_back("demo planner: hand-built fixture");
  out.size = planner_size(planner);
  out.zcl = planner_zcl(complex);
  return out;
}

// --- circle and interval models -------------------------------------------

Rational circle_angle(const BaryPoint& p) {
  const int n = p.complex().vertex_count();
  if (p.complex().dimension() != 1 || p.complex().count(1) != static_cast<std::size_t>(n))
    throw DomainError("complex is not an n-gon circle");
  const auto& w = p.weights();
  if (w.size() == 1) return make_rational(w[0].first, n);
  if (w.size() == 2) {
    const int i = w[0].first, j = w[1].first;
    if (j == i + 1) return (Rational(i) + w[1].second) / n;
    if (i == 0 && j == n - 1) return (Rational(n - 1) + w[0].second) / n;
  }
  throw DomainError("point is not on the n-gon circle: " + to_string(p));
}

BaryPoint circle_point(const SimplicialComplex& circle, Rational angle) {
  const int n = circle.vertex_count();
  const Rational x = fractional_part(angle) * n;
  const long k = to_long(floor_of(x));
  const Rational s = x - k;
  if (sgn(s) == 0) return BaryPoint::vertex(circle, static_cast<int>(k));
  const int a = static_cast<int>(k), b = static_cast<int>((k + 1) % n);
  BaryPoint::Weights w = {{a, 1 - s}, {b, s}};
  std::sort(w.begin(), w.end());
  return BaryPoint(circle, std::move(w));
}

PLPath circle_arc(const BaryPoint& from, const Rational& turn) {
  if (sgn(turn) < 0) throw DomainError("arc turn must be non-negative");
  if (sgn(turn) == 0) return PLPath::constant(from);
  const SimplicialComplex& c = from.complex();
  const int n = c.vertex_count();
  const Rational a0 = circle_angle(from);
  const Rational a1 = a0 + turn;
  std::vector<PLPath::Breakpoint> pts = {{Rational(0), from}};
  for (BigInt m = floor_of(a0 * n) + 1; Rational(m, n) < a1; ++m)
    pts.emplace_back((Rational(m, n) - a0) / turn, circle_point(c, Rational(m, n)));
  pts.emplace_back(Rational(1), circle_point(c, a1));
  return PLPath(std::move(pts));
}

Rational interval_position(const BaryPoint& p) {
  const int k = p.complex().vertex_count() - 1;
  if (p.complex().dimension() != 1 || p.complex().count(1) != static_cast<std::size_t>(k))
    throw DomainError("complex is not a subdivided interval");
  const auto& w = p.weights();
  if (w.size() == 1) return make_rational(w[0].first, k);
  if (w.size() == 2 && w[1].first == w[0].first + 1) return (Rational(w[0].first) + w[1].second) / k;
  throw DomainError("point is not on the subdivided interval: " + to_string(p));
}

BaryPoint interval_point(const SimplicialComplex& interval, const Rational& position) {
  if (sgn(position) < 0 || position > 1) throw DomainError("interval position outside [0, 1]");
  const int k = interval.vertex_count() - 1;
  const Rational x = position * k;
  const long i = to_long(floor_of(x));
  const Rational s = x - i;
  if (sgn(s) == 0) return BaryPoint::vertex(interval, static_cast<int>(i));
  return BaryPoint(interval, {{static_cast<int>(i), 1 - s}, {static_cast<int>(i + 1), s}});
}

PLPath interval_segment(const BaryPoint& from, const BaryPoint& to) {
  const SimplicialComplex& c = from.complex();
  const int k = c.vertex_count() - 1;
  const Rational p0 = interval_position(from), p1 = interval_position(to);
  if (p0 == p1) return PLPath::constant(from);
  std::vector<PLPath::Breakpoint> pts = {{Rational(0), from}};
  const Rational lo = rmin(p0, p1), hi = rmax(p0, p1);
  std::vector<Rational> crossings;
  for (int m = 0; m <= k; ++m) {
    const Rational q = make_rational(m, k);
    if (lo < q && q < hi) crossings.push_back(q);
  }
  if (p1 < p0) std::reverse(crossings.begin(), crossings.end());
  for (const auto& q : crossings) pts.emplace_back((q - p0) / (p1 - p0), interval_point(c, q));
  pts.emplace_back(Rational(1), to);
  return PLPath(std::move(pts));
}

PLPath milnor_pl_path(const BaryPoint& x, const BaryPoint& y) {
  if (x == y) return PLPath::constant(x);
  return PLPath({{Rational(0), x}, {kHalf, milnor_average(x, y)}, {Rational(1), y}});
}

MotionPlanner circle_planner(int n) {
  if (n < 3) throw FixtureError("circle planner needs n >= 3");
  MotionPlanner planner;
  planner.complex = circle(n);
  planner.name = "circle_planner(" + std::to_string(n) + ")";
  planner.demo_fixture = true;
  planner.monoidal = false;

  Section near;
  near.domain = OpenSet{[](const ProductPoint& p) { return u_function(p.first, p.second) < 1; }, "u < 1"};
  near.path = [](const ProductPoint& p) -> Path { return milnor_pl_path(p.first, p.second); };
  near.name = "milnor";

  Section apart;
  apart.domain = OpenSet{[](const ProductPoint& p) { return !p.is_diagonal(); }, "x != y"};
  apart.path = [](const ProductPoint& p) -> Path {
    return circle_arc(p.first, fractional_part(circle_angle(p.second) - circle_angle(p.first)));
  };
  apart.name = "counterclockwise";

  planner.sections = {std::move(near), std::move(apart)};
  return planner;
}

// --- covers ---------------------------------------------------------------

namespace {

// r^{-1}(U) is contracted by h(x, 2t) followed by H(r(x), 2t - 1).
ProductPoint through_retraction(const StromStructure& strom, const FibrewiseHomotopy& h, const ProductPoint& p,
                                const Rational& t) {
  if (t <= kHalf) return strom.h(p, 2 * t);
  return h.evaluate(strom.retract(p), 2 * t - 1);
}

}  // namespace

Cover cover_plus_one(const Cover& cover, const StromStructure& strom, const CoverBands& bands) {
  Cover out;
  for (const FibrewiseHomotopy& set : cover) {
    FibrewiseHomotopy v;
    v.name = set.name + " trimmed, plus u < " + to_string(bands.inner);
    v.domain = OpenSet{[set, u = strom.u, bands](const ProductPoint& p) {
                         const Rational level = u(p);
                         return level < bands.inner || (level > bands.cut && set.domain(p));
                       },
                       "(" + set.domain.description + ") and u > " + to_string(bands.cut) + ", or u < " +
                           to_string(bands.inner)};
    v.evaluate = [set, strom, bands](const ProductPoint& p, const Rational& t) {
      return strom.u(p) < bands.inner ? strom.h(p, t) : set.evaluate(p, t);
    };
    out.push_back(std::move(v));
  }
  out.push_back(strom_compression(strom, bands.outer));
  return out;
}

ProductPoint case_two_homotopy(const StromStructure& strom, const FibrewiseHomotopy& h0, const ProductPoint& p,
                               const Rational& t) {
  if (p.is_diagonal()) return p;
  if (t <= kThird) return strom.h(p, 3 * t);
  const Rational u = strom.u(p);
  const ProductPoint base{p.second, p.second};
  if (u < kTwoThirds) return strom.retract(p);
  if (u >= 1) {
    if (t <= kTwoThirds) return h0.evaluate(strom.retract(p), 3 * t - 1);
    return h0.evaluate(base, 3 - 3 * t);
  }
  if (t <= u - kThird) return h0.evaluate(base, 3 * t - 1);
  if (t <= 5 * kThird - u) return h0.evaluate(base, 3 * u - 2);
  return h0.evaluate(base, 3 - 3 * t);
}

Cover pointed_upgrade(const Cover& cover, const StromStructure& strom, UpgradeCase which,
                      std::span<const ProductPoint> probes, const CoverBands& bands) {
  std::vector<ProductPoint> diagonal;
  for (const auto& p : probes) diagonal.push_back({p.second, p.second});

  auto qualifies = [&](const FibrewiseHomotopy& set) {
    if (which == UpgradeCase::disjoint_from_diagonal)
      return std::none_of(diagonal.begin(), diagonal.end(), [&](const ProductPoint& d) { return set.domain(d); });
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (set.domain(probes[i]) && !set.domain(diagonal[i])) return false;
    return true;
  };
  std::size_t chosen = cover.size();
  for (std::size_t i = 0; i < cover.size() && chosen == cover.size(); ++i)
    if (qualifies(cover[i])) chosen = i;
  if (chosen == cover.size())
    throw Inapplicable(std::string("no set satisfies the ") +
                       (which == UpgradeCase::disjoint_from_diagonal ? "diagonal-disjointness"
                                                                     : "diagonal-projection") +
                       " condition; the pointed upgrade does not apply");

  Cover out;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const FibrewiseHomotopy set = cover[i];
    FibrewiseHomotopy v;
    if (i == chosen) {
      v.name = "upgrade of " + set.name;
      v.domain = OpenSet{[set, strom, bands](const ProductPoint& p) {
                           return strom.u(p) < bands.outer || set.domain(strom.retract(p));
                         },
                         "r^-1(" + set.domain.description + ") or u < " + to_string(bands.outer)};
      if (which == UpgradeCase::disjoint_from_diagonal) {
        v.evaluate = [set, strom, bands](const ProductPoint& p, const Rational& t) {
          return strom.u(p) < bands.outer ? strom.h(p, t) : through_retraction(strom, set, p, t);
        };
      } else {
        v.evaluate = [set, strom](const ProductPoint& p, const Rational& t) {
          return case_two_homotopy(strom, set, p, t);
        };
      }
    } else {
      v.name = "trimmed pullback of " + set.name;
      v.domain = OpenSet{[set, strom, bands](const ProductPoint& p) {
                           const Rational level = strom.u(p);
                           return level < bands.inner || (level > bands.cut && set.domain(strom.retract(p)));
                         },
                         "r^-1(" + set.domain.description + ") and u > " + to_string(bands.cut) + ", or u < " +
                             to_string(bands.inner)};
      v.evaluate = [set, strom, bands](const ProductPoint& p, const Rational& t) {
        return strom.u(p) < bands.inner ? strom.h(p, t) : through_retraction(strom, set, p, t);
      };
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ProductPoint> upgrade_probes(const SimplicialComplex& complex, std::size_t count, std::uint64_t seed) {
  std::vector<ProductPoint> points = sample_product_points(complex, count, seed);
  const auto vertices = diagonal_vertex_points(complex);
  points.insert(points.end(), vertices.begin(), vertices.end());
  return points;
}

VerificationReport validate_cover(const SimplicialComplex& complex, const Cover& cover, bool require_pointed,
                                  std::size_t sample_count, std::uint64_t seed, Execution exec) {
  enum : std::size_t { kCover, kInitial, kFibre, kTerminal, kContains, kStationary };
  static const std::vector<std::string> names = {"coverage",          "initial_identity",     "fibrewise",
                                                 "ends_on_diagonal",  "diagonal_containment", "pointed_stationary"};
  const std::vector<ProductPoint> points = upgrade_probes(complex, sample_count, seed);
  std::mt19937_64 rng(seed ^ 0x165667b1u);
  std::vector<Rational> extra(points.size());
  for (auto& t : extra) t = make_rational(static_cast<long>(rng() % 97), 96);

  VerificationReport report =
      run_sampled(complex.name(), sample_count, names, points.size(), exec, [&](std::size_t i, SampleLog& log) {
        const ProductPoint& p = points[i];
        bool covered = false;
        for (std::size_t k = 0; k < cover.size(); ++k) {
          const FibrewiseHomotopy& set = cover[k];
          const bool inside = set.domain(p);
          covered = covered || inside;
          auto where = [&](const char* what) {
            return [&, what] { return "set " + std::to_string(k) + " (" + set.name + ") " + what + " at " + describe(p); };
          };
          if (require_pointed && p.is_diagonal()) log.record(kContains, inside, where("misses the diagonal"));
          if (!inside) continue;
          log.record(kInitial, set.evaluate(p, Rational(0)) == p, where("is not the identity at t = 0"));
          std::vector<Rational> times = probe_times();
          times.push_back(extra[i]);
          for (const auto& t : times) {
            const ProductPoint q = set.evaluate(p, t);
            log.record(kFibre, q.second == p.second, where("leaves the fibre"));
            if (require_pointed && p.is_diagonal()) log.record(kStationary, q == p, where("moves a diagonal point"));
          }
          const ProductPoint end = set.evaluate(p, Rational(1));
          log.record(kTerminal, end.is_diagonal(), where("does not end on the diagonal"));
        }
        log.record(kCover, covered, [&] { return describe(p) + " lies in no set"; });
      });
  if (!require_pointed) {
    auto& checks = report.checks;
    checks.erase(std::remove_if(checks.begin(), checks.end(),
                                [](const Check& c) { return c.name == "diagonal_containment" || c.name == "pointed_stationary"; }),
                 checks.end());
    auto& w = report.warnings;
    w.erase(std::remove_if(w.begin(), w.end(),
                           [](const std::string& s) {
                             return s.find("diagonal_containment") != std::string::npos ||
                                    s.find("pointed_stationary") != std::string::npos;
                           }),
            w.end());
  }
  return report;
}

// --- cover fixtures -------------------------------------------------------

CoverFixture circle_cover(int n) {
  const MotionPlanner planner = circle_planner(n);
  CoverFixture f;
  f.complex = planner.complex;
  f.name = "circle_cover(" + std::to_string(n) + ")";
  for (const auto& s : planner.sections) f.cover.push_back(section_to_compression(s));
  return f;
}

namespace {

FibrewiseHomotopy interval_set(std::function<bool(const ProductPoint&)> contains, std::string description,
                               std::function<PLPath(const ProductPoint&)> route, std::string name) {
  FibrewiseHomotopy h;
  h.domain = OpenSet{std::move(contains), std::move(description)};
  h.evaluate = [route = std::move(route)](const ProductPoint& p, const Rational& t) {
    return ProductPoint{route(p)(t), p.second};
  };
  h.name = std::move(name);
  return h;
}

// x -> vertex -> y, half the time on each leg.
std::function<PLPath(const ProductPoint&)> via_vertex(int vertex) {
  return [vertex](const ProductPoint& p) {
    const BaryPoint v = BaryPoint::vertex(p.first.complex(), vertex);
    const PLPath out = interval_segment(p.first, v), back = interval_segment(v, p.second);
    std::vector<PLPath::Breakpoint> pts;
    for (const auto& [t, b] : out.breakpoints()) pts.emplace_back(t / 2, b);
    for (std::size_t i = 1; i < back.breakpoints().size(); ++i)
      pts.emplace_back((back.breakpoints()[i].first + 1) / 2, back.breakpoints()[i].second);
    return PLPath(std::move(pts));
  };
}

}  // namespace

CoverFixture interval_product_cover(int k) {
  CoverFixture f;
  f.complex = interval(k);
  f.name = "interval_product_cover(" + std::to_string(k) + ")";
  f.cover.push_back(interval_set([](const ProductPoint& p) { return interval_position(p.second) < kTwoThirds; },
                                 "pos y < 2/3", via_vertex(0), "via left end"));
  f.cover.push_back(interval_set([](const ProductPoint& p) { return interval_position(p.second) > kThird; },
                                 "pos y > 1/3", via_vertex(k), "via right end"));
  return f;
}

CoverFixture interval_split_cover(int k) {
  CoverFixture f;
  f.complex = interval(k);
  f.name = "interval_split_cover(" + std::to_string(k) + ")";
  auto straight = [](const ProductPoint& p) { return interval_segment(p.first, p.second); };
  f.cover.push_back(interval_set([](const ProductPoint& p) { return interval_position(p.first) < kHalf; },
                                 "pos x < 1/2", straight, "straight left"));
  f.cover.push_back(interval_set([](const ProductPoint& p) { return interval_position(p.first) > kThird; },
                                 "pos x > 1/3", straight, "straight right"));
  return f;
}

MotionPlanner planner_from_cover(ComplexPtr complex, const Cover& cover, std::string name,
                                 std::span<const ProductPoint> probes) {
  MotionPlanner planner;
  planner.complex = std::move(complex);
  planner.name = std::move(name);
  planner.monoidal = true;
  for (const auto& h : cover) {
    planner.sections.push_back(compression_to_section(h, probes));
    planner.monoidal = planner.monoidal && stationary_on_diagonal(h, probes);
  }
  return planner;
}

}  // namespace tcfw
