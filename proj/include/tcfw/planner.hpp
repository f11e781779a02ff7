#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tcfw/fixtures.hpp"
#include "tcfw/report.hpp"
#include "tcfw/strom.hpp"

namespace tcfw {

/// Piecewise-linear path: breakpoints with times strictly increasing from 0
/// to 1; consecutive points span a common simplex, so every segment is a
/// straight line inside one simplex.
class PLPath {
 public:
  using Breakpoint = std::pair<Rational, BaryPoint>;

  explicit PLPath(std::vector<Breakpoint> breakpoints);
  static PLPath constant(const BaryPoint& b);

  BaryPoint operator()(const Rational& t) const;
  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  const BaryPoint& start() const { return points_.front().second; }
  const BaryPoint& end() const { return points_.back().second; }

 private:
  std::vector<Breakpoint> points_;
};

// Any path [0, 1] -> |K|, evaluated exactly at rational times.
using Path = std::function<BaryPoint(const Rational&)>;

/// Local section of the endpoint map over an open set of B x B:
/// path(a, b) runs from a to b for every (a, b) in the domain.
struct Section {
  OpenSet domain;
  std::function<Path(const ProductPoint&)> path;
  std::string name;
};

/// Homotopy on an open set of B x B, fibred over the second factor.
struct FibrewiseHomotopy {
  OpenSet domain;
  std::function<ProductPoint(const ProductPoint&, const Rational&)> evaluate;
  std::string name;
};

struct MotionPlanner {
  ComplexPtr complex;
  std::vector<Section> sections;
  bool monoidal = false;
  std::string name;
  bool demo_fixture = false;  // hand-built example, not derived from a construction
};

inline std::size_t planner_size(const MotionPlanner& p) { return p.sections.size(); }

/// H(a, b; t) = (s(a, b)(t), b). Probes in the domain are checked up front and
/// every later evaluation re-checks the endpoint contract; SectionInvalid on
/// violation.
FibrewiseHomotopy section_to_compression(const Section& s, std::span<const ProductPoint> probes = {});

/// s(a, b)(t) = first coordinate of H(a, b; t). CompressionInvalid when
/// H(p, 0) != p or H(p, 1) is off the diagonal at a probe or an evaluated path end.
Section compression_to_section(const FibrewiseHomotopy& h, std::span<const ProductPoint> probes = {});

// Restriction of h to the sublevel set {u < level}; a pointed compression.
FibrewiseHomotopy strom_compression(const StromStructure& strom, const Rational& level = Rational(1));

/// Diagonal probes lie in the domain and stay fixed at every probe time.
bool stationary_on_diagonal(const FibrewiseHomotopy& h, std::span<const ProductPoint> probes);
// Diagonal probes lie in the domain and get the constant path.
bool constant_on_diagonal(const Section& s, std::span<const ProductPoint> probes);

struct PlannerReport {
  VerificationReport report;
  std::size_t size = 0;
  std::size_t zcl = 0;  // max over Q, F2, F3
  bool meets_zcl_bound() const { return size >= zcl + 1; }
};

/// Coverage, endpoint contract on every containing set, and for monoidal
/// planners diagonal containment plus constant paths on the diagonal.
PlannerReport validate_planner(const MotionPlanner& planner, std::size_t sample_count, std::uint64_t seed,
                               Execution exec = Execution::parallel);

// --- models of the n-gon circle and the subdivided interval ---------------

// Angle in [0, 1) of a point of circle(n); vertex i sits at i/n.
Rational circle_angle(const BaryPoint& p);
BaryPoint circle_point(const SimplicialComplex& circle, Rational angle);
/// Counterclockwise arc from `from` through `turn` (>= 0) of a full turn,
/// with a breakpoint at every vertex crossed.
PLPath circle_arc(const BaryPoint& from, const Rational& turn);

// Position in [0, 1] of a point of interval(k); vertex i sits at i/k.
Rational interval_position(const BaryPoint& p);
BaryPoint interval_point(const SimplicialComplex& interval, const Rational& position);
PLPath interval_segment(const BaryPoint& from, const BaryPoint& to);

// Milnor's two-leg path as a PL path with breakpoints 0, 1/2, 1.
PLPath milnor_pl_path(const BaryPoint& x, const BaryPoint& y);

/// Two sets on circle(n): the Strom neighbourhood U = {u < 1} with Milnor's
/// path, and {x != y} with the counterclockwise arc. FixtureError for n < 3.
MotionPlanner circle_planner(int n);

// --- covers and the pointed upgrades --------------------------------------

// Each entry is an open set together with its compression into the diagonal.
using Cover = std::vector<FibrewiseHomotopy>;

// Sublevel bands of u used by both constructions.
struct CoverBands {
  Rational inner = make_rational(1, 3);
  Rational cut = make_rational(1, 2);
  Rational outer = make_rational(2, 3);
};

/// m+1 unpointed sets -> m+2 pointed sets:
/// V_i = (U_i minus {u <= cut}) union {u < inner}, V_{m+1} = {u < outer}.
Cover cover_plus_one(const Cover& cover, const StromStructure& strom, const CoverBands& bands = {});

enum class UpgradeCase { disjoint_from_diagonal = 1, contains_diagonal_projection = 2 };

/// Same-size pointed cover through the retraction r = h(., 1). The case
/// condition is decided on `probes`: case 1 needs a set containing no
/// diagonal probe, case 2 a set U with (b, b) in U for every probe (a, b) in U.
/// The first qualifying set plays the role of U_0. Inapplicable otherwise.
Cover pointed_upgrade(const Cover& cover, const StromStructure& strom, UpgradeCase which,
                      std::span<const ProductPoint> probes, const CoverBands& bands = {});

/// The set-0 homotopy of the second case, exposed for seam checks.
ProductPoint case_two_homotopy(const StromStructure& strom, const FibrewiseHomotopy& h0, const ProductPoint& p,
                               const Rational& t);

/// Coverage; on each containing set: H(p, 0) = p, pr2 constant, H(p, 1) on the
/// diagonal. With require_pointed also diagonal containment in every set and
/// stationarity on the diagonal.
VerificationReport validate_cover(const SimplicialComplex& complex, const Cover& cover, bool require_pointed,
                                  std::size_t sample_count, std::uint64_t seed,
                                  Execution exec = Execution::parallel);

/// Sampled points on which pointed_upgrade decides its case.
std::vector<ProductPoint> upgrade_probes(const SimplicialComplex& complex, std::size_t count, std::uint64_t seed);

struct CoverFixture {
  ComplexPtr complex;
  Cover cover;
  std::string name;
};

// Compressions of circle_planner(n): unpointed, one set misses the diagonal.
CoverFixture circle_cover(int n);
/// interval(k) with {pos y < 2/3} and {pos y > 1/3}, each compressed along
/// x -> endpoint vertex -> y. Product-shaped sets, so case 2 applies; no set
/// misses the diagonal.
CoverFixture interval_product_cover(int k);
/// interval(k) with {pos x < 1/2} and {pos x > 1/3} and straight-line
/// compressions: neither upgrade case applies.
CoverFixture interval_split_cover(int k);

/// Sections induced by the compressions of a cover; flagged monoidal exactly
/// when every compression is stationary on the diagonal probes.
MotionPlanner planner_from_cover(ComplexPtr complex, const Cover& cover, std::string name,
                                 std::span<const ProductPoint> probes = {});

}  // namespace tcfw
