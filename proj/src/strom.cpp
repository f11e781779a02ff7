#include "tcfw/strom.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "tcfw/errors.hpp"

namespace tcfw {

namespace {

void same_complex(const BaryPoint& x, const BaryPoint& y) {
  if (&x.complex() != &y.complex()) throw DomainError("points from different complexes");
}

// Pointwise minimum of the coordinates, positive entries only.
BaryPoint::Weights min_weights(const BaryPoint& x, const BaryPoint& y) {
  BaryPoint::Weights out;
  out.reserve(std::min(x.weights().size(), y.weights().size()));
  const auto& xw = x.weights();
  const auto& yw = y.weights();
  std::size_t i = 0, j = 0;
  while (i < xw.size() && j < yw.size()) {
    if (xw[i].first < yw[j].first) {
      ++i;
    } else if (yw[j].first < xw[i].first) {
      ++j;
    } else {
      out.emplace_back(xw[i].first, rmin(xw[i].second, yw[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Rational overlap(const BaryPoint& x, const BaryPoint& y) {
  same_complex(x, y);
  const auto& xw = x.weights();
  const auto& yw = y.weights();
  Rational s = 0;
  for (std::size_t i = 0, j = 0; i < xw.size() && j < yw.size();) {
    if (xw[i].first < yw[j].first) {
      ++i;
    } else if (yw[j].first < xw[i].first) {
      ++j;
    } else {
      s += rmin(xw[i++].second, yw[j++].second);
    }
  }
  return s;
}

Rational v_function(const BaryPoint& x, const BaryPoint& y) { return 3 - 3 * overlap(x, y); }

BaryPoint milnor_average(const BaryPoint& x, const BaryPoint& y) {
  same_complex(x, y);
  auto w = min_weights(x, y);
  Rational total = 0;
  for (const auto& [v, m] : w) total += m;
  if (sgn(total) == 0) throw DomainError("milnor average undefined: supports do not overlap");
  for (auto& [v, m] : w) m /= total;
  return BaryPoint(x.complex(), std::move(w));
}

BaryPoint milnor_path(const BaryPoint& x, const BaryPoint& y, const Rational& t) {
  if (sgn(t) < 0 || t > 1) throw DomainError("path parameter outside [0, 1]");
  if (sgn(t) == 0) {
    if (sgn(overlap(x, y)) == 0) throw DomainError("milnor average undefined: supports do not overlap");
    return x;
  }
  const BaryPoint mu = milnor_average(x, y);
  static const Rational half = make_rational(1, 2);
  if (t <= half) return combine(1 - 2 * t, x, 2 * t, mu);
  return combine(2 - 2 * t, mu, 2 * t - 1, y);
}

Rational w_from_v(const Rational& v) {
  if (v <= 1) return 1;
  if (v >= 2) return 0;
  return 2 - v;
}

Rational w_function(const BaryPoint& x, const BaryPoint& y) { return w_from_v(v_function(x, y)); }

Rational u_function(const BaryPoint& x, const BaryPoint& y) { return rmin(Rational(1), v_function(x, y)); }

namespace {

ProductPoint moving_clause(const ProductPoint& p, const Rational& t, const Rational& v) {
  return {milnor_path(p.first, p.second, rmin(t, w_from_v(v))), p.second};
}

}  // namespace

ProductPoint h_moving_clause(const ProductPoint& p, const Rational& t) {
  return moving_clause(p, t, v_function(p.first, p.second));
}

ProductPoint h_homotopy(const ProductPoint& p, const Rational& t) {
  if (sgn(t) < 0 || t > 1) throw DomainError("homotopy time outside [0, 1]");
  const Rational v = v_function(p.first, p.second);
  if (v < 3) return moving_clause(p, t, v);
  return h_stationary_clause(p, t);
}

StromStructure milnor_strom_structure() {
  StromStructure s;
  s.v = [](const ProductPoint& p) { return v_function(p.first, p.second); };
  s.w = [](const ProductPoint& p) { return w_function(p.first, p.second); };
  s.u = [](const ProductPoint& p) { return u_function(p.first, p.second); };
  s.h = [](const ProductPoint& p, const Rational& t) { return h_homotopy(p, t); };
  s.name = "milnor";
  return s;
}

// ---------------------------------------------------------------------------

const std::vector<Rational>& probe_times() {
  static const std::vector<Rational> times = {
      Rational(0),          make_rational(1, 6), make_rational(1, 4), make_rational(1, 3), make_rational(1, 2),
      make_rational(2, 3), make_rational(3, 4), make_rational(5, 6), Rational(1)};
  return times;
}

namespace {

enum StromCheck : std::size_t {
  kUZeroIffDiagonal,
  kRanges,
  kWClamp,
  kInitialIdentity,
  kFibrewise,
  kPointed,
  kTerminalOnU,
  kBranchAgreement,
  kLipschitz,
  kConvexity,
};

const std::vector<std::string>& strom_check_names() {
  static const std::vector<std::string> names = {
      "u_zero_iff_diagonal", "value_ranges",      "w_clamp_of_v",       "h_initial_identity",
      "h_fibrewise",         "h_pointed",         "h_terminal_on_U",    "h_branch_agreement",
      "lipschitz_u_v_w",     "v_midpoint_convexity",
  };
  return names;
}

struct StromSample {
  ProductPoint point;
  ProductPoint partner;  // same product simplex as point, for continuity checks
  Rational time;
};

void check_sample(const StromStructure& s, const StromSample& sample, SampleLog& log) {
  const ProductPoint& p = sample.point;
  auto at = [&](const std::string& what) { return [&p, what] { return to_string(p) + ": " + what; }; };

  const Rational v = s.v(p), u = s.u(p), w = s.w(p);
  const bool diagonal = p.is_diagonal();

  log.record(kUZeroIffDiagonal, (sgn(u) == 0) == diagonal, at("u = " + to_string(u)));
  log.record(kRanges, sgn(v) >= 0 && v <= 3 && sgn(u) >= 0 && u <= 1 && sgn(w) >= 0 && w <= 1,
             at("v = " + to_string(v) + ", u = " + to_string(u) + ", w = " + to_string(w)));
  log.record(kWClamp, w == w_from_v(v) && u == rmin(Rational(1), v), at("u/w inconsistent with v = " + to_string(v)));
  log.record(kInitialIdentity, s.h(p, Rational(0)) == p, at("h(p, 0) != p"));

  std::vector<Rational> times = probe_times();
  times.push_back(sample.time);
  for (const Rational& t : times) {
    const ProductPoint moved = s.h(p, t);
    const std::string when = "t = " + to_string(t);
    log.record(kFibrewise, moved.second == p.second, at("second coordinate moved at " + when));
    if (diagonal) log.record(kPointed, moved == p, at("diagonal point moved at " + when));
    if (v > 2 && v < 3)
      log.record(kBranchAgreement, moved == h_stationary_clause(p, t),
                 at("clauses disagree at v = " + to_string(v) + ", " + when));
  }
  if (u < 1) {
    const ProductPoint end = s.h(p, Rational(1));
    log.record(kTerminalOnU, end.first == p.second && end.second == p.second, at("h(p, 1) != (y, y)"));
  }

  // continuity witnesses along the segment p -> partner inside one product simplex
  const ProductPoint& q = sample.partner;
  const Rational dist = l1_distance(p.first, q.first) + l1_distance(p.second, q.second);
  const Rational vq = s.v(q), uq = s.u(q), wq = s.w(q);
  log.record(kLipschitz, abs(v - vq) <= 3 * dist && abs(u - uq) <= 3 * dist && abs(w - wq) <= 3 * dist,
             [&] { return to_string(p) + ": jump larger than 3 * l1 distance towards " + to_string(q); });
  const Rational half = make_rational(1, 2);
  const ProductPoint mid{combine(half, p.first, half, q.first), combine(half, p.second, half, q.second)};
  log.record(kConvexity, s.v(mid) <= (v + vq) / 2,
             [&] { return to_string(p) + ": v above its chord towards " + to_string(q); });
}

}  // namespace

VerificationReport verify_strom(const SimplicialComplex& complex, const StromStructure& strom,
                                std::size_t sample_count, std::uint64_t seed, Execution exec) {
  if (sample_count == 0) {
    VerificationReport report;
    report.subject = complex.name();
    report.warnings.push_back("no samples requested; every check holds vacuously");
    for (const auto& name : strom_check_names()) report.add(name);
    return report;
  }

  std::vector<ProductPoint> points = sample_product_points(complex, sample_count, seed);
  const auto vertices = diagonal_vertex_points(complex);
  points.insert(points.end(), vertices.begin(), vertices.end());

  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  std::vector<StromSample> samples;
  samples.reserve(points.size());
  for (auto& p : points) {
    ProductPoint partner{random_point(complex, p.first.support(), rng()),
                         random_point(complex, p.second.support(), rng())};
    samples.push_back({std::move(p), std::move(partner), make_rational(static_cast<long>(rng() % 97), 96)});
  }

  return run_sampled(complex.name(), sample_count, strom_check_names(), samples.size(), exec,
                     [&](std::size_t i, SampleLog& log) { check_sample(strom, samples[i], log); });
}

}  // namespace tcfw
