#include "tcfw/fibrewise.hpp"

#include <random>

#include "tcfw/planner.hpp"
#include "tcfw/strom.hpp"

namespace tcfw {

namespace {

BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational wrap(const Rational& r) { return r - Rational(floor_of(r)); }

// Points of {u < 1}, drawn from the shared sampler until `count` are found.
std::vector<ProductPoint> strom_neighbourhood_points(const SimplicialComplex& k, std::size_t count,
                                                     std::uint64_t seed) {
  std::vector<ProductPoint> out;
  for (std::uint64_t round = 0; out.size() < count; ++round) {
    for (auto& p : sample_product_points(k, 4 * count + 8, seed + 0x9e3779b97f4a7c15ull * round)) {
      if (u_function(p.first, p.second) < 1) out.push_back(std::move(p));
      if (out.size() == count) break;
    }
  }
  return out;
}

std::vector<ProductPoint> off_diagonal_points(const SimplicialComplex& k, std::size_t count, std::uint64_t seed) {
  std::vector<ProductPoint> out;
  for (std::uint64_t round = 0; out.size() < count; ++round) {
    for (auto& p : sample_product_points(k, 2 * count + 8, seed + 0x9e3779b97f4a7c15ull * round)) {
      if (!p.is_diagonal()) out.push_back(std::move(p));
      if (out.size() == count) break;
    }
  }
  return out;
}

std::vector<ProductPoint> all_points(const SimplicialComplex& k, std::size_t count, std::uint64_t seed) {
  auto out = sample_product_points(k, count, seed);
  const auto vertices = diagonal_vertex_points(k);
  out.insert(out.end(), vertices.begin(), vertices.end());
  return out;
}

ProductPoint rotate_first(const ProductPoint& p, const Rational& turn) {
  return {circle_point(p.first.complex(), circle_angle(p.first) + turn), p.second};
}

// Counterclockwise gap from y to x, in (0, 1) off the diagonal.
Rational gap(const ProductPoint& p) { return wrap(circle_angle(p.first) - circle_angle(p.second)); }

// Parameters of sample i: grid points first, then seeded random triples.
struct Plan {
  std::vector<ProductPoint> grid_w;
  std::vector<ProductPoint> random_w;
  std::vector<std::pair<Rational, Rational>> random_st;
  static constexpr int kSteps = 20;

  std::size_t grid_size() const { return grid_w.size() * (kSteps + 1) * (kSteps + 1); }
  std::size_t size() const { return grid_size() + random_w.size(); }

  // (w, first parameter, second parameter)
  std::tuple<const ProductPoint&, Rational, Rational> at(std::size_t i) const {
    if (i < grid_size()) {
      const std::size_t per = (kSteps + 1) * (kSteps + 1);
      const std::size_t a = (i % per) / (kSteps + 1), b = i % (kSteps + 1);
      return {grid_w[i / per], make_rational(static_cast<long>(a), kSteps), make_rational(static_cast<long>(b), kSteps)};
    }
    const std::size_t r = i - grid_size();
    return {random_w[r], random_st[r].first, random_st[r].second};
  }
};

Plan make_plan(const std::function<std::vector<ProductPoint>(std::size_t, std::uint64_t)>& parameters,
               std::size_t grid_points, std::size_t random_samples, std::uint64_t seed) {
  Plan plan;
  plan.grid_w = parameters(grid_points, seed);
  plan.random_w = parameters(random_samples, seed + 1);
  if (plan.grid_w.size() > grid_points) plan.grid_w.erase(plan.grid_w.begin() + grid_points, plan.grid_w.end());
  if (plan.random_w.size() > random_samples)
    plan.random_w.erase(plan.random_w.begin() + random_samples, plan.random_w.end());
  std::mt19937_64 rng(seed ^ 0x3c6ef372u);
  for (std::size_t i = 0; i < random_samples; ++i) {
    Rational a = make_rational(static_cast<long>(rng() % 998), 997);
    Rational b = make_rational(static_cast<long>(rng() % 998), 997);
    plan.random_st.emplace_back(std::move(a), std::move(b));
  }
  return plan;
}

std::string triple(const ProductPoint& w, const Rational& a, const Rational& b) {
  return to_string(w) + ", " + to_string(a) + ", " + to_string(b);
}

}  // namespace

// --- fixtures -------------------------------------------------------------

LiftFixture strom_lift_fixture(ComplexPtr complex) {
  LiftFixture f;
  f.name = "strom_lift(" + complex->name() + ")";
  f.complex = complex;
  f.phi.evaluate = [](const ProductPoint& w, const Rational& t) { return h_homotopy(w, t); };
  const Rational half = make_rational(1, 2);
  f.h.evaluate = [half](const ProductPoint& w, const Rational& s) {
    return std::pair{h_homotopy(w, s * half), ProductPoint{milnor_path(w.second, w.first, s * half), w.second}};
  };
  f.parameters = [complex](std::size_t n, std::uint64_t seed) { return strom_neighbourhood_points(*complex, n, seed); };
  return f;
}

LiftFixture circle_lift_fixture(int n) {
  LiftFixture f;
  f.complex = circle(n);
  f.name = "circle_lift(" + std::to_string(n) + ")";
  // point of the counterclockwise arc from x to y at time t
  auto arc = [](const ProductPoint& w, const Rational& t) {
    const Rational a = circle_angle(w.first);
    return ProductPoint{circle_point(w.first.complex(), a + t * wrap(circle_angle(w.second) - a)), w.second};
  };
  f.phi.evaluate = arc;
  const Rational back = make_rational(-1, 4 * n);
  f.h.evaluate = [arc, back](const ProductPoint& w, const Rational& s) {
    const ProductPoint end{w.second, w.second};
    return std::pair{arc(w, s / 2), rotate_first(end, back * s)};
  };
  ComplexPtr c = f.complex;
  f.parameters = [c](std::size_t count, std::uint64_t seed) { return off_diagonal_points(*c, count, seed); };
  return f;
}

ExtendFixture strom_extend_fixture(ComplexPtr complex) {
  ExtendFixture f;
  f.name = "strom_extend(" + complex->name() + ")";
  f.complex = complex;
  f.phi = [](const ProductPoint& z, const Rational& t) { return h_homotopy(z, t); };
  f.h = [](int leg, const ProductPoint& z, const Rational& s) {
    return leg == 0 ? h_homotopy(z, s / 2) : h_homotopy(z, 1 - s / 2);
  };
  f.pointed.on_section = [](const ProductPoint& z) { return z.is_diagonal(); };
  f.pointed.section_image = [](const ProductPoint& z) { return z; };
  f.parameters = [complex](std::size_t n, std::uint64_t seed) { return all_points(*complex, n, seed); };
  return f;
}

ExtendFixture circle_extend_fixture(int n) {
  ExtendFixture f;
  f.complex = circle(n);
  f.name = "circle_extend(" + std::to_string(n) + ")";
  auto c = [](const ProductPoint& z) -> Rational {
    const Rational d = gap(z);
    return d * (1 - d);
  };
  f.phi = [c](const ProductPoint& z, const Rational& t) { return rotate_first(z, t * c(z)); };
  f.h = [c](int leg, const ProductPoint& z, const Rational& s) {
    return leg == 0 ? rotate_first(z, -s * c(z)) : rotate_first(z, (1 + s) * c(z));
  };
  f.pointed.on_section = [](const ProductPoint& z) { return z.is_diagonal(); };
  f.pointed.section_image = [](const ProductPoint& z) { return z; };
  ComplexPtr k = f.complex;
  f.parameters = [k](std::size_t count, std::uint64_t seed) { return all_points(*k, count, seed); };
  return f;
}

// --- verification ---------------------------------------------------------

VerificationReport verify_lift(const LiftFixture& f, std::size_t random_samples, std::uint64_t seed, Execution exec,
                               std::size_t grid_points) {
  enum : std::size_t { kInitial, kCovers, kFibre, kLowerSeam, kUpperSeam, kEndRows };
  static const std::vector<std::string> names = {"starts_at_phi", "covers_H",   "stays_in_fibre",
                                                 "seam_at_s_over_3", "seam_at_3_minus_s_over_3", "end_rows_match_branches"};
  const auto lift = lift_homotopy(f.phi, f.h);
  const Plan plan = make_plan(f.parameters, grid_points, random_samples, seed);
  return run_sampled(f.name, random_samples, names, plan.size(), exec, [&](std::size_t i, SampleLog& log) {
    const auto [w, s, t] = plan.at(i);
    auto at = [&] { return triple(w, s, t); };
    lift.check_precondition(w);
    const ProductPoint value = lift.evaluate(w, s, t);
    const ProductPoint head = lift.evaluate(w, s, Rational(0)), tail = lift.evaluate(w, s, Rational(1));
    log.record(kInitial, lift.evaluate(w, Rational(0), t) == f.phi.evaluate(w, t), at);
    const auto target = f.h.evaluate(w, s);
    log.record(kCovers, head == target.first && tail == target.second, at);
    log.record(kFibre, value.second == w.second, at);
    const Rational lo = s / 3, hi = (3 - s) / 3;
    const ProductPoint start = f.phi.start(w), end = f.phi.end(w);
    log.record(kLowerSeam, lift.initial_branch(w, s, lo) == start && lift.middle_branch(w, s, lo) == start, at);
    log.record(kUpperSeam, lift.middle_branch(w, s, hi) == end && lift.final_branch(w, s, hi) == end, at);
    log.record(kEndRows,
               head == lift.initial_branch(w, s, Rational(0)) && tail == lift.final_branch(w, s, Rational(1)), at);
  });
}

VerificationReport verify_extend(const ExtendFixture& f, std::size_t random_samples, std::uint64_t seed,
                                 Execution exec, std::size_t grid_points) {
  enum : std::size_t { kInitial, kEnds, kSection, kSectionFormula, kFibre, kLowerSeam, kUpperSeam };
  static const std::vector<std::string> names = {"starts_at_phi",      "restricts_to_H_on_ends", "section_stationary",
                                                 "formula_constant_on_section", "stays_in_fibre",
                                                 "seam_at_s_over_3",   "seam_at_3_minus_s_over_3"};
  const auto ext = extend_homotopy(f.phi, f.h, f.pointed);
  const Plan plan = make_plan(f.parameters, grid_points, random_samples, seed);
  return run_sampled(f.name, random_samples, names, plan.size(), exec, [&](std::size_t i, SampleLog& log) {
    // plan parameters are (z, t, s) here
    const auto [z, t, s] = plan.at(i);
    auto at = [&] { return triple(z, t, s); };
    if (!f.pointed.on_section(z)) ext.check_precondition(z);
    log.record(kInitial, ext.evaluate(z, t, Rational(0)) == f.phi(z, t), at);
    log.record(kEnds,
               ext.evaluate(z, Rational(0), s) == f.h(0, z, s) && ext.evaluate(z, Rational(1), s) == f.h(1, z, s), at);
    log.record(kFibre, ext.evaluate(z, t, s).second == z.second, at);

    const ProductPoint sz{z.second, z.second};
    const ProductPoint image = f.pointed.section_image(sz);
    log.record(kSection, ext(sz, t, s) == image, at);
    const Rational lo = s / 3, hi = (3 - s) / 3;
    const ProductPoint formula = t < lo ? ext.initial_branch(sz, t, s)
                                 : t <= hi ? ext.middle_branch(sz, t, s)
                                           : ext.final_branch(sz, t, s);
    log.record(kSectionFormula, formula == image, at);

    if (!f.pointed.on_section(z)) {
      const ProductPoint start = f.phi(z, Rational(0)), end = f.phi(z, Rational(1));
      log.record(kLowerSeam, ext.initial_branch(z, lo, s) == start && ext.middle_branch(z, lo, s) == start, at);
      log.record(kUpperSeam, ext.middle_branch(z, hi, s) == end && ext.final_branch(z, hi, s) == end, at);
    }
  });
}

}  // namespace tcfw
