#include <doctest.h>

#include "mutants.hpp"
#include "roundtrip.hpp"
#include "tcfw/errors.hpp"
#include "tcfw/planner.hpp"

using namespace tcfw;

namespace {

bool all_pass(const VerificationReport& r) {
  for (const auto& c : r.checks) {
    INFO(r.subject << " " << c.name << " " << c.witness.value_or(""));
    CHECK(c.pass);
  }
  return r.passed();
}

bool same(const VerificationReport& a, const VerificationReport& b) {
  if (a.checks.size() != b.checks.size() || a.warnings != b.warnings) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i)
    if (a.checks[i].name != b.checks[i].name || a.checks[i].pass != b.checks[i].pass ||
        a.checks[i].evaluated != b.checks[i].evaluated || a.checks[i].witness != b.checks[i].witness)
      return false;
  return true;
}

}  // namespace

TEST_CASE("PL paths") {
  const auto c = circle(4);
  const BaryPoint a = BaryPoint::vertex(*c, 0), b = BaryPoint::vertex(*c, 1), d = BaryPoint::vertex(*c, 2);
  const PLPath p({{Rational(0), a}, {make_rational(1, 2), b}, {Rational(1), d}});
  CHECK(p(Rational(0)) == a);
  CHECK(p(make_rational(1, 4)) == combine(make_rational(1, 2), a, make_rational(1, 2), b));
  CHECK(p(make_rational(1, 2)) == b);
  CHECK(p(Rational(1)) == d);
  CHECK(p.start() == a);
  CHECK(p.end() == d);
  CHECK_THROWS_AS(p(Rational(2)), DomainError);
  CHECK(PLPath::constant(a)(make_rational(1, 3)) == a);
  CHECK_THROWS_AS(PLPath({{Rational(0), a}, {Rational(1), d}}), DomainError);  // 0 and 2 share no simplex
  CHECK_THROWS_AS(PLPath({{Rational(0), a}}), DomainError);
  CHECK_THROWS_AS(PLPath({{Rational(0), a}, {Rational(0), b}, {Rational(1), b}}), DomainError);
  CHECK_THROWS_AS(PLPath({{Rational(0), a}, {make_rational(1, 2), b}}), DomainError);
}

TEST_CASE("circle and interval coordinates") {
  const auto c = circle(6);
  for (long i = 0; i < 12; ++i) {
    const Rational angle = make_rational(i, 12);
    CHECK(circle_angle(circle_point(*c, angle)) == angle);
  }
  CHECK(circle_point(*c, make_rational(7, 6)) == BaryPoint::vertex(*c, 1));
  const PLPath arc = circle_arc(BaryPoint::vertex(*c, 5), make_rational(1, 3));
  CHECK(arc.end() == BaryPoint::vertex(*c, 1));
  CHECK(arc(make_rational(1, 2)) == BaryPoint::vertex(*c, 0));
  CHECK_THROWS_AS(circle_arc(BaryPoint::vertex(*c, 0), Rational(-1)), DomainError);

  const auto iv = interval(4);
  CHECK(interval_position(interval_point(*iv, make_rational(3, 8))) == make_rational(3, 8));
  const PLPath seg = interval_segment(interval_point(*iv, Rational(0)), interval_point(*iv, Rational(1)));
  CHECK(seg(make_rational(5, 8)) == interval_point(*iv, make_rational(5, 8)));
  CHECK_THROWS_AS(interval_point(*iv, Rational(2)), DomainError);
  const auto t = torus();
  CHECK_THROWS_AS(circle_angle(BaryPoint::vertex(*t, 0)), DomainError);
  CHECK_THROWS_AS(interval_position(BaryPoint::vertex(*t, 0)), DomainError);
}

TEST_CASE("circle planner validates and meets the zcl bound") {
  const auto planner = circle_planner(12);
  CHECK(planner_size(planner) == 2);
  CHECK(planner.demo_fixture);
  CHECK_FALSE(planner.monoidal);
  const auto r = validate_planner(planner, 800, 4);
  CHECK(all_pass(r.report));
  CHECK(r.zcl == 1);
  CHECK(r.meets_zcl_bound());
  CHECK(r.report.find("monoidal_constant_paths") == nullptr);
  CHECK_THROWS_AS(circle_planner(2), FixtureError);
}

TEST_CASE("a section with a wrong endpoint is rejected") {
  auto planner = circle_planner(8);
  planner.sections[0].path = [](const ProductPoint& p) -> Path { return PLPath::constant(p.first); };
  const auto r = validate_planner(planner, 300, 2);
  CHECK_FALSE(r.report.passed());
  CHECK_FALSE(r.report.find("endpoint_contract")->pass);

  const auto k = planner.complex;
  const auto probes = sample_product_points(*k, 50, 1);
  CHECK_THROWS_AS(section_to_compression(planner.sections[0], probes), SectionInvalid);
}

TEST_CASE("a homotopy that does not end on the diagonal is not a compression") {
  FibrewiseHomotopy id;
  id.domain = OpenSet{[](const ProductPoint&) { return true; }, "everything"};
  id.evaluate = [](const ProductPoint& p, const Rational&) { return p; };
  id.name = "identity";
  const auto c = circle(5);  // points refer to the complex, keep it alive
  const auto probes = sample_product_points(*c, 40, 3);
  CHECK_THROWS_AS(compression_to_section(id, probes), CompressionInvalid);
  const Section lazy = compression_to_section(id);
  ProductPoint off = probes.front();
  for (const auto& p : probes)
    if (!p.is_diagonal()) off = p;
  CHECK_THROWS_AS(lazy.path(off), CompressionInvalid);
}

TEST_CASE("section and compression translations are mutually inverse") {
  const auto planner = circle_planner(12);
  for (const auto& s : planner.sections) {
    const auto samples = roundtrip::triples(*planner.complex, s.domain, 1000, 21);
    CHECK(samples.size() == 1000);
    std::string witness;
    CHECK_MESSAGE(roundtrip::section_round_trip(s, samples, &witness) == 0, witness);
  }
  const auto strom = milnor_strom_structure();
  for (const auto& name : {"s2", "t2"}) {
    const auto k = resolve_complex(name);
    const FibrewiseHomotopy h = strom_compression(strom);
    const auto samples = roundtrip::triples(*k, h.domain, 1000, 5);
    std::string witness;
    CHECK_MESSAGE(roundtrip::compression_round_trip(h, samples, &witness) == 0, witness);
    CHECK_MESSAGE(roundtrip::section_round_trip(compression_to_section(h), samples, &witness) == 0, witness);
  }
}

TEST_CASE("Strom-derived sections are monoidal") {
  const auto k = torus();
  const auto probes = upgrade_probes(*k, 500, 2);
  const FibrewiseHomotopy h = strom_compression(milnor_strom_structure());
  CHECK(stationary_on_diagonal(h, probes));
  CHECK(constant_on_diagonal(compression_to_section(h), probes));
  const auto planner = planner_from_cover(k, {h}, "strom", probes);
  CHECK(planner.monoidal);
}

TEST_CASE("monoidal flag matches stationary compressions") {
  const auto strom = milnor_strom_structure();
  for (const auto& f : {circle_cover(10), interval_product_cover(4), interval_split_cover(4)}) {
    const auto probes = upgrade_probes(*f.complex, 800, 6);
    std::vector<Cover> covers = {f.cover, cover_plus_one(f.cover, strom)};
    for (auto which : {UpgradeCase::disjoint_from_diagonal, UpgradeCase::contains_diagonal_projection}) {
      try {
        covers.push_back(pointed_upgrade(f.cover, strom, which, probes));
      } catch (const Inapplicable&) {
      }
    }
    for (std::size_t i = 0; i < covers.size(); ++i) {
      INFO(f.name << " cover " << i);
      const auto planner = planner_from_cover(f.complex, covers[i], f.name, probes);
      bool stationary = true, constant = true;
      for (std::size_t j = 0; j < covers[i].size(); ++j) {
        stationary = stationary && stationary_on_diagonal(covers[i][j], probes);
        constant = constant && constant_on_diagonal(planner.sections[j], probes);
      }
      CHECK(planner.monoidal == stationary);
      CHECK(stationary == constant);
      // pointed constructions are monoidal, the raw inputs are not
      CHECK(planner.monoidal == (i > 0));
      if (planner.monoidal) CHECK(all_pass(validate_planner(planner, 300, 8).report));
    }
  }
}

TEST_CASE("input covers validate unpointed and fail the pointed checks") {
  for (const auto& f : {circle_cover(10), interval_product_cover(4), interval_split_cover(4)}) {
    CHECK(all_pass(validate_cover(*f.complex, f.cover, false, 500, 1)));
    CHECK_FALSE(validate_cover(*f.complex, f.cover, true, 500, 1).passed());
  }
}

TEST_CASE("cover plus one adds one pointed set") {
  const auto strom = milnor_strom_structure();
  for (const auto& f : {circle_cover(10), interval_product_cover(4), interval_split_cover(4)}) {
    const Cover plus = cover_plus_one(f.cover, strom);
    CHECK(plus.size() == f.cover.size() + 1);
    CHECK(all_pass(validate_cover(*f.complex, plus, true, 700, 2)));
  }
}

TEST_CASE("pointed upgrades keep the size where their case applies") {
  const auto strom = milnor_strom_structure();
  struct Expect {
    CoverFixture f;
    bool case1, case2;
  };
  for (const auto& [f, case1, case2] : {Expect{circle_cover(10), true, true}, Expect{interval_product_cover(4), false, true},
                                        Expect{interval_split_cover(4), false, false}}) {
    const auto probes = upgrade_probes(*f.complex, 1000, 3);
    for (auto [which, applies] : {std::pair{UpgradeCase::disjoint_from_diagonal, case1},
                                  std::pair{UpgradeCase::contains_diagonal_projection, case2}}) {
      INFO(f.name << " case " << static_cast<int>(which));
      if (!applies) {
        CHECK_THROWS_AS(pointed_upgrade(f.cover, strom, which, probes), Inapplicable);
        continue;
      }
      const Cover up = pointed_upgrade(f.cover, strom, which, probes);
      CHECK(up.size() == f.cover.size());
      CHECK(all_pass(validate_cover(*f.complex, up, true, 700, 4)));
    }
  }
}

TEST_CASE("case two homotopy starts at the identity and ends on the diagonal") {
  const auto f = interval_product_cover(4);
  const auto strom = milnor_strom_structure();
  const auto& h0 = f.cover[0];
  for (const auto& p : sample_product_points(*f.complex, 300, 12)) {
    if (!h0.domain(p)) continue;
    CHECK(case_two_homotopy(strom, h0, p, Rational(0)) == p);
    const ProductPoint end = case_two_homotopy(strom, h0, p, Rational(1));
    CHECK(end.first == p.second);
    CHECK(end.second == p.second);
  }
}

TEST_CASE("an off-by-one band leaves part of the square uncovered") {
  const auto strom = milnor_strom_structure();
  const auto f = circle_cover(10);
  const auto r = validate_cover(*f.complex, cover_plus_one(f.cover, strom, mutants::off_by_one_bands()), true, 1000, 3);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("coverage")->pass);
  CHECK(r.find("coverage")->witness.has_value());
}

TEST_CASE("serial and parallel cover validation agree") {
  const auto strom = milnor_strom_structure();
  const auto f = circle_cover(10);
  for (const auto& cover : {cover_plus_one(f.cover, strom), cover_plus_one(f.cover, strom, mutants::off_by_one_bands())}) {
    CHECK(same(validate_cover(*f.complex, cover, true, 600, 5, Execution::serial),
               validate_cover(*f.complex, cover, true, 600, 5, Execution::parallel)));
  }
}
