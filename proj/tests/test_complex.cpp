#include <doctest.h>

#include "tcfw/errors.hpp"
#include "tcfw/fixtures.hpp"

using namespace tcfw;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("closure stores every face once, sorted inside each dimension") {
  const auto k = build_complex({{3, 1, 2}, {2, 5}});
  CHECK(k.vertex_count() == 4);
  CHECK(k.dimension() == 2);
  CHECK(k.count(0) == 4);
  CHECK(k.count(1) == 4);  // 12 13 23 25 in labels
  CHECK(k.count(2) == 1);
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto& s = k.simplices(d);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(k.index_of(s[i]) == static_cast<int>(i));
  }
  // labels are ordered numerically
  CHECK(k.label(0) == "1");
  CHECK(k.label(3) == "5");
  CHECK(k.maximal_simplices().size() == 2);
  CHECK(k.simplices(7).empty());
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(build_complex({}), MalformedSimplex);
  CHECK_THROWS_AS(build_complex({{1, 1, 2}}), MalformedSimplex);
  CHECK_THROWS_AS(build_complex({{}}), MalformedSimplex);
}

TEST_CASE("fixture f-vectors and Euler characteristics") {
  CHECK(torus()->count(0) == 7);
  CHECK(torus()->count(1) == 21);
  CHECK(torus()->count(2) == 14);
  CHECK(torus()->euler_characteristic() == 0);
  CHECK(projective_plane()->count(0) == 6);
  CHECK(projective_plane()->count(1) == 15);
  CHECK(projective_plane()->count(2) == 10);
  CHECK(projective_plane()->euler_characteristic() == 1);
  CHECK(wedge_circle_sphere()->euler_characteristic() == 1);
  CHECK(point_complex()->euler_characteristic() == 1);
  CHECK(interval(5)->euler_characteristic() == 1);
  CHECK(circle(9)->euler_characteristic() == 0);
  for (int n = 1; n <= 5; ++n) {
    const auto s = sphere(n);
    CHECK(s->dimension() == n);
    for (int k = 0; k <= n; ++k) CHECK(static_cast<long>(s->count(k)) == binomial(n + 2, k + 1));
    CHECK(s->euler_characteristic() == (n % 2 == 0 ? 2 : 0));
  }
}

TEST_CASE("resolve_complex names") {
  for (const auto& name : standard_fixture_names()) CHECK(resolve_complex(name)->name() == name);
  CHECK(resolve_complex("s1:7")->count(0) == 7);
  CHECK(resolve_complex("sn:4")->dimension() == 4);
  CHECK(resolve_complex("interval:3")->count(1) == 3);
  CHECK_THROWS_AS(resolve_complex("s1:2"), FixtureError);
  CHECK_THROWS_AS(resolve_complex("s1:x"), FixtureError);
  CHECK_THROWS_AS(resolve_complex("no-such-fixture"), FixtureError);
}

TEST_CASE("JSON fixtures") {
  const auto k = complex_from_json(R"({"name": "triangle", "facets": [[0, 1], [1, 2], [0, 2]]})");
  CHECK(k->name() == "triangle");
  CHECK(k->euler_characteristic() == 0);
  CHECK_THROWS_AS(complex_from_json("not json"), FixtureError);
  CHECK_THROWS_AS(complex_from_json(R"({"facets": 3})"), FixtureError);
  CHECK_THROWS_AS(complex_from_json(R"({"facets": [["a"]]})"), FixtureError);
  CHECK_THROWS_AS(complex_from_json(R"({"facets": [[0, 0]]})"), Error);
}

TEST_CASE("staircase product") {
  const auto e = interval(1);
  const auto sq = product_complex(*e, *e);
  CHECK(sq.vertex_count() == 4);
  CHECK(sq.count(2) == 2);  // C(2, 1) triangles
  CHECK(sq.count(1) == 5);
  const auto t = sphere(1);  // triangle boundary
  const auto tt = product_complex(*t, *t);
  CHECK(tt.count(0) == 9);
  CHECK(tt.count(2) == 18);
  CHECK(tt.euler_characteristic() == 0);
  const auto triangle = build_complex({{0, 1, 2}});
  const auto prism = product_complex(triangle, *e);
  CHECK(prism.count(3) == 3);  // C(3, 1)
  const auto diag = diagonal_map(*t, tt);
  for (int v = 0; v < 3; ++v) CHECK(diag.vertex_map[v] == v * 3 + v);
  for (int d = 0; d <= 1; ++d)
    for (const auto& s : t->simplices(d)) CHECK(tt.contains(diag.apply(s)));
}

TEST_CASE("barycentric points") {
  const auto c = circle(4);
  const BaryPoint a = BaryPoint::vertex(*c, 0), b = BaryPoint::vertex(*c, 1), opposite = BaryPoint::vertex(*c, 2);
  const BaryPoint mid = combine(make_rational(1, 2), a, make_rational(1, 2), b);
  CHECK(mid.weight(0) == make_rational(1, 2));
  CHECK(mid.weight(3) == 0);
  CHECK(mid.support() == Simplex{0, 1});
  CHECK(l1_distance(a, mid) == 1);
  CHECK_THROWS_AS(combine(make_rational(1, 2), a, make_rational(1, 2), opposite), DomainError);
  CHECK_THROWS_AS(combine(make_rational(1, 3), a, make_rational(1, 3), b), DomainError);
  CHECK_THROWS_AS(BaryPoint(*c, {{0, make_rational(1, 2)}, {2, make_rational(1, 2)}}), DomainError);
  CHECK_THROWS_AS(BaryPoint(*c, {{0, make_rational(1, 2)}}), DomainError);
  CHECK_THROWS_AS(BaryPoint(*c, {{9, Rational(1)}}), LookupError);
  CHECK_THROWS_AS(BaryPoint::vertex(*c, -1), LookupError);
  // zero weights are dropped
  CHECK(BaryPoint(*c, {{0, Rational(1)}, {1, Rational(0)}}) == a);
}

TEST_CASE("open stars") {
  const auto c = circle(4);
  const auto star = star_neighborhood(*c, 0);
  CHECK(star(BaryPoint::vertex(*c, 0)));
  CHECK_FALSE(star(BaryPoint::vertex(*c, 1)));
  CHECK(star(combine(make_rational(1, 9), BaryPoint::vertex(*c, 0), make_rational(8, 9), BaryPoint::vertex(*c, 3))));
}

TEST_CASE("seeded sampling is deterministic and lands in the complex") {
  const auto k = torus();
  const auto p = random_point(*k, k->simplices(2)[3], 11);
  CHECK(p.support() == k->simplices(2)[3]);
  CHECK(random_point(*k, k->simplices(2)[3], 11) == p);
  const auto a = sample_product_points(*k, 200, 5);
  const auto b = sample_product_points(*k, 200, 5);
  CHECK(a.size() == 200);
  CHECK(a == b);
  std::size_t diagonal = 0;
  for (const auto& q : a) diagonal += q.is_diagonal();
  CHECK(diagonal > 0);
  CHECK(diagonal < a.size());
  CHECK(diagonal_vertex_points(*k).size() == 7);
}
