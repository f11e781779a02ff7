#include <doctest.h>

#include "oracle.hpp"
#include "tcfw/errors.hpp"
#include "tcfw/fixtures.hpp"
#include "tcfw/ring.hpp"

using namespace tcfw;

namespace {

Coefficients field_of(long p) { return p == 0 ? Coefficients::rationals() : Coefficients::prime_field(p); }

}  // namespace

TEST_CASE("cohomology rings satisfy the graded-ring axioms") {
  for (const auto& name : standard_fixture_names())
    for (long p : {0L, 2L, 3L}) {
      INFO(name << " p=" << p);
      const auto ring = cohomology_ring(*resolve_complex(name), field_of(p));
      CHECK(check_ring_axioms(ring).empty());
      CHECK(ring.dimension() == [&] {
        std::size_t total = 0;
        for (auto b : oracle::betti(*resolve_complex(name), {p})) total += b;
        return total;
      }());
    }
}

TEST_CASE("structure constants match the brute-force ring up to the shared basis size") {
  // Both sides use different representatives, so compare basis-free data:
  // the rank of the multiplication H^i x H^j -> H^{i+j} for every pair of degrees.
  for (const auto& name : {"t2", "rp2", "wedge", "s2"})
    for (long p : {0L, 2L}) {
      const auto k = resolve_complex(name);
      const auto ring = cohomology_ring(*k, field_of(p));
      const oracle::Ring ref(*k, p);
      for (int i = 0; i <= k->dimension(); ++i)
        for (int j = 0; j <= k->dimension() - i; ++j) {
          auto image_rank = [&](auto&& dim, auto&& deg, auto&& prod) {
            oracle::Dense rows;
            for (std::size_t a = 0; a < dim; ++a)
              for (std::size_t b = 0; b < dim; ++b)
                if (deg(a) == i && deg(b) == j) {
                  oracle::Row r;
                  for (const auto& x : prod(a, b)) r.push_back(x);
                  rows.push_back(std::move(r));
                }
            return rows.empty() ? std::size_t{0} : oracle::rank(rows, dim, {p});
          };
          INFO(name << " p=" << p << " degrees " << i << "," << j);
          const auto lib = image_rank(ring.dimension(), [&](std::size_t a) { return ring.degree(a); },
                                      [&](std::size_t a, std::size_t b) { return ring.product(a, b); });
          const auto orc = image_rank(ref.dimension(), [&](std::size_t a) { return ref.degree(a); },
                                      [&](std::size_t a, std::size_t b) { return ref.product(a, b); });
          CHECK(lib == orc);
        }
    }
}

TEST_CASE("cup length agrees with exhaustive products") {
  for (const auto& name : standard_fixture_names())
    for (long p : {0L, 2L, 3L}) {
      INFO(name << " p=" << p);
      const auto k = resolve_complex(name);
      CHECK(cup_length(cohomology_ring(*k, field_of(p))) == oracle::Ring(*k, p).cup_length());
    }
}

TEST_CASE("known cup lengths") {
  const auto q = Coefficients::rationals();
  CHECK(cup_length(cohomology_ring(*torus(), q)) == 2);
  CHECK(cup_length(cohomology_ring(*projective_plane(), Coefficients::prime_field(2))) == 2);
  CHECK(cup_length(cohomology_ring(*projective_plane(), q)) == 0);
  for (int n = 1; n <= 3; ++n) CHECK(cup_length(cohomology_ring(*sphere(n), q)) == 1);
  CHECK(cup_length(cohomology_ring(*wedge_circle_sphere(), q)) == 1);
  CHECK(cup_length(cohomology_ring(*point_complex(), q)) == 0);
}

TEST_CASE("zero-divisor cup length agrees with span expansion in the tensor square") {
  for (const auto& name : standard_fixture_names())
    for (long p : {0L, 2L, 3L}) {
      INFO(name << " p=" << p);
      const auto k = resolve_complex(name);
      CHECK(zero_divisor_cup_length(*k, field_of(p)) == oracle::zcl(oracle::Ring(*k, p)));
    }
}

TEST_CASE("known zero-divisor cup lengths and bounds") {
  const auto q = Coefficients::rationals();
  const auto f2 = Coefficients::prime_field(2);
  CHECK(zero_divisor_cup_length(*resolve_complex("s1"), q) == 1);
  CHECK(zero_divisor_cup_length(*resolve_complex("s2"), q) == 2);
  CHECK(zero_divisor_cup_length(*resolve_complex("t2"), q) == 2);
  CHECK(zero_divisor_cup_length(*resolve_complex("rp2"), f2) == 3);
  CHECK(zero_divisor_cup_length(*resolve_complex("s3"), q) == 1);
  CHECK(zero_divisor_cup_length(*point_complex(), q) == 0);
  const auto report = tc_lower_bound_report(*resolve_complex("rp2"), {f2, q});
  CHECK(report.zcl_max == 3);
  CHECK(report.tcm_lower_bound == 4);
  CHECK(report.tc_lower_bound == 4);
  CHECK(report.per_field[1].zcl_tensor == 0);
}

TEST_CASE("the oracle notices a dropped sign where it matters") {
  // Even classes are unaffected; an odd class a gives (1 x a - a x 1)^2 = -2 a x a
  // without the sign and 0 with it.
  const oracle::Ring s1(*sphere(1), 0), s2(*sphere(2), 0), t2(*torus(), 0);
  CHECK(oracle::zcl(s2, false) == 2);
  CHECK(oracle::zcl(s1, true) == 1);
  CHECK(oracle::zcl(s1, false) == 2);
  CHECK(oracle::zcl(t2, true) == 2);
  CHECK(oracle::zcl(t2, false) != 2);
}

TEST_CASE("tensor square without signs is rejected by the ring axioms") {
  const auto base = cohomology_ring(*torus(), Coefficients::rationals());
  CHECK(check_ring_axioms(tensor_square(base).ring).empty());
  CHECK_FALSE(check_ring_axioms(tensor_square(base, TensorSign::none).ring).empty());
  const auto mutant = verify_kunneth(*torus(), {Coefficients::rationals()}, TensorSign::none);
  CHECK_FALSE(mutant.passed());
}

TEST_CASE("zero-divisor ideal is the kernel of multiplication") {
  const auto base = cohomology_ring(*projective_plane(), Coefficients::prime_field(2));
  const auto t = tensor_square(base);
  const auto ideal = zero_divisor_ideal(t);
  CHECK(ideal.dimension() == t.ring.dimension() - base.dimension());
  for (std::size_t i = 0; i < base.dimension(); ++i) {
    const auto z = zero_divisor(t, base.basis_element(i));
    if (base.degree(i) == 0) CHECK(t.ring.is_zero(z));
  }
}

TEST_CASE("product-complex route equals the algebraic route") {
  for (const auto& name : {"s1", "s2", "rp2"})
    for (long p : {0L, 2L, 3L}) {
      INFO(name << " p=" << p);
      const auto k = resolve_complex(name);
      const auto c = kunneth_check(*k, field_of(p));
      CHECK(c.consistent());
      CHECK(c.zcl_tensor == zero_divisor_cup_length(*k, field_of(p)));
      CHECK(zcl_via_product_complex(*k, field_of(p)) == c.zcl_tensor);
    }
}

TEST_CASE("disconnected complexes have non-nilpotent zero divisors") {
  const auto two_points = build_complex({{0}, {1}});
  CHECK_THROWS_AS(zero_divisor_cup_length(two_points, Coefficients::rationals()), DomainError);
}

TEST_CASE("parallel and serial cup products agree") {
  const auto k = product_complex(*torus(), *circle(3));
  const CohomologyBasis basis(k, Coefficients::rationals());
  const auto serial = cohomology_ring(basis, Execution::serial);
  const auto parallel = cohomology_ring(basis, Execution::parallel);
  REQUIRE(serial.dimension() == parallel.dimension());
  for (std::size_t i = 0; i < serial.dimension(); ++i)
    for (std::size_t j = 0; j < serial.dimension(); ++j) CHECK(serial.product(i, j) == parallel.product(i, j));
}
