#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tcfw/complex.hpp"
#include "tcfw/parallel.hpp"
#include "tcfw/report.hpp"

namespace tcfw {

// Sum over vertices of min(x_beta, y_beta).
Rational overlap(const BaryPoint& x, const BaryPoint& y);

// 3 * (1 - overlap); 3 outside the union of squared open stars, 0 exactly on the diagonal.
Rational v_function(const BaryPoint& x, const BaryPoint& y);

/// Normalised pointwise minimum of the two coordinate systems (Milnor's
/// average). DomainError when the supports do not overlap.
BaryPoint milnor_average(const BaryPoint& x, const BaryPoint& y);

/// Two-leg straight path x -> mu(x, y) -> y, reaching mu at t = 1/2.
BaryPoint milnor_path(const BaryPoint& x, const BaryPoint& y, const Rational& t);

// 1 for v <= 1, 2 - v on [1, 2], 0 for v >= 2.
Rational w_function(const BaryPoint& x, const BaryPoint& y);
Rational w_from_v(const Rational& v);

// min(1, v)
Rational u_function(const BaryPoint& x, const BaryPoint& y);

/// (lambda(x, y, min(t, w)), y) when v < 3, otherwise (x, y).
ProductPoint h_homotopy(const ProductPoint& p, const Rational& t);

// The two defining clauses of h, kept separate so their agreement on
// 2 < v < 3 can be tested.
ProductPoint h_moving_clause(const ProductPoint& p, const Rational& t);
inline ProductPoint h_stationary_clause(const ProductPoint& p, const Rational&) { return p; }

/// Fibrewise strong Strom structure (u, h) on (B x B, diagonal), fibred over
/// the second factor, plus the auxiliary v and w it is built from. Held as
/// callables so verification can be pointed at modified structures.
struct StromStructure {
  std::function<Rational(const ProductPoint&)> v;
  std::function<Rational(const ProductPoint&)> w;
  std::function<Rational(const ProductPoint&)> u;
  std::function<ProductPoint(const ProductPoint&, const Rational&)> h;
  std::string name;

  // r(p) = h(p, 1)
  ProductPoint retract(const ProductPoint& p) const { return h(p, Rational(1)); }
};

StromStructure milnor_strom_structure();

/// Evaluates every Strom-structure identity exactly on `sample_count` seeded
/// product points plus the diagonal vertex points.
VerificationReport verify_strom(const SimplicialComplex& complex, const StromStructure& strom,
                                std::size_t sample_count, std::uint64_t seed,
                                Execution exec = Execution::parallel);

// Time values probed on every sample in addition to one seeded random time.
const std::vector<Rational>& probe_times();

}  // namespace tcfw
