#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tcfw/errors.hpp"
#include "tcfw/fixtures.hpp"
#include "tcfw/report.hpp"

namespace tcfw {

/// phi : W -> P_B(Z), a family of fibre paths, evaluated pointwise.
template <class W, class Z>
struct PathEvaluator {
  std::function<Z(const W&, const Rational&)> evaluate;

  Z start(const W& w) const { return evaluate(w, Rational(0)); }  // pi_0
  Z end(const W& w) const { return evaluate(w, Rational(1)); }    // pi_1
};

/// H : W x [0, 1] -> Z x_B Z.
template <class W, class Z>
struct PairHomotopy {
  std::function<std::pair<Z, Z>(const W&, const Rational&)> evaluate;
};

/// Lift of H through the endpoint fibration, starting at phi:
///   t = 0            p0 H(w, s)
///   0 < t < s/3      p0 H(w, s - 3t)
///   t = s/3          pi0 phi(w)
///   in between       phi(w)((3t - s)/(3 - 2s))
///   t = (3 - s)/3    pi1 phi(w)
///   (3-s)/3 < t < 1  p1 H(w, 3t - 3 + s)
///   t = 1            p1 H(w, s)
template <class W, class Z>
class LiftedHomotopy {
 public:
  LiftedHomotopy(PathEvaluator<W, Z> phi, PairHomotopy<W, Z> h) : phi_(std::move(phi)), h_(std::move(h)) {}

  // NotALift unless H(w, 0) = (phi(w)(0), phi(w)(1)).
  void check_precondition(const W& w) const {
    const auto [a, b] = h_.evaluate(w, Rational(0));
    if (!(a == phi_.start(w)) || !(b == phi_.end(w)))
      throw NotALift("H(w, 0) does not match the endpoints of phi(w)");
  }

  Z operator()(const W& w, const Rational& s, const Rational& t) const {
    check_precondition(w);
    return evaluate(w, s, t);
  }

  // operator() without the precondition; w must already have passed it.
  Z evaluate(const W& w, const Rational& s, const Rational& t) const {
    check_unit(s);
    check_unit(t);
    if (sgn(t) == 0) return h_.evaluate(w, s).first;
    if (t == 1) return h_.evaluate(w, s).second;
    const Rational lo = s / 3, hi = (3 - s) / 3;
    if (t < lo) return initial_branch(w, s, t);
    if (t == lo) return phi_.start(w);
    if (t < hi) return middle_branch(w, s, t);
    if (t == hi) return phi_.end(w);
    return final_branch(w, s, t);
  }

  // Branch formulas, valid on the closures of their intervals.
  Z initial_branch(const W& w, const Rational& s, const Rational& t) const { return h_.evaluate(w, s - 3 * t).first; }
  Z middle_branch(const W& w, const Rational& s, const Rational& t) const {
    return phi_.evaluate(w, (3 * t - s) / (3 - 2 * s));
  }
  Z final_branch(const W& w, const Rational& s, const Rational& t) const {
    return h_.evaluate(w, 3 * t - 3 + s).second;
  }

  const PathEvaluator<W, Z>& phi() const { return phi_; }
  const PairHomotopy<W, Z>& homotopy() const { return h_; }

 private:
  static void check_unit(const Rational& x) {
    if (sgn(x) < 0 || x > 1) throw DomainError("parameter outside [0, 1]");
  }

  PathEvaluator<W, Z> phi_;
  PairHomotopy<W, Z> h_;
};

template <class W, class Z>
LiftedHomotopy<W, Z> lift_homotopy(PathEvaluator<W, Z> phi, PairHomotopy<W, Z> h) {
  return LiftedHomotopy<W, Z>(std::move(phi), std::move(h));
}

/// Fibrewise pointed data of Z needed for the track: which points lie on the
/// section, and where the section point over the same base goes in W.
template <class Z, class W>
struct PointedPair {
  std::function<bool(const Z&)> on_section;
  std::function<W(const Z&)> section_image;  // s_Z(b) -> s_W(b)
};

// phi(q(z, t)); must be constant in t on section points.
template <class Z, class W>
using TrackMap = std::function<W(const Z&, const Rational&)>;

// H(in_leg(z), s), leg in {0, 1}; pointed on the section.
template <class Z, class W>
using WedgeHomotopy = std::function<W(int, const Z&, const Rational&)>;

/// Extension of H from the two ends of the track, starting at phi:
///   0 <= t < s/3       H(in0 z, s - 3t)
///   t = s/3            phi(q(z, 0))
///   in between         phi(q(z, (3t - s)/(3 - 2s)))
///   t = (3 - s)/3      phi(q(z, 1))
///   (3-s)/3 < t <= 1   H(in1 z, 3t - 3 + s)
/// and s_W(b) on the collapsed section q(s_Z(b), t).
template <class Z, class W>
class ExtendedHomotopy {
 public:
  ExtendedHomotopy(TrackMap<Z, W> phi, WedgeHomotopy<Z, W> h, PointedPair<Z, W> pointed)
      : phi_(std::move(phi)), h_(std::move(h)), pointed_(std::move(pointed)) {}

  // NotAnExtension unless H(in_k z, 0) = phi(q(z, k)) for k = 0, 1.
  void check_precondition(const Z& z) const {
    if (!(h_(0, z, Rational(0)) == phi_(z, Rational(0))) || !(h_(1, z, Rational(0)) == phi_(z, Rational(1))))
      throw NotAnExtension("H on the track ends does not start at phi");
  }

  // Value at (q(z, t), s).
  W operator()(const Z& z, const Rational& t, const Rational& s) const {
    if (!pointed_.on_section(z)) check_precondition(z);
    return evaluate(z, t, s);
  }

  // operator() without the precondition; z must already have passed it.
  W evaluate(const Z& z, const Rational& t, const Rational& s) const {
    check_unit(s);
    check_unit(t);
    if (pointed_.on_section(z)) return pointed_.section_image(z);
    const Rational lo = s / 3, hi = (3 - s) / 3;
    if (t < lo) return initial_branch(z, t, s);
    if (t == lo) return phi_(z, Rational(0));
    if (t < hi) return middle_branch(z, t, s);
    if (t == hi) return phi_(z, Rational(1));
    return final_branch(z, t, s);
  }

  W initial_branch(const Z& z, const Rational& t, const Rational& s) const { return h_(0, z, s - 3 * t); }
  W middle_branch(const Z& z, const Rational& t, const Rational& s) const {
    return phi_(z, (3 * t - s) / (3 - 2 * s));
  }
  W final_branch(const Z& z, const Rational& t, const Rational& s) const { return h_(1, z, 3 * t - 3 + s); }

  const TrackMap<Z, W>& phi() const { return phi_; }
  const WedgeHomotopy<Z, W>& homotopy() const { return h_; }
  const PointedPair<Z, W>& pointed() const { return pointed_; }

 private:
  static void check_unit(const Rational& x) {
    if (sgn(x) < 0 || x > 1) throw DomainError("parameter outside [0, 1]");
  }

  TrackMap<Z, W> phi_;
  WedgeHomotopy<Z, W> h_;
  PointedPair<Z, W> pointed_;
};

template <class Z, class W>
ExtendedHomotopy<Z, W> extend_homotopy(TrackMap<Z, W> phi, WedgeHomotopy<Z, W> h, PointedPair<Z, W> pointed) {
  return ExtendedHomotopy<Z, W>(std::move(phi), std::move(h), std::move(pointed));
}

// --- fixtures over d(B) = (B x B, pr2, diagonal) --------------------------

/// Lift data with W = Z = B x B fibred over the second factor. `parameters`
/// draws points of W on which phi and H are defined.
struct LiftFixture {
  std::string name;
  ComplexPtr complex;
  PathEvaluator<ProductPoint, ProductPoint> phi;
  PairHomotopy<ProductPoint, ProductPoint> h;
  std::function<std::vector<ProductPoint>(std::size_t, std::uint64_t)> parameters;
};

struct ExtendFixture {
  std::string name;
  ComplexPtr complex;
  TrackMap<ProductPoint, ProductPoint> phi;
  WedgeHomotopy<ProductPoint, ProductPoint> h;
  PointedPair<ProductPoint, ProductPoint> pointed;
  std::function<std::vector<ProductPoint>(std::size_t, std::uint64_t)> parameters;
};

/// On U = {u < 1}: phi(w) = h(w, .) from the Strom structure,
/// H(w, s) = (h(w, s/2), (lambda(y, x, s/2), y)).
LiftFixture strom_lift_fixture(ComplexPtr complex);
/// circle(n), x != y: phi(w) is the counterclockwise arc, H advances the
/// start along that arc and rotates the end backwards.
LiftFixture circle_lift_fixture(int n);
// phi(q(z, t)) = h(z, t), H(in0 z, s) = h(z, s/2), H(in1 z, s) = h(z, 1 - s/2).
ExtendFixture strom_extend_fixture(ComplexPtr complex);
/// circle(n): phi(q(z, t)) rotates x by t c(x, y) with c = d(1 - d), d the
/// counterclockwise gap; H rotates further on either end.
ExtendFixture circle_extend_fixture(int n);

// 21 x 21 (s, t) grid on `grid_points` parameters plus `random_samples`
// random (w, s, t); boundary laws, fibre condition and seam agreement.
VerificationReport verify_lift(const LiftFixture& f, std::size_t random_samples, std::uint64_t seed,
                               Execution exec = Execution::parallel, std::size_t grid_points = 8);
VerificationReport verify_extend(const ExtendFixture& f, std::size_t random_samples, std::uint64_t seed,
                                 Execution exec = Execution::parallel, std::size_t grid_points = 8);

}  // namespace tcfw
