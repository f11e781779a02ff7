#pragma once

#include <map>
#include <string>
#include <vector>

#include "tcfw/chain.hpp"
#include "tcfw/report.hpp"

namespace tcfw {

/// Finite-dimensional graded-commutative algebra over a field, given by a
/// homogeneous basis and structure constants. Basis elements are ordered by
/// degree.
class GradedRing {
 public:
  using Element = Vector;

  GradedRing(Coefficients coeffs, std::vector<std::string> labels, std::vector<int> degrees,
             std::vector<std::vector<Element>> table, Element unit);

  const Field& field() const { return field_; }
  std::size_t dimension() const { return degrees_.size(); }
  int degree(std::size_t i) const { return degrees_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  int top_degree() const;
  std::vector<std::size_t> basis_in_degree(int d) const;

  const Element& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  Element multiply(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const Rational& c, const Element& x) const;
  Element basis_element(std::size_t i) const;
  Element zero() const { return Element(dimension(), Rational(0)); }
  const Element& unit() const { return unit_; }
  bool is_zero(const Element& x) const { return tcfw::is_zero(field_, x); }

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<std::vector<Element>> table_;
  Element unit_;
};

/// Grading, unit, associativity and graded commutativity on basis elements.
/// Returns one message per violated identity (empty when the ring is sound).
std::vector<std::string> check_ring_axioms(const GradedRing& ring);

GradedRing cohomology_ring(const CohomologyBasis& basis, Execution exec = Execution::parallel);
GradedRing cohomology_ring(const SimplicialComplex& complex, const Coefficients& coeffs);

/// Largest m with (span of generators)^m != 0. The span must be nilpotent,
/// otherwise DomainError (e.g. degree-0 zero divisors of a disconnected complex).
std::size_t power_length(const GradedRing& ring, const std::vector<GradedRing::Element>& generators);

// Nilpotency length of the positive-degree ideal; 0 for a point.
std::size_t cup_length(const GradedRing& ring);

/// H (x) H with (a(x)b)(c(x)d) = (-1)^{|b||c|} ac (x) bd. The pair basis is
/// sorted by total degree; index(i, j) locates e_i (x) e_j.
struct TensorSquare {
  GradedRing base;
  GradedRing ring;
  std::vector<std::size_t> position;  // i * base.dimension() + j -> ring index

  std::size_t index(std::size_t i, std::size_t j) const { return position[i * base.dimension() + j]; }
  GradedRing::Element tensor(const GradedRing::Element& a, const GradedRing::Element& b) const;
};

// `none` multiplies factorwise without the Koszul sign; it exists only as a
// known-wrong variant that verification must reject.
enum class TensorSign { koszul, none };

TensorSquare tensor_square(const GradedRing& base, TensorSign sign = TensorSign::koszul);

/// Homogeneous ideal stored as a spanning set per total degree.
struct Ideal {
  std::map<int, std::vector<GradedRing::Element>> by_degree;

  std::vector<GradedRing::Element> generators() const;
  std::size_t dimension() const;
};

// 1 (x) u - u (x) 1
GradedRing::Element zero_divisor(const TensorSquare& t, const GradedRing::Element& u);

/// Kernel of the multiplication map a (x) b -> ab, which is the map induced
/// in cohomology by the diagonal.
Ideal zero_divisor_ideal(const TensorSquare& t);

std::size_t zero_divisor_cup_length(const TensorSquare& t);
std::size_t zero_divisor_cup_length(const SimplicialComplex& complex, const Coefficients& coeffs);

/// Both routes to the zero-divisor cup length: the algebraic tensor square,
/// and the cohomology ring of the triangulated product with the kernel of the
/// pullback along the simplicial diagonal.
struct KunnethCheck {
  std::size_t zcl_tensor = 0;
  std::size_t zcl_product = 0;
  std::size_t tensor_dimension = 0;
  std::size_t product_dimension = 0;
  std::size_t ideal_dimension_tensor = 0;
  std::size_t ideal_dimension_product = 0;

  bool consistent() const {
    return zcl_tensor == zcl_product && tensor_dimension == product_dimension &&
           ideal_dimension_tensor == ideal_dimension_product;
  }
};

std::size_t zcl_via_product_complex(const SimplicialComplex& complex, const Coefficients& coeffs);
KunnethCheck kunneth_check(const SimplicialComplex& complex, const Coefficients& coeffs,
                          TensorSign sign = TensorSign::koszul);

/// Per field: both zcl routes agree, ring and ideal dimensions agree, and the
/// tensor square satisfies the graded-ring axioms.
VerificationReport verify_kunneth(const SimplicialComplex& complex, const std::vector<Coefficients>& fields,
                                  TensorSign sign = TensorSign::koszul,
                                  std::vector<KunnethCheck>* details = nullptr);

struct FieldInvariants {
  Coefficients field = Coefficients::rationals();
  std::vector<std::size_t> betti;
  std::size_t cup_length = 0;
  std::size_t zcl_tensor = 0;
  std::size_t zcl_product = 0;

  std::size_t tcm_lower_bound() const { return zcl_tensor + 1; }
};

struct LowerBoundReport {
  std::string complex;
  std::vector<FieldInvariants> per_field;
  std::size_t zcl_max = 0;
  // TCM >= zcl + 1, and TC >= zcl + 1 by the classical zero-divisor bound.
  std::size_t tcm_lower_bound = 1;
  std::size_t tc_lower_bound = 1;
};

FieldInvariants field_invariants(const SimplicialComplex& complex, const Coefficients& coeffs);
LowerBoundReport tc_lower_bound_report(const SimplicialComplex& complex, const std::vector<Coefficients>& fields);

}  // namespace tcfw
