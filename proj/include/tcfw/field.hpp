#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcfw/rational.hpp"

namespace tcfw {

/// Coefficient ring for (co)homology: Q, F_p, or Z.
class Coefficients {
 public:
  enum class Kind { rationals, prime_field, integers };

  static Coefficients rationals() { return Coefficients(Kind::rationals, 0); }
  static Coefficients integers() { return Coefficients(Kind::integers, 0); }
  // Throws DomainError unless p is prime.
  static Coefficients prime_field(std::uint32_t p);
  // "q", "z", "f2", "f3", "fp:7"
  static Coefficients parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_field() const { return kind_ != Kind::integers; }
  // "Q", "Z", "F2", ...
  std::string name() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  Coefficients(Kind k, std::uint32_t p) : kind_(k), modulus_(p) {}
  Kind kind_;
  std::uint32_t modulus_;
};

/// Arithmetic in Q or F_p on top of Rational. F_p elements are kept as
/// canonical residues in [0, p).
class Field {
 public:
  explicit Field(Coefficients c);

  const Coefficients& coefficients() const { return coeffs_; }
  bool is_prime() const { return p_ != 0; }

  Rational normalize(const Rational& x) const;
  Rational from_int(long n) const { return normalize(Rational(n)); }
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }
  bool is_zero(const Rational& a) const { return sgn(a) == 0; }

 private:
  Coefficients coeffs_;
  std::uint32_t p_ = 0;
  BigInt big_p_;
};

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

/// Subspace of F^n kept in reduced echelon form.
class Subspace {
 public:
  Subspace(const Field& field, std::size_t ambient) : field_(&field), ambient_(ambient) {}

  // Adds v to the span; returns true if the dimension grew.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  // Echelon basis rows.
  const std::vector<Vector>& basis() const { return rows_; }

 private:
  Vector reduce(Vector v) const;

  const Field* field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// Basis of { x : A x = 0 } for A given as rows (cols = number of unknowns).
std::vector<Vector> nullspace(const Field& field, Matrix a, std::size_t cols);
std::size_t dense_rank(const Field& field, Matrix a);

bool is_zero(const Field& field, const Vector& v);

}  // namespace tcfw
