#include "tcfw/field.hpp"

#include <algorithm>

#include "tcfw/errors.hpp"

namespace tcfw {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

Coefficients Coefficients::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  return Coefficients(Kind::prime_field, p);
}

Coefficients Coefficients::parse(const std::string& text) {
  const std::string t = lower(text);
  if (t == "q") return rationals();
  if (t == "z") return integers();
  std::string digits;
  if (t.rfind("fp:", 0) == 0)
    digits = t.substr(3);
  else if (t.size() > 1 && t[0] == 'f')
    digits = t.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }) ||
      digits.size() > 9)
    throw DomainError("unknown coefficient field '" + text + "'");
  return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string Coefficients::name() const {
  switch (kind_) {
    case Kind::rationals: return "Q";
    case Kind::integers: return "Z";
    case Kind::prime_field: return "F" + std::to_string(modulus_);
  }
  return "?";
}

Field::Field(Coefficients c) : coeffs_(c) {
  if (!c.is_field()) throw Unsupported("integer coefficients are not a field");
  if (c.kind() == Coefficients::Kind::prime_field) {
    p_ = c.modulus();
    big_p_ = p_;
  }
}

Rational Field::normalize(const Rational& x) const {
  if (!p_) return x;
  BigInt num = x.get_num() % big_p_;
  if (sgn(num) < 0) num += big_p_;
  const BigInt& den = x.get_den();
  if (den == 1) return Rational(num);
  BigInt den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), big_p_.get_mpz_t()) == 0)
    throw DomainError("denominator divisible by the characteristic");
  BigInt r = (num * den_inv) % big_p_;
  return Rational(r);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (!p_) return a + b;
  BigInt r = a.get_num() + b.get_num();
  if (r >= big_p_) r -= big_p_;
  return Rational(r);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (!p_) return a - b;
  BigInt r = a.get_num() - b.get_num();
  if (sgn(r) < 0) r += big_p_;
  return Rational(r);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (!p_) return a * b;
  BigInt r = (a.get_num() * b.get_num()) % big_p_;
  return Rational(r);
}

Rational Field::neg(const Rational& a) const {
  if (!p_) return -a;
  if (sgn(a) == 0) return a;
  return Rational(big_p_ - a.get_num());
}

Rational Field::inv(const Rational& a) const {
  if (sgn(a) == 0) throw DomainError("division by zero");
  if (!p_) return 1 / a;
  BigInt r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), big_p_.get_mpz_t());
  return Rational(r);
}

// ---------------------------------------------------------------------------

Vector Subspace::reduce(Vector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (field_->is_zero(v[p])) continue;
    const Rational c = v[p];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!field_->is_zero(rows_[r][j])) v[j] = field_->sub(v[j], field_->mul(c, rows_[r][j]));
  }
  return v;
}

bool Subspace::insert(const Vector& v) {
  Vector w = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && field_->is_zero(w[p])) ++p;
  if (p == ambient_) return false;
  const Rational scale = field_->inv(w[p]);
  for (auto& x : w) x = field_->mul(x, scale);
  // keep the basis fully reduced
  for (auto& row : rows_) {
    if (field_->is_zero(row[p])) continue;
    const Rational c = row[p];
    for (std::size_t j = 0; j < ambient_; ++j) row[j] = field_->sub(row[j], field_->mul(c, w[j]));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool Subspace::contains(const Vector& v) const { return is_zero(*field_, reduce(v)); }

bool is_zero(const Field& field, const Vector& v) {
  return std::all_of(v.begin(), v.end(), [&](const Rational& x) { return field.is_zero(x); });
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t r = row;
    while (r < a.size() && f.is_zero(a[r][c])) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[row]);
    const Rational s = f.inv(a[row][c]);
    for (auto& x : a[row]) x = f.mul(x, s);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || f.is_zero(a[i][c])) continue;
      const Rational m = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vector> nullspace(const Field& field, Matrix a, std::size_t cols) {
  const auto pivots = rref(field, a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = field.neg(a[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t dense_rank(const Field& field, Matrix a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  return rref(field, a, cols).size();
}

}  // namespace tcfw
