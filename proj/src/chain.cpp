#include "tcfw/chain.hpp"

#include <algorithm>

#include "tcfw/errors.hpp"

namespace tcfw {

namespace {

using SparseVec = std::vector<std::pair<int, Rational>>;

// y <- y - f * x
void subtract_scaled(const Field& field, SparseVec& y, const Rational& f, const SparseVec& x) {
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, field.neg(field.mul(f, x[j].second)));
      ++j;
    } else {
      Rational v = field.sub(y[i].second, field.mul(f, x[j].second));
      if (!field.is_zero(v)) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

Simplex drop(const Simplex& s, std::size_t i) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) f.push_back(s[j]);
  return f;
}

}  // namespace

std::vector<std::vector<int>> BoundaryMatrix::dense() const {
  std::vector<std::vector<int>> d(rows, std::vector<int>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [r, v] : columns[j]) d[r][j] = v;
  return d;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
  if (k < 1 || k > complex.dimension())
    throw DegreeError("boundary degree " + std::to_string(k) + " outside [1, " +
                      std::to_string(complex.dimension()) + "]");
  BoundaryMatrix m;
  m.degree = k;
  m.rows = complex.count(k - 1);
  m.cols = complex.count(k);
  m.columns.reserve(m.cols);
  for (const Simplex& s : complex.simplices(k)) {
    std::vector<std::pair<int, int>> col;
    for (std::size_t i = 0; i < s.size(); ++i) col.emplace_back(*complex.index_of(drop(s, i)), i % 2 == 0 ? 1 : -1);
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

ChainComplex chain_complex(const SimplicialComplex& complex) {
  ChainComplex cc;
  for (int k = 0; k <= complex.dimension(); ++k) cc.ranks.push_back(complex.count(k));
  for (int k = 1; k <= complex.dimension(); ++k) cc.boundaries.push_back(boundary_matrix(complex, k));
  return cc;
}

std::size_t rank(const BoundaryMatrix& m, const Field& field) {
  std::unordered_map<int, SparseVec> by_low;
  std::size_t r = 0;
  for (const auto& col : m.columns) {
    SparseVec v;
    for (const auto& [row, val] : col) v.emplace_back(row, field.from_int(val));
    while (!v.empty()) {
      auto it = by_low.find(v.back().first);
      if (it == by_low.end()) break;
      const Rational f = field.div(v.back().second, it->second.back().second);
      subtract_scaled(field, v, f, it->second);
    }
    if (!v.empty()) {
      const int low = v.back().first;
      by_low.emplace(low, std::move(v));
      ++r;
    }
  }
  return r;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, const Coefficients& coeffs) {
  if (!coeffs.is_field()) throw Unsupported("betti_numbers needs field coefficients; use integer_homology");
  const Field field(coeffs);
  const int d = complex.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(d) + 2, 0);
  for (int k = 1; k <= d; ++k) ranks[k] = rank(boundary_matrix(complex, k), field);
  std::vector<std::size_t> betti;
  for (int k = 0; k <= d; ++k) betti.push_back(complex.count(k) - ranks[k] - ranks[k + 1]);
  return betti;
}

// ---------------------------------------------------------------------------

std::vector<BigInt> smith_diagonal(const BoundaryMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols, 0));
  for (std::size_t j = 0; j < m.cols; ++j)
    for (const auto& [r, v] : m.columns[j]) a[r][j] = v;
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<BigInt> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block goes to (t, t)
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a[i][j]) != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::vector<HomologyGroup> integer_homology(const SimplicialComplex& complex) {
  const int d = complex.dimension();
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(d) + 2);
  for (int k = 1; k <= d; ++k) factors[k] = smith_diagonal(boundary_matrix(complex, k));
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= d; ++k) {
    HomologyGroup h;
    h.rank = complex.count(k) - factors[k].size() - factors[k + 1].size();
    for (const BigInt& f : factors[k + 1])
      if (f > 1) h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------

Cochain zero_cochain(const SimplicialComplex& complex, int degree) {
  return Cochain{degree, Vector(complex.count(degree), Rational(0))};
}

Cochain coboundary(const SimplicialComplex& complex, const Field& field, const Cochain& c) {
  if (c.values.size() != complex.count(c.degree)) throw DegreeError("cochain size does not match its degree");
  Cochain out = zero_cochain(complex, c.degree + 1);
  const auto& top = complex.simplices(c.degree + 1);
  for (std::size_t j = 0; j < top.size(); ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < top[j].size(); ++i) {
      const Rational& v = c.values[*complex.index_of(drop(top[j], i))];
      if (field.is_zero(v)) continue;
      acc = i % 2 == 0 ? field.add(acc, v) : field.sub(acc, v);
    }
    out.values[j] = acc;
  }
  return out;
}

bool is_cocycle(const SimplicialComplex& complex, const Field& field, const Cochain& c) {
  return is_zero(field, coboundary(complex, field, c).values);
}

CohomologyBasis::CohomologyBasis(const SimplicialComplex& complex, const Coefficients& coeffs)
    : complex_(&complex), field_(coeffs) {
  const int d = complex.dimension();
  reps_.resize(static_cast<std::size_t>(d) + 1);
  echelon_.resize(static_cast<std::size_t>(d) + 2);

  // coboundary columns: delta(e_sigma) = sum over cofaces tau of sign * e_tau
  std::vector<std::vector<SparseVec>> cob(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) cob[k].resize(complex.count(k));
  for (int k = 1; k <= d; ++k) {
    const auto& top = complex.simplices(k);
    for (std::size_t j = 0; j < top.size(); ++j)
      for (std::size_t i = 0; i < top[j].size(); ++i)
        cob[k - 1][*complex.index_of(drop(top[j], i))].emplace_back(static_cast<int>(j),
                                                                   field_.from_int(i % 2 == 0 ? 1 : -1));
  }

  for (int k = 0; k <= d; ++k) {
    auto& here = echelon_[k];    // coboundary pivots in degree k already registered
    auto& next = echelon_[k + 1];
    // V of every reducing column, keyed by the reducer's low in degree k+1
    std::unordered_map<int, SparseVec> reducer_v;
    for (std::size_t c = 0; c < complex.count(k); ++c) {
      if (here.count(static_cast<int>(c))) continue;  // cleared: a coboundary already owns this pivot
      SparseVec r = cob[k][c];
      SparseVec v{{static_cast<int>(c), Rational(1)}};
      while (!r.empty()) {
        auto it = next.find(r.back().first);
        if (it == next.end()) break;
        const Rational f = field_.div(r.back().second, it->second.vec.back().second);
        subtract_scaled(field_, r, f, it->second.vec);
        subtract_scaled(field_, v, f, reducer_v.at(it->first));
      }
      if (!r.empty()) {
        const int low = r.back().first;
        reducer_v.emplace(low, std::move(v));
        next.emplace(low, EchelonEntry{std::move(r), -1});
      } else {
        Cochain rep = zero_cochain(complex, k);
        for (const auto& [i, x] : v) rep.values[i] = x;
        here.emplace(static_cast<int>(c), EchelonEntry{std::move(v), static_cast<int>(reps_[k].size())});
        reps_[k].push_back(std::move(rep));
      }
    }
  }
}

std::size_t CohomologyBasis::size(int k) const {
  if (k < 0 || k > top_degree()) return 0;
  return reps_[k].size();
}

std::size_t CohomologyBasis::total_size() const {
  std::size_t n = 0;
  for (const auto& r : reps_) n += r.size();
  return n;
}

const std::vector<Cochain>& CohomologyBasis::representatives(int k) const {
  static const std::vector<Cochain> kEmpty;
  if (k < 0 || k > top_degree()) return kEmpty;
  return reps_[k];
}

Vector CohomologyBasis::reduce(const Cochain& cocycle) const {
  const int k = cocycle.degree;
  if (k < 0 || k > top_degree()) {
    if (is_zero(field_, cocycle.values)) return {};
    throw DegreeError("cochain degree outside the complex");
  }
  if (cocycle.values.size() != complex_->count(k)) throw DegreeError("cochain size does not match its degree");
  SparseVec z;
  for (std::size_t i = 0; i < cocycle.values.size(); ++i) {
    Rational x = field_.normalize(cocycle.values[i]);
    if (!field_.is_zero(x)) z.emplace_back(static_cast<int>(i), std::move(x));
  }
  Vector coords(reps_[k].size(), Rational(0));
  const auto& table = echelon_[k];
  while (!z.empty()) {
    auto it = table.find(z.back().first);
    if (it == table.end()) throw ContractViolation("cochain is not a cocycle");
    const Rational f = field_.div(z.back().second, it->second.vec.back().second);
    if (it->second.representative >= 0) {
      auto& slot = coords[static_cast<std::size_t>(it->second.representative)];
      slot = field_.add(slot, f);
    }
    subtract_scaled(field_, z, f, it->second.vec);
  }
  return coords;
}

// ---------------------------------------------------------------------------

CupEngine::CupEngine(const SimplicialComplex& complex, const Field& field) : complex_(&complex), field_(field) {
  const int d = complex.dimension();
  faces_.resize(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    faces_[n].resize(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
      auto& table = faces_[n][p];
      table.reserve(complex.count(n));
      for (const Simplex& s : complex.simplices(n)) {
        Simplex front(s.begin(), s.begin() + p + 1);
        Simplex back(s.begin() + p, s.end());
        table.emplace_back(*complex.index_of(front), *complex.index_of(back));
      }
    }
  }
}

Cochain CupEngine::cup(const Cochain& a, const Cochain& b, Execution exec) const {
  const int n = a.degree + b.degree;
  if (n > complex_->dimension()) return Cochain{n, {}};
  Cochain out = zero_cochain(*complex_, n);
  const auto& table = faces_[n][a.degree];
  for_each_index(table.size(), exec, [&](std::size_t j) {
    const auto& [front, back] = table[j];
    const Rational& x = a.values[front];
    const Rational& y = b.values[back];
    if (!field_.is_zero(x) && !field_.is_zero(y)) out.values[j] = field_.mul(x, y);
  });
  return out;
}

Cochain cup_product(const SimplicialComplex& complex, const Coefficients& coeffs, const Cochain& a,
                    const Cochain& b, Execution exec) {
  const Field field(coeffs);
  if (!is_cocycle(complex, field, a) || !is_cocycle(complex, field, b))
    throw ContractViolation("cup_product arguments must be cocycles");
  return CupEngine(complex, field).cup(a, b, exec);
}

}  // namespace tcfw
