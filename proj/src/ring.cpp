#include "tcfw/ring.hpp"

#include <algorithm>

#include "tcfw/errors.hpp"

namespace tcfw {

GradedRing::GradedRing(Coefficients coeffs, std::vector<std::string> labels, std::vector<int> degrees,
                       std::vector<std::vector<Element>> table, Element unit)
    : field_(coeffs),
      labels_(std::move(labels)),
      degrees_(std::move(degrees)),
      table_(std::move(table)),
      unit_(std::move(unit)) {
  const std::size_t n = degrees_.size();
  if (labels_.size() != n || table_.size() != n || unit_.size() != n)
    throw DomainError("graded ring data has inconsistent sizes");
  for (std::size_t i = 1; i < n; ++i)
    if (degrees_[i] < degrees_[i - 1]) throw DomainError("basis must be ordered by degree");
  for (auto& row : table_) {
    if (row.size() != n) throw DomainError("structure constant table is not square");
    for (auto& e : row) {
      if (e.size() != n) throw DomainError("structure constant has wrong length");
      for (auto& x : e) x = field_.normalize(x);
    }
  }
  for (auto& x : unit_) x = field_.normalize(x);
}

int GradedRing::top_degree() const { return degrees_.empty() ? 0 : degrees_.back(); }

std::vector<std::size_t> GradedRing::basis_in_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == d) out.push_back(i);
  return out;
}

GradedRing::Element GradedRing::multiply(const Element& x, const Element& y) const {
  Element out = zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (field_.is_zero(y[j])) continue;
      const Rational c = field_.mul(x[i], y[j]);
      const Element& p = table_[i][j];
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!field_.is_zero(p[k])) out[k] = field_.add(out[k], field_.mul(c, p[k]));
    }
  }
  return out;
}

GradedRing::Element GradedRing::add(const Element& x, const Element& y) const {
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = field_.add(x[i], y[i]);
  return out;
}

GradedRing::Element GradedRing::scale(const Rational& c, const Element& x) const {
  Element out(x.size());
  const Rational cn = field_.normalize(c);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = field_.mul(cn, x[i]);
  return out;
}

GradedRing::Element GradedRing::basis_element(std::size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

std::vector<std::string> check_ring_axioms(const GradedRing& ring) {
  std::vector<std::string> failures;
  const std::size_t n = ring.dimension();
  const Field& f = ring.field();
  auto name = [&](std::size_t i) { return ring.label(i); };
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = ring.basis_element(i);
    if (ring.multiply(ring.unit(), e) != e || ring.multiply(e, ring.unit()) != e)
      failures.push_back("unit law fails for " + name(i));
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = ring.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!f.is_zero(p[k]) && ring.degree(k) != ring.degree(i) + ring.degree(j))
          failures.push_back("grading fails for " + name(i) + "*" + name(j));
      const auto& q = ring.product(j, i);
      const bool odd = (ring.degree(i) * ring.degree(j)) % 2 != 0;
      const auto expected = odd ? ring.scale(Rational(-1), q) : q;
      if (p != expected) failures.push_back("graded commutativity fails for " + name(i) + "," + name(j));
      for (std::size_t k = 0; k < n; ++k) {
        const auto left = ring.multiply(p, ring.basis_element(k));
        const auto right = ring.multiply(ring.basis_element(i), ring.product(j, k));
        if (left != right) failures.push_back("associativity fails for " + name(i) + "," + name(j) + "," + name(k));
      }
    }
  }
  return failures;
}

GradedRing cohomology_ring(const CohomologyBasis& basis, Execution exec) {
  const auto& complex = basis.complex();
  const Field& field = basis.field();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<const Cochain*> reps;
  std::vector<std::size_t> offset;
  for (int k = 0; k <= basis.top_degree(); ++k) {
    offset.push_back(reps.size());
    const auto& rk = basis.representatives(k);
    for (std::size_t i = 0; i < rk.size(); ++i) {
      labels.push_back("h" + std::to_string(k) + "_" + std::to_string(i));
      degrees.push_back(k);
      reps.push_back(&rk[i]);
    }
  }
  const std::size_t n = reps.size();
  const CupEngine engine(complex, field);
  std::vector<std::vector<GradedRing::Element>> table(n, std::vector<GradedRing::Element>(n));
  for_each_index(n * n, exec, [&](std::size_t idx) {
    const std::size_t i = idx / n, j = idx % n;
    GradedRing::Element e(n, Rational(0));
    const int d = degrees[i] + degrees[j];
    if (d <= basis.top_degree()) {
      const Vector coords = basis.reduce(engine.cup(*reps[i], *reps[j], Execution::serial));
      for (std::size_t c = 0; c < coords.size(); ++c) e[offset[d] + c] = coords[c];
    }
    table[i][j] = std::move(e);
  });

  GradedRing::Element unit(n, Rational(0));
  Cochain one{0, Vector(complex.count(0), Rational(1))};
  const Vector coords = basis.reduce(one);
  for (std::size_t c = 0; c < coords.size(); ++c) unit[c] = coords[c];
  return GradedRing(field.coefficients(), std::move(labels), std::move(degrees), std::move(table), std::move(unit));
}

GradedRing cohomology_ring(const SimplicialComplex& complex, const Coefficients& coeffs) {
  return cohomology_ring(CohomologyBasis(complex, coeffs));
}

std::size_t power_length(const GradedRing& ring, const std::vector<GradedRing::Element>& generators) {
  Subspace current(ring.field(), ring.dimension());
  for (const auto& g : generators) current.insert(g);
  if (current.dimension() == 0) return 0;
  std::size_t m = 1;
  for (;;) {
    Subspace next(ring.field(), ring.dimension());
    for (const auto& x : current.basis())
      for (const auto& g : generators) next.insert(ring.multiply(x, g));
    if (next.dimension() == 0) return m;
    if (next.dimension() == current.dimension())
      throw DomainError("ideal is not nilpotent (the complex is disconnected)");
    current = std::move(next);
    ++m;
  }
}

std::size_t cup_length(const GradedRing& ring) {
  std::vector<GradedRing::Element> gens;
  for (std::size_t i = 0; i < ring.dimension(); ++i)
    if (ring.degree(i) > 0) gens.push_back(ring.basis_element(i));
  return power_length(ring, gens);
}

// ---------------------------------------------------------------------------

GradedRing::Element TensorSquare::tensor(const GradedRing::Element& a, const GradedRing::Element& b) const {
  const Field& f = base.field();
  GradedRing::Element out = ring.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!f.is_zero(b[j])) out[index(i, j)] = f.mul(a[i], b[j]);
  }
  return out;
}

TensorSquare tensor_square(const GradedRing& base, TensorSign sign) {
  const std::size_t n = base.dimension();
  const Field& f = base.field();
  // order pairs by total degree so the result is a valid GradedRing basis
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return base.degree(x.first) + base.degree(x.second) < base.degree(y.first) + base.degree(y.second);
  });
  std::vector<std::size_t> position(n * n);
  for (std::size_t p = 0; p < pairs.size(); ++p) position[pairs[p].first * n + pairs[p].second] = p;

  std::vector<std::string> labels(n * n);
  std::vector<int> degrees(n * n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    labels[p] = base.label(i) + "|" + base.label(j);
    degrees[p] = base.degree(i) + base.degree(j);
  }
  std::vector<std::vector<GradedRing::Element>> table(n * n, std::vector<GradedRing::Element>(n * n));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [a, b] = pairs[p];
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      const auto [c, d] = pairs[q];
      GradedRing::Element e(n * n, Rational(0));
      const auto& ac = base.product(a, c);
      const auto& bd = base.product(b, d);
      const bool negative = sign == TensorSign::koszul && (base.degree(b) * base.degree(c)) % 2 != 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (f.is_zero(ac[r])) continue;
        for (std::size_t s = 0; s < n; ++s) {
          if (f.is_zero(bd[s])) continue;
          const Rational v = f.mul(ac[r], bd[s]);
          e[position[r * n + s]] = negative ? f.neg(v) : v;
        }
      }
      table[p][q] = std::move(e);
    }
  }
  GradedRing::Element unit(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) unit[position[i * n + j]] = f.mul(base.unit()[i], base.unit()[j]);
  GradedRing ring(f.coefficients(), std::move(labels), std::move(degrees), std::move(table), std::move(unit));
  return TensorSquare{base, std::move(ring), std::move(position)};
}

// ---------------------------------------------------------------------------

std::vector<GradedRing::Element> Ideal::generators() const {
  std::vector<GradedRing::Element> out;
  for (const auto& [d, elems] : by_degree) out.insert(out.end(), elems.begin(), elems.end());
  return out;
}

std::size_t Ideal::dimension() const {
  std::size_t n = 0;
  for (const auto& [d, elems] : by_degree) n += elems.size();
  return n;
}

GradedRing::Element zero_divisor(const TensorSquare& t, const GradedRing::Element& u) {
  const auto left = t.tensor(t.base.unit(), u);
  const auto right = t.tensor(u, t.base.unit());
  return t.ring.add(left, t.ring.scale(Rational(-1), right));
}

Ideal zero_divisor_ideal(const TensorSquare& t) {
  const GradedRing& base = t.base;
  const Field& f = base.field();
  const std::size_t n = base.dimension();
  Ideal ideal;
  for (int d = 0; d <= t.ring.top_degree(); ++d) {
    // columns: basis pairs of total degree d; rows: base coordinates
    std::vector<std::pair<std::size_t, std::size_t>> cols;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (base.degree(i) + base.degree(j) == d) cols.emplace_back(i, j);
    if (cols.empty()) continue;
    Matrix m(n, Vector(cols.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& p = base.product(cols[c].first, cols[c].second);
      for (std::size_t r = 0; r < n; ++r) m[r][c] = p[r];
    }
    for (const Vector& k : nullspace(f, std::move(m), cols.size())) {
      GradedRing::Element e = t.ring.zero();
      for (std::size_t c = 0; c < cols.size(); ++c) e[t.index(cols[c].first, cols[c].second)] = k[c];
      ideal.by_degree[d].push_back(std::move(e));
    }
  }
  return ideal;
}

std::size_t zero_divisor_cup_length(const TensorSquare& t) {
  return power_length(t.ring, zero_divisor_ideal(t).generators());
}

std::size_t zero_divisor_cup_length(const SimplicialComplex& complex, const Coefficients& coeffs) {
  return zero_divisor_cup_length(tensor_square(cohomology_ring(complex, coeffs)));
}

namespace {

struct ProductRoute {
  std::size_t zcl = 0;
  std::size_t ring_dimension = 0;
  std::size_t ideal_dimension = 0;
};

// Kernel of the pullback along the diagonal, computed in H*(K x K) built from
// the staircase product, then its nilpotency length in that ring.
ProductRoute product_route(const SimplicialComplex& complex, const Coefficients& coeffs) {
  const SimplicialComplex product = product_complex(complex, complex);
  const SimplicialMap diag = diagonal_map(complex, product);
  const CohomologyBasis product_basis(product, coeffs);
  const CohomologyBasis base_basis(complex, coeffs);
  const GradedRing ring = cohomology_ring(product_basis);
  const Field& f = product_basis.field();

  std::vector<GradedRing::Element> kernel;
  std::size_t offset = 0;
  for (int k = 0; k <= product_basis.top_degree(); ++k) {
    const auto& reps = product_basis.representatives(k);
    const std::size_t rows = base_basis.size(k);
    Matrix pullback(rows, Vector(reps.size(), Rational(0)));
    for (std::size_t c = 0; c < reps.size(); ++c) {
      Cochain pulled = zero_cochain(complex, k);
      const auto& simplices = complex.simplices(k);
      for (std::size_t s = 0; s < simplices.size(); ++s)
        pulled.values[s] = reps[c].values[*product.index_of(diag.apply(simplices[s]))];
      const Vector coords = base_basis.reduce(pulled);
      for (std::size_t r = 0; r < rows; ++r) pullback[r][c] = coords[r];
    }
    if (!reps.empty()) {
      for (const Vector& v : nullspace(f, std::move(pullback), reps.size())) {
        GradedRing::Element e = ring.zero();
        for (std::size_t c = 0; c < v.size(); ++c) e[offset + c] = v[c];
        kernel.push_back(std::move(e));
      }
    }
    offset += reps.size();
  }
  return ProductRoute{power_length(ring, kernel), ring.dimension(), kernel.size()};
}

}  // namespace

std::size_t zcl_via_product_complex(const SimplicialComplex& complex, const Coefficients& coeffs) {
  return product_route(complex, coeffs).zcl;
}

KunnethCheck kunneth_check(const SimplicialComplex& complex, const Coefficients& coeffs, TensorSign sign) {
  const TensorSquare t = tensor_square(cohomology_ring(complex, coeffs), sign);
  const Ideal ideal = zero_divisor_ideal(t);
  const ProductRoute route = product_route(complex, coeffs);
  KunnethCheck out;
  out.zcl_tensor = power_length(t.ring, ideal.generators());
  out.zcl_product = route.zcl;
  out.tensor_dimension = t.ring.dimension();
  out.product_dimension = route.ring_dimension;
  out.ideal_dimension_tensor = ideal.dimension();
  out.ideal_dimension_product = route.ideal_dimension;
  return out;
}

VerificationReport verify_kunneth(const SimplicialComplex& complex, const std::vector<Coefficients>& fields,
                                  TensorSign sign, std::vector<KunnethCheck>* details) {
  VerificationReport report;
  report.subject = complex.name();
  report.samples = fields.size();
  for (const char* name : {"zcl_routes_agree", "ring_dimensions_agree", "ideal_dimensions_agree", "tensor_ring_axioms"})
    report.add(name);
  Check& zcl = report.checks[0];
  Check& dims = report.checks[1];
  Check& ideal = report.checks[2];
  Check& axioms = report.checks[3];
  for (const auto& c : fields) {
    const KunnethCheck k = kunneth_check(complex, c, sign);
    if (details) details->push_back(k);
    const std::string tag = c.name() + ": ";
    record(zcl, k.zcl_tensor == k.zcl_product,
           tag + "tensor " + std::to_string(k.zcl_tensor) + " vs product " + std::to_string(k.zcl_product));
    record(dims, k.tensor_dimension == k.product_dimension,
           tag + std::to_string(k.tensor_dimension) + " vs " + std::to_string(k.product_dimension));
    record(ideal, k.ideal_dimension_tensor == k.ideal_dimension_product,
           tag + std::to_string(k.ideal_dimension_tensor) + " vs " + std::to_string(k.ideal_dimension_product));
    const auto failures = check_ring_axioms(tensor_square(cohomology_ring(complex, c), sign).ring);
    record(axioms, failures.empty(), failures.empty() ? std::string() : tag + failures.front());
  }
  return report;
}

FieldInvariants field_invariants(const SimplicialComplex& complex, const Coefficients& coeffs) {
  FieldInvariants out;
  out.field = coeffs;
  out.betti = betti_numbers(complex, coeffs);
  const GradedRing ring = cohomology_ring(complex, coeffs);
  out.cup_length = cup_length(ring);
  out.zcl_tensor = zero_divisor_cup_length(tensor_square(ring));
  out.zcl_product = zcl_via_product_complex(complex, coeffs);
  return out;
}

LowerBoundReport tc_lower_bound_report(const SimplicialComplex& complex, const std::vector<Coefficients>& fields) {
  LowerBoundReport report;
  report.complex = complex.name();
  for (const auto& c : fields) {
    report.per_field.push_back(field_invariants(complex, c));
    report.zcl_max = std::max(report.zcl_max, report.per_field.back().zcl_tensor);
  }
  report.tcm_lower_bound = report.zcl_max + 1;
  report.tc_lower_bound = report.zcl_max + 1;
  return report;
}

}  // namespace tcfw
