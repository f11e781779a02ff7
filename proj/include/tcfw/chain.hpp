#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tcfw/complex.hpp"
#include "tcfw/field.hpp"
#include "tcfw/parallel.hpp"

namespace tcfw {

/// Sparse simplicial boundary operator d_k : C_k -> C_{k-1}. Column j is the
/// j-th k-simplex [v0..vk]; it has (-1)^i in the row of the face omitting vi.
struct BoundaryMatrix {
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<int, int>>> columns;  // (row, +-1), rows ascending

  std::vector<std::vector<int>> dense() const;
};

// Throws DegreeError unless 1 <= k <= dim K.
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k);

struct ChainComplex {
  std::vector<std::size_t> ranks;            // number of k-simplices
  std::vector<BoundaryMatrix> boundaries;    // boundaries[k-1] = d_k

  const BoundaryMatrix& boundary(int k) const { return boundaries.at(static_cast<std::size_t>(k - 1)); }
};

ChainComplex chain_complex(const SimplicialComplex& complex);

// Rank over a field by sparse column reduction.
std::size_t rank(const BoundaryMatrix& m, const Field& field);

// b_k = dim ker d_k - rank d_{k+1}. Integer coefficients throw Unsupported.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, const Coefficients& coeffs);

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

// Nonzero invariant factors of an integer matrix (Smith normal form diagonal).
std::vector<BigInt> smith_diagonal(const BoundaryMatrix& m);
std::vector<HomologyGroup> integer_homology(const SimplicialComplex& complex);

struct Cochain {
  int degree = 0;
  Vector values;  // indexed like complex.simplices(degree)
};

Cochain zero_cochain(const SimplicialComplex& complex, int degree);
Cochain coboundary(const SimplicialComplex& complex, const Field& field, const Cochain& c);
bool is_cocycle(const SimplicialComplex& complex, const Field& field, const Cochain& c);

/**
 * Additive cohomology over a field, with a representative cocycle for every
 * basis class and a reduction map taking any cocycle to its coordinates
 * modulo coboundaries.
 *
 * Built by reducing the coboundary matrix column by column: the reduced
 * columns give an echelon basis of the coboundaries, and the zero columns
 * whose index is not a coboundary pivot give the representatives. Together
 * they form an echelon basis of the cocycles, which is what `reduce` walks.
 */
class CohomologyBasis {
 public:
  CohomologyBasis(const SimplicialComplex& complex, const Coefficients& coeffs);

  const SimplicialComplex& complex() const { return *complex_; }
  const Field& field() const { return field_; }
  int top_degree() const { return complex_->dimension(); }
  std::size_t size(int k) const;
  std::size_t total_size() const;
  const std::vector<Cochain>& representatives(int k) const;

  // Coordinates of the class of `cocycle`; ContractViolation if it is not a cocycle.
  Vector reduce(const Cochain& cocycle) const;

 private:
  struct EchelonEntry {
    std::vector<std::pair<int, Rational>> vec;  // sparse, index ascending
    int representative = -1;                    // -1 for a coboundary
  };

  const SimplicialComplex* complex_;
  Field field_;
  std::vector<std::vector<Cochain>> reps_;
  std::vector<std::unordered_map<int, EchelonEntry>> echelon_;
};

inline CohomologyBasis cohomology_basis(const SimplicialComplex& complex, const Coefficients& coeffs) {
  return CohomologyBasis(complex, coeffs);
}

/// Front/back face lookup for Alexander-Whitney products on one complex.
class CupEngine {
 public:
  CupEngine(const SimplicialComplex& complex, const Field& field);

  // (a u b)[v0..v_{p+q}] = a[v0..vp] * b[vp..v_{p+q}]; no cocycle check.
  Cochain cup(const Cochain& a, const Cochain& b, Execution exec = Execution::parallel) const;

 private:
  const SimplicialComplex* complex_;
  Field field_;
  // faces_[n][p] = (front p-face index, back (n-p)-face index) per n-simplex
  std::vector<std::vector<std::vector<std::pair<int, int>>>> faces_;
};

// Checked product: both arguments must be cocycles, else ContractViolation.
Cochain cup_product(const SimplicialComplex& complex, const Coefficients& coeffs, const Cochain& a,
                    const Cochain& b, Execution exec = Execution::parallel);

}  // namespace tcfw
