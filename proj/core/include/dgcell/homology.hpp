#pragma once

// Bounded cochain complexes of finite-dimensional Q-vector spaces and their
// homology, computed by exact elimination.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgcell/dg_algebra.hpp"
#include "dgcell/ideal_lab.hpp"
#include "dgcell/linalg.hpp"

namespace dgcell {

class ComplexError : public std::invalid_argument {
 public:
  enum class Kind { DSquaredNonzero, NotDStable, NotSubcomplex, BadShape };
  ComplexError(Kind kind, const std::string& detail) : std::invalid_argument(detail), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// One cohomological degree: basis labels and, when the complex comes from
/// an algebra, the basis elements themselves.
struct ComplexComponent {
  std::vector<std::string> labels;
  std::vector<Polynomial> elements;  // empty for abstract complexes

  std::size_t dim() const { return labels.size(); }
};

class TruncatedComplex {
 public:
  using Differential = std::map<int, std::vector<SparseVec>>;

  TruncatedComplex() = default;
  /// differential[q][i] is the image of basis vector i of degree q in the
  /// coordinates of degree q + 1. Missing entries are zero maps.
  /// Throws ComplexError on shape errors or when d^2 != 0.
  TruncatedComplex(std::map<int, ComplexComponent> components, Differential differential);

  /// Abstract complex with generic labels.
  static TruncatedComplex from_matrices(const std::map<int, std::size_t>& dims, Differential differential);

  const std::map<int, ComplexComponent>& components() const { return components_; }
  std::size_t dim(int q) const;
  std::size_t total_dim() const;
  /// Images of the degree-q basis; empty when the map is zero.
  const std::vector<SparseVec>& d(int q) const;
  std::vector<int> degrees() const;

 private:
  std::map<int, ComplexComponent> components_;
  Differential differential_;
};

/// A_{<=N}: words of weight <= N graded by cohomological degree, each degree
/// ordered ascending in the degree order.
TruncatedComplex build_truncated_complex(const FiniteCellDGA& A, int weight_bound);

/// The slice as a complex. Throws ComplexError::NotDStable when d leaves it.
TruncatedComplex build_slice_complex(const FiniteCellDGA& A, const SubmoduleSlice& slice);

struct HomologyTable {
  std::map<int, std::size_t> dims;  // every degree of the complex, zeros included

  std::size_t at(int q) const;
  bool is_zero() const;
  long euler_characteristic() const;
};

HomologyTable homology_dims(const TruncatedComplex& C, std::size_t threads = 1);
bool check_acyclic(const TruncatedComplex& C, std::size_t threads = 1);

/// sup / sub where sub's basis elements are polynomials inside sup's span.
/// Throws ComplexError::NotSubcomplex if sub is not a d-stable subspace.
TruncatedComplex quotient_complex(const TruncatedComplex& sub, const TruncatedComplex& sup);

/// Same, with the embedding given as coordinates in sup's basis per degree.
TruncatedComplex quotient_complex(const TruncatedComplex& sup, const std::map<int, std::vector<SparseVec>>& embedding);

/// The inclusion is a quasi-isomorphism iff the quotient is acyclic.
bool check_quasi_iso_inclusion(const TruncatedComplex& sub, const TruncatedComplex& sup, std::size_t threads = 1);

}  // namespace dgcell
