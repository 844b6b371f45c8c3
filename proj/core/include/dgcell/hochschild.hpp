#pragma once

// Hochschild homology: the reduced bar complex of a small unital algebra,
// the commutator complex of the first Weyl algebra, and dimension
// bookkeeping for a localization long exact sequence.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dgcell/free_algebra.hpp"

namespace dgcell {

class AlgebraError : public std::invalid_argument {
 public:
  enum class Kind { BadShape, NonAssociative, NoUnit, GuardExceeded };
  AlgebraError(Kind kind, const std::string& detail) : std::invalid_argument(detail), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A finite-dimensional associative unital algebra over Q given by
/// structure constants: e_i e_j = sum_k c[i][j][k] e_k.
class FiniteDimAlgebra {
 public:
  using Vector = std::vector<Rational>;
  using Structure = std::vector<std::vector<Vector>>;

  /// Checks shapes, associativity on all basis triples and the unit laws.
  FiniteDimAlgebra(std::vector<std::string> labels, Structure structure, Vector unit);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Structure& structure() const { return c_; }
  const Vector& unit() const { return unit_; }

  Vector multiply(const Vector& a, const Vector& b) const;
  Vector basis_vector(std::size_t i) const;

 private:
  std::vector<std::string> labels_;
  Structure c_;
  Vector unit_;
};

/// k[x]/(x^2) with basis 1, x.
FiniteDimAlgebra dual_numbers();
/// k x k with basis e1, e2 (orthogonal idempotents).
FiniteDimAlgebra split_semisimple(std::size_t factors = 2);
/// The ground field.
FiniteDimAlgebra ground_field();

struct HHEntry {
  std::size_t dim = 0;
  bool exact = true;  // false when the value depends on data outside the truncation
};

/// HH_n for n = 0, 1, ..., entries.size() - 1.
struct HHTable {
  std::vector<HHEntry> entries;

  std::size_t at(std::size_t n) const { return n < entries.size() ? entries[n].dim : 0; }
  std::vector<std::size_t> dims() const;
};

struct BarGuards {
  std::size_t max_dim = 6;
  std::size_t max_degree = 8;
};

/// HH_0 .. HH_{n_max} from the reduced bar complex B (x) Bbar^{(x)n}.
HHTable hh_bar(const FiniteDimAlgebra& B, std::size_t n_max, const BarGuards& guards = {},
               std::size_t threads = 1);

/// sum c_ij x2^i x1^j in the first Weyl algebra, x1 x2 - x2 x1 = 1.
class WeylElement {
 public:
  using Key = std::pair<int, int>;  // (i, j): x2^i x1^j

  WeylElement() = default;
  static WeylElement monomial(int i, int j, const Rational& c = 1);
  static WeylElement generator(int g);  // g = 1 or 2

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int i, int j) const;
  void add_term(int i, int j, const Rational& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const Rational& c, const WeylElement& a);
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  bool operator==(const WeylElement&) const = default;

 private:
  std::map<Key, Rational> terms_;
};

std::string to_string(const WeylElement& a);

/// [x_g, a] for g = 1 or 2.
WeylElement weyl_commutator(int g, const WeylElement& a);

/// Contribution of the graded piece of total degree m: C_2 at total degree m,
/// C_1 at m - 1 and C_0 at m - 2.
struct WeylPiece {
  int m = 0;
  std::size_t c2 = 0, c1 = 0, c0 = 0;
  std::size_t hh2 = 0, hh1 = 0, hh0 = 0;
};

struct WeylHHResult {
  HHTable table;
  std::vector<WeylPiece> pieces;
  bool d_squared_zero = true;
  bool hh0_vanishes = true;  // every computed piece of A/[A,A] is zero
};

/// HH of A1 from A1 -> A1 + A1 -> A1 with d2(c) = ([x2,c], -[x1,c]) and
/// d1(a,b) = [x1,a] + [x2,b], over pieces of total degree 0..N.
WeylHHResult hh_weyl(int weight_bound, std::size_t threads = 1);

class LesError : public std::invalid_argument {
 public:
  enum class Kind { Underdetermined, Inconsistent };
  LesError(Kind kind, const std::string& detail) : std::invalid_argument(detail), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Kernel table K in ... -> K_n -> C_n -> Q_n -> K_{n-1} -> ..., where
/// C is the ambient and Q the quotient. K_n = Q_{n+1} - r_{n+1} + C_n - r_n
/// with r_n the rank of C_n -> Q_n. That rank is forced to 0 when C_n or
/// Q_n vanishes; otherwise it must be supplied in `known_ranks` or the call
/// throws LesError::Underdetermined.
HHTable hh_from_les(const HHTable& ambient, const HHTable& quotient,
                    const std::map<std::size_t, std::size_t>& known_ranks = {});

}  // namespace dgcell
