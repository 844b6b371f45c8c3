#pragma once

// Finite-cell DG algebras: free graded algebras whose differential sends
// each generator into the subalgebra generated by the earlier ones.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dgcell/free_algebra.hpp"
#include "dgcell/monomial_orders.hpp"

namespace dgcell {

class DgaError : public std::invalid_argument {
 public:
  enum class Kind { TriangularityViolation, DegreeViolation, WeightViolation, DSquaredNonzero, InvalidRule };

  DgaError(Kind kind, std::string generator, const std::string& detail);

  Kind kind() const { return kind_; }
  const std::string& generator() const { return generator_; }

 private:
  Kind kind_;
  std::string generator_;
};

std::string_view to_string(DgaError::Kind kind);

/// Differential rule: generator letter (0-based) and its image.
using DifferentialRule = std::pair<int, Polynomial>;

class FiniteCellDGA {
 public:
  const SignaturePtr& signature() const { return sig_; }
  const Signature& sig() const { return *sig_; }
  /// Image of the generator with 0-based letter `letter`.
  const Polynomial& d_generator(int letter) const { return differential_.at(static_cast<std::size_t>(letter)); }

  friend FiniteCellDGA build_dga(SignaturePtr sig, const std::vector<DifferentialRule>& rules);

 private:
  FiniteCellDGA(SignaturePtr sig, std::vector<Polynomial> differential)
      : sig_(std::move(sig)), differential_(std::move(differential)) {}

  SignaturePtr sig_;
  std::vector<Polynomial> differential_;
};

/// Validates triangularity, grading (|d x| = |x| + 1), weight admissibility
/// (no word of d x is heavier than x) and d^2 = 0 on generators. Generators
/// without a rule are closed.
FiniteCellDGA build_dga(SignaturePtr sig, const std::vector<DifferentialRule>& rules);

/// Leibniz extension with Koszul signs:
/// d(w1...wk) = sum_j (-1)^{|w1...w_{j-1}|} w1...w_{j-1} (d w_j) w_{j+1}...wk.
Polynomial apply_d(const FiniteCellDGA& A, const Polynomial& p);
Polynomial apply_d(const FiniteCellDGA& A, const Word& w);

/// Generator letter with d(d x) != 0, if any. With `random_words` > 0, also
/// spot-checks d^2 on that many random words of weight <= 6 using `seed`.
struct DSquaredCounterexample {
  Word word;
};
std::optional<DSquaredCounterexample> check_d_squared(const FiniteCellDGA& A, std::size_t random_words = 0,
                                                      std::uint64_t seed = 0);

/// First word f of weight <= weight_bound with d f != 0 and TIP(d f) >= f.
std::optional<Word> check_tip_decreasing(const FiniteCellDGA& A, OrderKind order, int weight_bound);

}  // namespace dgcell
