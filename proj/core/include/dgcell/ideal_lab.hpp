#pragma once

// Two-sided DG ideals generated by a pair (r, delta), restricted to words of
// bounded weight. Every check here is the weight <= N shadow of a statement
// about infinite-dimensional spaces: a pass means "verified up to N", a
// counterexample is a genuine refutation.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgcell/dg_algebra.hpp"
#include "dgcell/free_algebra.hpp"
#include "dgcell/monomial_orders.hpp"

namespace dgcell {

struct GeneratorPair {
  Polynomial r;
  Polynomial delta;
  bool delta_is_dr = false;  // delta == d r in the ambient DGA
};

/// Validates that r and delta are distinct, nonzero and homogeneous; sets
/// delta_is_dr from the DGA.
GeneratorPair make_generator_pair(const FiniteCellDGA& A, Polynomial r, Polynomial delta);

/// A set of monomials, enumerable up to any weight.
class BasisFamily {
 public:
  enum class Kind { AvoidGenerators, NormalWords, ExplicitList };

  /// Words using none of the given letters.
  static BasisFamily avoid(std::vector<int> letters);
  /// outer^i inner^j for i, j >= 0.
  static BasisFamily normal_words(int outer, int inner);
  static BasisFamily explicit_list(std::vector<Word> words);

  Kind kind() const { return kind_; }
  const std::vector<int>& letters() const { return letters_; }
  const std::vector<Word>& words() const { return words_; }

  /// Duplicate-free, every member of weight <= max_weight, shortest first.
  std::vector<Word> enumerate(const Signature& sig, int max_weight) const;
  bool contains(const Word& w) const;
  std::string describe(const Signature& sig) const;

 private:
  Kind kind_ = Kind::ExplicitList;
  std::vector<int> letters_;
  std::vector<Word> words_;
};

/// Linearly independent homogeneous polynomials spanning a bounded slice.
struct SubmoduleSlice {
  int weight_bound = 0;
  std::vector<Polynomial> basis;
  std::string descriptor;

  std::size_t dim() const { return basis.size(); }
};

/// Triangularizes `generators` (dropping dependent ones) under the degree order.
SubmoduleSlice make_slice(const SignaturePtr& sig, const std::vector<Polynomial>& generators, int weight_bound,
                          std::string descriptor);

/// span{ a * g : a a word, g in generators, weight(a g) <= N }.
SubmoduleSlice left_ideal_slice(const SignaturePtr& sig, const std::vector<Polynomial>& generators,
                                int weight_bound, std::string descriptor);

/// span{ a beta b : beta in {r, delta}, a, b words, weight(a beta b) <= N }.
SubmoduleSlice ideal_slice(const FiniteCellDGA& A, const GeneratorPair& pair, int weight_bound);

enum class Verdict { Pass, Counterexample, Indeterminate };
std::string_view to_string(Verdict v);

struct ConditionResult {
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

/// An element f * beta * v with beta = r (index 0) or delta (index 1).
struct SummandElement {
  int beta = 0;
  Word v;
  Word f;
  Polynomial element;
};

struct TipCollision {
  Word tip;
  SummandElement first;
  SummandElement second;
};

struct UopReport {
  OrderKind order = OrderKind::DegreeOrder;
  int weight_bound = 0;
  ConditionResult cond_i;
  ConditionResult cond_ii;
  ConditionResult cond_iii;

  std::size_t ambient_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t basis_family_dim = 0;

  std::size_t collision_count = 0;
  std::optional<TipCollision> collision;  // lightest colliding tip (ties: smallest), when (ii) fails
  std::optional<Word> cond_i_witness;     // member of V whose span meets the ideal slice
  std::optional<Word> cond_iii_witness;   // member of V occurring as a tip of the ideal slice

  bool all_pass() const;
};

struct CheckOptions {
  std::size_t threads = 1;
};

UopReport check_unique_order_property(const FiniteCellDGA& A, const GeneratorPair& pair, OrderKind order,
                                      const BasisFamily& V, int weight_bound, const CheckOptions& opts = {});

struct DecompositionReport {
  bool pass = false;
  int weight_bound = 0;
  std::size_t ideal_dim = 0;
  std::size_t summand_count = 0;
  std::size_t summand_dim_sum = 0;
  std::size_t joint_rank = 0;
};

/// Bounded check that (r, delta) = sum over v in V of (A r v + A delta v)
/// is a direct sum: the summand dimensions add up to the slice dimension
/// and the concatenated summand bases are independent.
DecompositionReport check_left_decomposition(const FiniteCellDGA& A, const GeneratorPair& pair,
                                             const BasisFamily& V, int weight_bound,
                                             const CheckOptions& opts = {});

/// M = span{ a r v : v in V, weight <= N }.
SubmoduleSlice submodule_M(const FiniteCellDGA& A, const GeneratorPair& pair, const BasisFamily& V,
                           int weight_bound);

/// N + d(N).
SubmoduleSlice m_plus(const FiniteCellDGA& A, const SubmoduleSlice& slice);

/// { m in N : d m in N }, computed degree by degree as the kernel of
/// d followed by projection to A_{<=N} / N.
SubmoduleSlice m_minus(const FiniteCellDGA& A, const SubmoduleSlice& slice);

}  // namespace dgcell
