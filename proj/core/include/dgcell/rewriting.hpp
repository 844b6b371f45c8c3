#pragma once

// String rewriting modulo a two-sided ideal: rules word -> polynomial,
// applied leftmost first until no left-hand side occurs.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dgcell/free_algebra.hpp"

namespace dgcell {

class RewriteBudgetExceeded : public std::runtime_error {
 public:
  RewriteBudgetExceeded() : std::runtime_error("rewrite step budget exceeded; rule set does not terminate") {}
};

class RewriteSystem {
 public:
  struct Rule {
    Word lhs;
    Polynomial rhs;
  };

  /// Every rule must strictly decrease the degree-order tip:
  /// rhs == 0 or TIP(rhs) < lhs. Throws std::invalid_argument otherwise.
  RewriteSystem(SignaturePtr sig, std::vector<Rule> rules);

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<Rule>& rules() const { return rules_; }

  struct Redex {
    std::size_t position;
    std::size_t rule;
  };
  /// Leftmost occurrence of any left-hand side; earlier rules win ties.
  std::optional<Redex> find_redex(const Word& w) const;

  /// prefix * rhs * suffix for the given redex.
  Polynomial rewrite_at(const Word& w, const Redex& redex) const;

 private:
  SignaturePtr sig_;
  std::vector<Rule> rules_;
};

/// {x1 x2 -> x2 x1 + 1, x3 -> 0}: the Weyl relation plus killing x3, for a
/// signature whose first three generators play x1, x2, x3.
RewriteSystem weyl_rewrite_system(const SignaturePtr& sig);

inline constexpr std::size_t kDefaultRewriteBudget = 1'000'000;

Polynomial normal_form(const RewriteSystem& rs, const Polynomial& p,
                       std::size_t step_budget = kDefaultRewriteBudget);

struct CriticalPair {
  Word word;
  Polynomial left;   // normal form after rewriting with the first rule
  Polynomial right;  // normal form after rewriting with the second rule
};

/// Checks that every overlap or inclusion of left-hand sides whose word has
/// length <= overlap_length_bound resolves to a common normal form.
std::optional<CriticalPair> check_local_confluence(const RewriteSystem& rs,
                                                   std::size_t overlap_length_bound);

}  // namespace dgcell
