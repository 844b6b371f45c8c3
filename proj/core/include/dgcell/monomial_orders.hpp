#pragma once

// The two monomial orders used throughout: right lexicographic order and
// the degree order (right-lex on occurrence vectors, ties broken by
// right-lex on the words), plus TIP extraction and tip sets of subspaces.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgcell/free_algebra.hpp"
#include "dgcell/linalg.hpp"

namespace dgcell {

enum class OrderKind { RightLex, DegreeOrder };

std::string_view to_string(OrderKind order);
/// Accepts "rightlex" and "degord".
std::optional<OrderKind> parse_order(std::string_view name);

/// Words are compared right to left; a shorter word is padded on the left
/// with the unit symbol, which lies below every generator.
std::strong_ordering compare_rightlex(const Word& u, const Word& v);

std::strong_ordering compare(OrderKind order, const Signature& sig, const Word& u, const Word& v);

/// Strict-weak-ordering functor for containers and sorting.
struct WordLess {
  OrderKind order;
  SignaturePtr sig;
  bool operator()(const Word& u, const Word& v) const { return compare(order, *sig, u, v) < 0; }
};

/// Canonical printer with terms listed largest-first under `order`.
std::string to_string(const Polynomial& p, OrderKind order = OrderKind::DegreeOrder);

struct TipTerm {
  Word word;
  Rational coefficient;
};

class ZeroPolynomialTip : public std::domain_error {
 public:
  ZeroPolynomialTip() : std::domain_error("TIP undefined for 0") {}
};

TipTerm tip(OrderKind order, const Polynomial& f);

struct LeftMulCounterexample {
  Word u;
  Word v;
};

/// Exhaustively checks TIP(v) <= TIP(uv) for monomials u, v over `sig`
/// with |u| + |v| <= length_bound. Returns the first violation.
std::optional<LeftMulCounterexample> check_left_mul_preserved(OrderKind order, const Signature& sig,
                                                              std::size_t length_bound);

/// Columns numbered along a monomial order: larger column, larger word.
class WordIndex {
 public:
  WordIndex(OrderKind order, SignaturePtr sig, std::vector<Word> words);

  /// Index of every word of weight <= max_weight.
  static WordIndex up_to_weight(OrderKind order, SignaturePtr sig, int max_weight);
  /// Index of the union of the supports.
  static WordIndex from_supports(OrderKind order, SignaturePtr sig,
                                 const std::vector<Polynomial>& polys);

  std::size_t size() const { return words_.size(); }
  OrderKind order() const { return order_; }
  const SignaturePtr& signature() const { return sig_; }
  const Word& word(std::size_t col) const { return words_.at(col); }
  const std::vector<Word>& words() const { return words_; }
  std::optional<std::size_t> col(const Word& w) const;

  /// Throws std::out_of_range if p uses a word outside the index.
  SparseVec to_vec(const Polynomial& p) const;
  Polynomial to_poly(const SparseVec& v) const;

 private:
  OrderKind order_;
  SignaturePtr sig_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t, WordHash> cols_;
};

/// Triangular basis of the span of `polys` under `order`. Each row's tag is
/// the position in `polys` of the generator it was reduced from.
struct TriangularBasis {
  WordIndex index;
  Echelon echelon;

  /// The achievable tips, ascending in the order.
  std::vector<Word> tips() const;
};

TriangularBasis triangularize(OrderKind order, const SignaturePtr& sig,
                              const std::vector<Polynomial>& polys);

/// { TIP(f) : 0 != f in span(subspace) }, ascending in the order. Its size is
/// the dimension of the span.
std::vector<Word> tip_set(OrderKind order, const std::vector<Polynomial>& subspace);

}  // namespace dgcell
