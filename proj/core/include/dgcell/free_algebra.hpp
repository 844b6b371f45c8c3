#pragma once

// Exact arithmetic in the free associative algebra Q<x1,...,xn> with a
// cohomological grading and a positive filtration weight on generators.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dgcell {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

class SignatureMismatch : public std::invalid_argument {
 public:
  SignatureMismatch() : std::invalid_argument("polynomials live over different signatures") {}
};

class InvalidSignature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratorSpec {
  std::string name;
  int index = 0;  // 1-based position in the signature
  int cohom_degree = 0;
  int weight = 1;

  bool operator==(const GeneratorSpec&) const = default;
};

/// Ordered list of generators. The list order is the base order
/// 1 < x1 < x2 < ... < xn used by every monomial order.
class Signature {
 public:
  /// Validates names (identifiers, unique), weights (>= 1) and indices.
  /// An index of 0 is filled in from the position.
  explicit Signature(std::vector<GeneratorSpec> generators);

  std::size_t size() const { return generators_.size(); }
  const GeneratorSpec& generator(std::size_t letter) const { return generators_.at(letter); }
  const std::vector<GeneratorSpec>& generators() const { return generators_; }

  /// 0-based letter of the generator called `name`.
  std::optional<int> find(std::string_view name) const;

  bool operator==(const Signature& other) const { return generators_ == other.generators_; }

 private:
  std::vector<GeneratorSpec> generators_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<GeneratorSpec> generators);

bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

/// A monomial: a sequence of 0-based letters. The empty word is the unit.
class Word {
 public:
  using Letter = int;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Letters [pos, pos + len).
  Word subword(std::size_t pos, std::size_t len) const;

  friend Word operator*(const Word& a, const Word& b);

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Word consisting of `count` copies of `letter`.
Word power(Word::Letter letter, std::size_t count);

using DegreeVector = std::vector<int>;

int cohom_degree(const Signature& sig, const Word& w);
int weight(const Signature& sig, const Word& w);
DegreeVector degree_vector(const Signature& sig, const Word& w);

/// True iff every letter is a valid generator of `sig`.
bool is_valid_word(const Signature& sig, const Word& w);

/// All words of weight <= max_weight, shortest first, then lexicographic by letter.
std::vector<Word> words_up_to_weight(const Signature& sig, int max_weight);

/// All words of length <= max_length in a given number of letters.
std::vector<Word> words_up_to_length(std::size_t letters, std::size_t max_length);

class Polynomial {
 public:
  using Terms = std::map<Word, Rational>;

  explicit Polynomial(SignaturePtr sig);

  static Polynomial monomial(SignaturePtr sig, Word w, const Rational& c = 1);
  static Polynomial constant(SignaturePtr sig, const Rational& c);
  /// The generator with 0-based letter `letter`.
  static Polynomial generator(SignaturePtr sig, Word::Letter letter);

  const SignaturePtr& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Word& w) const;
  /// Adds c*w; a coefficient that cancels to zero is removed.
  void add_term(const Word& w, const Rational& c);

  /// Largest word weight among the terms, 0 for the zero polynomial.
  int weight() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const;

 private:
  void check_same(const Polynomial& other) const;

  SignaturePtr sig_;
  Terms terms_;
};

Polynomial multiply(const Polynomial& p, const Polynomial& q);
Polynomial add(const Polynomial& p, const Polynomial& q);

/// Shared degree of all terms; std::nullopt when the terms disagree or p is zero.
std::optional<int> is_homogeneous(const Polynomial& p);

/// x1^2*x2*x3^3 style; "1" for the empty word.
std::string format_word(const Signature& sig, const Word& w);

/// Canonical printer. Terms are listed largest-first under `less`.
/// The output is accepted by parse_expression.
std::string format_polynomial(const Polynomial& p,
                              const std::function<bool(const Word&, const Word&)>& less);

}  // namespace dgcell
