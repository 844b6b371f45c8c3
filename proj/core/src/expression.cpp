#include "dgcell/expression.hpp"

#include <cctype>

namespace dgcell {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SignaturePtr& sig) : text_(text), sig_(sig) {}

  Polynomial parse() {
    Polynomial result(sig_);
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    result += parse_term() * Rational(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected '") + c + "'");
      ++pos_;
      result += parse_term() * Rational(c == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool peek_digit() {
    skip_ws();
    return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  bool peek_ident_start() {
    skip_ws();
    return !at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_');
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer posint() {
    skip_ws();
    std::size_t start = pos_;
    if (!peek_digit()) throw ParseError(pos_, "expected a positive integer");
    Integer n(digits());
    if (n <= 0) throw ParseError(start, "expected a positive integer");
    return n;
  }

  Rational rational() {
    Rational value{Integer(digits())};
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      value /= Rational(posint());
    }
    value.canonicalize();
    return value;
  }

  Word factor() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto letter = sig_->find(name);
    if (!letter) throw ParseError(start, "unknown generator '" + name + "'");
    skip_ws();
    std::size_t exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      Integer e = posint();
      if (!e.fits_ulong_p() || e > 4096) throw ParseError(pos_, "exponent too large");
      exponent = e.get_ui();
    }
    return power(*letter, exponent);
  }

  Polynomial parse_term() {
    skip_ws();
    std::size_t start = pos_;
    Rational coeff = 1;
    bool have_coeff = false;
    Word word;
    bool have_factor = false;
    if (peek_digit()) {
      coeff = rational();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        if (!peek_ident_start()) throw ParseError(pos_, "expected a generator after '*'");
      }
    }
    while (peek_ident_start()) {
      word = word * factor();
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        if (!peek_ident_start()) throw ParseError(pos_, "expected a generator after '*'");
      }
    }
    if (!have_coeff && !have_factor) throw ParseError(start, "expected a term");
    return Polynomial::monomial(sig_, word, coeff);
  }

  std::string_view text_;
  const SignaturePtr& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const SignaturePtr& sig) {
  return Parser(text, sig).parse();
}

}  // namespace dgcell
