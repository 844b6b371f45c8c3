#include "dgcell/free_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace dgcell {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Signature::Signature(std::vector<GeneratorSpec> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidSignature("signature must have at least one generator");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    auto& g = generators_[i];
    if (!is_identifier(g.name)) throw InvalidSignature("invalid generator name '" + g.name + "'");
    if (!seen.insert(g.name).second) throw InvalidSignature("duplicate generator name '" + g.name + "'");
    if (g.weight < 1) throw InvalidSignature("generator '" + g.name + "' has weight < 1");
    if (g.index == 0) g.index = static_cast<int>(i) + 1;
    if (g.index != static_cast<int>(i) + 1)
      throw InvalidSignature("generator '" + g.name + "' has index " + std::to_string(g.index) +
                             ", expected " + std::to_string(i + 1));
  }
}

std::optional<int> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

SignaturePtr make_signature(std::vector<GeneratorSpec> generators) {
  return std::make_shared<const Signature>(std::move(generators));
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Word::Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto l : w.letters()) {
    h ^= static_cast<std::size_t>(l) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

Word power(Word::Letter letter, std::size_t count) {
  return Word(std::vector<Word::Letter>(count, letter));
}

int cohom_degree(const Signature& sig, const Word& w) {
  int d = 0;
  for (auto l : w.letters()) d += sig.generator(static_cast<std::size_t>(l)).cohom_degree;
  return d;
}

int weight(const Signature& sig, const Word& w) {
  int total = 0;
  for (auto l : w.letters()) total += sig.generator(static_cast<std::size_t>(l)).weight;
  return total;
}

DegreeVector degree_vector(const Signature& sig, const Word& w) {
  DegreeVector counts(sig.size(), 0);
  for (auto l : w.letters()) ++counts.at(static_cast<std::size_t>(l));
  return counts;
}

bool is_valid_word(const Signature& sig, const Word& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [&](Word::Letter l) {
    return l >= 0 && static_cast<std::size_t>(l) < sig.size();
  });
}

std::vector<Word> words_up_to_weight(const Signature& sig, int max_weight) {
  std::vector<Word> out;
  if (max_weight < 0) return out;
  // Breadth-first by length; each level extends the previous one on the right.
  std::vector<std::pair<Word, int>> level{{Word{}, 0}};
  while (!level.empty()) {
    std::vector<std::pair<Word, int>> next;
    for (const auto& [w, wt] : level) {
      out.push_back(w);
      for (std::size_t g = 0; g < sig.size(); ++g) {
        int nw = wt + sig.generator(g).weight;
        if (nw <= max_weight) next.emplace_back(w * Word{static_cast<int>(g)}, nw);
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Word> words_up_to_length(std::size_t letters, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t g = 0; g < letters; ++g) out.push_back(out[i] * Word{static_cast<int>(g)});
    begin = end;
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(SignaturePtr sig) : sig_(std::move(sig)) {
  if (!sig_) throw InvalidSignature("polynomial requires a signature");
}

Polynomial Polynomial::monomial(SignaturePtr sig, Word w, const Rational& c) {
  Polynomial p(std::move(sig));
  if (!is_valid_word(*p.sig_, w)) throw std::out_of_range("word uses a letter outside the signature");
  p.add_term(w, c);
  return p;
}

Polynomial Polynomial::constant(SignaturePtr sig, const Rational& c) {
  return monomial(std::move(sig), Word{}, c);
}

Polynomial Polynomial::generator(SignaturePtr sig, Word::Letter letter) {
  return monomial(std::move(sig), Word{letter}, 1);
}

Rational Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  Rational q = c;
  q.canonicalize();
  auto [it, inserted] = terms_.try_emplace(w, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::weight() const {
  int best = 0;
  for (const auto& [w, c] : terms_) best = std::max(best, dgcell::weight(*sig_, w));
  return best;
}

void Polynomial::check_same(const Polynomial& other) const {
  if (!same_signature(sig_, other.sig_)) throw SignatureMismatch();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial out(a.sig_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_signature(sig_, other.sig_) && terms_ == other.terms_;
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

std::optional<int> is_homogeneous(const Polynomial& p) {
  std::optional<int> degree;
  for (const auto& [w, c] : p.terms()) {
    int d = cohom_degree(*p.signature(), w);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

std::string format_word(const Signature& sig, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << '*';
    first = false;
    os << sig.generator(static_cast<std::size_t>(w[i])).name;
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string format_polynomial(const Polynomial& p,
                              const std::function<bool(const Word&, const Word&)>& less) {
  if (p.is_zero()) return "0";
  std::vector<const Polynomial::Terms::value_type*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](const auto* a, const auto* b) { return less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : terms) {
    Rational c = t->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (t->first.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << format_word(*p.signature(), t->first);
    }
  }
  return os.str();
}

}  // namespace dgcell
