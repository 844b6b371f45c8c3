#include "dgcell/dg_algebra.hpp"

#include <random>

namespace dgcell {

std::string_view to_string(DgaError::Kind kind) {
  switch (kind) {
    case DgaError::Kind::TriangularityViolation: return "TriangularityViolation";
    case DgaError::Kind::DegreeViolation: return "DegreeViolation";
    case DgaError::Kind::WeightViolation: return "WeightViolation";
    case DgaError::Kind::DSquaredNonzero: return "DSquaredNonzero";
    case DgaError::Kind::InvalidRule: return "InvalidRule";
  }
  return "?";
}

DgaError::DgaError(Kind kind, std::string generator, const std::string& detail)
    : std::invalid_argument(std::string(to_string(kind)) + " at generator " + generator + ": " + detail),
      kind_(kind),
      generator_(std::move(generator)) {}

FiniteCellDGA build_dga(SignaturePtr sig, const std::vector<DifferentialRule>& rules) {
  const Signature& s = *sig;
  std::vector<Polynomial> differential(s.size(), Polynomial(sig));
  std::vector<bool> seen(s.size(), false);
  for (const auto& [letter, image] : rules) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= s.size())
      throw DgaError(DgaError::Kind::InvalidRule, std::to_string(letter), "no such generator");
    const auto& gen = s.generator(static_cast<std::size_t>(letter));
    if (!same_signature(sig, image.signature())) throw SignatureMismatch();
    if (seen[static_cast<std::size_t>(letter)])
      throw DgaError(DgaError::Kind::InvalidRule, gen.name, "differential given twice");
    seen[static_cast<std::size_t>(letter)] = true;
    differential[static_cast<std::size_t>(letter)] = image;
  }

  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& gen = s.generator(i);
    for (const auto& [w, c] : differential[i].terms()) {
      for (auto l : w.letters())
        if (static_cast<std::size_t>(l) >= i)
          throw DgaError(DgaError::Kind::TriangularityViolation, gen.name,
                         "d " + gen.name + " uses " + s.generator(static_cast<std::size_t>(l)).name);
      int deg = cohom_degree(s, w);
      if (deg != gen.cohom_degree + 1)
        throw DgaError(DgaError::Kind::DegreeViolation, gen.name,
                       "term " + format_word(s, w) + " has degree " + std::to_string(deg) + ", expected " +
                           std::to_string(gen.cohom_degree + 1));
      int wt = weight(s, w);
      if (wt > gen.weight)
        throw DgaError(DgaError::Kind::WeightViolation, gen.name,
                       "term " + format_word(s, w) + " has weight " + std::to_string(wt) + " > " +
                           std::to_string(gen.weight));
    }
  }

  FiniteCellDGA A(sig, std::move(differential));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!apply_d(A, A.d_generator(static_cast<int>(i))).is_zero())
      throw DgaError(DgaError::Kind::DSquaredNonzero, s.generator(i).name, "d(d x) != 0");
  }
  return A;
}

Polynomial apply_d(const FiniteCellDGA& A, const Word& w) {
  const Signature& s = A.sig();
  Polynomial out(A.signature());
  int prefix_degree = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Polynomial& dl = A.d_generator(w[j]);
    if (!dl.is_zero()) {
      Word prefix = w.subword(0, j);
      Word suffix = w.subword(j + 1, w.size() - j - 1);
      Rational sign = (prefix_degree % 2 == 0) ? 1 : -1;
      for (const auto& [m, c] : dl.terms()) out.add_term(prefix * m * suffix, sign * c);
    }
    prefix_degree += s.generator(static_cast<std::size_t>(w[j])).cohom_degree;
  }
  return out;
}

Polynomial apply_d(const FiniteCellDGA& A, const Polynomial& p) {
  if (!same_signature(A.signature(), p.signature())) throw SignatureMismatch();
  Polynomial out(A.signature());
  for (const auto& [w, c] : p.terms()) out += apply_d(A, w) * c;
  return out;
}

std::optional<DSquaredCounterexample> check_d_squared(const FiniteCellDGA& A, std::size_t random_words,
                                                      std::uint64_t seed) {
  const Signature& s = A.sig();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!apply_d(A, A.d_generator(static_cast<int>(i))).is_zero())
      return DSquaredCounterexample{Word{static_cast<int>(i)}};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(s.size()) - 1);
  for (std::size_t k = 0; k < random_words; ++k) {
    std::vector<int> letters;
    int wt = 0;
    for (;;) {
      int l = letter(rng);
      int next = wt + s.generator(static_cast<std::size_t>(l)).weight;
      if (next > 6 || rng() % 5 == 0) break;
      letters.push_back(l);
      wt = next;
    }
    Word w(std::move(letters));
    if (!apply_d(A, apply_d(A, w)).is_zero()) return DSquaredCounterexample{w};
  }
  return std::nullopt;
}

std::optional<Word> check_tip_decreasing(const FiniteCellDGA& A, OrderKind order, int weight_bound) {
  for (const auto& f : words_up_to_weight(A.sig(), weight_bound)) {
    Polynomial df = apply_d(A, f);
    if (df.is_zero()) continue;
    if (compare(order, A.sig(), tip(order, df).word, f) >= 0) return f;
  }
  return std::nullopt;
}

}  // namespace dgcell
