#include "dgcell/rewriting.hpp"

#include <algorithm>
#include <unordered_map>

#include "dgcell/monomial_orders.hpp"

namespace dgcell {

RewriteSystem::RewriteSystem(SignaturePtr sig, std::vector<Rule> rules)
    : sig_(std::move(sig)), rules_(std::move(rules)) {
  for (const auto& rule : rules_) {
    if (rule.lhs.empty()) throw std::invalid_argument("rewrite rule with empty left-hand side");
    if (!is_valid_word(*sig_, rule.lhs)) throw std::out_of_range("rewrite rule uses an unknown letter");
    if (!same_signature(sig_, rule.rhs.signature())) throw SignatureMismatch();
    if (rule.rhs.is_zero()) continue;
    if (compare(OrderKind::DegreeOrder, *sig_, tip(OrderKind::DegreeOrder, rule.rhs).word, rule.lhs) >= 0)
      throw std::invalid_argument("rewrite rule " + format_word(*sig_, rule.lhs) +
                                  " does not decrease the degree-order tip");
  }
}

std::optional<RewriteSystem::Redex> RewriteSystem::find_redex(const Word& w) const {
  const auto& letters = w.letters();
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const auto& lhs = rules_[r].lhs.letters();
      if (pos + lhs.size() <= letters.size() &&
          std::equal(lhs.begin(), lhs.end(), letters.begin() + static_cast<std::ptrdiff_t>(pos)))
        return Redex{pos, r};
    }
  }
  return std::nullopt;
}

Polynomial RewriteSystem::rewrite_at(const Word& w, const Redex& redex) const {
  const auto& rule = rules_.at(redex.rule);
  Word prefix = w.subword(0, redex.position);
  std::size_t tail = redex.position + rule.lhs.size();
  Word suffix = w.subword(tail, w.size() - tail);
  Polynomial out(sig_);
  for (const auto& [m, c] : rule.rhs.terms()) out.add_term(prefix * m * suffix, c);
  return out;
}

RewriteSystem weyl_rewrite_system(const SignaturePtr& sig) {
  if (sig->size() < 3) throw std::invalid_argument("Weyl rewrite system needs three generators");
  Polynomial swapped = Polynomial::monomial(sig, Word{1, 0}) + Polynomial::constant(sig, 1);
  return RewriteSystem(sig, {{Word{0, 1}, swapped}, {Word{2}, Polynomial(sig)}});
}

namespace {

class NormalFormer {
 public:
  NormalFormer(const RewriteSystem& rs, std::size_t budget) : rs_(rs), budget_(budget) {}

  const Polynomial& word(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    Polynomial result(rs_.signature());
    if (auto redex = rs_.find_redex(w)) {
      if (++steps_ > budget_) throw RewriteBudgetExceeded();
      Polynomial next = rs_.rewrite_at(w, *redex);
      for (const auto& [m, c] : next.terms()) result += word(m) * c;
    } else {
      result.add_term(w, 1);
    }
    return cache_.emplace(w, std::move(result)).first->second;
  }

  Polynomial poly(const Polynomial& p) {
    Polynomial out(rs_.signature());
    for (const auto& [w, c] : p.terms()) out += word(w) * c;
    return out;
  }

 private:
  const RewriteSystem& rs_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::unordered_map<Word, Polynomial, WordHash> cache_;
};

}  // namespace

Polynomial normal_form(const RewriteSystem& rs, const Polynomial& p, std::size_t step_budget) {
  if (!same_signature(rs.signature(), p.signature())) throw SignatureMismatch();
  return NormalFormer(rs, step_budget).poly(p);
}

std::optional<CriticalPair> check_local_confluence(const RewriteSystem& rs,
                                                   std::size_t overlap_length_bound) {
  const auto& rules = rs.rules();
  auto resolve = [&](const Word& w, std::size_t r1, std::size_t pos1, std::size_t r2,
                     std::size_t pos2) -> std::optional<CriticalPair> {
    if (w.size() > overlap_length_bound) return std::nullopt;
    Polynomial a = normal_form(rs, rs.rewrite_at(w, {pos1, r1}));
    Polynomial b = normal_form(rs, rs.rewrite_at(w, {pos2, r2}));
    if (a == b) return std::nullopt;
    return CriticalPair{w, a, b};
  };

  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      // Proper overlaps: a suffix of li equals a prefix of lj.
      for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (li.subword(li.size() - k, k) != lj.subword(0, k)) continue;
        Word w = li * lj.subword(k, lj.size() - k);
        if (auto cp = resolve(w, i, 0, j, li.size() - k)) return cp;
      }
      // Inclusions: lj occurs inside li.
      if (i != j && lj.size() <= li.size()) {
        for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
          if (li.subword(p, lj.size()) != lj) continue;
          if (auto cp = resolve(li, i, 0, j, p)) return cp;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace dgcell
