#include "dgcell/monomial_orders.hpp"

#include <algorithm>

namespace dgcell {

std::string_view to_string(OrderKind order) {
  return order == OrderKind::RightLex ? "rightlex" : "degord";
}

std::optional<OrderKind> parse_order(std::string_view name) {
  if (name == "rightlex") return OrderKind::RightLex;
  if (name == "degord") return OrderKind::DegreeOrder;
  return std::nullopt;
}

std::strong_ordering compare_rightlex(const Word& u, const Word& v) {
  std::size_t n = std::max(u.size(), v.size());
  for (std::size_t i = 1; i <= n; ++i) {
    // -1 stands for the padding symbol 1, below every generator.
    int a = i <= u.size() ? u[u.size() - i] : -1;
    int b = i <= v.size() ? v[v.size() - i] : -1;
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(OrderKind order, const Signature& sig, const Word& u, const Word& v) {
  if (order == OrderKind::RightLex) return compare_rightlex(u, v);
  DegreeVector du = degree_vector(sig, u);
  DegreeVector dv = degree_vector(sig, v);
  for (std::size_t i = du.size(); i-- > 0;)
    if (du[i] != dv[i]) return du[i] <=> dv[i];
  return compare_rightlex(u, v);
}

std::string to_string(const Polynomial& p, OrderKind order) {
  WordLess less{order, p.signature()};
  return format_polynomial(p, less);
}

TipTerm tip(OrderKind order, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialTip();
  const auto& sig = *f.signature();
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (compare(order, sig, it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

std::optional<LeftMulCounterexample> check_left_mul_preserved(OrderKind order, const Signature& sig,
                                                              std::size_t length_bound) {
  auto words = words_up_to_length(sig.size(), length_bound);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.size() + v.size() > length_bound) continue;
      // For monomials TIP is the word itself.
      if (compare(order, sig, v, u * v) > 0) return LeftMulCounterexample{u, v};
    }
  }
  return std::nullopt;
}

WordIndex::WordIndex(OrderKind order, SignaturePtr sig, std::vector<Word> words)
    : order_(order), sig_(std::move(sig)), words_(std::move(words)) {
  std::sort(words_.begin(), words_.end(), WordLess{order_, sig_});
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  cols_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) cols_.emplace(words_[i], i);
}

WordIndex WordIndex::up_to_weight(OrderKind order, SignaturePtr sig, int max_weight) {
  auto words = words_up_to_weight(*sig, max_weight);
  return WordIndex(order, std::move(sig), std::move(words));
}

WordIndex WordIndex::from_supports(OrderKind order, SignaturePtr sig,
                                   const std::vector<Polynomial>& polys) {
  std::vector<Word> words;
  for (const auto& p : polys) {
    if (!same_signature(sig, p.signature())) throw SignatureMismatch();
    for (const auto& [w, c] : p.terms()) words.push_back(w);
  }
  return WordIndex(order, std::move(sig), std::move(words));
}

std::optional<std::size_t> WordIndex::col(const Word& w) const {
  auto it = cols_.find(w);
  if (it == cols_.end()) return std::nullopt;
  return it->second;
}

SparseVec WordIndex::to_vec(const Polynomial& p) const {
  if (!same_signature(sig_, p.signature())) throw SignatureMismatch();
  SparseVec v;
  v.reserve(p.size());
  for (const auto& [w, c] : p.terms()) {
    auto it = cols_.find(w);
    if (it == cols_.end())
      throw std::out_of_range("word " + format_word(*sig_, w) + " is outside the indexed space");
    v.push_back({it->second, c});
  }
  return canonical(std::move(v));
}

Polynomial WordIndex::to_poly(const SparseVec& v) const {
  Polynomial p(sig_);
  for (const auto& e : v) p.add_term(words_.at(e.col), e.value);
  return p;
}

std::vector<Word> TriangularBasis::tips() const {
  std::vector<std::size_t> cols;
  cols.reserve(echelon.rank());
  for (const auto& row : echelon.rows()) cols.push_back(row.vec.front().col);
  std::sort(cols.begin(), cols.end());
  std::vector<Word> out;
  out.reserve(cols.size());
  for (auto c : cols) out.push_back(index.word(c));
  return out;
}

TriangularBasis triangularize(OrderKind order, const SignaturePtr& sig,
                              const std::vector<Polynomial>& polys) {
  TriangularBasis out{WordIndex::from_supports(order, sig, polys), Echelon{}};
  // Highest tips first keeps reductions short.
  std::vector<std::pair<SparseVec, int>> rows;
  rows.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    auto v = out.index.to_vec(polys[i]);
    if (!v.empty()) rows.emplace_back(std::move(v), static_cast<int>(i));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.first.front().col > b.first.front().col;
  });
  for (auto& [v, tag] : rows) out.echelon.insert(std::move(v), tag);
  return out;
}

std::vector<Word> tip_set(OrderKind order, const std::vector<Polynomial>& subspace) {
  if (subspace.empty()) return {};
  return triangularize(order, subspace.front().signature(), subspace).tips();
}

}  // namespace dgcell
