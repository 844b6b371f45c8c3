#include <random>

#include <gtest/gtest.h>

#include "dgcell/expression.hpp"
#include "dgcell/linalg.hpp"
#include "dgcell/monomial_orders.hpp"
#include "dgcell/rewriting.hpp"

using namespace dgcell;

namespace {

SignaturePtr weyl_sig() {
  return make_signature({{"x1", 1, 0, 1}, {"x2", 2, 0, 1}, {"x3", 3, -1, 2}});
}

// Q[t] with x1 = d/dt and x2 = multiplication by t; x3 acts as 0.
using TPoly = std::vector<Rational>;

TPoly act(const Word& w, TPoly f) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    TPoly g;
    if (*it == 0) {
      for (std::size_t k = 1; k < f.size(); ++k) g.push_back(f[k] * static_cast<long>(k));
    } else if (*it == 1) {
      g.push_back(0);
      g.insert(g.end(), f.begin(), f.end());
    }
    f = std::move(g);
  }
  return f;
}

TPoly act(const Polynomial& p, const TPoly& f) {
  TPoly out;
  for (const auto& [w, c] : p.terms()) {
    TPoly g = act(w, f);
    if (g.size() > out.size()) out.resize(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) out[k] += c * g[k];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool same_operator(const Polynomial& a, const Polynomial& b, std::size_t test_degree) {
  for (std::size_t k = 0; k <= test_degree; ++k) {
    TPoly tk(k + 1);
    tk[k] = 1;
    if (act(a, tk) != act(b, tk)) return false;
  }
  return true;
}

bool is_standard(const Word& w) {
  // x2^i x1^j
  bool seen_x1 = false;
  for (auto l : w.letters()) {
    if (l == 2) return false;
    if (l == 0) seen_x1 = true;
    if (l == 1 && seen_x1) return false;
  }
  return true;
}

}  // namespace

TEST(Rewriting, WeylNormalFormExample) {
  auto sig = weyl_sig();
  auto rs = weyl_rewrite_system(sig);
  EXPECT_EQ(normal_form(rs, parse_expression("x1^2 x2", sig)), parse_expression("x2 x1^2 + 2 x1", sig));
  EXPECT_EQ(normal_form(rs, parse_expression("x1 x2 - x2 x1 - 1", sig)), Polynomial(sig));
  EXPECT_TRUE(normal_form(rs, parse_expression("x1 x3 x2", sig)).is_zero());
}

TEST(Rewriting, NormalFormsAgreeWithDifferentialOperators) {
  auto sig = weyl_sig();
  auto rs = weyl_rewrite_system(sig);
  for (const auto& w : words_up_to_weight(*sig, 6)) {
    Polynomial p = Polynomial::monomial(sig, w);
    Polynomial nf = normal_form(rs, p);
    for (const auto& [m, c] : nf.terms()) ASSERT_TRUE(is_standard(m)) << format_word(*sig, m);
    ASSERT_TRUE(same_operator(p, nf, 8)) << format_word(*sig, w);
  }
}

TEST(Rewriting, QuotientDimensionsUpToWeight) {
  auto sig = weyl_sig();
  auto rs = weyl_rewrite_system(sig);
  for (int N = 0; N <= 8; ++N) {
    auto index = WordIndex::up_to_weight(OrderKind::DegreeOrder, sig, N);
    Echelon span;
    for (const auto& w : index.words()) span.insert(index.to_vec(normal_form(rs, Polynomial::monomial(sig, w))));
    EXPECT_EQ(span.rank(), static_cast<std::size_t>((N + 1) * (N + 2) / 2)) << "N = " << N;
  }
}

TEST(Rewriting, NormalFormRespectsProducts) {
  auto sig = weyl_sig();
  auto rs = weyl_rewrite_system(sig);
  auto words = words_up_to_weight(*sig, 4);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  auto random_poly = [&] {
    Polynomial p(sig);
    for (int t = 0; t < 3; ++t) p.add_term(words[pick(rng)], c(rng));
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    auto p = random_poly(), q = random_poly();
    EXPECT_EQ(normal_form(rs, p * q), normal_form(rs, normal_form(rs, p) * normal_form(rs, q)));
  }
}

TEST(Rewriting, WeylSystemIsLocallyConfluent) {
  auto sig = weyl_sig();
  EXPECT_FALSE(check_local_confluence(weyl_rewrite_system(sig), 6));
}

TEST(Rewriting, CriticalPairIsReported) {
  auto sig = weyl_sig();
  RewriteSystem rs(sig, {{Word{0, 1}, Polynomial::constant(sig, 1)}, {Word{1, 0}, Polynomial(sig)}});
  auto cp = check_local_confluence(rs, 4);
  ASSERT_TRUE(cp);
  EXPECT_EQ(cp->word, (Word{0, 1, 0}));
  EXPECT_EQ(cp->left, parse_expression("x1", sig));
  EXPECT_TRUE(cp->right.is_zero());
}

TEST(Rewriting, RulesMustDecreaseTheTip) {
  auto sig = weyl_sig();
  EXPECT_THROW(RewriteSystem(sig, {{Word{1, 0}, parse_expression("x1 x2", sig)}}), std::invalid_argument);
  EXPECT_THROW(RewriteSystem(sig, {{Word{}, parse_expression("1", sig)}}), std::invalid_argument);
}

TEST(Rewriting, BudgetIsEnforced) {
  auto sig = weyl_sig();
  auto rs = weyl_rewrite_system(sig);
  EXPECT_THROW(normal_form(rs, parse_expression("x1^4 x2^4", sig), 5), RewriteBudgetExceeded);
  EXPECT_NO_THROW(normal_form(rs, parse_expression("x1^4 x2^4", sig)));
}
