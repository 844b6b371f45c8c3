#pragma once

// Brute-force reference computations used to cross-check the library.
// Everything here is dense and deliberately naive.

#include <cstddef>
#include <ostream>
#include <random>
#include <vector>

#include "dgcell/free_algebra.hpp"
#include "dgcell/linalg.hpp"
#include "dgcell/monomial_orders.hpp"

namespace oracle {

using dgcell::Rational;
using Matrix = std::vector<std::vector<Rational>>;

// mpq_class(a, b) is not reduced on construction
inline Rational frac(const dgcell::Integer& a, const dgcell::Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// Row reduction with rational pivots, searching every column in turn.
inline std::size_t dense_rank(Matrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline Matrix to_dense(const std::vector<dgcell::SparseVec>& rows, std::size_t cols) {
  Matrix m(rows.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& e : rows[i]) m[i][e.col] += e.value;
  return m;
}

inline dgcell::SparseVec random_sparse(std::mt19937_64& rng, std::size_t cols, double density, int range = 3) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  dgcell::SparseVec v;
  for (std::size_t c = 0; c < cols; ++c)
    if (coin(rng) < density) {
      v.push_back({c, frac(num(rng), den(rng))});
    }
  return dgcell::canonical(std::move(v));
}

// All words over `letters` letters of length <= max_len, generated
// independently of the library's enumeration.
inline std::vector<std::vector<int>> all_words(int letters, int max_len) {
  std::vector<std::vector<int>> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int l = 0; l < letters; ++l) {
        auto w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace oracle

// readable gtest failure messages
namespace dgcell {
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Word& w, std::ostream* os) {
  *os << "[";
  for (auto l : w.letters()) *os << ' ' << l;
  *os << " ]";
}
}  // namespace dgcell
