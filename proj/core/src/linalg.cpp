#include "dgcell/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace dgcell {

SparseVec canonical(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.col > b.col; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().value += e.value;
      if (out.back().value == 0) out.pop_back();
    } else if (e.value != 0) {
      e.value.canonicalize();
      out.push_back(std::move(e));
    }
  }
  return out;
}

SparseVec axpy(const SparseVec& v, const Rational& c, const SparseVec& w) {
  if (c == 0) return v;
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].col > w[j].col)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].col > v[i].col) {
      out.push_back({w[j].col, -c * w[j].value});
      ++j;
    } else {
      Rational x = v[i].value - c * w[j].value;
      if (x != 0) out.push_back({v[i].col, std::move(x)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(SparseVec v, const Rational& c) {
  if (c == 0) return {};
  for (auto& e : v) e.value *= c;
  return v;
}

SparseVec Echelon::reduce_leading(SparseVec v,
                                  std::vector<std::pair<std::size_t, Rational>>* coords) const {
  while (!v.empty()) {
    auto r = pivot_row(v.front().col);
    if (r < 0) break;
    Rational c = v.front().value;
    v = axpy(v, c, rows_[static_cast<std::size_t>(r)].vec);
    if (coords) coords->emplace_back(static_cast<std::size_t>(r), std::move(c));
  }
  return v;
}

SparseVec Echelon::normal_form(SparseVec v) const {
  // Terms moved to `done` are final: nothing later can reintroduce them.
  SparseVec done;
  while (!v.empty()) {
    auto r = pivot_row(v.front().col);
    if (r < 0) {
      done.push_back(std::move(v.front()));
      v.erase(v.begin());
      continue;
    }
    Rational c = v.front().value;
    v = axpy(v, c, rows_[static_cast<std::size_t>(r)].vec);
  }
  return done;
}

bool Echelon::insert(SparseVec v, int tag) {
  v = reduce_leading(std::move(v));
  if (v.empty()) return false;
  Rational lead = v.front().value;
  if (lead != 1) {
    Rational inv = 1 / lead;
    for (auto& e : v) e.value *= inv;
  }
  std::size_t col = v.front().col;
  if (pivot_of_col_.size() <= col) pivot_of_col_.resize(col + 1, -1);
  pivot_of_col_[col] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back({std::move(v), tag});
  return true;
}

namespace {

struct IntEntry {
  std::size_t col;
  Integer value;
};
using IntVec = std::vector<IntEntry>;

IntVec to_primitive_integer(const SparseVec& v) {
  Integer den = 1;
  for (const auto& e : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.value.get_den_mpz_t());
  IntVec out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& e : v) {
    Integer x = e.value.get_num() * (den / e.value.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.push_back({e.col, std::move(x)});
  }
  if (g > 1)
    for (auto& e : out) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  return out;
}

// a*v - b*w, made primitive again.
IntVec combine(const Integer& a, const IntVec& v, const Integer& b, const IntVec& w) {
  IntVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  Integer g = 0;
  auto push = [&](std::size_t col, Integer x) {
    if (x == 0) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.push_back({col, std::move(x)});
  };
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].col > w[j].col)) {
      push(v[i].col, a * v[i].value);
      ++i;
    } else if (i == v.size() || w[j].col > v[i].col) {
      push(w[j].col, -b * w[j].value);
      ++j;
    } else {
      push(v[i].col, a * v[i].value - b * w[j].value);
      ++i;
      ++j;
    }
  }
  if (g > 1)
    for (auto& e : out) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace

std::size_t rank_fraction_free(const std::vector<SparseVec>& rows) {
  std::vector<IntVec> pivots;
  std::vector<std::ptrdiff_t> pivot_of_col;
  for (const auto& row : rows) {
    IntVec v = to_primitive_integer(row);
    while (!v.empty()) {
      std::size_t col = v.front().col;
      std::ptrdiff_t p = col < pivot_of_col.size() ? pivot_of_col[col] : -1;
      if (p < 0) break;
      const IntVec& w = pivots[static_cast<std::size_t>(p)];
      Integer g;
      mpz_gcd(g.get_mpz_t(), v.front().value.get_mpz_t(), w.front().value.get_mpz_t());
      Integer a = w.front().value / g;
      Integer b = v.front().value / g;
      v = combine(a, v, b, w);
    }
    if (v.empty()) continue;
    std::size_t col = v.front().col;
    if (pivot_of_col.size() <= col) pivot_of_col.resize(col + 1, -1);
    pivot_of_col[col] = static_cast<std::ptrdiff_t>(pivots.size());
    pivots.push_back(std::move(v));
  }
  return pivots.size();
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& images) {
  // Augment each image with a unit vector placed below every image column,
  // so leading-term elimination clears the image part first.
  std::size_t offset = images.size();
  Echelon ech;
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVec aug;
    aug.reserve(images[i].size() + 1);
    for (const auto& e : images[i]) aug.push_back({e.col + offset, e.value});
    aug.push_back({i, Rational(1)});
    aug = ech.reduce_leading(std::move(aug));
    if (!aug.empty() && aug.front().col < offset) out.push_back(aug);
    ech.insert(std::move(aug));
  }
  return out;
}

}  // namespace dgcell
