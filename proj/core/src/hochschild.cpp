#include "dgcell/hochschild.hpp"

#include <algorithm>

#include "dgcell/linalg.hpp"
#include "dgcell/parallel.hpp"

namespace dgcell {

FiniteDimAlgebra::FiniteDimAlgebra(std::vector<std::string> labels, Structure structure, Vector unit)
    : labels_(std::move(labels)), c_(std::move(structure)), unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw AlgebraError(AlgebraError::Kind::BadShape, "algebra needs at least one basis element");
  if (c_.size() != d || unit_.size() != d)
    throw AlgebraError(AlgebraError::Kind::BadShape, "structure constants do not match the basis size");
  for (const auto& row : c_) {
    if (row.size() != d) throw AlgebraError(AlgebraError::Kind::BadShape, "structure constants are not square");
    for (const auto& v : row)
      if (v.size() != d) throw AlgebraError(AlgebraError::Kind::BadShape, "product vector has the wrong length");
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto left = multiply(c_[i][j], basis_vector(k));
        auto right = multiply(basis_vector(i), c_[j][k]);
        if (left != right)
          throw AlgebraError(AlgebraError::Kind::NonAssociative,
                             "(" + labels_[i] + " " + labels_[j] + ") " + labels_[k] + " != " + labels_[i] + " (" +
                                 labels_[j] + " " + labels_[k] + ")");
      }
  for (std::size_t i = 0; i < d; ++i) {
    auto e = basis_vector(i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      throw AlgebraError(AlgebraError::Kind::NoUnit, "unit law fails on " + labels_[i]);
  }
}

FiniteDimAlgebra::Vector FiniteDimAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim(); ++k) out[k] += ab * c_[i][j][k];
    }
  }
  return out;
}

FiniteDimAlgebra::Vector FiniteDimAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

FiniteDimAlgebra dual_numbers() {
  using V = FiniteDimAlgebra::Vector;
  return FiniteDimAlgebra({"1", "x"}, {{V{1, 0}, V{0, 1}}, {V{0, 1}, V{0, 0}}}, V{1, 0});
}

FiniteDimAlgebra split_semisimple(std::size_t factors) {
  FiniteDimAlgebra::Structure c(factors, std::vector<FiniteDimAlgebra::Vector>(factors, FiniteDimAlgebra::Vector(factors)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < factors; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    c[i][i][i] = 1;
  }
  return FiniteDimAlgebra(std::move(labels), std::move(c), FiniteDimAlgebra::Vector(factors, Rational(1)));
}

FiniteDimAlgebra ground_field() { return FiniteDimAlgebra({"1"}, {{{Rational(1)}}}, {Rational(1)}); }

std::vector<std::size_t> HHTable::dims() const {
  std::vector<std::size_t> out;
  for (const auto& e : entries) out.push_back(e.dim);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Structure constants in a basis whose first vector is the unit.
std::vector<std::vector<FiniteDimAlgebra::Vector>> unit_first_table(const FiniteDimAlgebra& B) {
  const std::size_t d = B.dim();
  const auto& u = B.unit();
  std::size_t p = 0;
  while (u[p] == 0) ++p;
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < d; ++j)
    if (j != p) rest.push_back(j);

  auto to_new = [&](const FiniteDimAlgebra::Vector& x) {
    FiniteDimAlgebra::Vector y(d);
    y[0] = x[p] / u[p];
    for (std::size_t t = 0; t < rest.size(); ++t) y[t + 1] = x[rest[t]] - y[0] * u[rest[t]];
    return y;
  };
  std::vector<FiniteDimAlgebra::Vector> basis{u};
  for (auto j : rest) basis.push_back(B.basis_vector(j));

  std::vector<std::vector<FiniteDimAlgebra::Vector>> table(d, std::vector<FiniteDimAlgebra::Vector>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) table[a][b] = to_new(B.multiply(basis[a], basis[b]));
  return table;
}

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

HHTable hh_bar(const FiniteDimAlgebra& B, std::size_t n_max, const BarGuards& guards, std::size_t threads) {
  const std::size_t d = B.dim();
  if (d > guards.max_dim)
    throw AlgebraError(AlgebraError::Kind::GuardExceeded,
                       "dim B = " + std::to_string(d) + " exceeds the guard " + std::to_string(guards.max_dim));
  if (n_max > guards.max_degree)
    throw AlgebraError(AlgebraError::Kind::GuardExceeded,
                       "n_max = " + std::to_string(n_max) + " exceeds the guard " + std::to_string(guards.max_degree));

  const auto table = unit_first_table(B);
  const std::size_t bar = d - 1;
  auto chain_dim = [&](std::size_t n) { return d * checked_pow(bar, n); };

  // Tensor a0 (x) a1 ... (x) an is indexed as k0 + d * sum_i (k_i - 1) bar^{i-1}.
  auto encode = [&](const std::vector<std::size_t>& k) {
    std::size_t idx = 0;
    for (std::size_t i = k.size(); i-- > 1;) idx = idx * bar + (k[i] - 1);
    return idx * d + k[0];
  };
  auto decode = [&](std::size_t idx, std::size_t n) {
    std::vector<std::size_t> k(n + 1);
    k[0] = idx % d;
    idx /= d;
    for (std::size_t i = 1; i <= n; ++i) {
      k[i] = idx % bar + 1;
      idx /= bar;
    }
    return k;
  };

  // ranks[n] = rank of b_n : C_n -> C_{n-1}, for n = 1 .. n_max + 1.
  std::vector<std::size_t> ranks(n_max + 2, 0);
  if (bar > 0) {
    parallel_for(n_max + 1, threads, [&](std::size_t t) {
      const std::size_t n = t + 1;
      std::vector<SparseVec> rows;
      rows.reserve(chain_dim(n));
      for (std::size_t idx = 0; idx < chain_dim(n); ++idx) {
        auto k = decode(idx, n);
        SparseVec row;
        std::vector<std::size_t> face(n);
        // a0 a1 (x) a2 ... an
        for (std::size_t c = 0; c < d; ++c) {
          if (table[k[0]][k[1]][c] == 0) continue;
          face[0] = c;
          std::copy(k.begin() + 2, k.end(), face.begin() + 1);
          row.push_back({encode(face), table[k[0]][k[1]][c]});
        }
        // (-1)^i a0 ... (a_i a_{i+1}) ... an, product projected to Bbar
        for (std::size_t i = 1; i < n; ++i) {
          Rational sign = i % 2 == 0 ? 1 : -1;
          for (std::size_t c = 1; c < d; ++c) {
            const Rational& coef = table[k[i]][k[i + 1]][c];
            if (coef == 0) continue;
            std::copy(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(i), face.begin());
            face[i] = c;
            std::copy(k.begin() + static_cast<std::ptrdiff_t>(i) + 2, k.end(),
                      face.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            row.push_back({encode(face), sign * coef});
          }
        }
        // (-1)^n an a0 (x) a1 ... a_{n-1}
        Rational sign = n % 2 == 0 ? 1 : -1;
        for (std::size_t c = 0; c < d; ++c) {
          const Rational& coef = table[k[n]][k[0]][c];
          if (coef == 0) continue;
          face[0] = c;
          std::copy(k.begin() + 1, k.end() - 1, face.begin() + 1);
          row.push_back({encode(face), sign * coef});
        }
        rows.push_back(canonical(std::move(row)));
      }
      ranks[n] = rank_fraction_free(rows);
    });
  }

  HHTable out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::size_t incoming = n + 1 < ranks.size() ? ranks[n + 1] : 0;
    out.entries.push_back({chain_dim(n) - ranks[n] - incoming, true});
  }
  return out;
}

// ---------------------------------------------------------------------------

WeylElement WeylElement::monomial(int i, int j, const Rational& c) {
  WeylElement a;
  a.add_term(i, j, c);
  return a;
}

WeylElement WeylElement::generator(int g) {
  if (g == 1) return monomial(0, 1);
  if (g == 2) return monomial(1, 0);
  throw std::invalid_argument("Weyl generator index must be 1 or 2");
}

Rational WeylElement::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in Weyl monomial");
  if (c == 0) return;
  Rational q = c;
  q.canonicalize();
  auto [it, inserted] = terms_.try_emplace({i, j}, q);
  if (inserted) return;
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

WeylElement operator*(const Rational& c, const WeylElement& a) {
  WeylElement out;
  for (const auto& [k, v] : a.terms_) out.add_term(k.first, k.second, c * v);
  return out;
}

// (x2^a x1^b)(x2^c x1^d) = sum_l C(b,l) (c)_l x2^{a+c-l} x1^{b+d-l}
WeylElement operator*(const WeylElement& x, const WeylElement& y) {
  WeylElement out;
  for (const auto& [k1, c1] : x.terms_) {
    auto [a, b] = k1;
    for (const auto& [k2, c2] : y.terms_) {
      auto [c, d] = k2;
      Integer binom = 1, falling = 1;
      for (int l = 0; l <= std::min(b, c); ++l) {
        if (l > 0) {
          binom = binom * (b - l + 1) / l;
          falling *= c - l + 1;
        }
        out.add_term(a + c - l, b + d - l, c1 * c2 * Rational(binom * falling));
      }
    }
  }
  return out;
}

std::string to_string(const WeylElement& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    auto [i, j] = it->first;
    Rational c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    if (i > 0) mono += i == 1 ? "x2" : "x2^" + std::to_string(i);
    if (j > 0) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("x1") : "x1^" + std::to_string(j));
    if (mono.empty())
      s += to_string(c);
    else
      s += c == 1 ? mono : to_string(c) + "*" + mono;
  }
  return s;
}

WeylElement weyl_commutator(int g, const WeylElement& a) {
  WeylElement out;
  for (const auto& [k, c] : a.terms()) {
    auto [i, j] = k;
    if (g == 1) {
      if (i > 0) out.add_term(i - 1, j, c * i);
    } else if (g == 2) {
      if (j > 0) out.add_term(i, j - 1, -c * j);
    } else {
      throw std::invalid_argument("Weyl generator index must be 1 or 2");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Coordinates of a homogeneous element of total degree t: x2^i x1^{t-i} -> i.
SparseVec piece_coords(const WeylElement& a, std::size_t offset) {
  SparseVec v;
  for (const auto& [k, c] : a.terms()) v.push_back({offset + static_cast<std::size_t>(k.first), c});
  return canonical(std::move(v));
}

WeylPiece compute_piece(int m, bool& d_squared_zero) {
  WeylPiece piece;
  piece.m = m;
  const int t2 = m, t1 = m - 1, t0 = m - 2;
  piece.c2 = static_cast<std::size_t>(t2 + 1);
  piece.c1 = t1 >= 0 ? 2 * static_cast<std::size_t>(t1 + 1) : 0;
  piece.c0 = t0 >= 0 ? static_cast<std::size_t>(t0 + 1) : 0;
  const std::size_t half = piece.c1 / 2;

  std::vector<SparseVec> d2_rows;
  for (int i = 0; i <= t2; ++i) {
    WeylElement c = WeylElement::monomial(i, t2 - i);
    WeylElement a = weyl_commutator(2, c);
    WeylElement b = Rational(-1) * weyl_commutator(1, c);
    WeylElement dd = weyl_commutator(1, a) + weyl_commutator(2, b);
    if (!dd.is_zero()) d_squared_zero = false;
    SparseVec row = piece_coords(a, 0);
    for (auto& e : piece_coords(b, half)) row.push_back(e);
    d2_rows.push_back(canonical(std::move(row)));
  }
  std::vector<SparseVec> d1_rows;
  for (int part = 0; part < 2 && t1 >= 0; ++part)
    for (int i = 0; i <= t1; ++i)
      d1_rows.push_back(piece_coords(weyl_commutator(part == 0 ? 1 : 2, WeylElement::monomial(i, t1 - i)), 0));

  std::size_t r2 = rank_fraction_free(d2_rows);
  std::size_t r1 = rank_fraction_free(d1_rows);
  piece.hh2 = piece.c2 - r2;
  piece.hh1 = piece.c1 - r1 - r2;
  piece.hh0 = piece.c0 - r1;
  return piece;
}

}  // namespace

WeylHHResult hh_weyl(int weight_bound, std::size_t threads) {
  if (weight_bound < 1) throw std::invalid_argument("hh_weyl needs N >= 1");
  WeylHHResult result;
  std::vector<WeylPiece> pieces(static_cast<std::size_t>(weight_bound) + 1);
  std::vector<char> d2_ok(pieces.size(), 1);
  parallel_for(pieces.size(), threads, [&](std::size_t m) {
    bool ok = true;
    pieces[m] = compute_piece(static_cast<int>(m), ok);
    d2_ok[m] = ok;
  });
  result.pieces = std::move(pieces);
  result.d_squared_zero = std::all_of(d2_ok.begin(), d2_ok.end(), [](char c) { return c != 0; });

  std::size_t h0 = 0, h1 = 0, h2 = 0;
  for (const auto& p : result.pieces) {
    h0 += p.hh0;
    h1 += p.hh1;
    h2 += p.hh2;
    if (p.hh0 != 0) result.hh0_vanishes = false;
  }
  result.table.entries = {{h0, true}, {h1, true}, {h2, true}};
  return result;
}

// ---------------------------------------------------------------------------

HHTable hh_from_les(const HHTable& ambient, const HHTable& quotient,
                    const std::map<std::size_t, std::size_t>& known_ranks) {
  const std::size_t len = std::max(ambient.entries.size(), quotient.entries.size());
  auto exact = [](const HHTable& t, std::size_t n) { return n >= t.entries.size() || t.entries[n].exact; };

  std::vector<std::size_t> rank(len + 1, 0);
  for (std::size_t n = 0; n <= len; ++n) {
    std::size_t c = ambient.at(n), q = quotient.at(n);
    auto known = known_ranks.find(n);
    if (c == 0 || q == 0) {
      if (known != known_ranks.end() && known->second != 0)
        throw LesError(LesError::Kind::Inconsistent, "rank in degree " + std::to_string(n) + " must be 0");
      continue;
    }
    if (known == known_ranks.end())
      throw LesError(LesError::Kind::Underdetermined,
                     "the map in degree " + std::to_string(n) + " (" + std::to_string(c) + " -> " +
                         std::to_string(q) + ") is not forced to vanish; its rank is needed");
    if (known->second > std::min(c, q))
      throw LesError(LesError::Kind::Inconsistent, "rank in degree " + std::to_string(n) + " is too large");
    rank[n] = known->second;
  }
  if (quotient.at(0) != rank[0])
    throw LesError(LesError::Kind::Inconsistent, "the sequence would need a kernel in degree -1");

  HHTable out;
  for (std::size_t n = 0; n < len; ++n) {
    std::size_t k = quotient.at(n + 1) - rank[n + 1] + ambient.at(n) - rank[n];
    bool ex = exact(ambient, n) && exact(ambient, n + 1) && exact(quotient, n) && exact(quotient, n + 1);
    out.entries.push_back({k, ex});
  }
  return out;
}

}  // namespace dgcell
