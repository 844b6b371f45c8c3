#include "dgcell/homology.hpp"

#include <algorithm>
#include <optional>

#include "dgcell/monomial_orders.hpp"
#include "dgcell/parallel.hpp"

namespace dgcell {

namespace {

const std::vector<SparseVec> kNoImages;

SparseVec compose(const SparseVec& v, const std::vector<SparseVec>& next) {
  SparseVec out;
  for (const auto& e : v) out = axpy(out, -e.value, next.at(e.col));
  return out;
}

}  // namespace

TruncatedComplex::TruncatedComplex(std::map<int, ComplexComponent> components, Differential differential)
    : components_(std::move(components)), differential_(std::move(differential)) {
  for (const auto& [q, comp] : components_)
    if (!comp.elements.empty() && comp.elements.size() != comp.labels.size())
      throw ComplexError(ComplexError::Kind::BadShape, "degree " + std::to_string(q) + ": labels and elements differ");
  for (auto it = differential_.begin(); it != differential_.end();) {
    auto& [q, images] = *it;
    if (images.size() != dim(q))
      throw ComplexError(ComplexError::Kind::BadShape,
                         "d in degree " + std::to_string(q) + " has " + std::to_string(images.size()) +
                             " columns, expected " + std::to_string(dim(q)));
    std::size_t target = dim(q + 1);
    bool zero = true;
    for (auto& v : images) {
      v = canonical(std::move(v));
      if (!v.empty() && v.front().col >= target)
        throw ComplexError(ComplexError::Kind::BadShape, "d in degree " + std::to_string(q) + " leaves the complex");
      zero = zero && v.empty();
    }
    it = zero ? differential_.erase(it) : std::next(it);
  }
  for (const auto& [q, images] : differential_) {
    const auto& next = d(q + 1);
    if (next.empty()) continue;
    for (std::size_t i = 0; i < images.size(); ++i)
      if (!compose(images[i], next).empty())
        throw ComplexError(ComplexError::Kind::DSquaredNonzero,
                           "d^2 != 0 on basis vector " + std::to_string(i) + " of degree " + std::to_string(q));
  }
}

TruncatedComplex TruncatedComplex::from_matrices(const std::map<int, std::size_t>& dims, Differential differential) {
  std::map<int, ComplexComponent> components;
  for (const auto& [q, n] : dims) {
    auto& comp = components[q];
    for (std::size_t i = 0; i < n; ++i) comp.labels.push_back("e" + std::to_string(q) + "_" + std::to_string(i));
  }
  return TruncatedComplex(std::move(components), std::move(differential));
}

std::size_t TruncatedComplex::dim(int q) const {
  auto it = components_.find(q);
  return it == components_.end() ? 0 : it->second.dim();
}

std::size_t TruncatedComplex::total_dim() const {
  std::size_t n = 0;
  for (const auto& [q, comp] : components_) n += comp.dim();
  return n;
}

const std::vector<SparseVec>& TruncatedComplex::d(int q) const {
  auto it = differential_.find(q);
  return it == differential_.end() ? kNoImages : it->second;
}

std::vector<int> TruncatedComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [q, comp] : components_) out.push_back(q);
  return out;
}

// ---------------------------------------------------------------------------

TruncatedComplex build_truncated_complex(const FiniteCellDGA& A, int weight_bound) {
  const SignaturePtr& sig = A.signature();
  std::map<int, std::vector<Word>> by_degree;
  for (auto& w : words_up_to_weight(*sig, weight_bound)) by_degree[cohom_degree(*sig, w)].push_back(std::move(w));

  std::map<int, WordIndex> indices;
  std::map<int, ComplexComponent> components;
  for (auto& [q, words] : by_degree) {
    WordIndex index(OrderKind::DegreeOrder, sig, std::move(words));
    auto& comp = components[q];
    for (const auto& w : index.words()) {
      comp.labels.push_back(format_word(*sig, w));
      comp.elements.push_back(Polynomial::monomial(sig, w));
    }
    indices.emplace(q, std::move(index));
  }

  TruncatedComplex::Differential d;
  for (const auto& [q, index] : indices) {
    auto target = indices.find(q + 1);
    auto& images = d[q];
    for (const auto& w : index.words()) {
      Polynomial dw = apply_d(A, w);
      if (dw.is_zero()) {
        images.emplace_back();
        continue;
      }
      if (target == indices.end())
        throw ComplexError(ComplexError::Kind::NotDStable, "d(" + format_word(*sig, w) + ") leaves A_{<=N}");
      try {
        images.push_back(target->second.to_vec(dw));
      } catch (const std::out_of_range&) {
        throw ComplexError(ComplexError::Kind::NotDStable, "d(" + format_word(*sig, w) + ") leaves A_{<=N}");
      }
    }
  }
  return TruncatedComplex(std::move(components), std::move(d));
}

TruncatedComplex build_slice_complex(const FiniteCellDGA& A, const SubmoduleSlice& slice) {
  const SignaturePtr& sig = A.signature();
  std::vector<Polynomial> all = slice.basis;
  for (const auto& b : slice.basis) all.push_back(apply_d(A, b));
  WordIndex index = WordIndex::from_supports(OrderKind::DegreeOrder, sig, all);

  std::map<int, Echelon> echelons;
  for (const auto& b : slice.basis) {
    auto q = is_homogeneous(b);
    if (!q) throw std::invalid_argument("slice basis element is not homogeneous");
    echelons[*q].insert(index.to_vec(b));
  }

  std::map<int, ComplexComponent> components;
  TruncatedComplex::Differential d;
  for (const auto& [q, ech] : echelons) {
    auto& comp = components[q];
    auto target = echelons.find(q + 1);
    auto& images = d[q];
    for (std::size_t i = 0; i < ech.rank(); ++i) {
      Polynomial b = index.to_poly(ech.rows()[i].vec);
      comp.labels.push_back("b" + std::to_string(q) + "_" + std::to_string(i));
      Polynomial db = apply_d(A, b);
      comp.elements.push_back(std::move(b));
      SparseVec image;
      if (!db.is_zero()) {
        std::vector<std::pair<std::size_t, Rational>> coords;
        SparseVec rest = index.to_vec(db);
        if (target != echelons.end()) rest = target->second.reduce_leading(std::move(rest), &coords);
        if (!rest.empty())
          throw ComplexError(ComplexError::Kind::NotDStable,
                             "d maps a degree " + std::to_string(q) + " element of " + slice.descriptor +
                                 " outside the slice");
        for (const auto& [row, c] : coords) image.push_back({row, c});
        image = canonical(std::move(image));
      }
      images.push_back(std::move(image));
    }
  }
  return TruncatedComplex(std::move(components), std::move(d));
}

// ---------------------------------------------------------------------------

std::size_t HomologyTable::at(int q) const {
  auto it = dims.find(q);
  return it == dims.end() ? 0 : it->second;
}

bool HomologyTable::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](const auto& e) { return e.second == 0; });
}

long HomologyTable::euler_characteristic() const {
  long chi = 0;
  for (const auto& [q, n] : dims) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(n);
  return chi;
}

HomologyTable homology_dims(const TruncatedComplex& C, std::size_t threads) {
  auto degrees = C.degrees();
  std::vector<std::size_t> ranks(degrees.size());
  parallel_for(degrees.size(), threads, [&](std::size_t k) { ranks[k] = rank_fraction_free(C.d(degrees[k])); });
  std::map<int, std::size_t> rank_of;
  for (std::size_t k = 0; k < degrees.size(); ++k) rank_of[degrees[k]] = ranks[k];

  HomologyTable table;
  for (int q : degrees) {
    std::size_t incoming = rank_of.count(q - 1) ? rank_of[q - 1] : 0;
    table.dims[q] = C.dim(q) - rank_of[q] - incoming;
  }
  return table;
}

bool check_acyclic(const TruncatedComplex& C, std::size_t threads) { return homology_dims(C, threads).is_zero(); }

// ---------------------------------------------------------------------------

namespace {

// Coordinates of each of `elems` in the (independent) `basis`, or nullopt if
// some element lies outside its span.
std::optional<std::vector<SparseVec>> coordinates_in(const std::vector<Polynomial>& basis,
                                                     const std::vector<Polynomial>& elems) {
  if (elems.empty()) return std::vector<SparseVec>{};
  if (basis.empty()) {
    if (std::all_of(elems.begin(), elems.end(), [](const Polynomial& p) { return p.is_zero(); }))
      return std::vector<SparseVec>(elems.size());
    return std::nullopt;
  }
  std::vector<Polynomial> all = basis;
  all.insert(all.end(), elems.begin(), elems.end());
  WordIndex index = WordIndex::from_supports(OrderKind::DegreeOrder, basis.front().signature(), all);
  std::size_t k = basis.size();
  auto shifted = [&](const Polynomial& p) {
    SparseVec v = index.to_vec(p);
    for (auto& e : v) e.col += k;
    return v;
  };

  Echelon ech;
  for (std::size_t i = 0; i < k; ++i) {
    SparseVec v = shifted(basis[i]);
    v.push_back({i, Rational(1)});
    ech.insert(std::move(v));
  }
  for (const auto& row : ech.rows())
    if (row.vec.front().col < k) throw std::invalid_argument("complex basis is linearly dependent");

  std::vector<SparseVec> out;
  for (const auto& p : elems) {
    SparseVec rest = ech.reduce_leading(shifted(p));
    if (!rest.empty() && rest.front().col >= k) return std::nullopt;
    out.push_back(scaled(std::move(rest), Rational(-1)));
  }
  return out;
}

}  // namespace

TruncatedComplex quotient_complex(const TruncatedComplex& sup, const std::map<int, std::vector<SparseVec>>& embedding) {
  std::map<int, Echelon> sub_span;
  for (const auto& [q, vecs] : embedding) {
    auto& ech = sub_span[q];
    for (const auto& v : vecs) {
      SparseVec c = canonical(v);
      if (!c.empty() && c.front().col >= sup.dim(q))
        throw ComplexError(ComplexError::Kind::NotSubcomplex, "embedding leaves degree " + std::to_string(q));
      if (!ech.insert(std::move(c)))
        throw ComplexError(ComplexError::Kind::NotSubcomplex, "embedding is not injective in degree " + std::to_string(q));
    }
  }
  // The sub-span must be closed under d.
  for (const auto& [q, ech] : sub_span) {
    const auto& dq = sup.d(q);
    if (dq.empty()) continue;
    auto next = sub_span.find(q + 1);
    for (const auto& row : ech.rows()) {
      SparseVec image = compose(row.vec, dq);
      if (image.empty()) continue;
      if (next == sub_span.end() || !next->second.contains(image))
        throw ComplexError(ComplexError::Kind::NotSubcomplex, "sub is not closed under d in degree " + std::to_string(q));
    }
  }

  // Quotient basis: sup basis vectors at non-pivot columns.
  std::map<int, ComplexComponent> components;
  std::map<int, std::vector<std::ptrdiff_t>> position;
  for (const auto& [q, comp] : sup.components()) {
    auto it = sub_span.find(q);
    auto& pos = position[q];
    pos.assign(comp.dim(), -1);
    auto& out = components[q];
    for (std::size_t j = 0; j < comp.dim(); ++j) {
      if (it != sub_span.end() && it->second.pivot_row(j) >= 0) continue;
      pos[j] = static_cast<std::ptrdiff_t>(out.labels.size());
      out.labels.push_back(comp.labels[j]);
      if (!comp.elements.empty()) out.elements.push_back(comp.elements[j]);
    }
    if (out.elements.size() != out.labels.size()) out.elements.clear();
  }

  TruncatedComplex::Differential d;
  for (const auto& [q, comp] : sup.components()) {
    const auto& dq = sup.d(q);
    if (dq.empty()) continue;
    auto next = sub_span.find(q + 1);
    auto& images = d[q];
    for (std::size_t j = 0; j < comp.dim(); ++j) {
      if (position[q][j] < 0) continue;
      SparseVec v = dq[j];
      if (next != sub_span.end()) v = next->second.normal_form(std::move(v));
      for (auto& e : v) e.col = static_cast<std::size_t>(position[q + 1].at(e.col));
      images.push_back(canonical(std::move(v)));
    }
  }
  return TruncatedComplex(std::move(components), std::move(d));
}

TruncatedComplex quotient_complex(const TruncatedComplex& sub, const TruncatedComplex& sup) {
  std::map<int, std::vector<SparseVec>> embedding;
  for (const auto& [q, comp] : sub.components()) {
    if (comp.dim() == 0) continue;
    auto it = sup.components().find(q);
    if (it == sup.components().end())
      throw ComplexError(ComplexError::Kind::NotSubcomplex, "sub has degree " + std::to_string(q) + " but sup does not");
    if (comp.elements.empty() || it->second.elements.empty())
      throw ComplexError(ComplexError::Kind::NotSubcomplex, "no embedding: complexes carry no basis elements");
    auto coords = coordinates_in(it->second.elements, comp.elements);
    if (!coords)
      throw ComplexError(ComplexError::Kind::NotSubcomplex, "sub is not contained in sup in degree " + std::to_string(q));
    embedding[q] = std::move(*coords);
  }
  return quotient_complex(sup, embedding);
}

bool check_quasi_iso_inclusion(const TruncatedComplex& sub, const TruncatedComplex& sup, std::size_t threads) {
  return check_acyclic(quotient_complex(sub, sup), threads);
}

}  // namespace dgcell
