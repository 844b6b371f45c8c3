#include "dgcell/ideal_lab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "dgcell/linalg.hpp"
#include "dgcell/parallel.hpp"

namespace dgcell {

GeneratorPair make_generator_pair(const FiniteCellDGA& A, Polynomial r, Polynomial delta) {
  if (!same_signature(A.signature(), r.signature()) || !same_signature(A.signature(), delta.signature()))
    throw SignatureMismatch();
  if (r.is_zero() || delta.is_zero()) throw std::invalid_argument("ideal generators must be nonzero");
  if (r == delta) throw std::invalid_argument("ideal generators must be distinct");
  if (!is_homogeneous(r) || !is_homogeneous(delta))
    throw std::invalid_argument("ideal generators must be homogeneous");
  bool dr = apply_d(A, r) == delta;
  return GeneratorPair{std::move(r), std::move(delta), dr};
}

// ---------------------------------------------------------------------------

BasisFamily BasisFamily::avoid(std::vector<int> letters) {
  BasisFamily f;
  f.kind_ = Kind::AvoidGenerators;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  f.letters_ = std::move(letters);
  return f;
}

BasisFamily BasisFamily::normal_words(int outer, int inner) {
  BasisFamily f;
  f.kind_ = Kind::NormalWords;
  f.letters_ = {outer, inner};
  return f;
}

BasisFamily BasisFamily::explicit_list(std::vector<Word> words) {
  BasisFamily f;
  f.kind_ = Kind::ExplicitList;
  std::vector<Word> unique;
  for (auto& w : words)
    if (std::find(unique.begin(), unique.end(), w) == unique.end()) unique.push_back(std::move(w));
  f.words_ = std::move(unique);
  return f;
}

bool BasisFamily::contains(const Word& w) const {
  switch (kind_) {
    case Kind::AvoidGenerators:
      return std::none_of(w.letters().begin(), w.letters().end(), [&](int l) {
        return std::binary_search(letters_.begin(), letters_.end(), l);
      });
    case Kind::NormalWords: {
      std::size_t i = 0;
      while (i < w.size() && w[i] == letters_[0]) ++i;
      while (i < w.size() && w[i] == letters_[1]) ++i;
      return i == w.size();
    }
    case Kind::ExplicitList:
      return std::find(words_.begin(), words_.end(), w) != words_.end();
  }
  return false;
}

std::vector<Word> BasisFamily::enumerate(const Signature& sig, int max_weight) const {
  std::vector<Word> out;
  switch (kind_) {
    case Kind::AvoidGenerators:
      for (auto& w : words_up_to_weight(sig, max_weight))
        if (contains(w)) out.push_back(std::move(w));
      break;
    case Kind::NormalWords: {
      int wo = sig.generator(static_cast<std::size_t>(letters_[0])).weight;
      int wi = sig.generator(static_cast<std::size_t>(letters_[1])).weight;
      for (int len = 0; len <= max_weight; ++len)
        for (int i = len; i >= 0; --i) {
          int j = len - i;
          if (i * wo + j * wi <= max_weight)
            out.push_back(power(letters_[0], static_cast<std::size_t>(i)) *
                          power(letters_[1], static_cast<std::size_t>(j)));
        }
      break;
    }
    case Kind::ExplicitList:
      for (const auto& w : words_)
        if (weight(sig, w) <= max_weight) out.push_back(w);
      break;
  }
  return out;
}

std::string BasisFamily::describe(const Signature& sig) const {
  auto name = [&](int l) { return sig.generator(static_cast<std::size_t>(l)).name; };
  std::string s;
  switch (kind_) {
    case Kind::AvoidGenerators:
      s = "avoid";
      for (int l : letters_) s += " " + name(l);
      break;
    case Kind::NormalWords:
      s = "normal " + name(letters_[0]) + " " + name(letters_[1]);
      break;
    case Kind::ExplicitList:
      s = "words";
      for (std::size_t i = 0; i < words_.size(); ++i) s += (i ? ", " : " ") + format_word(sig, words_[i]);
      break;
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

Polynomial sandwich(const Word& a, const Polynomial& beta, const Word& b) {
  Polynomial out(beta.signature());
  for (const auto& [w, c] : beta.terms()) out.add_term(a * w * b, c);
  return out;
}

std::vector<Polynomial> left_multiples(const SignaturePtr& sig, const Polynomial& g, int weight_bound) {
  std::vector<Polynomial> out;
  int room = weight_bound - g.weight();
  if (room < 0 || g.is_zero()) return out;
  for (const auto& a : words_up_to_weight(*sig, room)) out.push_back(sandwich(a, g, Word{}));
  return out;
}

std::vector<Polynomial> ideal_generators(const FiniteCellDGA& A, const GeneratorPair& pair, int weight_bound) {
  const Signature& sig = A.sig();
  std::vector<Polynomial> gens;
  for (const Polynomial* beta : {&pair.r, &pair.delta}) {
    int room = weight_bound - beta->weight();
    if (room < 0) continue;
    auto words = words_up_to_weight(sig, room);
    std::vector<int> weights;
    weights.reserve(words.size());
    for (const auto& w : words) weights.push_back(weight(sig, w));
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j)
        if (weights[i] + weights[j] <= room) gens.push_back(sandwich(words[i], *beta, words[j]));
  }
  return gens;
}

std::vector<Polynomial> rows_as_polys(const TriangularBasis& tb) {
  std::vector<Polynomial> out;
  out.reserve(tb.echelon.rank());
  for (const auto& row : tb.echelon.rows()) out.push_back(tb.index.to_poly(row.vec));
  return out;
}

struct Summand {
  int beta;
  Word v;
};

std::vector<Summand> summands(const FiniteCellDGA& A, const GeneratorPair& pair, const BasisFamily& V,
                              int weight_bound) {
  std::vector<Summand> out;
  const Signature& sig = A.sig();
  for (const auto& v : V.enumerate(sig, weight_bound)) {
    int wv = weight(sig, v);
    if (pair.r.weight() + wv <= weight_bound) out.push_back({0, v});
    if (pair.delta.weight() + wv <= weight_bound) out.push_back({1, v});
  }
  return out;
}

}  // namespace

SubmoduleSlice make_slice(const SignaturePtr& sig, const std::vector<Polynomial>& generators, int weight_bound,
                          std::string descriptor) {
  SubmoduleSlice slice{weight_bound, {}, std::move(descriptor)};
  if (!generators.empty()) slice.basis = rows_as_polys(triangularize(OrderKind::DegreeOrder, sig, generators));
  return slice;
}

SubmoduleSlice left_ideal_slice(const SignaturePtr& sig, const std::vector<Polynomial>& generators,
                                int weight_bound, std::string descriptor) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    auto multiples = left_multiples(sig, g, weight_bound);
    gens.insert(gens.end(), std::make_move_iterator(multiples.begin()), std::make_move_iterator(multiples.end()));
  }
  return make_slice(sig, gens, weight_bound, std::move(descriptor));
}

SubmoduleSlice ideal_slice(const FiniteCellDGA& A, const GeneratorPair& pair, int weight_bound) {
  return make_slice(A.signature(), ideal_generators(A, pair, weight_bound), weight_bound,
                    "ideal(r, delta) N=" + std::to_string(weight_bound));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

bool UopReport::all_pass() const {
  return cond_i.verdict == Verdict::Pass && cond_ii.verdict == Verdict::Pass && cond_iii.verdict == Verdict::Pass;
}

UopReport check_unique_order_property(const FiniteCellDGA& A, const GeneratorPair& pair, OrderKind order,
                                      const BasisFamily& V, int weight_bound, const CheckOptions& opts) {
  const SignaturePtr& sigp = A.signature();
  const Signature& sig = *sigp;
  UopReport report;
  report.order = order;
  report.weight_bound = weight_bound;

  WordIndex ambient = WordIndex::up_to_weight(OrderKind::DegreeOrder, sigp, weight_bound);
  report.ambient_dim = ambient.size();
  auto ideal_gens = ideal_generators(A, pair, weight_bound);
  SubmoduleSlice slice = make_slice(sigp, ideal_gens, weight_bound, "ideal");
  report.ideal_dim = slice.dim();
  auto v_words = V.enumerate(sig, weight_bound);
  report.basis_family_dim = v_words.size();

  // (i) Span(V) and the ideal slice meet trivially and fill A_{<=N}.
  {
    Echelon ech;
    for (const auto& b : slice.basis) ech.insert(ambient.to_vec(b));
    std::size_t independent = 0;
    for (const auto& v : v_words) {
      if (ech.insert(ambient.to_vec(Polynomial::monomial(sigp, v)))) {
        ++independent;
      } else if (!report.cond_i_witness) {
        report.cond_i_witness = v;
      }
    }
    if (report.cond_i_witness) {
      report.cond_i = {Verdict::Counterexample,
                       "Span(V) meets the ideal: " + format_word(sig, *report.cond_i_witness) +
                           " is congruent to a combination of earlier members of V"};
    } else if (report.ideal_dim + independent < report.ambient_dim) {
      report.cond_i = {Verdict::Indeterminate,
                       "dim Span(V) + dim ideal = " + std::to_string(report.ideal_dim + independent) + " < " +
                           std::to_string(report.ambient_dim) + " = dim A_{<=N}"};
    } else {
      report.cond_i = {Verdict::Pass, "A_{<=N} = Span(V) + ideal, dims " + std::to_string(independent) + " + " +
                                          std::to_string(report.ideal_dim) + " = " +
                                          std::to_string(report.ambient_dim)};
    }
  }

  // (ii) tip sets of the subspaces f * beta * v are pairwise disjoint.
  {
    auto parts = summands(A, pair, V, weight_bound);
    struct TipInfo {
      Word tip;
      Word f;
    };
    std::vector<std::vector<TipInfo>> tips(parts.size());
    parallel_for(parts.size(), opts.threads, [&](std::size_t k) {
      const auto& part = parts[k];
      const Polynomial& beta = part.beta == 0 ? pair.r : pair.delta;
      Polynomial bv = sandwich(Word{}, beta, part.v);
      auto fs = words_up_to_weight(sig, weight_bound - bv.weight());
      std::vector<Polynomial> gens;
      gens.reserve(fs.size());
      for (const auto& f : fs) gens.push_back(sandwich(f, bv, Word{}));
      auto tb = triangularize(order, sigp, gens);
      for (const auto& row : tb.echelon.rows())
        tips[k].push_back({tb.index.word(row.vec.front().col), fs[static_cast<std::size_t>(row.tag)]});
    });

    auto element = [&](std::size_t k, const Word& f) {
      const Polynomial& beta = parts[k].beta == 0 ? pair.r : pair.delta;
      return SummandElement{parts[k].beta, parts[k].v, f, sandwich(f, beta, parts[k].v)};
    };
    std::unordered_map<Word, std::pair<std::size_t, Word>, WordHash> owner;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      for (const auto& t : tips[k]) {
        auto [it, inserted] = owner.try_emplace(t.tip, k, t.f);
        if (inserted) continue;
        ++report.collision_count;
        auto lighter = [&] {
          int a = weight(sig, t.tip), b = weight(sig, report.collision->tip);
          return a != b ? a < b : compare(order, sig, t.tip, report.collision->tip) < 0;
        };
        if (!report.collision || lighter())
          report.collision = TipCollision{t.tip, element(it->second.first, it->second.second), element(k, t.f)};
      }
    }
    if (report.collision) {
      const auto& c = *report.collision;
      auto show = [&](const SummandElement& e) {
        return "TIP(" + format_word(sig, e.f) + "*" + (e.beta == 0 ? "r" : "delta") + "*" + format_word(sig, e.v) +
               ")";
      };
      report.cond_ii = {Verdict::Counterexample, show(c.first) + " = " + format_word(sig, c.tip) + " = " +
                                                     show(c.second) + " (" +
                                                     std::to_string(report.collision_count) + " collisions)"};
    } else {
      report.cond_ii = {Verdict::Pass, std::to_string(parts.size()) + " summands, " +
                                           std::to_string(owner.size()) + " distinct tips"};
    }
  }

  // (iii) no member of V is the tip of an ideal element.
  {
    auto tb = triangularize(order, sigp, slice.basis);
    for (const auto& t : tb.tips()) {
      if (V.contains(t)) {
        report.cond_iii_witness = t;
        break;
      }
    }
    if (report.cond_iii_witness)
      report.cond_iii = {Verdict::Counterexample,
                         format_word(sig, *report.cond_iii_witness) + " is the tip of an ideal element"};
    else
      report.cond_iii = {Verdict::Pass, std::to_string(tb.echelon.rank()) + " ideal tips avoid V"};
  }
  return report;
}

DecompositionReport check_left_decomposition(const FiniteCellDGA& A, const GeneratorPair& pair,
                                             const BasisFamily& V, int weight_bound, const CheckOptions& opts) {
  const SignaturePtr& sig = A.signature();
  DecompositionReport report;
  report.weight_bound = weight_bound;
  report.ideal_dim = ideal_slice(A, pair, weight_bound).dim();

  auto parts = summands(A, pair, V, weight_bound);
  report.summand_count = parts.size();
  std::vector<SubmoduleSlice> slices(parts.size());
  parallel_for(parts.size(), opts.threads, [&](std::size_t k) {
    const Polynomial& beta = parts[k].beta == 0 ? pair.r : pair.delta;
    slices[k] = left_ideal_slice(sig, {sandwich(Word{}, beta, parts[k].v)}, weight_bound, "summand");
  });

  WordIndex ambient = WordIndex::up_to_weight(OrderKind::DegreeOrder, sig, weight_bound);
  Echelon joint;
  for (const auto& s : slices) {
    report.summand_dim_sum += s.dim();
    for (const auto& b : s.basis) joint.insert(ambient.to_vec(b));
  }
  report.joint_rank = joint.rank();
  report.pass = report.summand_dim_sum == report.ideal_dim && report.joint_rank == report.summand_dim_sum;
  return report;
}

SubmoduleSlice submodule_M(const FiniteCellDGA& A, const GeneratorPair& pair, const BasisFamily& V,
                           int weight_bound) {
  std::vector<Polynomial> gens;
  for (const auto& v : V.enumerate(A.sig(), weight_bound)) {
    Polynomial rv = sandwich(Word{}, pair.r, v);
    if (rv.weight() <= weight_bound) gens.push_back(std::move(rv));
  }
  return left_ideal_slice(A.signature(), gens, weight_bound, "M N=" + std::to_string(weight_bound));
}

SubmoduleSlice m_plus(const FiniteCellDGA& A, const SubmoduleSlice& slice) {
  std::vector<Polynomial> gens = slice.basis;
  for (const auto& b : slice.basis) gens.push_back(apply_d(A, b));
  return make_slice(A.signature(), gens, slice.weight_bound, slice.descriptor + " (+)");
}

SubmoduleSlice m_minus(const FiniteCellDGA& A, const SubmoduleSlice& slice) {
  const SignaturePtr& sig = A.signature();
  std::vector<Polynomial> images;
  images.reserve(slice.dim());
  for (const auto& b : slice.basis) images.push_back(apply_d(A, b));
  std::vector<Polynomial> all = slice.basis;
  all.insert(all.end(), images.begin(), images.end());
  WordIndex index = WordIndex::from_supports(OrderKind::DegreeOrder, sig, all);

  Echelon inside;
  for (const auto& b : slice.basis) inside.insert(index.to_vec(b));

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < slice.dim(); ++i) {
    auto deg = is_homogeneous(slice.basis[i]);
    if (!deg) throw std::invalid_argument("slice basis element is not homogeneous");
    by_degree[*deg].push_back(i);
  }

  std::vector<Polynomial> members;
  for (const auto& [deg, idx] : by_degree) {
    std::vector<SparseVec> residues;
    residues.reserve(idx.size());
    for (auto i : idx) residues.push_back(inside.normal_form(index.to_vec(images[i])));
    for (const auto& coeffs : kernel(residues)) {
      Polynomial m(sig);
      for (const auto& e : coeffs) m += slice.basis[idx[e.col]] * e.value;
      members.push_back(std::move(m));
    }
  }
  return make_slice(sig, members, slice.weight_bound, slice.descriptor + " (-)");
}

}  // namespace dgcell
