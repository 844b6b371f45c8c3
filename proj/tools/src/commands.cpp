#include "dgcell/cli/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "dgcell/cli/presets.hpp"
#include "dgcell/cli/spec_file.hpp"
#include "dgcell/dg_algebra.hpp"
#include "dgcell/hochschild.hpp"
#include "dgcell/homology.hpp"
#include "dgcell/ideal_lab.hpp"
#include "dgcell/linalg.hpp"

namespace dgcell::cli {

namespace {

const FiniteCellDGA& need_dga(const AlgebraSpec& spec) {
  if (!spec.dga) throw std::invalid_argument(spec.origin + " defines no generators");
  return *spec.dga;
}

const IdealStanza& need_ideal(const AlgebraSpec& spec, bool with_basis) {
  if (!spec.ideal) throw std::invalid_argument(spec.origin + " has no ideal stanza");
  if (with_basis && !spec.ideal->basis) throw std::invalid_argument(spec.origin + " has no 'ideal basis' line");
  return *spec.ideal;
}

std::string beta_name(int beta) { return beta == 0 ? "r" : "delta"; }

std::string summand_text(const Signature& sig, const SummandElement& e) {
  return format_word(sig, e.f) + "*" + beta_name(e.beta) + "*" + format_word(sig, e.v);
}

void add_homology(Report& rep, const std::string& name, const HomologyTable& h) {
  auto& t = rep.table(name);
  for (const auto& [q, n] : h.dims) t.emplace_back(std::to_string(q), static_cast<std::int64_t>(n));
}

void add_hh(Report& rep, const std::string& name, const HHTable& h) {
  auto& t = rep.table(name);
  for (std::size_t n = 0; n < h.entries.size(); ++n)
    t.emplace_back(std::to_string(n), static_cast<std::int64_t>(h.entries[n].dim));
}

int bound_or(const RunOptions& opts, int fallback) {
  int n = opts.weight_bound.value_or(fallback);
  if (n < 0) throw std::invalid_argument("--weight-bound must be non-negative");
  return n;
}

// ---------------------------------------------------------------------------

void cmd_validate(Report& rep, const AlgebraSpec& spec, const RunOptions& opts) {
  bool any = false;
  if (spec.dga) {
    any = true;
    const auto& A = *spec.dga;
    rep.verdict("dga", Verdict::Pass,
                std::to_string(A.sig().size()) + " generators, " + std::to_string(spec.differential_lines.size()) +
                    " differentials; triangular, graded, weight-admissible, d^2 = 0 on generators");
    for (const auto& line : spec.differential_lines) rep.witness("differential", line);
    rep.param("seed", std::to_string(opts.seed));
    if (auto bad = check_d_squared(A, 200, opts.seed)) {
      rep.verdict("d-squared-random", Verdict::Counterexample, "d^2 != 0");
      rep.witness("d-squared-random", format_word(A.sig(), bad->word));
    } else {
      rep.verdict("d-squared-random", Verdict::Pass, "d^2 = 0 on 200 random words");
    }
    if (spec.ideal) {
      auto pair = make_generator_pair(A, spec.ideal->r, spec.ideal->delta);
      std::string basis = spec.ideal->basis ? "; V: " + spec.ideal->basis->describe(A.sig()) : "";
      rep.verdict("ideal", Verdict::Pass, std::string(pair.delta_is_dr ? "delta = d r" : "delta != d r") + basis);
    }
  }
  if (spec.algebra) {
    any = true;
    rep.verdict("algebra", Verdict::Pass,
                "dim " + std::to_string(spec.algebra->dim()) + ", associative and unital");
  }
  if (spec.les) {
    any = true;
    rep.verdict("les", Verdict::Pass, "long exact sequence data");
  }
  if (!any) throw std::invalid_argument(spec.origin + " is empty");
}

void cmd_uop(Report& rep, const AlgebraSpec& spec, const RunOptions& opts) {
  const auto& A = need_dga(spec);
  const auto& ideal = need_ideal(spec, true);
  int N = bound_or(opts, 6);
  rep.param("order", std::string(to_string(opts.order)));
  rep.param("weight_bound", std::to_string(N));
  auto pair = make_generator_pair(A, ideal.r, ideal.delta);
  auto r = check_unique_order_property(A, pair, opts.order, *ideal.basis, N, {opts.threads});
  rep.verdict("cond-i", r.cond_i.verdict, r.cond_i.detail);
  rep.verdict("cond-ii", r.cond_ii.verdict, r.cond_ii.detail);
  rep.verdict("cond-iii", r.cond_iii.verdict, r.cond_iii.detail);
  auto& t = rep.table("dims");
  t.emplace_back("ambient", static_cast<std::int64_t>(r.ambient_dim));
  t.emplace_back("ideal", static_cast<std::int64_t>(r.ideal_dim));
  t.emplace_back("basis_family", static_cast<std::int64_t>(r.basis_family_dim));
  t.emplace_back("tip_collisions", static_cast<std::int64_t>(r.collision_count));
  const Signature& sig = A.sig();
  if (r.cond_i_witness) rep.witness("cond-i", format_word(sig, *r.cond_i_witness));
  if (r.collision) {
    const auto& c = *r.collision;
    rep.witness("cond-ii", "TIP(" + summand_text(sig, c.second) + ") = " + format_word(sig, c.tip) + " = TIP(" +
                               summand_text(sig, c.first) + ")");
    rep.witness("cond-ii", summand_text(sig, c.second) + " = " + to_string(c.second.element, opts.order));
    rep.witness("cond-ii", summand_text(sig, c.first) + " = " + to_string(c.first.element, opts.order));
  }
  if (r.cond_iii_witness) rep.witness("cond-iii", format_word(sig, *r.cond_iii_witness));
}

void cmd_decompose(Report& rep, const AlgebraSpec& spec, const RunOptions& opts) {
  const auto& A = need_dga(spec);
  const auto& ideal = need_ideal(spec, true);
  int N = bound_or(opts, 4);
  rep.param("weight_bound", std::to_string(N));
  auto pair = make_generator_pair(A, ideal.r, ideal.delta);
  auto d = check_left_decomposition(A, pair, *ideal.basis, N, {opts.threads});
  rep.verdict("decomposition", d.pass ? Verdict::Pass : Verdict::Counterexample,
              "sum of " + std::to_string(d.summand_count) + " summand dims " + std::to_string(d.summand_dim_sum) +
                  ", joint rank " + std::to_string(d.joint_rank) + ", ideal dim " + std::to_string(d.ideal_dim));
  auto& t = rep.table("dims");
  t.emplace_back("ideal", static_cast<std::int64_t>(d.ideal_dim));
  t.emplace_back("summands", static_cast<std::int64_t>(d.summand_count));
  t.emplace_back("summand_dim_sum", static_cast<std::int64_t>(d.summand_dim_sum));
  t.emplace_back("joint_rank", static_cast<std::int64_t>(d.joint_rank));
}

void cmd_acyclic(Report& rep, const AlgebraSpec& spec, const RunOptions& opts) {
  const auto& A = need_dga(spec);
  const auto& ideal = need_ideal(spec, true);
  int N = bound_or(opts, 4);
  rep.param("weight_bound", std::to_string(N));
  auto pair = make_generator_pair(A, ideal.r, ideal.delta);
  auto M = submodule_M(A, pair, *ideal.basis, N);
  auto minus = m_minus(A, M);
  auto plus = m_plus(A, M);
  auto plus_complex = build_slice_complex(A, plus);
  auto minus_complex = build_slice_complex(A, minus);
  auto h_plus = homology_dims(plus_complex, opts.threads);

  rep.verdict("m-minus-zero", minus.dim() == 0 ? Verdict::Pass : Verdict::Counterexample,
              "dim M- = " + std::to_string(minus.dim()));
  rep.verdict("m-plus-acyclic", h_plus.is_zero() ? Verdict::Pass : Verdict::Counterexample,
              "dim M+ = " + std::to_string(plus.dim()) + (h_plus.is_zero() ? ", H(M+) = 0" : ", H(M+) != 0"));
  bool qi = check_quasi_iso_inclusion(minus_complex, plus_complex, opts.threads);
  rep.verdict("inclusion-quasi-iso", qi ? Verdict::Pass : Verdict::Counterexample, "M- -> M+ via H(M+/M-)");

  auto& t = rep.table("dims");
  t.emplace_back("M", static_cast<std::int64_t>(M.dim()));
  t.emplace_back("M_minus", static_cast<std::int64_t>(minus.dim()));
  t.emplace_back("M_plus", static_cast<std::int64_t>(plus.dim()));
  add_homology(rep, "H(M_plus)", h_plus);
  auto ideal_complex = build_slice_complex(A, ideal_slice(A, pair, N));
  add_homology(rep, "H(ideal)", homology_dims(ideal_complex, opts.threads));
  if (!pair.delta_is_dr) rep.witness("pair", "delta != d r");
}

void cmd_homology(Report& rep, const AlgebraSpec& spec, const RunOptions& opts) {
  const auto& A = need_dga(spec);
  int N = bound_or(opts, 4);
  rep.param("weight_bound", std::to_string(N));
  auto C = build_truncated_complex(A, N);
  auto h = homology_dims(C, opts.threads);
  rep.verdict("complex", Verdict::Pass,
              "A_{<=N} has dimension " + std::to_string(C.total_dim()) + ", d^2 = 0 checked");
  auto& dims = rep.table("C");
  for (int q : C.degrees()) dims.emplace_back(std::to_string(q), static_cast<std::int64_t>(C.dim(q)));
  add_homology(rep, "H", h);
  long chi_c = 0;
  for (int q : C.degrees()) chi_c += (q % 2 == 0 ? 1 : -1) * static_cast<long>(C.dim(q));
  rep.verdict("euler", chi_c == h.euler_characteristic() ? Verdict::Pass : Verdict::Counterexample,
              "chi = " + std::to_string(chi_c));
}

void cmd_hh_bar(Report& rep, const AlgebraSpec& spec, const RunOptions& opts) {
  if (!spec.algebra) throw std::invalid_argument(spec.origin + " has no algebra stanza");
  const auto& B = *spec.algebra;
  std::size_t n_max = opts.n_max.value_or(4);
  rep.param("n_max", std::to_string(n_max));
  auto hh = hh_bar(B, n_max, {}, opts.threads);
  add_hh(rep, "HH", hh);

  // HH_0 against B / [B, B] from the structure constants.
  Echelon commutators;
  for (std::size_t i = 0; i < B.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j) {
      SparseVec v;
      for (std::size_t k = 0; k < B.dim(); ++k) {
        Rational c = B.structure()[i][j][k] - B.structure()[j][i][k];
        if (c != 0) v.push_back({k, c});
      }
      commutators.insert(canonical(std::move(v)));
    }
  std::size_t oracle = B.dim() - commutators.rank();
  rep.verdict("hh0-commutator-quotient", oracle == hh.at(0) ? Verdict::Pass : Verdict::Counterexample,
              "dim B/[B,B] = " + std::to_string(oracle));
}

void cmd_hh_weyl(Report& rep, const RunOptions& opts) {
  int N = bound_or(opts, 10);
  rep.param("weight_bound", std::to_string(N));
  auto res = hh_weyl(N, opts.threads);
  rep.verdict("d1-d2-zero", res.d_squared_zero ? Verdict::Pass : Verdict::Counterexample,
              "checked on " + std::to_string(res.pieces.size()) + " graded pieces");
  rep.verdict("hh0-zero", res.hh0_vanishes ? Verdict::Pass : Verdict::Counterexample, "A1 = [A1, A1] piecewise");
  add_hh(rep, "HH", res.table);
  auto& t = rep.table("HH2_by_piece");
  for (const auto& p : res.pieces) t.emplace_back(std::to_string(p.m), static_cast<std::int64_t>(p.hh2));
}

void cmd_hh_les(Report& rep, const AlgebraSpec& spec, const RunOptions& opts) {
  if (!spec.les) throw std::invalid_argument(spec.origin + " has no les stanza");
  const auto& les = *spec.les;
  auto to_table = [](const std::map<std::size_t, std::size_t>& m) {
    HHTable t;
    for (const auto& [n, dim] : m) {
      if (t.entries.size() <= n) t.entries.resize(n + 1);
      t.entries[n].dim = dim;
    }
    return t;
  };
  HHTable ambient = to_table(les.ambient);
  HHTable quotient = to_table(les.quotient);
  if (les.quotient_is_weyl) {
    int N = bound_or(opts, 10);
    rep.param("weight_bound", std::to_string(N));
    auto res = hh_weyl(N, opts.threads);
    if (!res.d_squared_zero || !res.hh0_vanishes) {
      rep.verdict("quotient", Verdict::Counterexample, "Weyl commutator complex failed its internal checks");
      return;
    }
    quotient = res.table;
  }
  add_hh(rep, "ambient", ambient);
  add_hh(rep, "quotient", quotient);
  HHTable kernel;
  try {
    kernel = hh_from_les(ambient, quotient, les.ranks);
  } catch (const LesError& e) {
    rep.verdict("les", e.kind() == LesError::Kind::Underdetermined ? Verdict::Indeterminate : Verdict::Counterexample,
                e.what());
    return;
  }
  rep.verdict("les", Verdict::Pass, "kernel table determined");
  add_hh(rep, "kernel", kernel);
  long chi = 0;
  std::size_t len = std::max({kernel.entries.size(), ambient.entries.size(), quotient.entries.size()});
  for (std::size_t n = 0; n < len; ++n)
    chi += (n % 2 == 0 ? 1 : -1) *
           (static_cast<long>(kernel.at(n)) - static_cast<long>(ambient.at(n)) + static_cast<long>(quotient.at(n)));
  rep.verdict("euler", chi == 0 ? Verdict::Pass : Verdict::Counterexample,
              "alternating sum of kernel - ambient + quotient = " + std::to_string(chi));
}

void cmd_tipdec(Report& rep, const AlgebraSpec& spec, const RunOptions& opts) {
  const auto& A = need_dga(spec);
  int N = bound_or(opts, 6);
  rep.param("order", std::string(to_string(opts.order)));
  rep.param("weight_bound", std::to_string(N));
  if (auto bad = check_tip_decreasing(A, opts.order, N)) {
    rep.verdict("tip-decreasing", Verdict::Counterexample, "TIP(d f) >= f");
    rep.witness("tip-decreasing", "f = " + format_word(A.sig(), *bad) + ", d f = " + to_string(apply_d(A, *bad), opts.order));
  } else {
    rep.verdict("tip-decreasing", Verdict::Pass, "TIP(d f) < f for every word f with d f != 0");
  }
}

void cmd_presets(Report& rep) {
  for (const auto& p : list_presets()) {
    rep.witness(p.name, p.usage + ": " + p.summary);
    auto spec = parse_spec(*preset_text(p.name), "presets/" + p.name);
    for (const auto& line : spec.differential_lines) rep.witness(p.name, line);
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "uop-check", "decompose", "acyclic", "homology",
                                                 "hh-bar",   "hh-weyl",   "hh-les",    "tipdec",  "presets"};
  return names;
}

Report run_check(const std::string& command, const std::string& spec_path, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = command;

  if (command == "presets") {
    cmd_presets(rep);
  } else if (command == "hh-weyl") {
    cmd_hh_weyl(rep, opts);
  } else {
    static const std::map<std::string, std::function<void(Report&, const AlgebraSpec&, const RunOptions&)>> handlers = {
        {"validate", cmd_validate}, {"uop-check", cmd_uop},   {"decompose", cmd_decompose},
        {"acyclic", cmd_acyclic},   {"homology", cmd_homology}, {"hh-bar", cmd_hh_bar},
        {"hh-les", cmd_hh_les},     {"tipdec", cmd_tipdec}};
    auto it = handlers.find(command);
    if (it == handlers.end()) throw std::invalid_argument("unknown command '" + command + "'");
    if (spec_path.empty()) throw std::invalid_argument(command + " needs a spec path");
    rep.param("spec", spec_path);
    AlgebraSpec spec = load_spec(spec_path);
    it->second(rep, spec, opts);
  }

  if (opts.timing)
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

RunOutcome run_command(const std::string& command, const std::string& spec_path, const RunOptions& opts) {
  RunOutcome out;
  try {
    out.report = run_check(command, spec_path, opts);
    out.exit_code = out.report->exit_code();
  } catch (const std::exception& e) {
    out.exit_code = kExitInvalidInput;
    out.error = e.what();
  }
  return out;
}

}  // namespace dgcell::cli
