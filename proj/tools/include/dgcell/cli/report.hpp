#pragma once

// Command reports: a text rendering for people and a JSON rendering with
// the fixed top-level keys command, params, verdicts, tables, witnesses,
// elapsed_ms.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgcell/ideal_lab.hpp"

namespace dgcell::cli {

struct VerdictEntry {
  std::string check;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  bool operator==(const VerdictEntry&) const = default;
};

struct Witness {
  std::string check;
  std::string text;
  bool operator==(const Witness&) const = default;
};

/// Rows keep insertion order; keys are degrees or names.
using Table = std::vector<std::pair<std::string, std::int64_t>>;

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<VerdictEntry> verdicts;
  std::vector<std::pair<std::string, Table>> tables;
  std::vector<Witness> witnesses;
  double elapsed_ms = 0;

  void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  void verdict(std::string check, Verdict v, std::string detail) {
    verdicts.push_back({std::move(check), v, std::move(detail)});
  }
  void witness(std::string check, std::string text) { witnesses.push_back({std::move(check), std::move(text)}); }
  Table& table(const std::string& name);

  /// 0 when every verdict passes, 1 on any counterexample, 3 when the
  /// only failures are indeterminate.
  int exit_code() const;
  bool operator==(const Report&) const = default;
};

std::string to_json(const Report& r, int indent = 2);
/// Throws std::invalid_argument on a malformed or incomplete document.
Report from_json(const std::string& text);
std::string to_text(const Report& r);

}  // namespace dgcell::cli
