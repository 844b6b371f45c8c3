#include "dgcell/cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dgcell::cli {

using json = nlohmann::ordered_json;

Table& Report::table(const std::string& name) {
  for (auto& [n, t] : tables)
    if (n == name) return t;
  return tables.emplace_back(name, Table{}).second;
}

int Report::exit_code() const {
  bool indeterminate = false;
  for (const auto& v : verdicts) {
    if (v.verdict == Verdict::Counterexample) return 1;
    indeterminate = indeterminate || v.verdict == Verdict::Indeterminate;
  }
  return indeterminate ? 3 : 0;
}

std::string to_json(const Report& r, int indent) {
  json j;
  j["command"] = r.command;
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"check", v.check}, {"verdict", std::string(to_string(v.verdict))}, {"detail", v.detail}});
  j["verdicts"] = verdicts;
  json tables = json::object();
  for (const auto& [name, rows] : r.tables) {
    json t = json::object();
    for (const auto& [k, v] : rows) t[k] = v;
    tables[name] = t;
  }
  j["tables"] = tables;
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"check", w.check}, {"text", w.text}});
  j["witnesses"] = witnesses;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(indent);
}

namespace {

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Pass, Verdict::Counterexample, Verdict::Indeterminate})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

}  // namespace

Report from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report is not JSON: ") + e.what());
  }
  for (const char* key : {"command", "params", "verdicts", "tables", "witnesses", "elapsed_ms"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("report lacks key '") + key + "'");
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
    for (const auto& v : j.at("verdicts"))
      r.verdicts.push_back({v.at("check").get<std::string>(), parse_verdict(v.at("verdict").get<std::string>()),
                            v.at("detail").get<std::string>()});
    for (const auto& [name, rows] : j.at("tables").items()) {
      Table t;
      for (const auto& [k, v] : rows.items()) t.emplace_back(k, v.get<std::int64_t>());
      r.tables.emplace_back(name, std::move(t));
    }
    for (const auto& w : j.at("witnesses"))
      r.witnesses.push_back({w.at("check").get<std::string>(), w.at("text").get<std::string>()});
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << r.command;
  for (const auto& [k, v] : r.params) out << "  " << k << "=" << v;
  out << "\n";
  std::size_t width = 0;
  for (const auto& v : r.verdicts) width = std::max(width, v.check.size());
  for (const auto& v : r.verdicts)
    out << "  " << std::left << std::setw(static_cast<int>(width)) << v.check << "  " << std::setw(14)
        << to_string(v.verdict) << " " << v.detail << "\n";
  for (const auto& [name, rows] : r.tables) {
    out << "  " << name << ":\n";
    std::size_t kw = 0;
    for (const auto& [k, v] : rows) kw = std::max(kw, k.size());
    for (const auto& [k, v] : rows)
      out << "    " << std::right << std::setw(static_cast<int>(kw)) << k << "  " << v << "\n";
  }
  for (const auto& w : r.witnesses) {
    if (r.command == "presets")
      out << "  " << std::left << std::setw(14) << w.check << w.text << "\n";
    else
      out << "  witness (" << w.check << "): " << w.text << "\n";
  }
  out << "  elapsed " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace dgcell::cli
