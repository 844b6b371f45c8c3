#include "dgcell/cli/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dgcell/cli/presets.hpp"
#include "dgcell/expression.hpp"
#include "dgcell/monomial_orders.hpp"

namespace dgcell::cli {

SpecError::SpecError(std::size_t line, const std::string& message)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;  // whitespace-separated tokens
  std::string text;                // comment stripped
};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Text after the first '=' on the line.
std::string rhs_of(const Line& l) {
  auto eq = l.text.find('=');
  if (eq == std::string::npos) throw SpecError(l.number, "expected '='");
  return l.text.substr(eq + 1);
}

// Tokens between the keyword(s) and '='.
std::vector<std::string> lhs_words(const Line& l) {
  auto eq = l.text.find('=');
  if (eq == std::string::npos) throw SpecError(l.number, "expected '='");
  return split_ws(std::string_view(l.text).substr(0, eq));
}

long parse_int(const Line& l, const std::string& s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw SpecError(l.number, "expected an integer, got '" + s + "'");
  return v;
}

Polynomial parse_at(const Line& l, const std::string& text, const SignaturePtr& sig) {
  try {
    return parse_expression(text, sig);
  } catch (const ParseError& e) {
    throw SpecError(l.number, e.what());
  }
}

int letter_of(const Line& l, const SignaturePtr& sig, const std::string& name) {
  auto letter = sig->find(name);
  if (!letter) throw SpecError(l.number, "unknown generator '" + name + "'");
  return *letter;
}

std::map<std::size_t, std::size_t> parse_table(const Line& l, std::size_t first) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t k = first; k < l.words.size(); ++k) {
    const auto& w = l.words[k];
    auto eq = w.find('=');
    if (eq == std::string::npos) throw SpecError(l.number, "expected degree=dimension, got '" + w + "'");
    long n = parse_int(l, w.substr(0, eq));
    long dim = parse_int(l, w.substr(eq + 1));
    if (n < 0 || dim < 0) throw SpecError(l.number, "degrees and dimensions must be non-negative");
    if (!out.emplace(static_cast<std::size_t>(n), static_cast<std::size_t>(dim)).second)
      throw SpecError(l.number, "degree " + std::to_string(n) + " given twice");
  }
  return out;
}

BasisFamily parse_basis(const Line& l, const SignaturePtr& sig) {
  if (l.words.size() < 3) throw SpecError(l.number, "ideal basis needs a descriptor");
  const std::string& kind = l.words[2];
  if (kind == "normal") {
    if (l.words.size() != 5) throw SpecError(l.number, "usage: ideal basis normal <outer> <inner>");
    return BasisFamily::normal_words(letter_of(l, sig, l.words[3]), letter_of(l, sig, l.words[4]));
  }
  if (kind == "avoid") {
    std::vector<int> letters;
    for (std::size_t k = 3; k < l.words.size(); ++k) letters.push_back(letter_of(l, sig, l.words[k]));
    return BasisFamily::avoid(std::move(letters));
  }
  if (kind == "words") {
    auto pos = l.text.find("words");
    std::string rest = l.text.substr(pos + 5);
    std::vector<Word> words;
    std::istringstream in(rest);
    for (std::string item; std::getline(in, item, ',');) {
      Polynomial p = parse_at(l, item, sig);
      if (p.size() != 1 || p.terms().begin()->second != 1)
        throw SpecError(l.number, "basis words must be monomials with coefficient 1");
      words.push_back(p.terms().begin()->first);
    }
    return BasisFamily::explicit_list(std::move(words));
  }
  throw SpecError(l.number, "unknown basis descriptor '" + kind + "'");
}

FiniteDimAlgebra::Vector linear_combination(const Line& l, const std::string& text, const SignaturePtr& labels) {
  Polynomial p = parse_at(l, text, labels);
  FiniteDimAlgebra::Vector v(labels->size());
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != 1) throw SpecError(l.number, "algebra elements must be linear combinations of basis labels");
    v[static_cast<std::size_t>(w[0])] = c;
  }
  return v;
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text, std::string origin) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::size_t n = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++n;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      auto words = split_ws(raw);
      if (!words.empty()) lines.push_back({n, std::move(words), raw});
    }
  }

  AlgebraSpec spec;
  spec.origin = std::move(origin);

  std::vector<GeneratorSpec> gens;
  for (const auto& l : lines) {
    if (l.words[0] != "generator") continue;
    const auto& w = l.words;
    if (w.size() != 4 && w.size() != 6) throw SpecError(l.number, "usage: generator <name> degree <int> [weight <int>]");
    if (w[2] != "degree") throw SpecError(l.number, "expected 'degree'");
    GeneratorSpec g;
    g.name = w[1];
    g.cohom_degree = static_cast<int>(parse_int(l, w[3]));
    if (w.size() == 6) {
      if (w[4] != "weight") throw SpecError(l.number, "expected 'weight'");
      g.weight = static_cast<int>(parse_int(l, w[5]));
    }
    gens.push_back(std::move(g));
  }
  if (!gens.empty()) {
    try {
      spec.signature = make_signature(std::move(gens));
    } catch (const InvalidSignature& e) {
      throw SpecError(0, e.what());
    }
  }
  auto need_sig = [&](const Line& l) {
    if (!spec.signature) throw SpecError(l.number, "'" + l.words[0] + "' needs generator lines");
  };

  std::vector<DifferentialRule> rules;
  std::optional<Polynomial> r, delta;
  std::optional<BasisFamily> basis;
  SignaturePtr labels;
  std::optional<FiniteDimAlgebra::Vector> unit;
  std::vector<const Line*> products;

  for (const auto& l : lines) {
    const auto& key = l.words[0];
    if (key == "generator") continue;
    if (key == "d") {
      need_sig(l);
      auto lhs = lhs_words(l);
      if (lhs.size() != 2) throw SpecError(l.number, "usage: d <generator> = <expr>");
      int letter = letter_of(l, spec.signature, lhs[1]);
      for (const auto& rule : rules)
        if (rule.first == letter) throw SpecError(l.number, "second differential for '" + lhs[1] + "'");
      rules.emplace_back(letter, parse_at(l, rhs_of(l), spec.signature));
    } else if (key == "ideal") {
      need_sig(l);
      if (l.words.size() < 2) throw SpecError(l.number, "incomplete ideal line");
      const auto& what = l.words[1];
      if (what == "basis") {
        if (basis) throw SpecError(l.number, "second ideal basis");
        basis = parse_basis(l, spec.signature);
      } else if (what == "r" || what == "delta") {
        auto lhs = lhs_words(l);
        if (lhs.size() != 2) throw SpecError(l.number, "usage: ideal " + what + " = <expr>");
        auto& slot = what == "r" ? r : delta;
        if (slot) throw SpecError(l.number, "second ideal " + what);
        slot = parse_at(l, rhs_of(l), spec.signature);
      } else {
        throw SpecError(l.number, "unknown ideal key '" + what + "'");
      }
    } else if (key == "algebra") {
      if (l.words.size() < 2) throw SpecError(l.number, "incomplete algebra line");
      const auto& what = l.words[1];
      if (what == "basis") {
        if (labels) throw SpecError(l.number, "second algebra basis");
        std::vector<GeneratorSpec> specs;
        for (std::size_t k = 2; k < l.words.size(); ++k) specs.push_back({l.words[k], 0, 0, 1});
        try {
          labels = make_signature(std::move(specs));
        } catch (const InvalidSignature& e) {
          throw SpecError(l.number, e.what());
        }
      } else if (what == "unit") {
        if (!labels) throw SpecError(l.number, "algebra basis must come first");
        if (unit) throw SpecError(l.number, "second algebra unit");
        if (lhs_words(l).size() != 2) throw SpecError(l.number, "usage: algebra unit = <expr>");
        unit = linear_combination(l, rhs_of(l), labels);
      } else if (what == "product") {
        if (!labels) throw SpecError(l.number, "algebra basis must come first");
        products.push_back(&l);
      } else {
        throw SpecError(l.number, "unknown algebra key '" + what + "'");
      }
    } else if (key == "les") {
      if (l.words.size() < 2) throw SpecError(l.number, "incomplete les line");
      if (!spec.les) spec.les.emplace();
      const auto& what = l.words[1];
      if (what == "ambient") {
        spec.les->ambient = parse_table(l, 2);
      } else if (what == "quotient") {
        if (l.words.size() == 3 && l.words[2] == "weyl")
          spec.les->quotient_is_weyl = true;
        else
          spec.les->quotient = parse_table(l, 2);
      } else if (what == "rank") {
        for (auto [n, k] : parse_table(l, 2)) spec.les->ranks[n] = k;
      } else {
        throw SpecError(l.number, "unknown les key '" + what + "'");
      }
    } else {
      throw SpecError(l.number, "unknown keyword '" + key + "'");
    }
  }

  if (spec.signature) {
    spec.dga = build_dga(spec.signature, rules);
    for (const auto& [letter, image] : rules)
      spec.differential_lines.push_back("d " + spec.signature->generator(static_cast<std::size_t>(letter)).name +
                                        " = " + to_string(image, OrderKind::DegreeOrder));
  }
  if (r || delta || basis) {
    if (!r || !delta) throw SpecError(0, "ideal needs both 'ideal r' and 'ideal delta'");
    spec.ideal = IdealStanza{*r, *delta, basis};
  }
  if (labels) {
    const std::size_t d = labels->size();
    FiniteDimAlgebra::Structure c(d, std::vector<FiniteDimAlgebra::Vector>(d, FiniteDimAlgebra::Vector(d)));
    std::vector<std::vector<bool>> seen(d, std::vector<bool>(d, false));
    for (const Line* line : products) {
      const Line& l = *line;
      auto lhs = lhs_words(l);
      if (lhs.size() != 4) throw SpecError(l.number, "usage: algebra product <a> <b> = <expr>");
      auto a = static_cast<std::size_t>(letter_of(l, labels, lhs[2]));
      auto b = static_cast<std::size_t>(letter_of(l, labels, lhs[3]));
      if (seen[a][b]) throw SpecError(l.number, "product " + lhs[2] + " " + lhs[3] + " given twice");
      seen[a][b] = true;
      c[a][b] = linear_combination(l, rhs_of(l), labels);
    }
    if (!unit) throw SpecError(0, "algebra needs 'algebra unit'");
    std::vector<std::string> names;
    for (const auto& g : labels->generators()) names.push_back(g.name);
    spec.algebra.emplace(std::move(names), std::move(c), *unit);
  }
  if (spec.les && spec.les->ambient.empty() && spec.les->quotient.empty() && !spec.les->quotient_is_weyl)
    throw SpecError(0, "les stanza needs 'les ambient' or 'les quotient'");
  return spec;
}

AlgebraSpec load_spec(const std::string& path) {
  constexpr std::string_view prefix = "presets/";
  if (path.rfind(prefix, 0) == 0) {
    std::string name = path.substr(prefix.size());
    if (auto text = preset_text(name)) return parse_spec(*text, path);
  }
  std::ifstream in(path);
  if (!in) throw SpecError(0, "cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), path);
}

}  // namespace dgcell::cli
