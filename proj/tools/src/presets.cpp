#include "dgcell/cli/presets.hpp"

#include <charconv>
#include <stdexcept>

namespace dgcell::cli {

namespace {

std::vector<int> parse_params(std::string_view rest, std::string_view preset) {
  std::vector<int> out;
  while (!rest.empty()) {
    auto colon = rest.find(':');
    std::string_view item = rest.substr(0, colon);
    int v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || p != item.data() + item.size())
      throw std::invalid_argument("bad parameter '" + std::string(item) + "' for preset " + std::string(preset));
    out.push_back(v);
    rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
  }
  return out;
}

std::string weyl() {
  return "# first Weyl algebra as a DG quotient of k<x1, x2, x3>\n"
         "generator x1 degree 0 weight 1\n"
         "generator x2 degree 0 weight 1\n"
         "generator x3 degree -1 weight 2\n"
         "d x3 = x1*x2 - x2*x1 - 1\n"
         "ideal r = x3\n"
         "ideal delta = x1*x2 - x2*x1 - 1\n"
         "ideal basis normal x2 x1\n";
}

std::string naive(int n, int i, int j) {
  if (n < 2 || n > 9 || i < 1 || j <= i || j > n)
    throw std::invalid_argument("naive preset needs 1 <= i < j <= n <= 9");
  std::string s = "# k<x1..x" + std::to_string(n) + "> with d x" + std::to_string(j) + " = x" + std::to_string(i) + "\n";
  for (int k = 1; k <= n; ++k)
    s += "generator x" + std::to_string(k) + " degree " + (k == j ? "-1" : "0") + " weight 1\n";
  std::string xi = "x" + std::to_string(i), xj = "x" + std::to_string(j);
  s += "d " + xj + " = " + xi + "\n";
  s += "ideal r = " + xj + "\n";
  s += "ideal delta = " + xi + "\n";
  s += "ideal basis avoid " + xi + " " + xj + "\n";
  return s;
}

std::string nonacyclic() {
  return "# d x2 = x1^2; the quotient k<x1>/(x1^2) is finite dimensional, A is not\n"
         "generator x1 degree 0 weight 1\n"
         "generator x2 degree -1 weight 2\n"
         "d x2 = x1^2\n"
         "ideal r = x2\n"
         "ideal delta = x1^2\n"
         "ideal basis words 1, x1\n";
}

std::string dualnumbers() {
  return "# k[x]/(x^2)\n"
         "algebra basis u x\n"
         "algebra unit = u\n"
         "algebra product u u = u\n"
         "algebra product u x = x\n"
         "algebra product x u = x\n";
}

std::string semisimple() {
  return "# k x k\n"
         "algebra basis e1 e2\n"
         "algebra unit = e1 + e2\n"
         "algebra product e1 e1 = e1\n"
         "algebra product e2 e2 = e2\n";
}

std::string field() {
  return "algebra basis u\n"
         "algebra unit = u\n"
         "algebra product u u = u\n";
}

std::string les_theorem(int m) {
  if (m < 0) throw std::invalid_argument("les-theorem needs m >= 0");
  return "# ambient: m exceptional objects; quotient: HH of the Weyl algebra\n"
         "les ambient 0=" + std::to_string(m) + "\n"
         "les quotient weyl\n";
}

}  // namespace

const std::vector<PresetInfo>& list_presets() {
  static const std::vector<PresetInfo> presets = {
      {"weyl", "weyl", "k<x1,x2,x3>, d x3 = x1*x2 - x2*x1 - 1, pair (x3, d x3), V = {x2^i x1^j}"},
      {"naive", "naive[:n:i:j]", "k<x1..xn>, d xj = xi, pair (xj, xi), V = words avoiding xi, xj (default 3:1:2)"},
      {"nonacyclic", "nonacyclic", "k<x1,x2>, d x2 = x1^2, pair (x2, x1^2), V = {1, x1}"},
      {"dualnumbers", "dualnumbers", "k[x]/(x^2) for hh-bar"},
      {"semisimple", "semisimple", "k x k for hh-bar"},
      {"field", "field", "the ground field for hh-bar"},
      {"les-theorem", "les-theorem[:m]", "ambient HH = k^m in degree 0, quotient HH(A1) (default m = 4)"},
  };
  return presets;
}

std::optional<std::string> preset_text(std::string_view name) {
  auto colon = name.find(':');
  std::string_view base = name.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) params = parse_params(name.substr(colon + 1), base);
  auto arity = [&](std::size_t allowed) {
    if (!params.empty() && params.size() != allowed)
      throw std::invalid_argument("preset " + std::string(base) + " takes " + std::to_string(allowed) + " parameters");
  };

  if (base == "weyl") return arity(0), weyl();
  if (base == "naive") {
    arity(3);
    return params.empty() ? naive(3, 1, 2) : naive(params[0], params[1], params[2]);
  }
  if (base == "nonacyclic") return arity(0), nonacyclic();
  if (base == "dualnumbers") return arity(0), dualnumbers();
  if (base == "semisimple") return arity(0), semisimple();
  if (base == "field") return arity(0), field();
  if (base == "les-theorem") {
    arity(1);
    return les_theorem(params.empty() ? 4 : params[0]);
  }
  return std::nullopt;
}

}  // namespace dgcell::cli
