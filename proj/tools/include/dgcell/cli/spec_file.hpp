#pragma once

// Line-oriented algebra description files.
//
//   # comment
//   generator x1 degree 0 [weight 1]
//   d x3 = x1*x2 - x2*x1 - 1
//   ideal r = x3
//   ideal delta = x1*x2 - x2*x1 - 1
//   ideal basis normal x2 x1 | avoid x1 x2 | words x1, x2*x1
//   algebra basis u x
//   algebra unit = u
//   algebra product x x = 0
//   les ambient 0=4
//   les quotient 2=1 | weyl
//   les rank 0=1
//
// Generators without a `d` line are closed. Unlisted algebra products are 0.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dgcell/dg_algebra.hpp"
#include "dgcell/hochschild.hpp"
#include "dgcell/ideal_lab.hpp"

namespace dgcell::cli {

class SpecError : public std::invalid_argument {
 public:
  SpecError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct IdealStanza {
  Polynomial r;
  Polynomial delta;
  std::optional<BasisFamily> basis;
};

struct LesStanza {
  std::map<std::size_t, std::size_t> ambient;
  std::map<std::size_t, std::size_t> quotient;
  bool quotient_is_weyl = false;
  std::map<std::size_t, std::size_t> ranks;
};

struct AlgebraSpec {
  std::string origin;
  SignaturePtr signature;
  std::optional<FiniteCellDGA> dga;
  std::vector<std::string> differential_lines;  // "d x3 = ..." in canonical form
  std::optional<IdealStanza> ideal;
  std::optional<FiniteDimAlgebra> algebra;
  std::optional<LesStanza> les;
};

/// Throws SpecError, ParseError or DgaError.
AlgebraSpec parse_spec(std::string_view text, std::string origin = "<input>");

/// Reads "presets/<name>" from the registry, anything else from disk.
AlgebraSpec load_spec(const std::string& path);

}  // namespace dgcell::cli
