#pragma once

#include <optional>
#include <vector>

#include "cayley/exterior/scalar.hpp"

namespace cayley::exterior {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<int> pivot_columns;
};

// Reduced row echelon form. Columns are scanned in `column_order` (all
// columns left to right when empty), so callers can steer which variables
// become pivots.
RowEchelon rref(RationalMatrix m, const std::vector<int>& column_order = {});

int rank(const RationalMatrix& m);

// One basis vector per free column, with that free variable set to 1 and
// the other free variables 0.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, const std::vector<int>& column_order = {});

// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

}  // namespace cayley::exterior
