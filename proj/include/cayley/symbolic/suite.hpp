#pragma once

#include <string>
#include <vector>

#include "cayley/symbolic/frame_forms.hpp"

namespace cayley::symbolic {

struct IdentityResult {
  std::string name;
  std::string anchor;
  bool holds = false;
  // False for the displayed forms of the two misprinted identities: those
  // are checked so that the discrepancy stays visible, and the corrected
  // identity is checked alongside.
  bool expected = true;
  Expr residual;

  bool ok() const { return holds == expected; }
};

IdentityResult verify_identity(std::string name, std::string anchor, const Expr& lhs, const Expr& rhs);

std::vector<IdentityResult> canned_suite(const Mutation& mutation = {});

}  // namespace cayley::symbolic
