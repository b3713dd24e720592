#pragma once

#include <optional>

#include "fincat/dsl/ast.hpp"

namespace fincat::dsl {

struct ParseResult {
  std::optional<SpecFile> spec;  // present iff no diagnostics
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return spec.has_value(); }
};

ParseResult parse(std::string_view text);

// Canonical textual form; parse ∘ print is the identity on normalized specs.
std::string print(const SpecFile& spec);

std::string expr_str(const AstExpr& e);

}  // namespace fincat::dsl
