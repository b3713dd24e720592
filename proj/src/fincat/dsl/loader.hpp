#pragma once

#include <memory>

#include "fincat/dsl/parser.hpp"
#include "fincat/functor.hpp"

namespace fincat::dsl {

// Named engine values built from a spec file. Categories live behind stable
// pointers so functors and transformations can reference them.
struct Workspace {
  std::vector<std::unique_ptr<FiniteCategory>> categories;
  std::vector<std::string> category_names;
  std::vector<std::pair<std::string, Functor>> functors;
  std::vector<std::pair<std::string, NatTrans>> nats;
  std::vector<std::pair<std::string, std::string>> directives;
  // Law-check reports per block, in declaration order (structure errors are
  // load diagnostics; law failures are reported here for `check`).
  std::vector<Report> category_reports;
  std::vector<Report> functor_reports;
  std::vector<Report> nat_reports;

  const FiniteCategory* category(const std::string& name) const;
  const Functor* functor(const std::string& name) const;
  const NatTrans* nat(const std::string& name) const;
  std::optional<std::string> directive(const std::string& key) const;
  long long directive_int(const std::string& key, long long fallback) const;
};

struct LoadResult {
  std::unique_ptr<Workspace> workspace;  // present iff no diagnostics
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return workspace != nullptr; }
};

// Builds validated engine values from an AST. Composition tables may be given
// on generators; missing composites are inferred by identity laws and
// associativity saturation (Set mode), with conflicts reported as E003.
// `parent` makes the categories of an enclosing workspace visible, so a
// target spec can reference the base category by name.
LoadResult load(const SpecFile& spec, const Workspace* parent = nullptr);

LoadResult parse_and_load(std::string_view text, const Workspace* parent = nullptr);

}  // namespace fincat::dsl
