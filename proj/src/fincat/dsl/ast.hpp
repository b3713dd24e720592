#pragma once

#include <string>
#include <vector>

#include "fincat/carrier.hpp"

namespace fincat::dsl {

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct Diagnostic {
  std::string code;  // E001 syntax, E002 undefined reference, E003 composition
                     // conflict, E004 type mismatch, E005 duplicate,
                     // E006 incomplete table, E007 bad value, E008 failed laws
  std::string message;
  SourcePos pos;
};

struct AstTerm {
  Rat coeff = Rat(1);
  std::string label;  // empty for a bare scalar (only 0 is legal)
};

struct AstExpr {
  std::vector<AstTerm> terms;
  SourcePos pos;
};

struct AstHomDecl {
  std::string src, dst;
  std::vector<std::string> labels;
  SourcePos pos;
};

struct AstCompose {
  std::string g, f;
  AstExpr rhs;
  SourcePos pos;
};

struct AstIdentity {
  std::string obj;
  AstExpr value;
  SourcePos pos;
};

struct AstCategory {
  std::string name;
  SourcePos pos;
  bool mode_declared = false;
  Mode mode = Mode::Set;
  std::vector<std::pair<std::string, SourcePos>> objects;
  std::vector<AstHomDecl> homs;
  std::vector<AstIdentity> identities;
  std::vector<AstCompose> composes;
};

struct AstObjMap {
  std::string from, to;
  SourcePos pos;
};

struct AstMorMap {
  std::string from;
  AstExpr to;
  SourcePos pos;
};

struct AstFunctor {
  std::string name;
  std::string src_cat, dst_cat;
  SourcePos pos;
  std::vector<AstObjMap> objects;
  std::vector<AstMorMap> morphisms;
};

struct AstFunctorRef {
  bool is_identity = false;
  std::string name;  // functor name, or category name when is_identity
  SourcePos pos;
};

struct AstNat {
  std::string name;
  AstFunctorRef source, target;
  SourcePos pos;
  std::vector<std::pair<std::string, AstExpr>> components;  // object -> value
};

struct AstDirective {
  std::string key;
  std::string value;
  SourcePos pos;
};

struct SpecFile {
  std::vector<AstCategory> categories;
  std::vector<AstFunctor> functors;
  std::vector<AstNat> nats;
  std::vector<AstDirective> directives;
  // Order of blocks as written, for normalized printing: (kind, index).
  std::vector<std::pair<char, int>> order;  // 'c', 'f', 'n', 'd'
};

}  // namespace fincat::dsl
