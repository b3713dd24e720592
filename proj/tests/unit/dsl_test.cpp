#include <doctest.h>

#include "fincat/dsl/loader.hpp"
#include "fincat/engine.hpp"
#include "fincat/io/json_io.hpp"

using namespace fincat;

namespace {

const char* kChain3 = R"(category chain3 {
  enrichment finset
  objects o0, o1, o2
  hom o0 o0 { id0 }
  hom o0 o1 { a01 }
  hom o0 o2 { a02 }
  hom o1 o1 { id1 }
  hom o1 o2 { a12 }
  hom o2 o2 { id2 }
  identity o0 = id0
  identity o1 = id1
  identity o2 = id2
  compose a12 a01 = a02
}

functor Om : chain3 -> chain3 {
  obj o0 -> o1
  obj o1 -> o2
  obj o2 -> o2
  mor id0 -> id1
  mor a01 -> a12
  mor a02 -> a12
  mor id1 -> id2
  mor a12 -> id2
  mor id2 -> id2
}

nat th : id(chain3) => Om {
  at o0 = a01
  at o1 = a12
  at o2 = id2
}
)";

const char* kMonoid = R"(category M {
  enrichment finset
  objects pt
  hom pt pt { one, e }
  identity pt = one
  compose e e = e
}

functor Om : M -> M {
  obj pt -> pt
  mor one -> one
  mor e -> e
}

nat th : id(M) => Om {
  at pt = e
}
)";

}  // namespace

TEST_CASE("chain3 spec parses, loads and validates") {
  dsl::LoadResult res = dsl::parse_and_load(kChain3);
  REQUIRE(res.ok());
  const dsl::Workspace& ws = *res.workspace;
  REQUIRE(ws.categories.size() == 1);
  CHECK(ws.category_reports[0].ok);
  CHECK(ws.categories[0]->total_morphisms() == 6);
  REQUIRE(ws.functors.size() == 1);
  CHECK(ws.functor_reports[0].ok);
  REQUIRE(ws.nats.size() == 1);
  CHECK(ws.nat_reports[0].ok);
}

TEST_CASE("print-parse round trip is byte identical on normalized specs") {
  for (const char* text : {kChain3, kMonoid}) {
    dsl::ParseResult pr = dsl::parse(text);
    REQUIRE(pr.ok());
    std::string printed = dsl::print(*pr.spec);
    CHECK(printed == text);
    dsl::ParseResult pr2 = dsl::parse(printed);
    REQUIRE(pr2.ok());
    CHECK(dsl::print(*pr2.spec) == printed);
  }
}

TEST_CASE("syntax error carries E001 with position") {
  dsl::ParseResult pr = dsl::parse("category ! {}");
  REQUIRE(!pr.ok());
  CHECK(pr.diagnostics[0].code == "E001");
  CHECK(pr.diagnostics[0].pos.line == 1);
}

TEST_CASE("undeclared object in a hom is E002 with a span") {
  const char* text = R"(category c {
  enrichment finset
  objects a
  hom a ghost { f }
  identity a = f
}
)";
  dsl::LoadResult res = dsl::parse_and_load(text);
  REQUIRE(!res.ok());
  CHECK(res.diagnostics[0].code == "E002");
  CHECK(res.diagnostics[0].pos.line == 4);
}

TEST_CASE("conflicting saturation is E003") {
  // u ∘ v forced to both ida by the table and idb' by associativity: plant a
  // direct conflict instead: two entries for the same pair.
  const char* text = R"(category c {
  enrichment finset
  objects a
  hom a a { ida, s }
  identity a = ida
  compose s s = ida
  compose s s = s
}
)";
  dsl::LoadResult res = dsl::parse_and_load(text);
  REQUIRE(!res.ok());
  CHECK(res.diagnostics[0].code == "E003");
}

TEST_CASE("incomplete composition table is E006") {
  const char* text = R"(category c {
  enrichment finset
  objects a, b, z
  hom a a { ida }
  hom a b { f }
  hom b b { idb }
  hom b z { g }
  hom z z { idz }
  hom a z { }
  identity a = ida
  identity b = idb
  identity z = idz
}
)";
  // g ∘ f must land in hom(a,z), which is empty and cannot be saturated.
  dsl::LoadResult res = dsl::parse_and_load(text);
  REQUIRE(!res.ok());
  CHECK(res.diagnostics[0].code == "E006");
}

TEST_CASE("wrong-endpoint nat component is E004") {
  std::string text = std::string(kChain3);
  auto pos = text.find("at o0 = a01");
  text.replace(pos, 11, "at o0 = a02");
  dsl::LoadResult res = dsl::parse_and_load(text);
  REQUIRE(!res.ok());
  CHECK(res.diagnostics[0].code == "E004");
}

TEST_CASE("associativity saturation derives composites from generators") {
  // Only e∘e is given for the monoid; identity laws saturate the rest.
  dsl::LoadResult res = dsl::parse_and_load(kMonoid);
  REQUIRE(res.ok());
  CHECK(res.workspace->category_reports[0].ok);
}

TEST_CASE("vec spec with rational coefficients loads") {
  const char* text = R"(category Qe2 {
  enrichment finvec
  objects pt
  hom pt pt { one, e }
  identity pt = one
  compose one one = one
  compose one e = e
  compose e one = e
  compose e e = e
}

nat th : id(Qe2) => id(Qe2) {
  at pt = 1/2*one + 3*e
}
)";
  dsl::LoadResult res = dsl::parse_and_load(text);
  REQUIRE(res.ok());
  const NatTrans& t = res.workspace->nats[0].second;
  CHECK(t.at[0].v.vec[0] == Rat(1, 2));
  CHECK(t.at[0].v.vec[1] == Rat(3));
}

TEST_CASE("category json round trip re-validates") {
  dsl::LoadResult res = dsl::parse_and_load(kChain3);
  REQUIRE(res.ok());
  const FiniteCategory& c = *res.workspace->categories[0];
  io::json j = io::category_to_json(c);
  FiniteCategory back = io::category_from_json(j);
  CHECK(back.validate().ok);
  CHECK(back.same_data(c));

  dsl::LoadResult vres = dsl::parse_and_load(R"(category Qline {
  enrichment finvec
  objects pt
  hom pt pt { u }
  identity pt = u
  compose u u = u
}
)");
  REQUIRE(vres.ok());
  io::json vj = io::category_to_json(*vres.workspace->categories[0]);
  FiniteCategory vback = io::category_from_json(vj);
  CHECK(vback.validate().ok);
  CHECK(vback.same_data(*vres.workspace->categories[0]));
}

TEST_CASE("dot export node and edge counts match the category") {
  dsl::LoadResult res = dsl::parse_and_load(kChain3);
  REQUIRE(res.ok());
  const FiniteCategory& c = *res.workspace->categories[0];
  std::string dot = io::category_to_dot(c);
  size_t nodes = 0, edges = 0, at = 0;
  while ((at = dot.find(";\n", at)) != std::string::npos) {
    ++at;
    ++nodes;
  }
  at = 0;
  while ((at = dot.find("->", at)) != std::string::npos) {
    ++at;
    ++edges;
  }
  CHECK(edges == size_t(c.total_morphisms()));
  CHECK(nodes == size_t(c.object_count()) + edges);  // every edge line also ends with ;
}

TEST_CASE("engine session: check, compare and error paths") {
  engine::Session s;
  CHECK(s.load(kChain3, "chain3") == engine::Status::Ok);
  auto check = s.run("check", "{}");
  CHECK(check.status == engine::Status::Ok);

  auto localise = s.run("localise", "{}");
  CHECK(localise.status == engine::Status::Ok);
  io::json lj = io::json::parse(localise.json);
  CHECK(lj["data"]["category"]["objects"].size() == 1);
  int morphisms = 0;
  for (const auto& h : lj["data"]["category"]["homs"]) morphisms += int(h["elements"].size());
  CHECK(morphisms == 1);

  engine::Session m;
  CHECK(m.load(kMonoid, "monoid") == engine::Status::Ok);
  auto compare = m.run("compare", "{}");
  CHECK(compare.status == engine::Status::CheckFailed);
  io::json cj = io::json::parse(compare.json);
  CHECK(cj["data"]["verdict"] == false);
  CHECK(cj["data"].contains("witness"));

  engine::Session bad;
  CHECK(bad.load("category {", "bad") == engine::Status::ParseError);
  io::json diag = io::json::parse(bad.last_result_json());
  CHECK(diag["diagnostics"].size() > 0);

  auto unknown = s.run("frobnicate", "{}");
  CHECK(unknown.status == engine::Status::UsageError);
}
