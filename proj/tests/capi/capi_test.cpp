// Exercises the shared-library C surface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "fincat/fincat.h"

namespace {

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

TEST_CASE("session lifecycle and version") {
  CHECK(std::string(fincat_version()).size() > 0);
  fincat_session* s = nullptr;
  REQUIRE(fincat_session_new(&s) == FINCAT_OK);
  REQUIRE(s != nullptr);
  // Running before loading is a usage error.
  char* out = nullptr;
  CHECK(fincat_run(s, "check", nullptr, &out) == FINCAT_USAGE_ERROR);
  fincat_string_free(out);
  fincat_session_free(s);
}

TEST_CASE("parse errors surface diagnostics") {
  fincat_session* s = nullptr;
  REQUIRE(fincat_session_new(&s) == FINCAT_OK);
  const char* bad = "category {";
  CHECK(fincat_load_spec(s, bad, std::strlen(bad), "bad.cat") == FINCAT_PARSE_ERROR);
  std::string diag = fincat_last_result(s);
  CHECK(diag.find("E001") != std::string::npos);
  CHECK(std::string(fincat_last_error(s)).size() > 0);
  fincat_session_free(s);
}

TEST_CASE("check passes and compare reports the failed equivalence") {
  fincat_session* s = nullptr;
  REQUIRE(fincat_session_new(&s) == FINCAT_OK);
  REQUIRE(fincat_load_spec(s, kMonoid, std::strlen(kMonoid), "monoid-e.cat") == FINCAT_OK);

  char* out = nullptr;
  CHECK(fincat_run(s, "check", "{}", &out) == FINCAT_OK);
  REQUIRE(out != nullptr);
  CHECK(std::string(out).find("\"ok\": true") != std::string::npos);
  fincat_string_free(out);

  out = nullptr;
  CHECK(fincat_run(s, "compare", "{}", &out) == FINCAT_CHECK_FAILED);
  REQUIRE(out != nullptr);
  std::string result = out;
  CHECK(result.find("\"verdict\": false") != std::string::npos);
  CHECK(result.find("witness") != std::string::npos);
  fincat_string_free(out);

  out = nullptr;
  CHECK(fincat_run(s, "frobnicate", "{}", &out) == FINCAT_USAGE_ERROR);
  fincat_string_free(out);
  fincat_session_free(s);
}
