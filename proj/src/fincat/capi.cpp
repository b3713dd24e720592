#include "fincat/fincat.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "fincat/engine.hpp"

struct fincat_session {
  fincat::engine::Session impl;
  std::string error;
  std::string result;
};

namespace {

fincat_status to_status(fincat::engine::Status s) {
  return static_cast<fincat_status>(static_cast<int>(s));
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

fincat_status fincat_session_new(fincat_session** out) {
  if (!out) return FINCAT_USAGE_ERROR;
  *out = new (std::nothrow) fincat_session();
  return *out ? FINCAT_OK : FINCAT_INTERNAL_ERROR;
}

void fincat_session_free(fincat_session* s) { delete s; }

fincat_status fincat_load_spec(fincat_session* s, const char* text, size_t len,
                               const char* source_name) {
  if (!s || !text) return FINCAT_USAGE_ERROR;
  try {
    auto status = s->impl.load(std::string_view(text, len), source_name ? source_name : "spec");
    s->error = s->impl.last_error();
    s->result = s->impl.last_result_json();
    return to_status(status);
  } catch (const std::exception& e) {
    s->error = e.what();
    return FINCAT_INTERNAL_ERROR;
  }
}

fincat_status fincat_run(fincat_session* s, const char* command, const char* args_json,
                         char** result_json) {
  if (!s || !command) return FINCAT_USAGE_ERROR;
  try {
    auto res = s->impl.run(command, args_json ? args_json : "");
    s->error = s->impl.last_error();
    s->result = res.json;
    if (result_json) {
      *result_json = dup_string(res.json);
      if (!*result_json) return FINCAT_INTERNAL_ERROR;
    }
    return to_status(res.status);
  } catch (const std::exception& e) {
    s->error = e.what();
    return FINCAT_INTERNAL_ERROR;
  }
}

const char* fincat_last_error(const fincat_session* s) { return s ? s->error.c_str() : ""; }

const char* fincat_last_result(const fincat_session* s) { return s ? s->result.c_str() : ""; }

void fincat_string_free(char* s) { std::free(s); }

const char* fincat_version(void) { return "0.1.0"; }

}  // extern "C"
