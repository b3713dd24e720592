#pragma once

#include "fincat/dsl/loader.hpp"

namespace fincat::engine {

enum class Status {
  Ok = 0,
  CheckFailed = 1,
  ParseError = 2,
  UsageError = 3,
  LimitExceeded = 4,
  InternalError = 5,
};

struct RunResult {
  Status status = Status::Ok;
  std::string json;
};

// One loaded spec plus command dispatch. Every command returns a versioned
// JSON envelope; mathematical failures carry their witness inside it.
class Session {
 public:
  // On failure the diagnostics are retrievable via last_result_json().
  Status load(std::string_view text, const std::string& source_name);
  RunResult run(const std::string& command, const std::string& args_json);

  const std::string& last_error() const { return last_error_; }
  const std::string& last_result_json() const { return last_result_; }
  const dsl::Workspace* workspace() const { return ws_.get(); }

 private:
  std::unique_ptr<dsl::Workspace> ws_;
  std::string source_name_;
  std::string last_error_;
  std::string last_result_;
};

}  // namespace fincat::engine
