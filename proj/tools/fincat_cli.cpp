// Command line driver for the fincat engine; links only the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fincat/fincat.h"

namespace {

using nlohmann::json;

int status_to_exit(fincat_status s) {
  switch (s) {
    case FINCAT_OK:
      return 0;
    case FINCAT_CHECK_FAILED:
      return 1;
    default:
      return 2;  // parse, usage, limit, internal
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SessionHandle {
  fincat_session* s = nullptr;
  SessionHandle() { fincat_session_new(&s); }
  ~SessionHandle() { fincat_session_free(s); }
};

int run_command(const std::string& spec_path, const std::string& command, const json& args,
                const std::string& dot_path, bool quiet) {
  auto text = read_file(spec_path);
  if (!text) {
    std::cerr << "fincat: cannot read '" << spec_path << "'\n";
    return 2;
  }
  SessionHandle session;
  fincat_status st = fincat_load_spec(session.s, text->c_str(), text->size(), spec_path.c_str());
  if (st != FINCAT_OK) {
    std::cout << fincat_last_result(session.s) << "\n";
    return status_to_exit(st);
  }
  char* result = nullptr;
  st = fincat_run(session.s, command.c_str(), args.dump().c_str(), &result);
  std::string out = result ? result : "";
  fincat_string_free(result);
  if (!dot_path.empty()) {
    json parsed = json::parse(out, nullptr, false);
    std::string dot;
    if (!parsed.is_discarded() && parsed.contains("data")) {
      if (parsed["data"].contains("dot")) {
        dot = parsed["data"]["dot"].get<std::string>();
      } else if (parsed["data"].contains("categories")) {
        for (const auto& c : parsed["data"]["categories"])
          if (c.contains("dot")) dot += c["dot"].get<std::string>();
      }
    }
    if (dot.empty()) {
      std::cerr << "fincat: no DOT output for this command\n";
    } else {
      std::ofstream df(dot_path, std::ios::binary);
      df << dot;
    }
  }
  if (!quiet) std::cout << out << "\n";
  return status_to_exit(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fincat: localisation, spectra and stabilisation for finite enriched categories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fincat_version()));

  std::string spec_path, endo, point, object, dot_path, target_path, target_category;
  std::string via, target_endo;
  int window = -1, max_grade = -1, max_objects = 6, max_level = 6;
  bool full = false, quiet = false, heller = false;

  auto add_common = [&](CLI::App* cmd, bool needs_point) {
    cmd->add_option("spec", spec_path, "input .cat spec file")->required();
    cmd->add_option("--endo", endo, "endofunctor name (defaults to the unique one)");
    if (needs_point)
      cmd->add_option("--point", point, "pointing transformation name (defaults to the unique one)");
    cmd->add_option("--dot", dot_path, "write a DOT graph of the computed category");
    cmd->add_flag("--quiet", quiet, "suppress the JSON result on stdout");
  };

  CLI::App* check = app.add_subcommand("check", "validate the spec's categories and functors");
  check->add_option("spec", spec_path, "input .cat spec file")->required();
  check->add_option("--dot", dot_path, "write DOT graphs of the categories");
  check->add_flag("--quiet", quiet, "suppress the JSON result on stdout");

  CLI::App* localise = app.add_subcommand("localise", "localisation at a well-pointed endofunctor");
  add_common(localise, true);
  localise->add_flag("--full", full, "include the unskeletonized localisation");

  CLI::App* spectrify = app.add_subcommand("spectrify", "spectrify the pointing spectra");
  add_common(spectrify, true);
  spectrify->add_option("--object", object, "restrict to one object");

  CLI::App* stabilise = app.add_subcommand("stabilise", "Heller stabilisation on a degree window");
  add_common(stabilise, false);
  stabilise->add_option("--window", window, "degree window half-width");

  CLI::App* orbit = app.add_subcommand("orbit", "orbit category with graded homs");
  add_common(orbit, false);
  orbit->add_option("--max-grade", max_grade, "grade bound");

  CLI::App* compare = app.add_subcommand(
      "compare", "comparison functors between spectra, stabilisation and localisation");
  add_common(compare, true);
  compare->add_option("--window", window, "degree window half-width");

  CLI::App* verify = app.add_subcommand("verify", "verify a universal property by enumeration");
  CLI::App* universal = verify->add_subcommand("universal", "factorisation through the localisation");
  add_common(universal, true);
  universal->add_option("--target", target_path, "target category spec file")->required();
  universal->add_option("--target-category", target_category, "category name in the target spec");
  universal->add_option("--max-objects", max_objects, "refuse larger targets");
  universal->add_flag("--heller", heller, "verify the Heller stabilisation property instead");
  universal->add_option("--via", via, "(heller) intertwining functor in the target spec");
  universal->add_option("--target-endo", target_endo, "(heller) autoequivalence in the target spec");
  universal->add_option("--window", window, "(heller) degree window");

  CLI::App* adjoint = app.add_subcommand("adjoint", "left adjoint search and free loop spaces");
  add_common(adjoint, true);
  adjoint->add_option("--max-level", max_level, "levels checked for the spectrification formula");

  CLI11_PARSE(app, argc, argv);

  json args = json::object();
  if (!endo.empty()) args["endo"] = endo;
  if (!point.empty()) args["point"] = point;
  if (window >= 0) args["window"] = window;
  if (max_grade >= 0) args["max_grade"] = max_grade;
  if (full) args["full"] = true;
  if (!object.empty()) args["object"] = object;

  if (check->parsed()) return run_command(spec_path, "check", args, dot_path, quiet);
  if (localise->parsed()) return run_command(spec_path, "localise", args, dot_path, quiet);
  if (spectrify->parsed()) return run_command(spec_path, "spectrify", args, dot_path, quiet);
  if (stabilise->parsed()) return run_command(spec_path, "stabilise", args, dot_path, quiet);
  if (orbit->parsed()) return run_command(spec_path, "orbit", args, dot_path, quiet);
  if (compare->parsed()) return run_command(spec_path, "compare", args, dot_path, quiet);
  if (adjoint->parsed()) {
    args["max_level"] = max_level;
    return run_command(spec_path, "adjoint", args, dot_path, quiet);
  }
  if (verify->parsed() && universal->parsed()) {
    auto target_text = read_file(target_path);
    if (!target_text) {
      std::cerr << "fincat: cannot read '" << target_path << "'\n";
      return 2;
    }
    args["target_text"] = *target_text;
    if (!target_category.empty()) args["target_category"] = target_category;
    args["max_objects"] = max_objects;
    args["kind"] = heller ? "heller" : "localisation";
    if (!via.empty()) args["via"] = via;
    if (!target_endo.empty()) args["target_endo"] = target_endo;
    return run_command(spec_path, "verify", args, dot_path, quiet);
  }
  std::cerr << "fincat: no subcommand\n";
  return 2;
}
