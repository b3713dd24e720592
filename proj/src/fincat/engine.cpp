#include "fincat/engine.hpp"

#include "fincat/io/json_io.hpp"
#include "fincat/orbit.hpp"
#include "fincat/proposition.hpp"

namespace fincat::engine {

using io::json;

namespace {

constexpr const char* kSchema = "fincat.result/1";

json envelope(const std::string& command, bool ok) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["ok"] = ok;
  return j;
}

struct CommandError {
  Status status;
  std::string message;
};

// Resolves the endofunctor and pointing named in the arguments (or the unique
// ones in the workspace) into a validated well-pointed pair.
WellPointedEndo resolve_wp(const dsl::Workspace& ws, const json& args) {
  std::string endo = args.value("endo", "");
  std::string point = args.value("point", "");
  if (endo.empty()) {
    if (ws.functors.size() == 1) endo = ws.functors[0].first;
    else throw CommandError{Status::UsageError, "ambiguous endofunctor: pass \"endo\""};
  }
  if (point.empty()) {
    if (ws.nats.size() == 1) point = ws.nats[0].first;
    else throw CommandError{Status::UsageError, "ambiguous pointing: pass \"point\""};
  }
  const Functor* om = ws.functor(endo);
  if (!om) throw CommandError{Status::UsageError, "unknown functor '" + endo + "'"};
  if (om->src != om->dst)
    throw CommandError{Status::UsageError, "functor '" + endo + "' is not an endofunctor"};
  const NatTrans* th = ws.nat(point);
  if (!th) throw CommandError{Status::UsageError, "unknown transformation '" + point + "'"};
  try {
    return WellPointedEndo::make(*om, *th);
  } catch (const Error& e) {
    throw CommandError{Status::CheckFailed, e.what()};
  }
}

const Functor& resolve_endo(const dsl::Workspace& ws, const json& args) {
  std::string endo = args.value("endo", "");
  if (endo.empty()) {
    if (ws.functors.size() == 1) endo = ws.functors[0].first;
    else throw CommandError{Status::UsageError, "ambiguous endofunctor: pass \"endo\""};
  }
  const Functor* om = ws.functor(endo);
  if (!om) throw CommandError{Status::UsageError, "unknown functor '" + endo + "'"};
  if (om->src != om->dst)
    throw CommandError{Status::UsageError, "functor '" + endo + "' is not an endofunctor"};
  return *om;
}

EnumLimits limits_from(const dsl::Workspace& ws) {
  EnumLimits l = EnumLimits::from_env();
  l.max_candidates = ws.directive_int("enum_limit", l.max_candidates);
  return l;
}

json cmd_check(const dsl::Workspace& ws) {
  json data;
  bool ok = true;
  data["categories"] = json::array();
  for (size_t i = 0; i < ws.categories.size(); ++i) {
    json c;
    c["name"] = ws.category_names[i];
    c["objects"] = ws.categories[i]->object_count();
    c["morphisms"] = ws.categories[i]->total_morphisms();
    c["report"] = io::report_to_json(ws.category_reports[i]);
    c["dot"] = io::category_to_dot(*ws.categories[i]);
    ok &= ws.category_reports[i].ok;
    data["categories"].push_back(c);
  }
  data["functors"] = json::array();
  for (size_t i = 0; i < ws.functors.size(); ++i) {
    json f;
    f["name"] = ws.functors[i].first;
    f["report"] = io::report_to_json(ws.functor_reports[i]);
    ok &= ws.functor_reports[i].ok;
    data["functors"].push_back(f);
  }
  data["nats"] = json::array();
  for (size_t i = 0; i < ws.nats.size(); ++i) {
    json t;
    t["name"] = ws.nats[i].first;
    t["report"] = io::report_to_json(ws.nat_reports[i]);
    ok &= ws.nat_reports[i].ok;
    data["nats"].push_back(t);
  }
  data["all_ok"] = ok;
  return data;
}

json cmd_localise(const dsl::Workspace& ws, const json& args, bool& ok) {
  WellPointedEndo wp = resolve_wp(ws, args);
  LocalisedCategory loc = localisation_category(wp);
  HomFormulaBridge bridge = hom_formula_bridge(wp, loc);
  json data;
  data["category"] = io::category_to_json(*loc.skeleton_cat);
  data["dot"] = io::category_to_dot(*loc.skeleton_cat);
  if (args.value("full", false)) data["full_category"] = io::category_to_json(*loc.cat);
  data["theta_inverted"] = loc.theta_inverted;
  data["hom_formula_agreement"] = bridge.ok();
  data["skeleton_objects"] = json::array();
  for (ObjId r : loc.skeleton) data["skeleton_objects"].push_back(wp.category().object_name(r));
  json algebras = json::object();
  for (ObjId x = 0; x < wp.category().object_count(); ++x) {
    AlgebraCheck ac = algebra_check(wp, x);
    json a;
    a["theta_invertible"] = ac.theta_invertible;
    a["lemma_consistent"] = ac.lemma_consistent();
    if (ac.structure)
      a["structure"] = wp.category().morphism_str(*ac.structure);
    algebras[wp.category().object_name(x)] = a;
  }
  data["algebras"] = algebras;
  ok = loc.theta_inverted && bridge.ok();
  return data;
}

json cmd_spectrify(const dsl::Workspace& ws, const json& args, bool& ok) {
  WellPointedEndo wp = resolve_wp(ws, args);
  const FiniteCategory& C = wp.category();
  std::vector<ObjId> objects;
  if (args.contains("object")) {
    auto o = C.object_by_name(args["object"].get<std::string>());
    if (!o) throw CommandError{Status::UsageError, "unknown object"};
    objects.push_back(*o);
  } else {
    for (ObjId x = 0; x < C.object_count(); ++x) objects.push_back(x);
  }
  ok = true;
  json data;
  data["spectra"] = json::array();
  for (ObjId x : objects) {
    BaseSpectrum theta_x = theta_embedding(wp, x);
    IndSpectrum sp = spectrify(wp, theta_x);
    bool omega_sp = is_omega_spectrum(wp.omega, sp);
    IndObject expected = omega_infinity(wp, x);
    bool constant_loc = true;
    for (int n = 0; n < sp.preperiod + sp.period; ++n)
      constant_loc &= ind_isomorphic(sp.level(n), expected);
    json entry;
    entry["object"] = C.object_name(x);
    entry["is_omega_spectrum"] = omega_sp;
    entry["constant_on_localisation"] = constant_loc;
    entry["levels"] = json::array();
    for (int n = 0; n < sp.preperiod + sp.period; ++n)
      entry["levels"].push_back(io::ind_object_to_json(sp.level(n)));
    data["spectra"].push_back(entry);
    ok &= omega_sp && constant_loc;
  }
  return data;
}

json cmd_stabilise(const dsl::Workspace& ws, const json& args, bool& ok) {
  const Functor& om = resolve_endo(ws, args);
  int window = args.value("window", int(ws.directive_int("degree_window", 3)));
  StabCategory stab(om, window);
  Report shift = stab.degree_shift_certificate();
  Report autoeq = stab.autoequivalence_certificate();
  json data;
  data["window"] = window;
  data["category"] = io::category_to_json(stab.cat());
  data["dot"] = io::category_to_dot(stab.cat());
  data["degree_shift_certificate"] = io::report_to_json(shift);
  data["autoequivalence_certificate"] = io::report_to_json(autoeq);
  data["laws"] = io::report_to_json(stab.cat().validate());
  ok = shift.ok && autoeq.ok && stab.cat().validate().ok;
  return data;
}

json cmd_orbit(const dsl::Workspace& ws, const json& args, bool& ok) {
  const Functor& om = resolve_endo(ws, args);
  if (om.src->mode != Mode::Set)
    throw CommandError{Status::UsageError, "orbit categories are Set-enriched only"};
  int max_grade = args.value("max_grade", int(ws.directive_int("max_grade", 4)));
  OrbitWellPointing cert = orbit_well_pointing(om, max_grade);
  json data;
  data["max_grade"] = max_grade;
  json homs = json::array();
  const FiniteCategory& C = *om.src;
  for (ObjId x = 0; x < C.object_count(); ++x)
    for (ObjId y = 0; y < C.object_count(); ++y) {
      OrbitHom h = orbit_hom(om, x, y, max_grade);
      json entry;
      entry["src"] = C.object_name(x);
      entry["dst"] = C.object_name(y);
      entry["preperiod"] = h.periodicity.preperiod;
      entry["period"] = h.periodicity.period;
      entry["grades"] = json::array();
      for (const auto& g : h.grades) entry["grades"].push_back(g.size());
      homs.push_back(entry);
    }
  data["homs"] = homs;
  data["well_pointing"] = {{"natural", cert.natural},
                           {"well_pointed", cert.well_pointed},
                           {"periodicity_closes", cert.periodicity_closes},
                           {"witness", cert.witness}};
  ok = cert.ok();
  return data;
}

json coreflection_json(const CoreflectionCertificate& c) {
  return {{"hom_isos", c.hom_isos},
          {"unit_iso", c.unit_iso},
          {"triangles", c.triangles},
          {"witness", c.witness}};
}

json cmd_compare(const dsl::Workspace& ws, const json& args, bool& ok) {
  WellPointedEndo wp = resolve_wp(ws, args);
  int window = args.value("window", 1);
  PropositionReport rep = check_proposition_equivalence(wp, window);
  json data;
  data["coreflection_stabilisation"] = coreflection_json(rep.stab_coreflection);
  data["coreflection_spectra"] = coreflection_json(rep.spectra_coreflection);
  data["psi_constructed"] = rep.psi_constructed;
  data["phi_psi_iso_eta"] = rep.phi_psi_iso_eta;
  data["psi_phi_iso_eps"] = rep.psi_phi_iso_eps;
  data["phi_equivalence"] = rep.phi_equivalence;
  data["phi_inverse_is_psi"] = rep.phi_inverse_is_psi;
  data["verdict"] = rep.verdict;
  data["stab_equivalent_to_localisation"] = rep.stab_equiv_L;
  data["spectra_equivalent_to_localisation"] = rep.spectra_equiv_L;
  if (!rep.phi_witness.empty()) data["witness"] = rep.phi_witness;
  bool agreement = true;
  if (wp.category().mode == Mode::Set) {
    DualityReport dual = eventual_image_duality_check(wp, window);
    data["eventual_image_duality"] = {{"applicable", dual.applicable},
                                      {"hom_comparisons", dual.hom_comparisons},
                                      {"essentially_surjective", dual.essentially_surjective},
                                      {"verdict", dual.verdict},
                                      {"witness", dual.witness}};
    agreement = dual.verdict == rep.phi_equivalence;
    data["duality_agrees_with_phi"] = agreement;
  }
  ok = rep.ok() && rep.verdict && agreement;
  return data;
}

json cmd_adjoint(const dsl::Workspace& ws, const json& args, bool& ok) {
  const Functor& om = resolve_endo(ws, args);
  auto adj = find_left_adjoint(om);
  json data;
  data["found"] = adj.has_value();
  ok = true;
  if (!adj) return data;
  data["sigma"] = io::functor_to_json(adj->left);
  data["unit"] = io::nat_to_json(adj->unit);
  data["counit"] = io::nat_to_json(adj->counit);
  data["triangle_identities"] = true;  // verified by construction in the search
  const FiniteCategory& C = *om.src;
  json loops = json::object();
  for (ObjId x = 0; x < C.object_count(); ++x)
    loops[C.object_name(x)] = io::ind_object_to_json(free_loop(om, *adj, x));
  data["free_loops"] = loops;
  // With a pointing available, check the level formula for spectrification.
  if (args.contains("point") || ws.nats.size() == 1) {
    try {
      WellPointedEndo wp = resolve_wp(ws, args);
      int max_level = args.value("max_level", 6);
      bool levels_match = true;
      for (ObjId x = 0; x < C.object_count(); ++x) {
        BaseSpectrum si = sigma_infinity(om, *adj, x);
        IndSpectrum sp = spectrify(wp, si);
        ObjId sx = x;
        for (int n = 0; n <= max_level; ++n) {
          levels_match &= ind_isomorphic(sp.level(n), free_loop(om, *adj, sx));
          sx = adj->left.on_obj(sx);
        }
      }
      data["spectrification_levels_are_free_loops"] = levels_match;
      ok = levels_match;
    } catch (const CommandError&) {
      // no usable pointing: report the adjunction alone
    }
  }
  return data;
}

json universal_report_json(const UniversalReport& rep) {
  json j;
  j["ok"] = rep.ok;
  j["inverting_functors"] = rep.inverting_functors;
  j["records"] = json::array();
  for (const auto& r : rep.records) {
    if (!r.inverts) continue;
    j["records"].push_back({{"functor", r.functor_name},
                            {"factorisations", r.factorisations},
                            {"exists", r.exists},
                            {"unique", r.unique}});
  }
  return j;
}

json cmd_verify(const dsl::Workspace& ws, const json& args, bool& ok) {
  std::string kind = args.value("kind", "localisation");
  if (!args.contains("target_text"))
    throw CommandError{Status::UsageError, "verify requires a target spec"};
  dsl::LoadResult target = dsl::parse_and_load(args["target_text"].get<std::string>(), &ws);
  if (!target.ok()) {
    json diag = io::diagnostics_to_json(target.diagnostics);
    throw CommandError{Status::UsageError, "target spec failed to load: " + diag.dump()};
  }
  const dsl::Workspace& tws = *target.workspace;
  json data;
  if (kind == "localisation") {
    const FiniteCategory* D = nullptr;
    if (args.contains("target_category")) {
      D = tws.category(args["target_category"].get<std::string>());
      if (!D) D = ws.category(args["target_category"].get<std::string>());
    } else if (!tws.categories.empty()) {
      D = tws.categories[0].get();
    }
    if (!D) throw CommandError{Status::UsageError, "no target category"};
    long long max_objects = args.value("max_objects", 6);
    if (D->object_count() > max_objects)
      throw CommandError{Status::LimitExceeded,
                         "target category exceeds max objects (" +
                             std::to_string(D->object_count()) + " > " +
                             std::to_string(max_objects) + ")"};
    WellPointedEndo wp = resolve_wp(ws, args);
    LocalisedCategory loc = localisation_category(wp);
    UniversalReport rep = verify_localisation_universal(wp, loc, *D, limits_from(ws));
    if (rep.refused) throw CommandError{Status::LimitExceeded, rep.refusal_reason};
    data["universal"] = universal_report_json(rep);
    ok = rep.ok;
    return data;
  }
  if (kind == "heller") {
    const Functor& om = resolve_endo(ws, args);
    int window = args.value("window", int(ws.directive_int("degree_window", 1)));
    if (!args.contains("via") || !args.contains("target_endo"))
      throw CommandError{Status::UsageError,
                         "heller verification needs \"via\" (the functor) and \"target_endo\""};
    const Functor* f = tws.functor(args["via"].get<std::string>());
    const Functor* om_d = tws.functor(args["target_endo"].get<std::string>());
    if (!f || !om_d) throw CommandError{Status::UsageError, "unknown functor in target spec"};
    StabCategory stab(om, window);
    HellerReport rep = verify_heller_universal(stab, *f, *om_d, limits_from(ws));
    data["heller"] = {{"ok", rep.ok},
                      {"strict_intertwiner", rep.strict_intertwiner},
                      {"exists", rep.exists},
                      {"unique", rep.unique},
                      {"candidates", rep.candidates}};
    if (rep.refused) {
      if (rep.refusal_reason.find("intertwine") != std::string::npos)
        throw CommandError{Status::UsageError, rep.refusal_reason};
      throw CommandError{Status::LimitExceeded, rep.refusal_reason};
    }
    ok = rep.ok;
    return data;
  }
  throw CommandError{Status::UsageError, "unknown verification kind '" + kind + "'"};
}

}  // namespace

Status Session::load(std::string_view text, const std::string& source_name) {
  source_name_ = source_name;
  dsl::LoadResult res = dsl::parse_and_load(text);
  json j = envelope("load", res.ok());
  if (!res.ok()) {
    j["diagnostics"] = io::diagnostics_to_json(res.diagnostics);
    last_result_ = j.dump(2);
    last_error_ = "spec '" + source_name + "' failed to load";
    ws_.reset();
    return Status::ParseError;
  }
  ws_ = std::move(res.workspace);
  last_result_ = j.dump(2);
  last_error_.clear();
  return Status::Ok;
}

RunResult Session::run(const std::string& command, const std::string& args_json) {
  RunResult out;
  json args = json::object();
  if (!args_json.empty()) {
    args = json::parse(args_json, nullptr, false);
    if (args.is_discarded()) {
      last_error_ = "malformed arguments JSON";
      out.status = Status::UsageError;
      json j = envelope(command, false);
      j["error"] = last_error_;
      out.json = j.dump(2);
      return out;
    }
  }
  if (!ws_) {
    last_error_ = "no spec loaded";
    out.status = Status::UsageError;
    json j = envelope(command, false);
    j["error"] = last_error_;
    out.json = j.dump(2);
    return out;
  }
  try {
    bool ok = true;
    json data;
    if (command == "check") {
      data = cmd_check(*ws_);
      ok = data["all_ok"].get<bool>();
    } else if (command == "localise") {
      data = cmd_localise(*ws_, args, ok);
    } else if (command == "spectrify") {
      data = cmd_spectrify(*ws_, args, ok);
    } else if (command == "stabilise") {
      data = cmd_stabilise(*ws_, args, ok);
    } else if (command == "orbit") {
      data = cmd_orbit(*ws_, args, ok);
    } else if (command == "compare") {
      data = cmd_compare(*ws_, args, ok);
    } else if (command == "adjoint") {
      data = cmd_adjoint(*ws_, args, ok);
    } else if (command == "verify") {
      data = cmd_verify(*ws_, args, ok);
    } else {
      throw CommandError{Status::UsageError, "unknown command '" + command + "'"};
    }
    json j = envelope(command, ok);
    j["data"] = std::move(data);
    out.status = ok ? Status::Ok : Status::CheckFailed;
    out.json = j.dump(2);
  } catch (const CommandError& e) {
    out.status = e.status;
    json j = envelope(command, false);
    j["error"] = e.message;
    out.json = j.dump(2);
    last_error_ = e.message;
  } catch (const Error& e) {
    out.status = Status::InternalError;
    json j = envelope(command, false);
    j["error"] = e.what();
    out.json = j.dump(2);
    last_error_ = e.what();
  } catch (const std::exception& e) {
    out.status = Status::InternalError;
    json j = envelope(command, false);
    j["error"] = e.what();
    out.json = j.dump(2);
    last_error_ = e.what();
  }
  last_result_ = out.json;
  return out;
}

}  // namespace fincat::engine
