#include "fincat/io/json_io.hpp"

#include "fincat/ind.hpp"

namespace fincat::io {

namespace {

json elt_to_json(const FiniteCategory& cat, ObjId a, ObjId b, const Elt& e) {
  if (cat.mode == Mode::Set) return cat.label_of(a, b, e.idx);
  json terms = json::array();
  for (int i = 0; i < int(e.vec.size()); ++i)
    if (!e.vec[i].is_zero()) terms.push_back({e.vec[i].str(), cat.label_of(a, b, i)});
  return terms;
}

Elt elt_from_json(const FiniteCategory& cat, ObjId a, ObjId b, const json& j) {
  if (cat.mode == Mode::Set) {
    auto loc = cat.locate_label(j.get<std::string>());
    if (!loc) throw Error("unknown morphism label '" + j.get<std::string>() + "'");
    auto [la, lb, idx] = *loc;
    if (la != a || lb != b) throw Error("morphism label with wrong endpoints");
    return Elt::of_index(idx);
  }
  QVec v(cat.hom(a, b).size());
  for (const auto& term : j) {
    Rat coeff = Rat::parse(term.at(0).get<std::string>());
    auto loc = cat.locate_label(term.at(1).get<std::string>());
    if (!loc) throw Error("unknown basis label");
    auto [la, lb, idx] = *loc;
    if (la != a || lb != b) throw Error("basis label with wrong endpoints");
    v[idx] += coeff;
  }
  return Elt::of_vec(std::move(v));
}

}  // namespace

std::string elt_to_string(const FiniteCategory& cat, ObjId a, ObjId b, const Elt& e) {
  return elt_str(cat.hom(a, b), e);
}

json category_to_json(const FiniteCategory& cat) {
  json j;
  j["name"] = cat.name;
  j["enrichment"] = cat.mode == Mode::Set ? "finset" : "finvec";
  j["objects"] = json::array();
  for (ObjId a = 0; a < cat.object_count(); ++a) j["objects"].push_back(cat.object_name(a));
  j["homs"] = json::array();
  for (ObjId a = 0; a < cat.object_count(); ++a)
    for (ObjId b = 0; b < cat.object_count(); ++b) {
      json h;
      h["src"] = cat.object_name(a);
      h["dst"] = cat.object_name(b);
      h[cat.mode == Mode::Set ? "elements" : "basis"] = cat.hom(a, b).labels;
      j["homs"].push_back(h);
    }
  j["identities"] = json::object();
  for (ObjId a = 0; a < cat.object_count(); ++a)
    j["identities"][cat.object_name(a)] = elt_to_json(cat, a, a, cat.identity_elt(a));
  j["compose"] = json::array();
  for (ObjId a = 0; a < cat.object_count(); ++a)
    for (ObjId b = 0; b < cat.object_count(); ++b)
      for (ObjId c = 0; c < cat.object_count(); ++c)
        for (int g = 0; g < cat.hom(b, c).size(); ++g)
          for (int f = 0; f < cat.hom(a, b).size(); ++f) {
            json entry;
            entry["g"] = cat.label_of(b, c, g);
            entry["f"] = cat.label_of(a, b, f);
            Elt ge = cat.mode == Mode::Set ? Elt::of_index(g) : Elt::basis(g, cat.hom(b, c).size());
            Elt fe = cat.mode == Mode::Set ? Elt::of_index(f) : Elt::basis(f, cat.hom(a, b).size());
            entry["value"] = elt_to_json(cat, a, c, cat.compose_elts(a, b, c, ge, fe));
            j["compose"].push_back(entry);
          }
  return j;
}

FiniteCategory category_from_json(const json& j) {
  FiniteCategory cat;
  cat.mode = j.at("enrichment").get<std::string>() == "finvec" ? Mode::Vec : Mode::Set;
  cat.name = j.value("name", "C");
  for (const auto& o : j.at("objects")) cat.add_object(o.get<std::string>());
  for (const auto& h : j.at("homs")) {
    auto a = cat.object_by_name(h.at("src").get<std::string>());
    auto b = cat.object_by_name(h.at("dst").get<std::string>());
    if (!a || !b) throw Error("hom references an unknown object");
    std::vector<std::string> labels;
    const char* key = cat.mode == Mode::Set ? "elements" : "basis";
    for (const auto& l : h.at(key)) labels.push_back(l.get<std::string>());
    cat.set_hom(*a, *b, cat.mode == Mode::Set ? Carrier::finite_set(labels)
                                              : Carrier::vector_space(labels));
  }
  cat.seal();  // label index needed to resolve identities and composites
  for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it) {
    auto a = cat.object_by_name(it.key());
    if (!a) throw Error("identity references an unknown object");
    cat.set_identity(*a, elt_from_json(cat, *a, *a, it.value()));
  }
  for (const auto& entry : j.at("compose")) {
    auto g = cat.locate_label(entry.at("g").get<std::string>());
    auto f = cat.locate_label(entry.at("f").get<std::string>());
    if (!g || !f) throw Error("compose entry references an unknown morphism");
    auto [gb, gc, gi] = *g;
    auto [fa, fb, fi] = *f;
    if (fb != gb) throw Error("compose entry is not composable");
    cat.set_compose(fa, fb, gc, gi, fi, elt_from_json(cat, fa, gc, entry.at("value")));
  }
  cat.seal();
  return cat;
}

json functor_to_json(const Functor& f) {
  json j;
  j["name"] = f.name;
  j["src"] = f.src->name;
  j["dst"] = f.dst->name;
  j["objects"] = json::object();
  for (ObjId a = 0; a < f.src->object_count(); ++a)
    j["objects"][f.src->object_name(a)] = f.dst->object_name(f.obj[a]);
  j["morphisms"] = json::object();
  for (ObjId a = 0; a < f.src->object_count(); ++a)
    for (ObjId b = 0; b < f.src->object_count(); ++b)
      for (int i = 0; i < f.src->hom(a, b).size(); ++i) {
        Morphism m = f.src->basis_morphism(a, b, i);
        j["morphisms"][f.src->label_of(a, b, i)] =
            elt_to_json(*f.dst, f.obj[a], f.obj[b], f.on_mor(m).v);
      }
  return j;
}

json nat_to_json(const NatTrans& t) {
  json j;
  j["name"] = t.name;
  j["source"] = t.source.name;
  j["target"] = t.target.name;
  j["components"] = json::object();
  const FiniteCategory& C = *t.source.src;
  const FiniteCategory& D = *t.source.dst;
  for (ObjId a = 0; a < C.object_count(); ++a)
    j["components"][C.object_name(a)] = elt_to_json(D, t.at[a].src, t.at[a].dst, t.at[a].v);
  return j;
}

json ind_object_to_json(const IndObject& x) {
  json j;
  j["preperiod"] = x.preperiod;
  j["period"] = x.period;
  j["levels"] = json::array();
  j["transitions"] = json::array();
  for (int i = 0; i < x.preperiod + x.period; ++i) {
    j["levels"].push_back(x.cat->object_name(x.levels[i]));
    j["transitions"].push_back(
        elt_to_json(*x.cat, x.transitions[i].src, x.transitions[i].dst, x.transitions[i].v));
  }
  return j;
}

json report_to_json(const Report& rep) {
  json j;
  j["ok"] = rep.ok;
  j["violations"] = json::array();
  for (const auto& v : rep.violations) j["violations"].push_back({{"code", v.code},
                                                                  {"message", v.message}});
  return j;
}

json diagnostics_to_json(const std::vector<dsl::Diagnostic>& diags) {
  json arr = json::array();
  for (const auto& d : diags)
    arr.push_back({{"code", d.code},
                   {"message", d.message},
                   {"line", d.pos.line},
                   {"col", d.pos.col}});
  return arr;
}

std::string category_to_dot(const FiniteCategory& cat) {
  std::string s = "digraph \"" + cat.name + "\" {\n";
  for (ObjId a = 0; a < cat.object_count(); ++a)
    s += "  \"" + cat.object_name(a) + "\";\n";
  for (ObjId a = 0; a < cat.object_count(); ++a)
    for (ObjId b = 0; b < cat.object_count(); ++b)
      for (const auto& l : cat.hom(a, b).labels)
        s += "  \"" + cat.object_name(a) + "\" -> \"" + cat.object_name(b) + "\" [label=\"" + l +
             "\"];\n";
  s += "}\n";
  return s;
}

}  // namespace fincat::io
