#include "fincat/dsl/loader.hpp"

#include <map>
#include <set>

namespace fincat::dsl {

const FiniteCategory* Workspace::category(const std::string& name) const {
  for (size_t i = 0; i < categories.size(); ++i)
    if (category_names[i] == name) return categories[i].get();
  return nullptr;
}

const Functor* Workspace::functor(const std::string& name) const {
  for (const auto& [n, f] : functors)
    if (n == name) return &f;
  return nullptr;
}

const NatTrans* Workspace::nat(const std::string& name) const {
  for (const auto& [n, t] : nats)
    if (n == name) return &t;
  return nullptr;
}

std::optional<std::string> Workspace::directive(const std::string& key) const {
  for (const auto& [k, v] : directives)
    if (k == key) return v;
  return std::nullopt;
}

long long Workspace::directive_int(const std::string& key, long long fallback) const {
  auto v = directive(key);
  if (!v) return fallback;
  try {
    return std::stoll(*v);
  } catch (const std::logic_error&) {
    return fallback;
  }
}

namespace {

struct CategoryLoader {
  const AstCategory& ast;
  std::vector<Diagnostic>& diags;
  std::map<std::string, ObjId> objects;
  std::map<std::string, std::tuple<ObjId, ObjId, int>> labels;
  std::unique_ptr<FiniteCategory> cat = std::make_unique<FiniteCategory>();

  bool fail(const std::string& code, const std::string& message, SourcePos pos) {
    diags.push_back({code, message, pos});
    return false;
  }

  std::optional<Elt> resolve_expr(const AstExpr& e, ObjId expect_src, ObjId expect_dst,
                                  const char* what) {
    // Resolve a linear combination (Vec) or a single label (Set) living in
    // hom(expect_src, expect_dst).
    const Carrier& hom = cat->hom(expect_src, expect_dst);
    if (cat->mode == Mode::Set) {
      if (e.terms.size() != 1 || e.terms[0].label.empty() || !e.terms[0].coeff.is_one()) {
        fail("E004", std::string(what) + ": finset morphisms are single labels", e.pos);
        return std::nullopt;
      }
      auto it = labels.find(e.terms[0].label);
      if (it == labels.end()) {
        fail("E002", "undefined morphism '" + e.terms[0].label + "'", e.pos);
        return std::nullopt;
      }
      auto [a, b, idx] = it->second;
      if (a != expect_src || b != expect_dst) {
        fail("E004", std::string(what) + ": morphism '" + e.terms[0].label +
                         "' has the wrong endpoints",
             e.pos);
        return std::nullopt;
      }
      return Elt::of_index(idx);
    }
    QVec v(hom.size());
    for (const auto& term : e.terms) {
      if (term.label.empty()) {
        if (!term.coeff.is_zero()) {
          fail("E007", std::string(what) + ": nonzero bare scalar", e.pos);
          return std::nullopt;
        }
        continue;
      }
      auto it = labels.find(term.label);
      if (it == labels.end()) {
        fail("E002", "undefined morphism '" + term.label + "'", e.pos);
        return std::nullopt;
      }
      auto [a, b, idx] = it->second;
      if (a != expect_src || b != expect_dst) {
        fail("E004", std::string(what) + ": morphism '" + term.label +
                         "' has the wrong endpoints",
             e.pos);
        return std::nullopt;
      }
      v[idx] += term.coeff;
    }
    return Elt::of_vec(std::move(v));
  }

  bool build() {
    cat->mode = ast.mode;
    cat->name = ast.name;
    for (const auto& [name, pos] : ast.objects) {
      if (objects.count(name)) return fail("E005", "duplicate object '" + name + "'", pos);
      objects[name] = cat->add_object(name);
    }
    std::set<std::pair<ObjId, ObjId>> declared;
    for (const auto& h : ast.homs) {
      auto si = objects.find(h.src);
      auto di = objects.find(h.dst);
      if (si == objects.end()) return fail("E002", "undefined object '" + h.src + "'", h.pos);
      if (di == objects.end()) return fail("E002", "undefined object '" + h.dst + "'", h.pos);
      if (!declared.insert({si->second, di->second}).second)
        return fail("E005", "hom " + h.src + " " + h.dst + " declared twice", h.pos);
      for (const auto& l : h.labels) {
        if (labels.count(l)) return fail("E005", "duplicate morphism label '" + l + "'", h.pos);
        labels[l] = {si->second, di->second, 0};
      }
      Carrier carrier = ast.mode == Mode::Set ? Carrier::finite_set(h.labels)
                                              : Carrier::vector_space(h.labels);
      cat->set_hom(si->second, di->second, carrier);
      for (int i = 0; i < int(h.labels.size()); ++i)
        labels[h.labels[i]] = {si->second, di->second, i};
    }
    // Undeclared homs default to empty carriers.
    for (ObjId a = 0; a < cat->object_count(); ++a)
      for (ObjId b = 0; b < cat->object_count(); ++b)
        if (!declared.count({a, b}))
          cat->set_hom(a, b, ast.mode == Mode::Set ? Carrier::finite_set({})
                                                   : Carrier::vector_space({}));

    std::vector<bool> has_identity(cat->object_count(), false);
    for (const auto& ident : ast.identities) {
      auto oi = objects.find(ident.obj);
      if (oi == objects.end())
        return fail("E002", "undefined object '" + ident.obj + "'", ident.pos);
      if (has_identity[oi->second])
        return fail("E005", "identity of '" + ident.obj + "' given twice", ident.pos);
      auto e = resolve_expr(ident.value, oi->second, oi->second, "identity");
      if (!e) return false;
      cat->set_identity(oi->second, *e);
      has_identity[oi->second] = true;
    }
    for (ObjId a = 0; a < cat->object_count(); ++a)
      if (!has_identity[a])
        return fail("E006", "object '" + cat->object_name(a) + "' has no identity", ast.pos);

    // User composition entries.
    for (const auto& comp : ast.composes) {
      auto gi = labels.find(comp.g);
      auto fi = labels.find(comp.f);
      if (gi == labels.end())
        return fail("E002", "undefined morphism '" + comp.g + "'", comp.pos);
      if (fi == labels.end())
        return fail("E002", "undefined morphism '" + comp.f + "'", comp.pos);
      auto [gb, gc, gidx] = gi->second;
      auto [fa, fb, fidx] = fi->second;
      if (fb != gb)
        return fail("E004", "morphisms '" + comp.g + "' and '" + comp.f + "' do not compose",
                    comp.pos);
      auto rhs = resolve_expr(comp.rhs, fa, gc, "compose");
      if (!rhs) return false;
      if (cat->has_compose(fa, fb, gc, gidx, fidx)) {
        // duplicate entry: conflict unless identical
        return fail("E003", "composition of '" + comp.g + "' ∘ '" + comp.f + "' given twice",
                    comp.pos);
      }
      cat->set_compose(fa, fb, gc, gidx, fidx, *rhs);
    }

    // Identity laws fill table entries; conflicts with user entries are E003.
    for (ObjId a = 0; a < cat->object_count(); ++a)
      for (ObjId b = 0; b < cat->object_count(); ++b)
        for (int i = 0; i < cat->hom(a, b).size(); ++i) {
          Elt me = cat->mode == Mode::Set ? Elt::of_index(i)
                                          : Elt::basis(i, cat->hom(a, b).size());
          if (cat->mode == Mode::Set) {
            const Elt& ida = cat->identity_elt(a);
            if (cat->has_compose(a, a, b, i, ida.idx)) {
              if (!(cat->compose_elts(a, a, b, me, ida) == me))
                return fail("E003", "composite with the identity of '" +
                                        cat->object_name(a) + "' contradicts the unit law",
                            ast.pos);
            } else {
              cat->set_compose(a, a, b, i, ida.idx, me);
            }
            const Elt& idb = cat->identity_elt(b);
            if (cat->has_compose(a, b, b, idb.idx, i)) {
              if (!(cat->compose_elts(a, b, b, idb, me) == me))
                return fail("E003", "composite with the identity of '" +
                                        cat->object_name(b) + "' contradicts the unit law",
                            ast.pos);
            } else {
              cat->set_compose(a, b, b, idb.idx, i, me);
            }
          } else {
            // Vec: fill id∘f and f∘id on basis pairs where unset.
            for (int k = 0; k < cat->hom(a, a).size(); ++k) {
              if (cat->has_compose(a, a, b, i, k)) continue;
              // f ∘ (basis_k of hom(a,a)): only forced when basis_k appears in
              // the identity with the hom one-dimensional; require explicit
              // entries otherwise.
              if (cat->hom(a, a).size() == 1 && !cat->identity_elt(a).vec[0].is_zero()) {
                QVec val(cat->hom(a, b).size());
                val[i] = Rat(1) / cat->identity_elt(a).vec[0];
                cat->set_compose(a, a, b, i, k, Elt::of_vec(val));
              }
            }
            for (int k = 0; k < cat->hom(b, b).size(); ++k) {
              if (cat->has_compose(a, b, b, k, i)) continue;
              if (cat->hom(b, b).size() == 1 && !cat->identity_elt(b).vec[0].is_zero()) {
                QVec val(cat->hom(a, b).size());
                val[i] = Rat(1) / cat->identity_elt(b).vec[0];
                cat->set_compose(a, b, b, k, i, Elt::of_vec(val));
              }
            }
          }
        }

    // Associativity saturation (Set mode): propagate forced composites.
    if (cat->mode == Mode::Set) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (ObjId a = 0; a < cat->object_count(); ++a)
          for (ObjId b = 0; b < cat->object_count(); ++b)
            for (ObjId c = 0; c < cat->object_count(); ++c)
              for (ObjId d = 0; d < cat->object_count(); ++d)
                for (int f = 0; f < cat->hom(a, b).size(); ++f)
                  for (int g = 0; g < cat->hom(b, c).size(); ++g) {
                    if (!cat->has_compose(a, b, c, g, f)) continue;
                    int gf = cat->compose_elts(a, b, c, Elt::of_index(g), Elt::of_index(f)).idx;
                    for (int h = 0; h < cat->hom(c, d).size(); ++h) {
                      if (!cat->has_compose(b, c, d, h, g)) continue;
                      int hg = cat->compose_elts(b, c, d, Elt::of_index(h), Elt::of_index(g)).idx;
                      bool left = cat->has_compose(a, c, d, h, gf);
                      bool right = cat->has_compose(a, b, d, hg, f);
                      if (left && right) {
                        if (!(cat->compose_elts(a, c, d, Elt::of_index(h), Elt::of_index(gf)) ==
                              cat->compose_elts(a, b, d, Elt::of_index(hg), Elt::of_index(f))))
                          return fail("E003",
                                      "associativity conflict at (" + cat->label_of(c, d, h) +
                                          ", " + cat->label_of(b, c, g) + ", " +
                                          cat->label_of(a, b, f) + ")",
                                      ast.pos);
                      } else if (left) {
                        cat->set_compose(a, b, d, hg, f,
                                         cat->compose_elts(a, c, d, Elt::of_index(h),
                                                           Elt::of_index(gf)));
                        changed = true;
                      } else if (right) {
                        cat->set_compose(a, c, d, h, gf,
                                         cat->compose_elts(a, b, d, Elt::of_index(hg),
                                                           Elt::of_index(f)));
                        changed = true;
                      }
                    }
                  }
      }
    }

    // Completeness.
    for (ObjId a = 0; a < cat->object_count(); ++a)
      for (ObjId b = 0; b < cat->object_count(); ++b)
        for (ObjId c = 0; c < cat->object_count(); ++c)
          for (int g = 0; g < cat->hom(b, c).size(); ++g)
            for (int f = 0; f < cat->hom(a, b).size(); ++f)
              if (!cat->has_compose(a, b, c, g, f))
                return fail("E006", "composition '" + cat->label_of(b, c, g) + "' ∘ '" +
                                        cat->label_of(a, b, f) + "' is not determined",
                            ast.pos);
    cat->seal();
    return true;
  }
};

}  // namespace

LoadResult load(const SpecFile& spec, const Workspace* parent) {
  LoadResult out;
  auto ws = std::make_unique<Workspace>();
  std::vector<Diagnostic>& diags = out.diagnostics;

  auto find_category = [&](const std::string& name) -> const FiniteCategory* {
    if (const FiniteCategory* c = ws->category(name)) return c;
    if (parent) return parent->category(name);
    return nullptr;
  };

  for (const auto& astc : spec.categories) {
    if (find_category(astc.name)) {
      diags.push_back({"E005", "category '" + astc.name + "' already defined", astc.pos});
      return out;
    }
    CategoryLoader cl{astc, diags, {}, {}};
    if (!cl.build()) return out;
    ws->category_reports.push_back(cl.cat->validate());
    ws->categories.push_back(std::move(cl.cat));
    ws->category_names.push_back(astc.name);
  }

  for (const auto& astf : spec.functors) {
    const FiniteCategory* src = find_category(astf.src_cat);
    const FiniteCategory* dst = find_category(astf.dst_cat);
    if (!src || !dst) {
      diags.push_back({"E002", "undefined category in functor '" + astf.name + "'", astf.pos});
      return out;
    }
    if (src->mode != dst->mode) {
      diags.push_back({"E004", "functor '" + astf.name + "' mixes enrichments", astf.pos});
      return out;
    }
    std::vector<ObjId> obj(src->object_count(), -1);
    for (const auto& om : astf.objects) {
      auto a = src->object_by_name(om.from);
      auto b = dst->object_by_name(om.to);
      if (!a || !b) {
        diags.push_back({"E002", "undefined object in functor '" + astf.name + "'", om.pos});
        return out;
      }
      obj[*a] = *b;
    }
    for (ObjId a = 0; a < src->object_count(); ++a)
      if (obj[a] < 0) {
        diags.push_back({"E006", "functor '" + astf.name + "' misses object '" +
                                     src->object_name(a) + "'",
                         astf.pos});
        return out;
      }
    // Morphism images per hom pair; identities default to identities.
    int n = src->object_count();
    std::vector<std::vector<std::optional<Elt>>> images(size_t(n) * n);
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        images[size_t(a) * n + b].assign(src->hom(a, b).size(), std::nullopt);
    for (const auto& mm : astf.morphisms) {
      auto loc = src->locate_label(mm.from);
      if (!loc) {
        diags.push_back({"E002", "undefined morphism '" + mm.from + "'", mm.pos});
        return out;
      }
      auto [a, b, idx] = *loc;
      const Carrier& target_hom = dst->hom(obj[a], obj[b]);
      // Resolve the expression in the target hom.
      if (dst->mode == Mode::Set) {
        if (mm.to.terms.size() != 1 || mm.to.terms[0].label.empty()) {
          diags.push_back({"E004", "finset morphism image must be a single label", mm.pos});
          return out;
        }
        auto tloc = dst->locate_label(mm.to.terms[0].label);
        if (!tloc) {
          diags.push_back({"E002", "undefined morphism '" + mm.to.terms[0].label + "'", mm.pos});
          return out;
        }
        auto [ta, tb, tidx] = *tloc;
        if (ta != obj[a] || tb != obj[b]) {
          diags.push_back({"E004", "image of '" + mm.from + "' has the wrong endpoints", mm.pos});
          return out;
        }
        images[size_t(a) * n + b][idx] = Elt::of_index(tidx);
      } else {
        QVec v(target_hom.size());
        bool fine = true;
        for (const auto& term : mm.to.terms) {
          if (term.label.empty()) {
            if (!term.coeff.is_zero()) fine = false;
            continue;
          }
          auto tloc = dst->locate_label(term.label);
          if (!tloc) {
            diags.push_back({"E002", "undefined morphism '" + term.label + "'", mm.pos});
            return out;
          }
          auto [ta, tb, tidx] = *tloc;
          if (ta != obj[a] || tb != obj[b]) {
            fine = false;
            break;
          }
          v[tidx] += term.coeff;
        }
        if (!fine) {
          diags.push_back({"E004", "image of '" + mm.from + "' has the wrong endpoints", mm.pos});
          return out;
        }
        images[size_t(a) * n + b][idx] = Elt::of_vec(std::move(v));
      }
    }
    for (ObjId a = 0; a < n; ++a) {
      // Unassigned identities map to identities.
      if (src->mode == Mode::Set) {
        auto& slot = images[size_t(a) * n + a][src->identity_elt(a).idx];
        if (!slot) slot = dst->identity_elt(obj[a]);
      }
    }
    std::vector<std::vector<Elt>> final_images(size_t(n) * n);
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        for (int i = 0; i < src->hom(a, b).size(); ++i) {
          auto& slot = images[size_t(a) * n + b][i];
          if (!slot) {
            diags.push_back({"E006", "functor '" + astf.name + "' misses morphism '" +
                                         src->label_of(a, b, i) + "'",
                             astf.pos});
            return out;
          }
          final_images[size_t(a) * n + b].push_back(*slot);
        }
    Functor f = Functor::from_basis_images(*src, *dst, obj, final_images);
    f.name = astf.name;
    ws->functor_reports.push_back(validate_functor(f));
    ws->functors.push_back({astf.name, std::move(f)});
  }

  for (const auto& astn : spec.nats) {
    auto resolve_fref = [&](const AstFunctorRef& r) -> std::optional<Functor> {
      if (r.is_identity) {
        const FiniteCategory* c = find_category(r.name);
        if (!c) return std::nullopt;
        return Functor::identity_functor(*c, "id");
      }
      const Functor* f = ws->functor(r.name);
      if (!f && parent) f = parent->functor(r.name);
      if (!f) return std::nullopt;
      return *f;
    };
    auto srcf = resolve_fref(astn.source);
    auto dstf = resolve_fref(astn.target);
    if (!srcf || !dstf) {
      diags.push_back({"E002", "undefined functor in nat '" + astn.name + "'", astn.pos});
      return out;
    }
    if (srcf->src != dstf->src || srcf->dst != dstf->dst) {
      diags.push_back({"E004", "nat '" + astn.name + "' between incompatible functors",
                       astn.pos});
      return out;
    }
    const FiniteCategory& C = *srcf->src;
    const FiniteCategory& D = *srcf->dst;
    std::vector<std::optional<Morphism>> at(C.object_count());
    for (const auto& [obj_name, expr] : astn.components) {
      auto a = C.object_by_name(obj_name);
      if (!a) {
        diags.push_back({"E002", "undefined object '" + obj_name + "'", astn.pos});
        return out;
      }
      ObjId fa = srcf->on_obj(*a), ga = dstf->on_obj(*a);
      if (D.mode == Mode::Set) {
        if (expr.terms.size() != 1 || expr.terms[0].label.empty()) {
          diags.push_back({"E004", "finset component must be a single label", expr.pos});
          return out;
        }
        auto loc = D.locate_label(expr.terms[0].label);
        if (!loc) {
          diags.push_back({"E002", "undefined morphism '" + expr.terms[0].label + "'", expr.pos});
          return out;
        }
        auto [ta, tb, tidx] = *loc;
        if (ta != fa || tb != ga) {
          diags.push_back({"E004", "component at '" + obj_name + "' has the wrong endpoints",
                           expr.pos});
          return out;
        }
        at[*a] = Morphism{fa, ga, Elt::of_index(tidx)};
      } else {
        QVec v(D.hom(fa, ga).size());
        for (const auto& term : expr.terms) {
          if (term.label.empty()) continue;
          auto loc = D.locate_label(term.label);
          if (!loc) {
            diags.push_back({"E002", "undefined morphism '" + term.label + "'", expr.pos});
            return out;
          }
          auto [ta, tb, tidx] = *loc;
          if (ta != fa || tb != ga) {
            diags.push_back({"E004", "component at '" + obj_name + "' has the wrong endpoints",
                             expr.pos});
            return out;
          }
          v[tidx] += term.coeff;
        }
        at[*a] = Morphism{fa, ga, Elt::of_vec(std::move(v))};
      }
    }
    NatTrans t;
    t.source = *srcf;
    t.target = *dstf;
    t.name = astn.name;
    for (ObjId a = 0; a < C.object_count(); ++a) {
      if (!at[a]) {
        diags.push_back({"E006", "nat '" + astn.name + "' misses a component at '" +
                                     C.object_name(a) + "'",
                         astn.pos});
        return out;
      }
      t.at.push_back(*at[a]);
    }
    ws->nat_reports.push_back(validate_nat(t));
    ws->nats.push_back({astn.name, std::move(t)});
  }

  for (const auto& d : spec.directives) ws->directives.push_back({d.key, d.value});
  out.workspace = std::move(ws);
  return out;
}

LoadResult parse_and_load(std::string_view text, const Workspace* parent) {
  ParseResult pr = parse(text);
  if (!pr.ok()) {
    LoadResult out;
    out.diagnostics = std::move(pr.diagnostics);
    return out;
  }
  return load(*pr.spec, parent);
}

}  // namespace fincat::dsl
