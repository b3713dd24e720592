#include "fincat/localise.hpp"

namespace fincat {

namespace {

struct OrbitState {
  ObjId obj;
  Morphism pointing;
  bool operator==(const OrbitState& o) const { return obj == o.obj && pointing == o.pointing; }
};

}  // namespace

OrbitData detect_orbit(const Functor& omega, const NatTrans& theta, ObjId x) {
  auto step = [&](const OrbitState& s) {
    ObjId next = omega.on_obj(s.obj);
    return OrbitState{next, theta.at[next]};
  };
  auto [q, p] = brent_cycle(OrbitState{x, theta.at[x]}, step);
  OrbitData out;
  out.preperiod = q;
  out.period = p;
  // The loop closes at the morphism level: the connecting map at stage q+p
  // equals the one at stage q (they are components at equal objects).
  ObjId at_q = x;
  for (int i = 0; i < q; ++i) at_q = omega.on_obj(at_q);
  ObjId at_qp = at_q;
  for (int i = 0; i < p; ++i) at_qp = omega.on_obj(at_qp);
  out.morphism_level_closed = (at_q == at_qp) && (theta.at[at_q] == theta.at[at_qp]);
  return out;
}

WellPointedCheck check_well_pointed(const Functor& omega, const NatTrans& theta) {
  WellPointedCheck out;
  const FiniteCategory& C = *omega.src;
  for (ObjId x = 0; x < C.object_count(); ++x) {
    Morphism lhs = theta.at[omega.on_obj(x)];  // θ_{ΩX}
    Morphism rhs = omega.on_mor(theta.at[x]);  // Ω(θ_X)
    if (!(lhs == rhs)) {
      out.ok = false;
      out.failing = x;
      out.message = "θ_Ω" + C.object_name(x) + " = " + C.morphism_str(lhs) + " but Ω(θ_" +
                    C.object_name(x) + ") = " + C.morphism_str(rhs);
      return out;
    }
  }
  out.ok = true;
  return out;
}

Morphism WellPointedEndo::theta_iterate(ObjId x, int k) const {
  Morphism acc = category().identity(x);
  ObjId cur = x;
  for (int i = 0; i < k; ++i) {
    acc = category().compose(theta.at[cur], acc);
    cur = omega.on_obj(cur);
  }
  return acc;
}

WellPointedEndo WellPointedEndo::make(Functor omega, NatTrans theta) {
  Report fr = validate_functor(omega);
  if (!fr.ok) throw Error("well-pointed endofunctor: invalid functor: " + fr.summary());
  Report nr = validate_nat(theta);
  if (!nr.ok) throw Error("well-pointed endofunctor: invalid pointing: " + nr.summary());
  if (!theta.source.same_data(Functor::identity_functor(*omega.src)))
    throw Error("well-pointed endofunctor: pointing source is not the identity functor");
  if (!theta.target.same_data(omega))
    throw Error("well-pointed endofunctor: pointing target is not the endofunctor");
  WellPointedCheck wc = check_well_pointed(omega, theta);
  if (!wc.ok) throw Error("not well-pointed: " + wc.message);
  WellPointedEndo wp;
  wp.omega = std::move(omega);
  wp.theta = std::move(theta);
  for (ObjId x = 0; x < wp.category().object_count(); ++x)
    wp.orbits.push_back(detect_orbit(wp.omega, wp.theta, x));
  return wp;
}

AlgebraCheck algebra_check(const WellPointedEndo& wp, ObjId x) {
  const FiniteCategory& C = wp.category();
  AlgebraCheck out;
  const Morphism& th = wp.theta_at(x);
  auto inv = C.morphism_inverse(th);
  out.theta_invertible = inv.has_value();
  if (inv) out.structure = Morphism{wp.omega.on_obj(x), x, inv->v};
  // Defining property: f : ΩX -> X with f ∘ θ_X = id_X.
  ObjId ox = wp.omega.on_obj(x);
  if (C.mode == Mode::Set) {
    int count = 0;
    for (const auto& f : C.basis_morphisms(ox, x))
      if (C.compose(f, th) == C.identity(x)) ++count;
    out.definition_exists = count > 0;
    out.definition_unique = count == 1;
  } else {
    // f ∘ θ_X is linear in f: solve and inspect the solution space.
    const Carrier& dom = C.hom(ox, x);
    const Carrier& cod = C.hom(x, x);
    QMat sys(cod.size(), dom.size());
    for (int k = 0; k < dom.size(); ++k) {
      Elt img = C.compose_elts(x, ox, x, Elt::basis(k, dom.size()), th.v);
      for (int r = 0; r < cod.size(); ++r) sys.at(r, k) = img.vec[r];
    }
    auto sol = sys.solve(C.identity_elt(x).vec);
    out.definition_exists = sol.has_value();
    out.definition_unique = sol.has_value() && sys.kernel_basis().cols() == 0;
  }
  return out;
}

std::optional<Morphism> algebra_structure(const WellPointedEndo& wp, ObjId x) {
  AlgebraCheck c = algebra_check(wp, x);
  if (!c.lemma_consistent())
    throw Error("algebra structure check inconsistent with invertibility of θ at object " +
                wp.category().object_name(x));
  return c.structure;
}

IndObject omega_infinity(const WellPointedEndo& wp, ObjId x) {
  const OrbitData& orbit = wp.orbits[x];
  IndObject out;
  out.cat = &wp.category();
  out.preperiod = orbit.preperiod;
  out.period = orbit.period;
  ObjId cur = x;
  for (int n = 0; n < orbit.preperiod + orbit.period; ++n) {
    out.levels.push_back(cur);
    out.transitions.push_back(wp.theta_at(cur));
    cur = wp.omega.on_obj(cur);
  }
  out.normalize();
  return out;
}

namespace {

struct DiagState {
  int j;      // stage index into the ind-object presentation
  Functor p;  // Ω^k as functor data
  bool operator==(const DiagState& o) const { return j == o.j && p.same_data(o.p); }
};

}  // namespace

IndObject omega_infinity_ind(const WellPointedEndo& wp, const IndObject& x) {
  const FiniteCategory& C = wp.category();
  int qp = x.preperiod + x.period;
  auto next_j = [&](int j) { return (j + 1 < qp) ? j + 1 : x.preperiod; };
  auto step = [&](const DiagState& s) { return DiagState{next_j(s.j), s.p.then(wp.omega)}; };
  DiagState init{0, Functor::identity_functor(C)};
  auto [q0, p0] = brent_cycle(init, step, 1 << 14);
  // Diagonal levels Ω^k X_k with transitions θ_{Ω^k X_{k+1}} ∘ Ω^k(t_k).
  std::vector<std::pair<ObjId, Morphism>> prefix;
  DiagState s = init;
  for (int k = 0; k < q0 + 2 * p0; ++k) {
    ObjId level = s.p.on_obj(x.levels[s.j]);
    Morphism t = s.p.on_mor(x.transitions[s.j]);
    Morphism d = C.compose(wp.theta_at(t.dst), t);
    prefix.push_back({level, d});
    s = step(s);
  }
  auto [q, p] = minimize_ep(prefix, q0, p0);
  IndObject out;
  out.cat = &C;
  out.preperiod = q;
  out.period = p;
  for (int k = 0; k < q + p; ++k) {
    out.levels.push_back(prefix[k].first);
    out.transitions.push_back(prefix[k].second);
  }
  out.validate();
  return out;
}

Elt theta_hat_component(const WellPointedEndo& wp, const IndHom& hom_x_to_omx) {
  const IndObject& x = hom_x_to_omx.source();
  return hom_x_to_omx.from_levelwise(
      [&](long long i) { return wp.theta_at(x.level(i)); });
}

Elt localisation_unit(const WellPointedEndo& wp, const IndHom& hom_x_to_tx) {
  const IndObject& x = hom_x_to_tx.source();
  return hom_x_to_tx.from_levelwise(
      [&](long long i) { return wp.theta_iterate(x.level(i), int(i)); });
}

Elt theta_hat_iterate(const WellPointedEndo& wp, const IndHom& hom_x_to_okx, int k) {
  const IndObject& x = hom_x_to_okx.source();
  return hom_x_to_okx.from_levelwise(
      [&](long long i) { return wp.theta_iterate(x.level(i), k); });
}

Elt omega_inf_on_ind_mor(const WellPointedEndo& wp, const IndHom& ab, const Elt& f,
                         const IndHom& ta_tb) {
  const FiniteCategory& C = wp.category();
  const IndObject& b = ab.target();
  long long qb = b.preperiod;
  // Germ at diagonal row r: Ω^r applied to the row-r germ A_r -> B_{qb},
  // raised to the diagonal of Ω̂^∞B.
  auto germ = [&](long long r) {
    Morphism m = ab.germ(f, r);
    for (long long t = 0; t < r; ++t) m = wp.omega.on_mor(m);
    if (r >= qb) {
      // raise the B-stage: Ω^r of the composite transition B_{qb} -> B_r
      Morphism conn = b.connect(qb, r);
      for (long long t = 0; t < r; ++t) conn = wp.omega.on_mor(conn);
      return C.compose(conn, m);
    }
    // raise the Ω-exponent with θ-iterates up to Ω^{qb} B_{qb}
    return C.compose(wp.theta_iterate(m.dst, int(qb - r)), m);
  };
  return ta_tb.from_levelwise(germ, [&](long long r) { return std::max(r, qb); });
}

LocalisedCategory localisation_category(const WellPointedEndo& wp) {
  const FiniteCategory& C = wp.category();
  int n = C.object_count();
  LocalisedCategory out;
  out.cat = std::make_unique<FiniteCategory>();
  FiniteCategory& L = *out.cat;
  L.mode = C.mode;
  L.name = "L_" + C.name;
  for (ObjId a = 0; a < n; ++a) L.add_object(C.object_name(a));
  out.hom_colims.resize(size_t(n) * n);

  // hom(X, Y) = colim_m C(X, Ω^m Y) along postcomposition with θ.
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      const OrbitData& orbit = wp.orbits[y];
      EpTower t;
      t.preperiod = orbit.preperiod;
      t.period = orbit.period;
      ObjId cur = y;
      for (int m = 0; m < orbit.preperiod + orbit.period; ++m) {
        t.carriers.push_back(C.hom(x, cur));
        t.maps.push_back(C.postcompose(wp.theta_at(cur), x));
        cur = wp.omega.on_obj(cur);
      }
      auto colim = std::make_unique<SeqColimit>(std::move(t));
      Carrier carrier = colim->carrier();
      for (auto& l : carrier.labels)
        l = "l" + std::to_string(x) + "_" + std::to_string(y) + ":" + l;
      L.set_hom(x, y, carrier);
      out.hom_colims[size_t(x) * n + y] = std::move(colim);
    }
  for (ObjId x = 0; x < n; ++x)
    L.set_identity(x, out.hom_colim(x, x).classify(0, C.identity_elt(x)));

  // Composition through canonical representatives: a representative at the
  // base stage of Y's orbit is an actual morphism X -> Ω^{qY} Y.
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) {
        const SeqColimit& cxy = out.hom_colim(x, y);
        const SeqColimit& cyz = out.hom_colim(y, z);
        const SeqColimit& cxz = out.hom_colim(x, z);
        int qy = wp.orbits[y].preperiod;
        int qz = wp.orbits[z].preperiod;
        int ng = cyz.carrier().size(), nf = cxy.carrier().size();
        for (int gi = 0; gi < ng; ++gi)
          for (int fi = 0; fi < nf; ++fi) {
            Elt ge = C.mode == Mode::Set ? Elt::of_index(gi) : Elt::basis(gi, ng);
            Elt fe = C.mode == Mode::Set ? Elt::of_index(fi) : Elt::basis(fi, nf);
            // f : X -> Ω^{qy} Y, g : Y -> Ω^{qz} Z; composite at stage qy+qz
            // is Ω^{qy}(g) ∘ f : X -> Ω^{qy+qz} Z.
            Morphism f{x, -1, cxy.represent(fe)};
            Morphism g{y, -1, cyz.represent(ge)};
            ObjId oqy = y;
            for (int i = 0; i < qy; ++i) oqy = wp.omega.on_obj(oqy);
            f.dst = oqy;
            ObjId oqz = z;
            for (int i = 0; i < qz; ++i) oqz = wp.omega.on_obj(oqz);
            g.dst = oqz;
            Morphism og = g;
            for (int i = 0; i < qy; ++i) og = wp.omega.on_mor(og);
            Morphism composite = C.compose(og, f);
            L.set_compose(x, y, z, gi, fi, cxz.classify(qy + qz, composite.v));
          }
      }
  L.seal();

  // The localisation functor Ω^∞: identity on objects, leg(0) on homs.
  out.omega_inf.src = &C;
  out.omega_inf.dst = &L;
  out.omega_inf.name = "Om_inf";
  for (ObjId a = 0; a < n; ++a) out.omega_inf.obj.push_back(a);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) out.omega_inf.hom.push_back(out.hom_colim(a, b).leg(0));

  out.theta_inverted = true;
  for (ObjId x = 0; x < n; ++x) {
    Morphism lth = out.omega_inf.on_mor(wp.theta_at(x));
    if (!L.morphism_invertible(lth)) out.theta_inverted = false;
  }

  // Skeleton: one representative per iso class, preferring Ω-algebras.
  std::vector<int> cls(n, -1);
  for (ObjId a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = a;
    for (ObjId b = a + 1; b < n; ++b)
      if (cls[b] < 0 && objects_isomorphic(L, a, b)) cls[b] = a;
  }
  std::vector<ObjId> reps;
  for (ObjId a = 0; a < n; ++a) {
    if (cls[a] != a) continue;
    ObjId rep = a;
    for (ObjId b = 0; b < n; ++b)
      if (cls[b] == a && algebra_check(wp, b).theta_invertible) {
        rep = b;
        break;
      }
    reps.push_back(rep);
  }
  out.skeleton = reps;
  out.skeleton_cat =
      std::make_unique<FiniteCategory>(full_subcategory(L, reps, L.name + "_skel"));
  return out;
}

Functor LocalisedCategory::induced_omega(const WellPointedEndo& wp) const {
  const FiniteCategory& C = wp.category();
  int n = C.object_count();
  Functor f;
  f.src = cat.get();
  f.dst = cat.get();
  f.name = "Om_L";
  for (ObjId a = 0; a < n; ++a) f.obj.push_back(wp.omega.on_obj(a));
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      const SeqColimit& cxy = hom_colim(x, y);
      const SeqColimit& target = hom_colim(wp.omega.on_obj(x), wp.omega.on_obj(y));
      int qy = wp.orbits[y].preperiod;
      std::vector<Elt> images;
      for (int i = 0; i < cxy.carrier().size(); ++i) {
        Elt e = C.mode == Mode::Set ? Elt::of_index(i) : Elt::basis(i, cxy.carrier().size());
        // Ω(f) : ΩX -> Ω^{qy}(ΩY) is a stage-qy element of the target system.
        Morphism rep{x, -1, cxy.represent(e)};
        ObjId oqy = y;
        for (int k = 0; k < qy; ++k) oqy = wp.omega.on_obj(oqy);
        rep.dst = oqy;
        Morphism orep = wp.omega.on_mor(rep);
        images.push_back(target.classify(qy, orep.v));
      }
      f.hom.push_back(CarrierMap::from_images(cat->hom(x, y),
                                              cat->hom(f.obj[x], f.obj[y]), images));
    }
  return f;
}

NatTrans LocalisedCategory::induced_theta(const WellPointedEndo& wp) const {
  NatTrans t;
  t.source = Functor::identity_functor(*cat);
  t.target = induced_omega(wp);
  t.name = "th_L";
  for (ObjId x = 0; x < cat->object_count(); ++x)
    t.at.push_back(omega_inf.on_mor(wp.theta_at(x)));
  return t;
}

HomFormulaBridge hom_formula_bridge(const WellPointedEndo& wp, const LocalisedCategory& loc) {
  const FiniteCategory& C = wp.category();
  int n = C.object_count();
  HomFormulaBridge out;
  std::vector<IndObject> images;
  for (ObjId x = 0; x < n; ++x) images.push_back(omega_infinity(wp, x));
  out.image = std::make_unique<IndSubcat>(C, images, "OmInf_" + C.name);

  Functor j;
  j.src = loc.cat.get();
  j.dst = &out.image->cat();
  j.name = "J";
  for (ObjId x = 0; x < n; ++x) j.obj.push_back(x);
  out.all_hom_isos = true;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      const SeqColimit& cxy = loc.hom_colim(x, y);
      const IndHom& target = out.image->hom_structure(x, y);
      int qy = wp.orbits[y].preperiod;
      std::vector<Elt> imgs;
      for (int i = 0; i < cxy.carrier().size(); ++i) {
        Elt e = C.mode == Mode::Set ? Elt::of_index(i) : Elt::basis(i, cxy.carrier().size());
        // Class of f : X -> Ω^{qy}Y goes to the family Ω^i(f) over rows.
        Morphism rep{x, -1, cxy.represent(e)};
        ObjId oqy = y;
        for (int k = 0; k < qy; ++k) oqy = wp.omega.on_obj(oqy);
        rep.dst = oqy;
        imgs.push_back(target.from_levelwise(
            [&](long long row) {
              Morphism m = rep;
              for (long long k = 0; k < row; ++k) m = wp.omega.on_mor(m);
              return m;
            },
            [&](long long row) { return row + qy; }));
      }
      CarrierMap cm = CarrierMap::from_images(loc.cat->hom(x, y),
                                              out.image->cat().hom(x, y), imgs);
      if (!cm.is_iso()) out.all_hom_isos = false;
      j.hom.push_back(std::move(cm));
    }
  out.functor_report = validate_functor(j);
  out.comparison = std::move(j);
  return out;
}

UniversalReport verify_localisation_universal(const WellPointedEndo& wp,
                                              const LocalisedCategory& loc,
                                              const FiniteCategory& target,
                                              const EnumLimits& limits) {
  const FiniteCategory& C = wp.category();
  UniversalReport out;
  std::vector<Functor> from_c;
  EnumOutcome e1 = enumerate_functors(C, target, limits, [&](const Functor& f) {
    from_c.push_back(f);
    return true;
  });
  if (e1.refused) {
    out.refused = true;
    out.refusal_reason = e1.reason + (e1.estimate > 0
                             ? " (estimated " + std::to_string((long long)e1.estimate) + ")"
                             : "");
    return out;
  }
  std::vector<Functor> from_l;
  EnumOutcome e2 = enumerate_functors(*loc.cat, target, limits, [&](const Functor& f) {
    from_l.push_back(f);
    return true;
  });
  if (e2.refused) {
    out.refused = true;
    out.refusal_reason = e2.reason;
    return out;
  }

  out.ok = true;
  for (const auto& f : from_c) {
    bool inverts = true;
    for (ObjId x = 0; x < C.object_count() && inverts; ++x)
      inverts = target.morphism_invertible(f.on_mor(wp.theta_at(x)));
    FactorisationRecord rec;
    rec.functor_name = f.name;
    rec.inverts = inverts;
    if (inverts) {
      ++out.inverting_functors;
      std::vector<const Functor*> factors;
      for (const auto& g : from_l) {
        Functor composed = loc.omega_inf.then(g);
        if (naturally_isomorphic(composed, f)) factors.push_back(&g);
      }
      rec.factorisations = int(factors.size());
      rec.exists = !factors.empty();
      rec.unique = true;
      for (size_t i = 1; i < factors.size(); ++i)
        if (!naturally_isomorphic(*factors[0], *factors[i])) rec.unique = false;
      if (!rec.exists || !rec.unique) out.ok = false;
    }
    out.records.push_back(rec);
  }
  return out;
}

FiniteCategory full_subcategory(const FiniteCategory& cat, const std::vector<ObjId>& objects,
                                const std::string& name) {
  FiniteCategory out;
  out.mode = cat.mode;
  out.name = name;
  for (ObjId a : objects) out.add_object(cat.object_name(a));
  for (int a = 0; a < int(objects.size()); ++a)
    for (int b = 0; b < int(objects.size()); ++b)
      out.set_hom(a, b, cat.hom(objects[a], objects[b]));
  for (int a = 0; a < int(objects.size()); ++a)
    out.set_identity(a, cat.identity_elt(objects[a]));
  for (int a = 0; a < int(objects.size()); ++a)
    for (int b = 0; b < int(objects.size()); ++b)
      for (int c = 0; c < int(objects.size()); ++c)
        for (int g = 0; g < cat.hom(objects[b], objects[c]).size(); ++g)
          for (int f = 0; f < cat.hom(objects[a], objects[b]).size(); ++f) {
            Elt ge = cat.mode == Mode::Set ? Elt::of_index(g)
                                           : Elt::basis(g, cat.hom(objects[b], objects[c]).size());
            Elt fe = cat.mode == Mode::Set ? Elt::of_index(f)
                                           : Elt::basis(f, cat.hom(objects[a], objects[b]).size());
            out.set_compose(a, b, c, g, f,
                            cat.compose_elts(objects[a], objects[b], objects[c], ge, fe));
          }
  out.seal();
  return out;
}

}  // namespace fincat
