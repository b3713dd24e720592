#include "fincat/stabilise.hpp"

namespace fincat {

namespace {

struct PairState {
  ObjId a, b;
  bool operator==(const PairState& o) const { return a == o.a && b == o.b; }
};

// Builds the colimit of C(Ω^{k+i}c, Ω^{k+j}d) over k >= k0 along Ω's hom maps.
std::unique_ptr<SeqColimit> build_pair_colim(const Functor& omega, ObjId c, int i, ObjId d, int j,
                                             int& k0_out) {
  const FiniteCategory& C = *omega.src;
  int k0 = std::max({-i, -j, 0});
  k0_out = k0;
  auto pow = [&](ObjId x, int k) {
    for (int t = 0; t < k; ++t) x = omega.on_obj(x);
    return x;
  };
  PairState init{pow(c, k0 + i), pow(d, k0 + j)};
  auto step = [&](const PairState& s) {
    return PairState{omega.on_obj(s.a), omega.on_obj(s.b)};
  };
  auto [q, p] = brent_cycle(init, step);
  EpTower t;
  t.preperiod = q;
  t.period = p;
  PairState s = init;
  for (int r = 0; r < q + p; ++r) {
    t.carriers.push_back(C.hom(s.a, s.b));
    t.maps.push_back(omega.on_hom(s.a, s.b));
    s = step(s);
  }
  return std::make_unique<SeqColimit>(std::move(t));
}

}  // namespace

StabHom stab_hom(const Functor& omega, ObjId c, int i, ObjId d, int j) {
  StabHom out;
  auto colim = build_pair_colim(omega, c, i, d, j, out.k0);
  out.carrier = colim->carrier();
  out.preperiod = colim->tower().preperiod;
  out.period = colim->tower().period;
  return out;
}

StabCategory::StabCategory(const Functor& omega, int window)
    : omega_(&omega), base_(omega.src), window_(window) {
  const FiniteCategory& C = *base_;
  int n = C.object_count();
  cat_ = std::make_unique<FiniteCategory>();
  cat_->mode = C.mode;
  cat_->name = "Stab_" + C.name;
  for (int deg = -window; deg <= window; ++deg)
    for (ObjId c = 0; c < n; ++c)
      cat_->add_object("(" + C.object_name(c) + "," + std::to_string(deg) + ")");

  int total = cat_->object_count();
  colims_.resize(size_t(total) * total);
  k0_.resize(size_t(total) * total);
  for (ObjId a = 0; a < total; ++a)
    for (ObjId b = 0; b < total; ++b) {
      auto [c, i] = object_info(a);
      auto [d, j] = object_info(b);
      int k0 = 0;
      auto colim = build_pair_colim(omega, c, i, d, j, k0);
      Carrier carrier = colim->carrier();
      for (auto& l : carrier.labels)
        l = "st" + std::to_string(a) + "_" + std::to_string(b) + ":" + l;
      cat_->set_hom(a, b, carrier);
      colims_[pair_index(a, b)] = std::move(colim);
      k0_[pair_index(a, b)] = k0;
    }
  for (ObjId a = 0; a < total; ++a) {
    auto [c, i] = object_info(a);
    ObjId cc = pow_obj(c, pair_k0(a, a) + i);
    cat_->set_identity(a, classify_abs(a, a, pair_k0(a, a), C.identity_elt(cc)));
  }
  for (ObjId a = 0; a < total; ++a)
    for (ObjId b = 0; b < total; ++b)
      for (ObjId e = 0; e < total; ++e) {
        int nf = cat_->hom(a, b).size(), ng = cat_->hom(b, e).size();
        for (int gi = 0; gi < ng; ++gi)
          for (int fi = 0; fi < nf; ++fi) {
            Elt ge = C.mode == Mode::Set ? Elt::of_index(gi) : Elt::basis(gi, ng);
            Elt fe = C.mode == Mode::Set ? Elt::of_index(fi) : Elt::basis(fi, nf);
            auto [kf, f] = represent(a, b, fe);
            auto [kg, g] = represent(b, e, ge);
            // composite at K = kf + kg: Ω^{kf}(g) ∘ Ω^{kg}(f)
            Morphism fK = f;
            for (long long t = 0; t < kg; ++t) fK = omega.on_mor(fK);
            Morphism gK = g;
            for (long long t = 0; t < kf; ++t) gK = omega.on_mor(gK);
            cat_->set_compose(a, b, e, gi, fi,
                              classify_abs(a, e, kf + kg, C.compose(gK, fK).v));
          }
      }
  cat_->seal();

  // Ω on the stabilisation: (c,i) -> (Ωc,i), classes mapped by Ω.
  omega_stab_.src = cat_.get();
  omega_stab_.dst = cat_.get();
  omega_stab_.name = "Om_stab";
  for (ObjId a = 0; a < total; ++a) {
    auto [c, i] = object_info(a);
    omega_stab_.obj.push_back(object_id(omega.on_obj(c), i));
  }
  for (ObjId a = 0; a < total; ++a)
    for (ObjId b = 0; b < total; ++b) {
      std::vector<Elt> images;
      int nf = cat_->hom(a, b).size();
      for (int fi = 0; fi < nf; ++fi) {
        Elt fe = C.mode == Mode::Set ? Elt::of_index(fi) : Elt::basis(fi, nf);
        auto [k, f] = represent(a, b, fe);
        images.push_back(
            classify_abs(omega_stab_.obj[a], omega_stab_.obj[b], k, omega.on_mor(f).v));
      }
      omega_stab_.hom.push_back(CarrierMap::from_images(
          cat_->hom(a, b), cat_->hom(omega_stab_.obj[a], omega_stab_.obj[b]), images));
    }

  universal_.src = &C;
  universal_.dst = cat_.get();
  universal_.name = "U";
  for (ObjId c = 0; c < n; ++c) universal_.obj.push_back(object_id(c, 0));
  for (ObjId c = 0; c < n; ++c)
    for (ObjId d = 0; d < n; ++d)
      universal_.hom.push_back(pair_colim(object_id(c, 0), object_id(d, 0)).leg(0));
}

ObjId StabCategory::object_id(ObjId base_obj, int degree) const {
  if (degree < -window_ || degree > window_) throw Error("stabilisation: degree out of window");
  return (degree + window_) * base_->object_count() + base_obj;
}

std::pair<ObjId, int> StabCategory::object_info(ObjId stab_obj) const {
  int n = base_->object_count();
  return {stab_obj % n, stab_obj / n - window_};
}

const SeqColimit& StabCategory::pair_colim(ObjId a, ObjId b) const {
  return *colims_[pair_index(a, b)];
}

int StabCategory::pair_k0(ObjId a, ObjId b) const { return k0_[pair_index(a, b)]; }

Elt StabCategory::classify_abs(ObjId a, ObjId b, long long k_abs, const Elt& e) const {
  long long rel = k_abs - pair_k0(a, b);
  if (rel < 0) throw Error("classify_abs: stage below the tower base");
  return pair_colim(a, b).classify(rel, e);
}

std::pair<long long, Morphism> StabCategory::represent(ObjId a, ObjId b, const Elt& e) const {
  const SeqColimit& colim = pair_colim(a, b);
  long long k_abs = pair_k0(a, b) + colim.base_stage();
  auto [c, i] = object_info(a);
  auto [d, j] = object_info(b);
  Morphism m{pow_obj(c, int(k_abs) + i), pow_obj(d, int(k_abs) + j), colim.represent(e)};
  return {k_abs, m};
}

ObjId StabCategory::pow_obj(ObjId c, int k) const {
  for (int t = 0; t < k; ++t) c = omega_->on_obj(c);
  return c;
}

CarrierMap StabCategory::degree_shift_map(ObjId a, ObjId b, int l) const {
  auto [c, i] = object_info(a);
  auto [d, j] = object_info(b);
  ObjId a2 = object_id(c, i + l);
  ObjId b2 = object_id(d, j + l);
  const FiniteCategory& C = *base_;
  std::vector<Elt> images;
  int nf = cat_->hom(a, b).size();
  for (int fi = 0; fi < nf; ++fi) {
    Elt fe = C.mode == Mode::Set ? Elt::of_index(fi) : Elt::basis(fi, nf);
    auto [k, f] = represent(a, b, fe);
    // The same morphism read at absolute stage k - l of the shifted pair;
    // push forward with Ω first when that lands below the tower base.
    long long k2 = k - l;
    Morphism m = f;
    long long low = pair_k0(a2, b2);
    while (k2 < low) {
      m = omega_->on_mor(m);
      ++k2;
    }
    images.push_back(classify_abs(a2, b2, k2, m.v));
  }
  return CarrierMap::from_images(cat_->hom(a, b), cat_->hom(a2, b2), images);
}

Morphism StabCategory::degree_iso(ObjId base_obj, int degree) const {
  // Ω(c,i) = (Ωc, i) ≅ (c, i+1): towers agree on the nose, so the class of
  // the identity is the canonical iso.
  ObjId from = object_id(omega_->on_obj(base_obj), degree);
  ObjId to = object_id(base_obj, degree + 1);
  int k0 = pair_k0(from, to);
  auto [c, i] = object_info(from);
  ObjId obj = pow_obj(c, k0 + i);
  return Morphism{from, to, classify_abs(from, to, k0, base_->identity_elt(obj))};
}

Report StabCategory::degree_shift_certificate(int max_shift) const {
  Report rep;
  int total = cat_->object_count();
  for (int l = 1; l <= max_shift; ++l)
    for (ObjId a = 0; a < total; ++a)
      for (ObjId b = 0; b < total; ++b) {
        auto [c, i] = object_info(a);
        auto [d, j] = object_info(b);
        if (i + l > window_ || j + l > window_) continue;
        CarrierMap shift = degree_shift_map(a, b, l);
        if (!shift.is_iso())
          rep.fail("shift", "degree shift by " + std::to_string(l) + " not an iso at (" +
                                cat_->object_name(a) + "," + cat_->object_name(b) + ")");
      }
  // Naturality in both variables: shifting commutes with composition.
  for (ObjId a = 0; a < total && rep.ok; ++a)
    for (ObjId b = 0; b < total && rep.ok; ++b)
      for (ObjId e = 0; e < total && rep.ok; ++e) {
        auto [c, i] = object_info(a);
        auto [d, j] = object_info(b);
        auto [z, l2] = object_info(e);
        if (i + 1 > window_ || j + 1 > window_ || l2 + 1 > window_) continue;
        ObjId a2 = object_id(c, i + 1), b2 = object_id(d, j + 1), e2 = object_id(z, l2 + 1);
        CarrierMap sab = degree_shift_map(a, b, 1);
        CarrierMap sbe = degree_shift_map(b, e, 1);
        CarrierMap sae = degree_shift_map(a, e, 1);
        for (const auto& f : cat_->basis_morphisms(a, b))
          for (const auto& g : cat_->basis_morphisms(b, e)) {
            Elt lhs = sae.apply(cat_->compose(g, f).v);
            Elt rhs = cat_->compose_elts(a2, b2, e2, sbe.apply(g.v), sab.apply(f.v));
            if (!(lhs == rhs)) {
              rep.fail("shift-natural", "degree shift does not commute with composition at (" +
                                            cat_->object_name(a) + "," + cat_->object_name(b) +
                                            "," + cat_->object_name(e) + ")");
              break;
            }
          }
      }
  return rep;
}

Report StabCategory::autoequivalence_certificate() const {
  Report rep;
  const FiniteCategory& S = *cat_;
  int n = base_->object_count();
  // Degree isos Ω(c,i) ≅ (c,i+1) are invertible...
  for (int i = -window_; i < window_; ++i)
    for (ObjId c = 0; c < n; ++c) {
      Morphism iso = degree_iso(c, i);
      if (!S.morphism_invertible(iso))
        rep.fail("iso", "degree iso at (" + base_->object_name(c) + "," + std::to_string(i) +
                            ") is not invertible");
    }
  if (!rep.ok) return rep;
  // ... and natural: for every stab morphism f : (c,i) -> (d,j) in the inner
  // window, iso_d ∘ Ω_stab(f) = shift(f) ∘ iso_c.
  for (ObjId a = 0; a < S.object_count(); ++a)
    for (ObjId b = 0; b < S.object_count(); ++b) {
      auto [c, i] = object_info(a);
      auto [d, j] = object_info(b);
      if (i + 1 > window_ || j + 1 > window_) continue;
      CarrierMap shift = degree_shift_map(a, b, 1);
      Morphism iso_c = degree_iso(c, i);
      Morphism iso_d = degree_iso(d, j);
      for (const auto& f : S.basis_morphisms(a, b)) {
        Morphism lhs = S.compose(iso_d, omega_stab_.on_mor(f));
        Morphism rhs = S.compose(Morphism{object_id(c, i + 1), object_id(d, j + 1),
                                          shift.apply(f.v)},
                                 iso_c);
        if (!(lhs == rhs)) {
          rep.fail("naturality", "degree iso not natural at " + S.morphism_str(f));
          return rep;
        }
      }
    }
  // Composites: reindexing down then applying Ω is the identity up to the
  // degree isos, i.e. Ω ∘ Ω^{-1} ≅ id ≅ Ω^{-1} ∘ Ω on the window interior.
  for (int i = -window_ + 1; i <= window_; ++i)
    for (ObjId c = 0; c < n; ++c) {
      Morphism iso = degree_iso(c, i - 1);  // (Ωc, i-1) ≅ (c, i)
      if (iso.dst != object_id(c, i)) rep.fail("composite", "degree bookkeeping broken");
    }
  return rep;
}

HellerReport verify_heller_universal(const StabCategory& stab, const Functor& f,
                                     const Functor& omega_d, const EnumLimits& limits) {
  HellerReport out;
  const FiniteCategory& C = stab.base();
  const FiniteCategory& D = *f.dst;
  if (f.src != &C || omega_d.src != f.dst || omega_d.dst != f.dst) {
    out.refused = true;
    out.refusal_reason = "functor endpoints do not match the stabilisation data";
    return out;
  }
  // Strict intertwining F ∘ Ω = Ω_D ∘ F.
  Functor lhs = stab.omega().then(f);
  Functor rhs = f.then(omega_d);
  out.strict_intertwiner = lhs.same_data(rhs);
  if (!out.strict_intertwiner) {
    out.refused = true;
    out.refusal_reason = "F does not strictly intertwine Ω with Ω_D";
    return out;
  }
  std::vector<Functor> candidates;
  EnumOutcome e = enumerate_functors(stab.cat(), D, limits, [&](const Functor& g) {
    Functor composed = stab.universal().then(g);
    if (composed.same_data(f)) candidates.push_back(g);
    return true;
  });
  if (e.refused) {
    out.refused = true;
    out.refusal_reason = e.reason;
    return out;
  }
  out.candidates = int(candidates.size());
  out.exists = !candidates.empty();
  out.unique = true;
  for (size_t i = 1; i < candidates.size(); ++i)
    if (!naturally_isomorphic(candidates[0], candidates[i])) out.unique = false;
  out.ok = out.exists && out.unique;
  return out;
}

}  // namespace fincat
