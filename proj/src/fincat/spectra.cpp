#include "fincat/spectra.hpp"

#include <numeric>

namespace fincat {

void BaseSpectrum::validate(const Functor& omega) const {
  if (preperiod < 0 || period < 1 || int(levels.size()) != preperiod + period ||
      levels.size() != sigma.size())
    throw Error("spectrum: malformed ep presentation");
  for (int i = 0; i < int(levels.size()); ++i) {
    int next = (i + 1 < preperiod + period) ? i + 1 : preperiod;
    if (sigma[i].src != levels[i] || sigma[i].dst != omega.on_obj(levels[next]))
      throw Error("spectrum: structure map " + std::to_string(i) + " is ill-typed");
  }
}

void BaseSpectrum::normalize() {
  std::vector<std::pair<ObjId, Morphism>> prefix;
  for (int n = 0; n < preperiod + 2 * period; ++n) prefix.push_back({level(n), sigma_at(n)});
  auto [q, p] = minimize_ep(prefix, preperiod, period);
  levels.clear();
  sigma.clear();
  for (int n = 0; n < q + p; ++n) {
    levels.push_back(prefix[n].first);
    sigma.push_back(prefix[n].second);
  }
  preperiod = q;
  period = p;
}

Report validate_spectrum_map(const Functor& omega, const BaseSpectrum& x, const BaseSpectrum& y,
                             const BaseSpectrumMap& f) {
  Report rep;
  const FiniteCategory& C = *x.cat;
  int span = std::max(x.preperiod + x.period, y.preperiod + y.period) +
             f.preperiod + f.period + 2;
  for (int n = 0; n < span; ++n) {
    const Morphism& fn = f.level(n);
    if (fn.src != x.level(n) || fn.dst != y.level(n)) {
      rep.fail("typing", "component " + std::to_string(n) + " has wrong endpoints");
      return rep;
    }
    Morphism lhs = C.compose(omega.on_mor(f.level(n + 1)), x.sigma_at(n));
    Morphism rhs = C.compose(y.sigma_at(n), fn);
    if (!(lhs == rhs))
      rep.fail("compat", "structure squares at level " + std::to_string(n) + " differ");
  }
  return rep;
}

BaseSpectrum theta_embedding(const WellPointedEndo& wp, ObjId x) {
  BaseSpectrum s;
  s.cat = &wp.category();
  s.levels = {x};
  s.sigma = {wp.theta_at(x)};
  s.preperiod = 0;
  s.period = 1;
  s.name = "Theta(" + wp.category().object_name(x) + ")";
  s.validate(wp.omega);
  return s;
}

BaseSpectrum sigma_infinity(const Functor& omega, const Adjunction& adj, ObjId x) {
  const FiniteCategory& C = *omega.src;
  struct State {
    ObjId obj;
    bool operator==(const State& o) const { return obj == o.obj; }
  };
  auto step = [&](const State& s) { return State{adj.left.on_obj(s.obj)}; };
  auto [q, p] = brent_cycle(State{x}, step);
  BaseSpectrum s;
  s.cat = &C;
  s.preperiod = q;
  s.period = p;
  s.name = "SigmaInf(" + C.object_name(x) + ")";
  ObjId cur = x;
  for (int n = 0; n < q + p; ++n) {
    s.levels.push_back(cur);
    s.sigma.push_back(adj.unit.at[cur]);  // Σ^n x -> ΩΣ^{n+1} x
    cur = adj.left.on_obj(cur);
  }
  s.normalize();
  s.validate(omega);
  return s;
}

IndObject free_loop(const Functor& omega, const Adjunction& adj, ObjId x) {
  const FiniteCategory& C = *omega.src;
  struct State {
    ObjId obj;   // Σ^n x
    Functor pw;  // Ω^n
    bool operator==(const State& o) const { return obj == o.obj && pw.same_data(o.pw); }
  };
  auto step = [&](const State& s) {
    return State{adj.left.on_obj(s.obj), s.pw.then(omega)};
  };
  State init{x, Functor::identity_functor(C)};
  auto [q0, p0] = brent_cycle(init, step, 1 << 14);
  std::vector<std::pair<ObjId, Morphism>> prefix;
  State s = init;
  for (int n = 0; n < q0 + 2 * p0; ++n) {
    prefix.push_back({s.pw.on_obj(s.obj), s.pw.on_mor(adj.unit.at[s.obj])});
    s = step(s);
  }
  auto [q, p] = minimize_ep(prefix, q0, p0);
  IndObject out;
  out.cat = &C;
  out.preperiod = q;
  out.period = p;
  for (int n = 0; n < q + p; ++n) {
    out.levels.push_back(prefix[n].first);
    out.transitions.push_back(prefix[n].second);
  }
  out.validate();
  return out;
}

BaseSpectrum shift_spectrum(const BaseSpectrum& x) {
  BaseSpectrum s;
  s.cat = x.cat;
  s.name = "S(" + x.name + ")";
  s.preperiod = std::max(x.preperiod - 1, 0);
  s.period = x.period;
  for (int n = 0; n < s.preperiod + s.period; ++n) {
    s.levels.push_back(x.level(n + 1));
    s.sigma.push_back(x.sigma_at(n + 1));
  }
  s.normalize();
  return s;
}

BaseSpectrum omega_spectrum_level(const Functor& omega, const BaseSpectrum& x) {
  BaseSpectrum s;
  s.cat = x.cat;
  s.name = "Om(" + x.name + ")";
  s.preperiod = x.preperiod;
  s.period = x.period;
  for (int n = 0; n < s.preperiod + s.period; ++n) {
    s.levels.push_back(omega.on_obj(x.level(n)));
    s.sigma.push_back(omega.on_mor(x.sigma_at(n)));
  }
  s.normalize();
  return s;
}

BaseSpectrumMap sigma_as_map(const BaseSpectrum& x) {
  BaseSpectrumMap m;
  m.preperiod = x.preperiod;
  m.period = x.period;
  for (int n = 0; n < x.preperiod + x.period; ++n) m.at.push_back(x.sigma_at(n));
  return m;
}

SpectrumEndofunctorCertificate spectrum_endofunctors(
    const Functor& omega, const std::vector<BaseSpectrum>& suite,
    const std::vector<std::tuple<const BaseSpectrum*, const BaseSpectrum*, BaseSpectrumMap>>&
        map_suite) {
  SpectrumEndofunctorCertificate cert;
  cert.omega_shift_commutes = true;
  cert.sigma_components_valid = true;
  cert.sigma_natural = true;
  cert.well_pointed = true;
  const FiniteCategory& C = *omega.src;
  for (const auto& x : suite) {
    BaseSpectrum os = omega_spectrum_level(omega, shift_spectrum(x));
    BaseSpectrum so = shift_spectrum(omega_spectrum_level(omega, x));
    if (!(os == so)) {
      cert.omega_shift_commutes = false;
      cert.witness = "ΩS ≠ SΩ on " + x.name;
      return cert;
    }
    // σ_X : X -> ΩSX is a morphism of spectra.
    if (!validate_spectrum_map(omega, x, os, sigma_as_map(x)).ok) {
      cert.sigma_components_valid = false;
      cert.witness = "σ is not a spectrum morphism on " + x.name;
      return cert;
    }
    // Well-pointedness on the nose: σ_{ΩSX} = ΩS(σ_X) levelwise.
    int span = x.preperiod + 2 * x.period + 2;
    for (int n = 0; n < span; ++n) {
      Morphism lhs = os.sigma_at(n);                      // σ at level n of ΩSX
      Morphism rhs = omega.on_mor(x.sigma_at(n + 1));     // ΩS(σ_X) at level n
      if (!(lhs == rhs)) {
        cert.well_pointed = false;
        cert.witness = "σΩS ≠ ΩSσ at level " + std::to_string(n) + " of " + x.name;
        return cert;
      }
    }
  }
  for (const auto& [x, y, f] : map_suite) {
    if (!validate_spectrum_map(omega, *x, *y, f).ok) {
      cert.sigma_natural = false;
      cert.witness = "map suite entry is not a spectrum morphism";
      return cert;
    }
    // Naturality of σ against f: ΩS(f) ∘ σ_X = σ_Y ∘ f.
    int span = std::max(x->preperiod + x->period, y->preperiod + y->period) + f.period + 2;
    for (int n = 0; n < span; ++n) {
      Morphism lhs = C.compose(omega.on_mor(f.level(n + 1)), x->sigma_at(n));
      Morphism rhs = C.compose(y->sigma_at(n), f.level(n));
      if (!(lhs == rhs)) {
        cert.sigma_natural = false;
        cert.witness = "σ naturality fails at level " + std::to_string(n);
        return cert;
      }
    }
  }
  return cert;
}

std::optional<Elt> ind_inverse(const IndObject& x, const IndObject& y, const Elt& e) {
  if (x == y) {
    IndSubcat probe(*x.cat, {x}, "inv_probe");
    auto inv = probe.cat().morphism_inverse(Morphism{0, 0, e});
    if (!inv) return std::nullopt;
    return inv->v;
  }
  IndSubcat probe(*x.cat, {x, y}, "inv_probe");
  auto inv = probe.cat().morphism_inverse(Morphism{0, 1, e});
  if (!inv) return std::nullopt;
  return inv->v;
}

IndSpectrum constant_omega_spectrum(const WellPointedEndo& wp, const IndObject& x,
                                    const std::string& name) {
  IndObject ox = extend_functor(wp.omega, x);
  IndHom h(x, ox);
  Elt th = theta_hat_component(wp, h);
  if (!ind_inverse(x, ox, th))
    throw Error("constant_omega_spectrum: extended pointing is not invertible at " + x.str());
  IndSpectrum s;
  s.base = &wp.category();
  s.levels = {x};
  s.sigma = {th};
  s.preperiod = 0;
  s.period = 1;
  s.name = name;
  return s;
}

namespace {

IndObject spectrify_level(const WellPointedEndo& wp, const BaseSpectrum& x, long long n) {
  const FiniteCategory& C = wp.category();
  struct State {
    int j;       // stage of x at n+k
    Functor pw;  // Ω^k
    bool operator==(const State& o) const { return j == o.j && pw.same_data(o.pw); }
  };
  int qp = x.preperiod + x.period;
  auto bump = [&](int j) { return (j + 1 < qp) ? j + 1 : x.preperiod; };
  auto step = [&](const State& s) { return State{bump(s.j), s.pw.then(wp.omega)}; };
  State init{x.stage(n), Functor::identity_functor(C)};
  auto [q0, p0] = brent_cycle(init, step, 1 << 14);
  std::vector<std::pair<ObjId, Morphism>> prefix;
  State s = init;
  for (int k = 0; k < q0 + 2 * p0; ++k) {
    prefix.push_back({s.pw.on_obj(x.levels[s.j]), s.pw.on_mor(x.sigma[s.j])});
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

}  // namespace

IndSpectrum spectrify(const WellPointedEndo& wp, const BaseSpectrum& x) {
  x.validate(wp.omega);
  IndSpectrum out;
  out.base = &wp.category();
  out.name = "spectrify(" + x.name + ")";
  out.preperiod = x.preperiod;
  out.period = x.period;
  std::vector<IndObject> levels;
  for (int n = 0; n < x.preperiod + x.period + 1; ++n) levels.push_back(spectrify_level(wp, x, n));
  for (int n = 0; n < x.preperiod + x.period; ++n) {
    out.levels.push_back(levels[n]);
    int next = (n + 1 < x.preperiod + x.period) ? n + 1 : x.preperiod;
    // The induced structure map's germs are the telescope transitions.
    IndObject om_next = extend_functor(wp.omega, levels[next]);
    IndHom h(levels[n], om_next);
    out.sigma.push_back(h.from_levelwise([&](long long k) {
      Morphism t = levels[n].transition(k);  // Ω^k(σ_{n+k}) : Ω^k X_{n+k} -> Ω^{k+1} X_{n+k+1}
      return t;
    }));
  }
  // Minimize the presentation on (level, sigma) data.
  {
    std::vector<std::pair<IndObject, Elt>> prefix;
    for (int n = 0; n < out.preperiod + 2 * out.period; ++n)
      prefix.push_back({out.level(n), out.sigma_at(n)});
    auto [q, p] = minimize_ep(prefix, out.preperiod, out.period);
    std::vector<IndObject> lv;
    std::vector<Elt> sg;
    for (int n = 0; n < q + p; ++n) {
      lv.push_back(prefix[n].first);
      sg.push_back(prefix[n].second);
    }
    out.levels = std::move(lv);
    out.sigma = std::move(sg);
    out.preperiod = q;
    out.period = p;
  }
  return out;
}

bool is_omega_spectrum(const Functor& omega, const IndSpectrum& x) {
  for (int n = 0; n < x.preperiod + x.period; ++n) {
    IndObject target = extend_functor(omega, x.level(n + 1));
    if (!ind_inverse(x.level(n), target, x.sigma_at(n))) return false;
  }
  return true;
}

std::optional<std::pair<ObjId, std::vector<Morphism>>> PosetJoinOracle::realize(
    const IndObject& x) const {
  const FiniteCategory& C = *x.cat;
  if (C.mode != Mode::Set) return std::nullopt;
  for (ObjId a = 0; a < C.object_count(); ++a)
    for (ObjId b = 0; b < C.object_count(); ++b)
      if (C.hom(a, b).size() > 1) return std::nullopt;  // not thin
  // In a thin category every ep cycle is constant, so the colimit is the
  // stable level with the unique comparison maps as cocone legs.
  ObjId top = x.levels[x.preperiod];
  for (int i = x.preperiod; i < x.preperiod + x.period; ++i)
    if (x.levels[i] != top) return std::nullopt;
  std::vector<Morphism> legs;
  for (int n = 0; n < x.preperiod + x.period; ++n) {
    if (C.hom(x.levels[n], top).size() == 0) return std::nullopt;
    legs.push_back(C.basis_morphism(x.levels[n], top, 0));
  }
  return std::make_pair(top, legs);
}

ClassicalSpectrification classical_spectrification(const WellPointedEndo& wp,
                                                   const BaseSpectrum& x,
                                                   const ColimitOracle& oracle) {
  ClassicalSpectrification out;
  IndSpectrum spectrified = spectrify(wp, x);
  const FiniteCategory& C = wp.category();
  std::vector<ObjId> realized;
  for (int n = 0; n < spectrified.preperiod + spectrified.period + 1; ++n) {
    auto r = oracle.realize(spectrified.level(n));
    if (!r) {
      out.refusal = "colimit oracle refused level " + std::to_string(n);
      return out;
    }
    if (n < spectrified.preperiod + spectrified.period) realized.push_back(r->first);
  }
  BaseSpectrum result;
  result.cat = &C;
  result.name = "classical(" + x.name + ")";
  result.preperiod = spectrified.preperiod;
  result.period = spectrified.period;
  result.levels = realized;
  for (int n = 0; n < result.preperiod + result.period; ++n) {
    ObjId src = result.level(n);
    ObjId dst = wp.omega.on_obj(result.level(n + 1));
    if (C.hom(src, dst).size() != 1) {
      out.refusal = "induced structure map at level " + std::to_string(n) +
                    " is not determined (non-thin hom)";
      return out;
    }
    result.sigma.push_back(C.basis_morphism(src, dst, 0));
  }
  result.normalize();
  result.validate(wp.omega);
  out.result = result;
  out.omega_spectrum_in_base = true;
  for (int n = 0; n < result.preperiod + result.period; ++n)
    if (!C.morphism_invertible(result.sigma_at(n))) out.omega_spectrum_in_base = false;
  out.ok = true;
  return out;
}

CarrierMap ind_functor_map(const Functor& f, const IndHom& src, const IndHom& dst) {
  std::vector<Elt> images;
  int n = src.carrier().size();
  for (int i = 0; i < n; ++i) {
    Elt e = src.carrier().mode == Mode::Set ? Elt::of_index(i) : Elt::basis(i, n);
    images.push_back(ind_apply_functor(f, src, e, dst));
  }
  return CarrierMap::from_images(src.carrier(), dst.carrier(), images);
}

Elt ind_apply_functor(const Functor& f, const IndHom& src, const Elt& e, const IndHom& dst) {
  long long base_col = src.target().preperiod;
  return dst.from_levelwise(
      [&](long long row) { return f.on_mor(src.germ(e, row)); },
      [&](long long) { return base_col; });
}

SpectraHom::SpectraHom(const WellPointedEndo& wp, IndSpectrum x, IndSpectrum y)
    : x_(std::move(x)), y_(std::move(y)) {
  preperiod_ = std::max(x_.preperiod, y_.preperiod);
  period_ = std::lcm(x_.period, y_.period);
  int stages = preperiod_ + period_;
  EpCotower tower;
  tower.preperiod = preperiod_;
  tower.period = period_;
  for (int s = 0; s < stages; ++s)
    level_homs_.push_back(std::make_unique<IndHom>(x_.level(s), y_.level(s)));
  for (int s = 0; s < stages; ++s) tower.carriers.push_back(level_homs_[s]->carrier());
  for (int s = 0; s < stages; ++s) {
    long long next = (s + 1 < stages) ? s + 1 : preperiod_;
    IndObject ox = extend_functor(wp.omega, x_.level(next));
    IndObject oy = extend_functor(wp.omega, y_.level(next));
    IndHom hom_ox_oy(ox, oy);
    IndHom hom_x_ox(x_.level(s), ox);
    IndHom hom_oy_y(oy, y_.level(s));
    IndHom hom_x_oy(x_.level(s), oy);
    auto sigma_y_inv = ind_inverse(y_.level(s), oy, y_.sigma_at(s));
    if (!sigma_y_inv)
      throw Error("spectra_hom: target " + y_.name + " is not an Ω-spectrum at level " +
                  std::to_string(s));
    CarrierMap apply_omega = ind_functor_map(wp.omega, *level_homs_[next], hom_ox_oy);
    CarrierMap pre_sigma = ind_precompose_map(hom_ox_oy, hom_x_ox, x_.sigma_at(s), hom_x_oy);
    CarrierMap post_inv = ind_postcompose_map(hom_x_oy, hom_oy_y, *sigma_y_inv, *level_homs_[s]);
    tower.maps.push_back(post_inv.compose_after(pre_sigma.compose_after(apply_omega)));
  }
  lim_ = std::make_unique<SeqLimit>(std::move(tower));
}

Elt SpectraHom::from_components(const std::function<Elt(long long)>& f) const {
  auto elt = lim_->element_from_base(f(preperiod_));
  if (!elt) throw Error("spectra_hom: family has no limit element");
  for (int s = 0; s < stages(); ++s)
    if (!(lim_->leg(s).apply(*elt) == f(s)))
      throw Error("spectra_hom: family not compatible at level " + std::to_string(s));
  return *elt;
}

IndSpectrum lift_spectrum(const WellPointedEndo& wp, const BaseSpectrum& x) {
  x.validate(wp.omega);
  const FiniteCategory& C = wp.category();
  IndSpectrum out;
  out.base = &C;
  out.name = x.name;
  out.preperiod = x.preperiod;
  out.period = x.period;
  for (int n = 0; n < x.preperiod + x.period; ++n) {
    out.levels.push_back(embed_ind(C, x.level(n)));
    int next = (n + 1 < x.preperiod + x.period) ? n + 1 : x.preperiod;
    IndHom h(embed_ind(C, x.level(n)), embed_ind(C, wp.omega.on_obj(x.level(next))));
    out.sigma.push_back(h.from_levelwise([&](long long) { return x.sigma_at(n); }));
  }
  return out;
}

IndSpectrum shift_ind_spectrum(const IndSpectrum& x) {
  IndSpectrum out;
  out.base = x.base;
  out.name = "S(" + x.name + ")";
  out.preperiod = std::max(x.preperiod - 1, 0);
  out.period = x.period;
  for (int n = 0; n < out.preperiod + out.period; ++n) {
    out.levels.push_back(x.level(n + 1));
    out.sigma.push_back(x.sigma_at(n + 1));
  }
  return out;
}

SpectraSubcat::SpectraSubcat(const WellPointedEndo& wp, std::vector<IndSpectrum> objects,
                             std::string name)
    : wp_(&wp), objects_(std::move(objects)) {
  const FiniteCategory& C = wp.category();
  cat_.mode = C.mode;
  cat_.name = std::move(name);
  int n = int(objects_.size());
  for (int a = 0; a < n; ++a) cat_.add_object("Sp" + std::to_string(a));

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto hom = std::make_unique<SpectraHom>(wp, objects_[a], objects_[b]);
      Carrier carrier = hom->carrier();
      for (auto& l : carrier.labels)
        l = "s" + std::to_string(a) + "_" + std::to_string(b) + ":" + l;
      cat_.set_hom(a, b, carrier);
      pairs_[{a, b}] = std::move(hom);
    }

  for (int a = 0; a < n; ++a)
    cat_.set_identity(a, pair(a, a).from_components([&](long long s) {
      return ind_identity(pair(a, a).level_hom(s));
    }));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const SpectraHom& ab = pair(a, b);
        const SpectraHom& bc = pair(b, c);
        const SpectraHom& ac = pair(a, c);
        int ng = cat_.hom(b, c).size(), nf = cat_.hom(a, b).size();
        for (int gi = 0; gi < ng; ++gi)
          for (int fi = 0; fi < nf; ++fi) {
            Elt g = C.mode == Mode::Set ? Elt::of_index(gi) : Elt::basis(gi, ng);
            Elt f = C.mode == Mode::Set ? Elt::of_index(fi) : Elt::basis(fi, nf);
            cat_.set_compose(a, b, c, gi, fi, ac.from_components([&](long long s) {
              return ind_compose(bc.level_hom(s), bc.component(g, s), ab.level_hom(s),
                                 ab.component(f, s), ac.level_hom(s));
            }));
          }
      }
  cat_.seal();
}

std::optional<ObjId> SpectraSubcat::find_object(const IndSpectrum& x) const {
  for (int a = 0; a < int(objects_.size()); ++a)
    if (objects_[a] == x) return a;
  return std::nullopt;
}

Elt SpectraSubcat::component(ObjId a, ObjId b, const Elt& hom_elt, long long n) const {
  return pair(a, b).component(hom_elt, n);
}

const IndHom& SpectraSubcat::level_hom(ObjId a, ObjId b, long long n) const {
  return pair(a, b).level_hom(n);
}

Elt SpectraSubcat::elt_from_constant_family(ObjId a, ObjId b, const Elt& level_component) const {
  return pair(a, b).from_components([&](long long) { return level_component; });
}

}  // namespace fincat
