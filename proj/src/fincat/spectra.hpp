#pragma once

#include "fincat/adjoint.hpp"
#include "fincat/localise.hpp"

namespace fincat {

// An ep-presented spectrum of the base category: levels c_n with structure
// maps s_n : c_n -> Ω c_{n+1}.
struct BaseSpectrum {
  const FiniteCategory* cat = nullptr;
  std::vector<ObjId> levels;
  std::vector<Morphism> sigma;
  int preperiod = 0;
  int period = 1;
  std::string name = "X";

  int stage(long long n) const { return ep_stage(n, preperiod, period); }
  ObjId level(long long n) const { return levels[stage(n)]; }
  const Morphism& sigma_at(long long n) const { return sigma[stage(n)]; }

  void validate(const Functor& omega) const;
  void normalize();
  bool operator==(const BaseSpectrum& o) const {
    return cat == o.cat && levels == o.levels && sigma == o.sigma &&
           preperiod == o.preperiod && period == o.period;
  }
};

// A morphism of base spectra: an ep family f_n : X_n -> Y_n with
// Ω(f_{n+1}) ∘ σ^X_n = σ^Y_n ∘ f_n.
struct BaseSpectrumMap {
  std::vector<Morphism> at;
  int preperiod = 0;
  int period = 1;

  const Morphism& level(long long n) const { return at[ep_stage(n, preperiod, period)]; }
};

Report validate_spectrum_map(const Functor& omega, const BaseSpectrum& x, const BaseSpectrum& y,
                             const BaseSpectrumMap& f);

// Θ(x): constant levels with the pointing as structure map.
BaseSpectrum theta_embedding(const WellPointedEndo& wp, ObjId x);
// Σ^∞(x): levels Σ^n x with unit structure maps; requires Σ ⊣ Ω.
BaseSpectrum sigma_infinity(const Functor& omega, const Adjunction& adj, ObjId x);
// The free infinite loop space colim(x -> ΩΣx -> Ω²Σ²x -> ...).
IndObject free_loop(const Functor& omega, const Adjunction& adj, ObjId x);

BaseSpectrum shift_spectrum(const BaseSpectrum& x);                        // (SX)_n = X_{n+1}
BaseSpectrum omega_spectrum_level(const Functor& omega, const BaseSpectrum& x);  // (ΩX)_n = ΩX_n
// σ_X : X -> ΩSX, the family of the structure maps themselves.
BaseSpectrumMap sigma_as_map(const BaseSpectrum& x);

// Certificate that ΩS = SΩ on the suite, that σ : id -> ΩS is a natural
// transformation of spectrum endofunctors there, and that (ΩS, σ) is
// well-pointed (σ_{ΩSX} = ΩS(σ_X) on the nose).
struct SpectrumEndofunctorCertificate {
  bool omega_shift_commutes = false;
  bool sigma_components_valid = false;
  bool sigma_natural = false;
  bool well_pointed = false;
  std::string witness;
  bool ok() const {
    return omega_shift_commutes && sigma_components_valid && sigma_natural && well_pointed;
  }
};

SpectrumEndofunctorCertificate spectrum_endofunctors(
    const Functor& omega, const std::vector<BaseSpectrum>& suite,
    const std::vector<std::tuple<const BaseSpectrum*, const BaseSpectrum*, BaseSpectrumMap>>&
        map_suite = {});

// A spectrum valued in the ind-completion; levels are ind-objects and the
// structure maps are ind-hom classes X_n -> Ω̂X_{n+1}.
struct IndSpectrum {
  const FiniteCategory* base = nullptr;
  std::vector<IndObject> levels;
  std::vector<Elt> sigma;
  int preperiod = 0;
  int period = 1;
  std::string name = "X";

  int stage(long long n) const { return ep_stage(n, preperiod, period); }
  const IndObject& level(long long n) const { return levels[stage(n)]; }
  const Elt& sigma_at(long long n) const { return sigma[stage(n)]; }
  bool operator==(const IndSpectrum& o) const {
    return base == o.base && levels == o.levels && sigma == o.sigma &&
           preperiod == o.preperiod && period == o.period;
  }
};

// The constant Ω-spectrum on an ind-object whose extended pointing is
// invertible (e.g. any Ω̂^∞-object).
IndSpectrum constant_omega_spectrum(const WellPointedEndo& wp, const IndObject& x,
                                    const std::string& name = "const");

// A base spectrum read into the ind-completion, levelwise along embed.
IndSpectrum lift_spectrum(const WellPointedEndo& wp, const BaseSpectrum& x);
// The shift (SX)_n = X_{n+1} on ind-spectra.
IndSpectrum shift_ind_spectrum(const IndSpectrum& x);

// The hom of spectra: the limit over levels of ind-homs compatible with the
// structure maps, as a sequential limit of the correction tower
// f_{n+1} -> (σ^Y_n)^{-1} ∘ Ω̂(f_{n+1}) ∘ σ^X_n. The target must be an
// Ω-spectrum (the tower needs the inverses); otherwise this throws.
class SpectraHom {
 public:
  SpectraHom(const WellPointedEndo& wp, IndSpectrum x, IndSpectrum y);

  const Carrier& carrier() const { return lim_->carrier(); }
  const SeqLimit& tower_limit() const { return *lim_; }
  const IndHom& level_hom(long long n) const {
    return *level_homs_[ep_stage(n, preperiod_, period_)];
  }
  // Level-n component of a hom element.
  Elt component(const Elt& e, long long n) const { return lim_->leg(n).apply(e); }
  int stages() const { return preperiod_ + period_; }
  // Element with the given compatible level components; throws if they are
  // not compatible with the structure maps.
  Elt from_components(const std::function<Elt(long long)>& f) const;

 private:
  IndSpectrum x_, y_;
  int preperiod_ = 0, period_ = 1;
  std::vector<std::unique_ptr<IndHom>> level_homs_;
  std::unique_ptr<SeqLimit> lim_;
};

// Spectrification: level n is the ind-colimit of X_n -> ΩX_{n+1} -> ..., with
// induced structure maps; the result is always an Ω-spectrum.
IndSpectrum spectrify(const WellPointedEndo& wp, const BaseSpectrum& x);
// Whether every structure map is invertible (checked via ind-hom probes).
bool is_omega_spectrum(const Functor& omega, const IndSpectrum& x);

// Inverse of an ind-hom element, if any (two-sided, via a two-object probe).
std::optional<Elt> ind_inverse(const IndObject& x, const IndObject& y, const Elt& e);

// Oracle interface for categories that can realize sequential colimits; used
// by the classical spectrification.
struct ColimitOracle {
  virtual ~ColimitOracle() = default;
  // Returns the colimit object and the cocone leg at each stage.
  virtual std::optional<std::pair<ObjId, std::vector<Morphism>>> realize(
      const IndObject& x) const = 0;
};

// Joins in a thin Set-mode category: the colimit of an ep chain is its stable
// level (cycles are constant in a poset).
struct PosetJoinOracle : ColimitOracle {
  std::optional<std::pair<ObjId, std::vector<Morphism>>> realize(const IndObject& x) const override;
};

struct ClassicalSpectrification {
  bool ok = false;
  std::string refusal;
  BaseSpectrum result;
  bool omega_spectrum_in_base = false;
};

ClassicalSpectrification classical_spectrification(const WellPointedEndo& wp,
                                                   const BaseSpectrum& x,
                                                   const ColimitOracle& oracle);

// Materialized full subcategory of Ω-spectra over the ind-completion on a
// finite window of objects. Homs are the pointwise limits of level homs
// compatible with the structure maps; every σ of every object must be
// invertible (the tower needs (σ^Y)^{-1}).
class SpectraSubcat {
 public:
  SpectraSubcat(const WellPointedEndo& wp, std::vector<IndSpectrum> objects, std::string name);
  SpectraSubcat(const SpectraSubcat&) = delete;
  SpectraSubcat& operator=(const SpectraSubcat&) = delete;

  const FiniteCategory& cat() const { return cat_; }
  const IndSpectrum& object(ObjId a) const { return objects_[a]; }
  int object_count() const { return int(objects_.size()); }
  std::optional<ObjId> find_object(const IndSpectrum& x) const;

  // Level-n component of a hom element, as an ind-hom class of the level pair.
  Elt component(ObjId a, ObjId b, const Elt& hom_elt, long long n) const;
  const IndHom& level_hom(ObjId a, ObjId b, long long n) const;
  // Hom element from a constant compatible family (constant spectra).
  Elt elt_from_constant_family(ObjId a, ObjId b, const Elt& level_component) const;

 private:
  const WellPointedEndo* wp_;
  std::vector<IndSpectrum> objects_;
  FiniteCategory cat_;
  std::map<std::pair<int, int>, std::unique_ptr<SpectraHom>> pairs_;

  const SpectraHom& pair(ObjId a, ObjId b) const { return *pairs_.at({a, b}); }
};

// Functor-level application of a base endofunctor to ind-hom carriers:
// the map ind_hom(X, Y) -> ind_hom(FX, FY).
CarrierMap ind_functor_map(const Functor& f, const IndHom& src, const IndHom& dst);
Elt ind_apply_functor(const Functor& f, const IndHom& src, const Elt& e, const IndHom& dst);

}  // namespace fincat
