#pragma once

#include "fincat/spectra.hpp"

namespace fincat {

// Heller stabilisation over the base category: objects (c, i) for degrees in
// a window [-W, W], homs colim_k C(Ω^{k+i}c, Ω^{k+j}d) along the action of Ω.
// Homs depend only on the degree difference, so the window carries complete
// data; the certificates below verify that on the materialized part.
class StabCategory {
 public:
  StabCategory(const Functor& omega, int window);
  StabCategory(const StabCategory&) = delete;
  StabCategory& operator=(const StabCategory&) = delete;

  const FiniteCategory& cat() const { return *cat_; }
  const FiniteCategory& base() const { return *base_; }
  const Functor& omega() const { return *omega_; }
  int window() const { return window_; }

  ObjId object_id(ObjId base_obj, int degree) const;
  std::pair<ObjId, int> object_info(ObjId stab_obj) const;  // (base object, degree)

  const SeqColimit& pair_colim(ObjId a, ObjId b) const;
  int pair_k0(ObjId a, ObjId b) const;
  // Class of a base morphism Ω^{k+i}c -> Ω^{k+j}d given at absolute stage k.
  Elt classify_abs(ObjId a, ObjId b, long long k_abs, const Elt& e) const;
  // Canonical representative: absolute stage and base-category morphism.
  std::pair<long long, Morphism> represent(ObjId a, ObjId b, const Elt& e) const;

  const Functor& omega_stab() const { return omega_stab_; }   // (c,i) -> (Ωc,i)
  const Functor& universal() const { return universal_; }     // c -> (c,0)

  // The canonical map stab_hom((c,i),(d,j)) -> stab_hom((c,i+l),(d,j+l)).
  CarrierMap degree_shift_map(ObjId a, ObjId b, int l) const;
  // Natural iso Ω(c,i) ≅ (c,i+1) as a stab morphism (degree i+1 in window).
  Morphism degree_iso(ObjId base_obj, int degree) const;

  // Verifies the degree-shift maps are isos natural in both variables.
  Report degree_shift_certificate(int max_shift = 2) const;
  // Verifies the degree isos are invertible and natural, and that composing
  // the degree reindex with Ω is the identity up to these isos.
  Report autoequivalence_certificate() const;

 private:
  const Functor* omega_;
  const FiniteCategory* base_;
  std::unique_ptr<FiniteCategory> cat_;
  int window_;
  std::vector<std::unique_ptr<SeqColimit>> colims_;
  std::vector<int> k0_;
  Functor omega_stab_;
  Functor universal_;

  ObjId pow_obj(ObjId c, int k) const;
  size_t pair_index(ObjId a, ObjId b) const { return size_t(a) * cat_->object_count() + b; }
};

// Standalone hom computation (the degree window is irrelevant for one pair).
struct StabHom {
  Carrier carrier;
  int k0 = 0;
  int preperiod = 0;
  int period = 1;
};
StabHom stab_hom(const Functor& omega, ObjId c, int i, ObjId d, int j);

struct HellerReport {
  bool ok = false;
  bool refused = false;
  std::string refusal_reason;
  bool strict_intertwiner = false;
  bool exists = false;
  bool unique = false;
  int candidates = 0;  // functors G with G ∘ universal = F
};

// Universality of c -> (c,0): for a strictly intertwining F (F∘Ω = Ω_D∘F on
// the nose) into a category with autoequivalence Ω_D, finds every functor
// G : S_ΩC -> D with G ∘ universal = F and checks existence and uniqueness up
// to natural isomorphism by enumeration.
HellerReport verify_heller_universal(const StabCategory& stab, const Functor& f,
                                     const Functor& omega_d,
                                     const EnumLimits& limits = EnumLimits::from_env());

}  // namespace fincat
