#pragma once

#include "fincat/enumerate.hpp"
#include "fincat/equivalence.hpp"
#include "fincat/ind.hpp"

namespace fincat {

struct OrbitData {
  int preperiod = 0;
  int period = 1;
  bool morphism_level_closed = false;
};

// Minimal (q, p) with Ω^{q+p} x = Ω^q x, found by Brent's cycle-finding on
// (object, pointing component) states; also confirms the connecting morphism
// repeats at the loop closure.
OrbitData detect_orbit(const Functor& omega, const NatTrans& theta, ObjId x);

struct WellPointedCheck {
  bool ok = false;
  ObjId failing = -1;
  std::string message;
};

// θΩ = Ωθ componentwise: θ_{ΩX} = Ω(θ_X) for every X.
WellPointedCheck check_well_pointed(const Functor& omega, const NatTrans& theta);

// A validated well-pointed endofunctor with cached orbit data per object.
struct WellPointedEndo {
  Functor omega;
  NatTrans theta;
  std::vector<OrbitData> orbits;

  const FiniteCategory& category() const { return *omega.src; }
  const Morphism& theta_at(ObjId x) const { return theta.at[x]; }
  // θ_{Ω^{k-1}x} ∘ ... ∘ θ_x : x -> Ω^k x.
  Morphism theta_iterate(ObjId x, int k) const;

  // Validates functor, naturality and well-pointedness; throws on failure.
  static WellPointedEndo make(Functor omega, NatTrans theta);
};

struct AlgebraCheck {
  bool theta_invertible = false;
  std::optional<Morphism> structure;  // the inverse of θ_X when present
  bool definition_exists = false;     // some f : ΩX -> X with f ∘ θ_X = id
  bool definition_unique = false;     // ... and it is unique among such f
  bool lemma_consistent() const {
    return theta_invertible == definition_exists && (!definition_exists || definition_unique);
  }
};

// The Ω-algebra structure on X: the inverse of θ_X iff θ_X is invertible,
// cross-checked against the defining property by brute force (Set) or exact
// linear solving (Vec).
AlgebraCheck algebra_check(const WellPointedEndo& wp, ObjId x);
std::optional<Morphism> algebra_structure(const WellPointedEndo& wp, ObjId x);

// The ind-object of the telescope x -> Ωx -> Ω²x -> ..., in canonical form.
IndObject omega_infinity(const WellPointedEndo& wp, ObjId x);
// The extension to ind-objects: diagonal of the double telescope.
IndObject omega_infinity_ind(const WellPointedEndo& wp, const IndObject& x);

// Component of the extended pointing at an ind-object: X -> Ω̂X levelwise.
Elt theta_hat_component(const WellPointedEndo& wp, const IndHom& hom_x_to_omx);
// The localisation unit X -> Ω̂^∞X given by θ-iterates.
Elt localisation_unit(const WellPointedEndo& wp, const IndHom& hom_x_to_tx);
// θ̂-iterate X -> Ω̂^k X as an ind-morphism.
Elt theta_hat_iterate(const WellPointedEndo& wp, const IndHom& hom_x_to_okx, int k);
// Ω̂^∞ applied to an ind-morphism f ∈ ind_hom(A, B): the induced element of
// ind_hom(Ω̂^∞A, Ω̂^∞B), computed on the diagonal presentations.
Elt omega_inf_on_ind_mor(const WellPointedEndo& wp, const IndHom& ab, const Elt& f,
                         const IndHom& ta_tb);

// The localisation L_Ω(C): objects of C with hom(X,Y) = colim_m C(X, Ω^m Y).
struct LocalisedCategory {
  std::unique_ptr<FiniteCategory> cat;
  Functor omega_inf;                                   // C -> L, the localisation functor
  std::vector<std::unique_ptr<SeqColimit>> hom_colims;  // per (X,Y) pair
  bool theta_inverted = false;                         // every Ω^∞(θ_X) invertible
  std::vector<ObjId> skeleton;                         // iso-class representatives
  std::unique_ptr<FiniteCategory> skeleton_cat;

  const SeqColimit& hom_colim(ObjId x, ObjId y) const {
    return *hom_colims[size_t(x) * cat->object_count() + y];
  }
  // The induced endofunctor and pointing on L (θ-images become invertible).
  Functor induced_omega(const WellPointedEndo& wp) const;
  NatTrans induced_theta(const WellPointedEndo& wp) const;
};

LocalisedCategory localisation_category(const WellPointedEndo& wp);

// The canonical comparison L(X,Y) -> ind_hom(Ω^∞X, Ω^∞Y) packaged as a
// functor from L to the materialized ind-subcategory on the Ω^∞-objects.
// Functor laws certify naturality; every hom map being an iso certifies the
// agreement lim_n colim_m C(Ω^nX, Ω^mY) ≅ colim_m C(X, Ω^mY).
struct HomFormulaBridge {
  std::unique_ptr<IndSubcat> image;  // full ind-subcategory on {Ω^∞x}
  Functor comparison;                // L -> image
  bool all_hom_isos = false;
  Report functor_report;
  bool ok() const { return all_hom_isos && functor_report.ok; }
};

HomFormulaBridge hom_formula_bridge(const WellPointedEndo& wp, const LocalisedCategory& loc);

struct FactorisationRecord {
  std::string functor_name;
  bool inverts = false;
  bool exists = false;
  bool unique = false;
  int factorisations = 0;
};

struct UniversalReport {
  bool ok = false;
  bool refused = false;
  std::string refusal_reason;
  int inverting_functors = 0;
  std::vector<FactorisationRecord> records;
};

// Enumerates every functor C -> D, keeps the θ-inverting ones, and verifies
// each factors through Ω^∞ : C -> L, uniquely up to natural isomorphism.
UniversalReport verify_localisation_universal(const WellPointedEndo& wp,
                                              const LocalisedCategory& loc,
                                              const FiniteCategory& target,
                                              const EnumLimits& limits = EnumLimits::from_env());

// Full subcategory on the listed objects (labels preserved).
FiniteCategory full_subcategory(const FiniteCategory& cat, const std::vector<ObjId>& objects,
                                const std::string& name);

}  // namespace fincat
