#pragma once

#include <functional>
#include <map>
#include <memory>

#include "fincat/ep.hpp"
#include "fincat/functor.hpp"

namespace fincat {

// A sequential ind-object of a finite category: an eventually periodic
// diagram X_0 -> X_1 -> X_2 -> ... of objects and transition morphisms.
// Presentations are kept in canonical (minimal) form so that equality of the
// stored data decides equality of presentations.
struct IndObject {
  const FiniteCategory* cat = nullptr;
  std::vector<ObjId> levels;          // stages 0..q+p-1
  std::vector<Morphism> transitions;  // transitions[i] : levels[i] -> levels[stage(i+1)]
  int preperiod = 0;
  int period = 1;

  int stage(long long n) const { return ep_stage(n, preperiod, period); }
  ObjId level(long long n) const { return levels[stage(n)]; }
  const Morphism& transition(long long n) const { return transitions[stage(n)]; }
  // Composite transition from stage a to stage b (a <= b).
  Morphism connect(long long a, long long b) const;

  void normalize();
  void validate() const;
  std::string str() const;

  bool operator==(const IndObject& o) const {
    return cat == o.cat && preperiod == o.preperiod && period == o.period &&
           levels == o.levels && transitions == o.transitions;
  }
};

// The constant ind-object on x with identity transitions.
IndObject embed_ind(const FiniteCategory& cat, ObjId x);
// Levelwise application of an endofunctor; the presentation is re-minimized.
IndObject extend_functor(const Functor& f, const IndObject& x);

// The enriched ind-hom lim_i colim_j C(X_i, Y_j), computed by running the
// row colimits along Y and the tower limit along X through the eventual
// image kernel. Carries enough structure to compose ind-morphisms.
class IndHom {
 public:
  IndHom(IndObject x, IndObject y);

  const Carrier& carrier() const { return lim_->carrier(); }
  const IndObject& source() const { return x_; }
  const IndObject& target() const { return y_; }

  // Colimit of C(X_i, Y_j) over j, for the row at stage i.
  const SeqColimit& row(long long i) const { return *rows_[x_.stage(i)]; }
  const SeqLimit& tower_limit() const { return *lim_; }

  // Representative morphism X_i -> Y_{qY} of an element, at row i.
  Morphism germ(const Elt& e, long long i) const;
  // Element determined by a compatible levelwise family of germs
  // f_i : X_i -> Y_{s(i)}; throws if the family is not compatible.
  Elt from_levelwise(const std::function<Morphism(long long)>& f,
                     const std::function<long long(long long)>& s) const;
  // Element from germs f_i : X_i -> Y_i at matching stages.
  Elt from_levelwise(const std::function<Morphism(long long)>& f) const;

  long long base_row() const { return x_.preperiod; }
  long long base_col() const { return y_.preperiod; }

 private:
  IndObject x_, y_;
  std::vector<std::unique_ptr<SeqColimit>> rows_;
  std::unique_ptr<SeqLimit> lim_;
};

// Identity element of ind_hom(X, X).
Elt ind_identity(const IndHom& endo_hom);
// Composition ind_hom(Y,Z) x ind_hom(X,Y) -> ind_hom(X,Z); bilinear in Vec
// mode. `xz` must be the hom structure for the composite pair.
Elt ind_compose(const IndHom& yz, const Elt& g, const IndHom& xy, const Elt& f,
                const IndHom& xz);

// A materialized full subcategory of the ind-completion on finitely many
// ind-objects: an honest FiniteCategory whose morphisms are ind-hom classes,
// so every core operation (validation, enumeration, iso search) applies.
class IndSubcat {
 public:
  IndSubcat(const FiniteCategory& base, std::vector<IndObject> objects, std::string name);

  const FiniteCategory& cat() const { return cat_; }
  const FiniteCategory& base() const { return *base_; }
  const IndObject& object(ObjId a) const { return objects_[a]; }
  int object_count() const { return int(objects_.size()); }
  std::optional<ObjId> find_object(const IndObject& x) const;  // presentation equality
  const IndHom& hom_structure(ObjId a, ObjId b) const;

  // The extension of a base endofunctor to the subcategory; requires the
  // object list to be closed under it (up to presentation equality).
  Functor extend_endofunctor(const Functor& f, const std::string& name) const;
  // Morphism of the materialized category from an ind-hom element.
  Morphism morphism_from_elt(ObjId a, ObjId b, const Elt& e) const;

 private:
  const FiniteCategory* base_;
  std::vector<IndObject> objects_;
  FiniteCategory cat_;
  std::map<std::pair<int, int>, std::unique_ptr<IndHom>> homs_;
};

// Post/precomposition with a fixed ind-morphism, as carrier maps between
// ind-hom carriers.
CarrierMap ind_postcompose_map(const IndHom& xy, const IndHom& yz, const Elt& g,
                               const IndHom& xz);  // e ↦ g ∘ e
CarrierMap ind_precompose_map(const IndHom& yz, const IndHom& xy, const Elt& f,
                              const IndHom& xz);  // e ↦ e ∘ f

// Isomorphism test for ind-objects by two-sided inverse search inside the
// finite ind-hom carriers.
bool ind_isomorphic(const IndObject& x, const IndObject& y);

}  // namespace fincat
