#pragma once

#include "fincat/category.hpp"

namespace fincat {

// A functor between finite categories: object images plus one carrier map per
// hom pair (linear in Vec mode). Endofunctors are the src == dst case.
struct Functor {
  const FiniteCategory* src = nullptr;
  const FiniteCategory* dst = nullptr;
  std::string name = "F";
  std::vector<ObjId> obj;
  std::vector<CarrierMap> hom;  // indexed a * n + b

  ObjId on_obj(ObjId a) const { return obj[a]; }
  const CarrierMap& on_hom(ObjId a, ObjId b) const { return hom[size_t(a) * src->object_count() + b]; }
  CarrierMap& on_hom_mut(ObjId a, ObjId b) { return hom[size_t(a) * src->object_count() + b]; }
  Morphism on_mor(const Morphism& m) const {
    return Morphism{obj[m.src], obj[m.dst], on_hom(m.src, m.dst).apply(m.v)};
  }

  static Functor identity_functor(const FiniteCategory& c, const std::string& name = "id");
  // Functor with every hom map induced by element images of basis morphisms.
  static Functor from_basis_images(const FiniteCategory& src, const FiniteCategory& dst,
                                   std::vector<ObjId> obj,
                                   const std::vector<std::vector<Elt>>& images);

  Functor then(const Functor& g) const;  // g ∘ this
  bool same_data(const Functor& o) const { return obj == o.obj && hom == o.hom; }
};

// src == dst functor laws plus typing; report lists each violation.
Report validate_functor(const Functor& f);

struct NatTrans {
  Functor source;
  Functor target;
  std::string name = "t";
  std::vector<Morphism> at;  // component per object of source.src

  const Morphism& component(ObjId a) const { return at[a]; }
};

Report validate_nat(const NatTrans& t);

// Whiskering and composition used by the comparison certificates.
NatTrans nat_compose(const NatTrans& second, const NatTrans& first);  // vertical
NatTrans nat_identity(const Functor& f);

}  // namespace fincat
