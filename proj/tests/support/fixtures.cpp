#include "support/fixtures.hpp"

namespace fincat::fixtures {

FiniteCategory chain3() { return make_chain_poset("chain3", 3); }

FiniteCategory monoid_e() {
  return make_monoid_category("M", {"one", "e"}, {{0, 1}, {1, 1}});
}

FiniteCategory chain2() { return make_chain_poset("chain2", 2); }

FiniteCategory vec_scalar() {
  return make_algebra_category("Qline", {"u"}, {{{Rat(1)}}}, {Rat(1)});
}

FiniteCategory vec_idempotent() {
  // Basis {one, e}; one is the unit, e*e = e.
  std::vector<std::vector<QVec>> mult(2, std::vector<QVec>(2));
  mult[0][0] = {Rat(1), Rat(0)};
  mult[0][1] = {Rat(0), Rat(1)};
  mult[1][0] = {Rat(0), Rat(1)};
  mult[1][1] = {Rat(0), Rat(1)};
  return make_algebra_category("Qe", {"one", "e"}, mult, {Rat(1), Rat(0)});
}

Functor poset_endofunctor(const FiniteCategory& poset, std::vector<ObjId> obj,
                          const std::string& name) {
  int n = poset.object_count();
  std::vector<std::vector<Elt>> images(size_t(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (int i = 0; i < poset.hom(a, b).size(); ++i) {
        if (poset.hom(obj[a], obj[b]).size() == 0)
          throw Error("poset_endofunctor: object map is not monotone");
        images[size_t(a) * n + b].push_back(Elt::of_index(0));
      }
  Functor f = Functor::from_basis_images(poset, poset, std::move(obj), images);
  f.name = name;
  return f;
}

NatTrans poset_pointing(const Functor& omega) {
  const FiniteCategory& C = *omega.src;
  NatTrans t;
  t.source = Functor::identity_functor(C);
  t.target = omega;
  t.name = "th";
  for (ObjId a = 0; a < C.object_count(); ++a) {
    if (C.hom(a, omega.on_obj(a)).size() == 0) throw Error("poset_pointing: map not inflationary");
    t.at.push_back(Morphism{a, omega.on_obj(a), Elt::of_index(0)});
  }
  return t;
}

Functor monoid_endofunctor(const FiniteCategory& monoid, const std::vector<int>& elt_images,
                           const std::string& name) {
  std::vector<std::vector<Elt>> images(1);
  for (int i : elt_images) images[0].push_back(Elt::of_index(i));
  Functor f = Functor::from_basis_images(monoid, monoid, {0}, images);
  f.name = name;
  return f;
}

NatTrans monoid_pointing(const Functor& omega, int component_index) {
  NatTrans t;
  t.source = Functor::identity_functor(*omega.src);
  t.target = omega;
  t.name = "th";
  t.at.push_back(Morphism{0, 0, Elt::of_index(component_index)});
  return t;
}

NatTrans vec_scalar_pointing(const Functor& omega, const Rat& scalar) {
  const FiniteCategory& C = *omega.src;
  NatTrans t;
  t.source = Functor::identity_functor(C);
  t.target = omega;
  t.name = "th";
  QVec v = C.identity_elt(0).vec;
  for (auto& x : v) x = x * scalar;
  t.at.push_back(Morphism{0, 0, Elt::of_vec(v)});
  return t;
}

}  // namespace fincat::fixtures
