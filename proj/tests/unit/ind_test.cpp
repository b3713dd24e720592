#include <doctest.h>

#include "fincat/enumerate.hpp"
#include "fincat/ind.hpp"
#include "fincat/localise.hpp"
#include "support/fixtures.hpp"

using namespace fincat;
using namespace fincat::fixtures;

namespace {

WellPointedEndo chain3_shift(const FiniteCategory& c) {
  Functor om = poset_endofunctor(c, {1, 2, 2});
  return WellPointedEndo::make(om, poset_pointing(om));
}

WellPointedEndo monoid_theta_e(const FiniteCategory& m) {
  Functor id = Functor::identity_functor(m, "Om");
  return WellPointedEndo::make(id, monoid_pointing(id, 1));
}

}  // namespace

TEST_CASE("embed is fully faithful") {
  FiniteCategory c = chain3();
  for (ObjId x = 0; x < 3; ++x)
    for (ObjId y = 0; y < 3; ++y) {
      IndHom h(embed_ind(c, x), embed_ind(c, y));
      CHECK(h.carrier().size() == c.hom(x, y).size());
    }
  // Identity element of ind_hom(embed x, embed x) matches id_x.
  IndHom h(embed_ind(c, 2), embed_ind(c, 2));
  Elt e = ind_identity(h);
  CHECK(h.germ(e, 0) == c.identity(2));
}

TEST_CASE("hom from a constant object into the e-telescope is a singleton") {
  FiniteCategory m = monoid_e();
  WellPointedEndo wp = monoid_theta_e(m);
  IndObject tel = omega_infinity(wp, 0);
  CHECK(tel.preperiod == 0);
  CHECK(tel.period == 1);
  IndHom h(embed_ind(m, 0), tel);
  CHECK(h.carrier().size() == 1);
  // ... and so is the hom back, and both composites hit e, not the identity.
  IndHom back(tel, embed_ind(m, 0));
  CHECK(back.carrier().size() == 1);
}

TEST_CASE("hom from an omega-telescope into a constant object, with truncation oracle") {
  FiniteCategory c = chain3();
  WellPointedEndo wp = chain3_shift(c);
  IndObject t0 = omega_infinity(wp, 0);
  IndHom into1(t0, embed_ind(c, 1));
  // Rows are C(Ω^i 0, 1): {*}, {*}, ∅, ∅, ...; the limit is empty.
  CHECK(into1.carrier().size() == 0);
  // Truncation oracle at 3 stages: a compatible family needs an element at
  // every row, and row 2 is already empty.
  bool truncation_nonempty = true;
  for (int row = 0; row < 3; ++row)
    if (c.hom(t0.level(row), 1).size() == 0) truncation_nonempty = false;
  CHECK(truncation_nonempty == (into1.carrier().size() > 0));
  // Into the top object everything is a singleton.
  IndHom into2(t0, embed_ind(c, 2));
  CHECK(into2.carrier().size() == 1);
}

TEST_CASE("ind_hom(embed x, Y) collapses to the row colimit") {
  FiniteCategory m = monoid_e();
  WellPointedEndo wp = monoid_theta_e(m);
  IndObject tel = omega_infinity(wp, 0);
  // The one-stage tower limit over the single row equals the row colimit:
  // colim_j M along postcomposition with e, i.e. the eventual image {e}.
  EpTower row;
  row.preperiod = 0;
  row.period = 1;
  row.carriers = {m.hom(0, 0)};
  row.maps = {m.postcompose(m.basis_morphism(0, 0, 1), 0)};
  SeqColimit oracle(std::move(row));
  IndHom h(embed_ind(m, 0), tel);
  CHECK(h.carrier().size() == oracle.carrier().size());
}

TEST_CASE("extend_functor is hat-functorial and preserves identity") {
  FiniteCategory c = chain3();
  WellPointedEndo wp = chain3_shift(c);
  IndObject t0 = omega_infinity(wp, 0);
  IndObject same = extend_functor(Functor::identity_functor(c), t0);
  CHECK(same == t0);
  // G ∘ F extends as the composite of the extensions, over the whole suite
  // of monotone endofunctors and several ind-objects.
  auto suite = all_functors(c, c);
  std::vector<IndObject> objects = {t0, embed_ind(c, 0), omega_infinity(wp, 1)};
  for (const auto& f : suite)
    for (const auto& g : suite)
      for (const auto& x : objects)
        CHECK(extend_functor(g, extend_functor(f, x)) == extend_functor(f.then(g), x));
}

TEST_CASE("omega_infinity telescopes take canonical form") {
  FiniteCategory c = chain3();
  WellPointedEndo wp = chain3_shift(c);
  IndObject t0 = omega_infinity(wp, 0);
  CHECK(t0.preperiod == 2);
  CHECK(t0.period == 1);
  CHECK(t0.levels == std::vector<ObjId>{0, 1, 2});
  // The telescope at an Ω-algebra object is the constant ind-object.
  IndObject t2 = omega_infinity(wp, 2);
  CHECK(t2 == embed_ind(c, 2));
}

TEST_CASE("ind iso: the chain3 telescope at 0 is the constant object at 2") {
  FiniteCategory c = chain3();
  WellPointedEndo wp = chain3_shift(c);
  CHECK(ind_isomorphic(omega_infinity(wp, 0), embed_ind(c, 2)));
  CHECK(!ind_isomorphic(embed_ind(c, 0), embed_ind(c, 1)));
  // extend_functor preserves isomorphy.
  CHECK(ind_isomorphic(extend_functor(wp.omega, omega_infinity(wp, 0)),
                       extend_functor(wp.omega, embed_ind(c, 2))));
}

TEST_CASE("materialized ind-subcategory passes full validation") {
  FiniteCategory c = chain3();
  WellPointedEndo wp = chain3_shift(c);
  IndSubcat sub(c, {embed_ind(c, 0), omega_infinity(wp, 0), embed_ind(c, 2)}, "sub");
  CHECK(sub.cat().validate().ok);
  Functor ext = sub.extend_endofunctor(Functor::identity_functor(c), "id_hat");
  CHECK(validate_functor(ext).ok);
  CHECK(ext.same_data(Functor::identity_functor(sub.cat())));
}

TEST_CASE("materialized ind-subcategory over the vec idempotent algebra") {
  FiniteCategory q = vec_idempotent();
  Functor id = Functor::identity_functor(q, "Om");
  NatTrans th;
  th.source = Functor::identity_functor(q);
  th.target = id;
  th.at = {Morphism{0, 0, Elt::of_vec({Rat(0), Rat(1)})}};  // θ = e
  WellPointedEndo wp = WellPointedEndo::make(id, th);
  IndObject tel = omega_infinity(wp, 0);
  IndSubcat sub(q, {embed_ind(q, 0), tel}, "vsub");
  CHECK(sub.cat().validate().ok);
  // hom(telescope, telescope) is the eventual image of e-multiplication: 1-dim.
  CHECK(sub.cat().hom(1, 1).size() == 1);
  CHECK(sub.cat().hom(0, 0).size() == 2);
}

TEST_CASE("theta_hat component is the levelwise pointing and localisation unit composes") {
  FiniteCategory c = chain3();
  WellPointedEndo wp = chain3_shift(c);
  IndObject t0 = omega_infinity(wp, 0);
  IndObject omt0 = extend_functor(wp.omega, t0);
  IndHom h(t0, omt0);
  Elt th_hat = theta_hat_component(wp, h);
  // The extended pointing on an Ω^∞-object is invertible: check via the
  // two-object subcategory.
  IndSubcat sub(c, {t0, omt0}, "theta_probe");
  auto pos = sub.find_object(t0);
  auto pos2 = sub.find_object(omt0);
  REQUIRE(pos.has_value());
  REQUIRE(pos2.has_value());
  Morphism m = sub.morphism_from_elt(*pos, *pos2, th_hat);
  CHECK(sub.cat().morphism_invertible(m));
}
