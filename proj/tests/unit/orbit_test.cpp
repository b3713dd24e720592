#include <doctest.h>

#include <random>

#include "fincat/orbit.hpp"
#include "support/fixtures.hpp"

using namespace fincat;
using namespace fincat::fixtures;

TEST_CASE("orbit hom grades for the identity endofunctor") {
  FiniteCategory c = chain3();
  Functor id = Functor::identity_functor(c);
  OrbitHom h = orbit_hom(id, 0, 1, 4);
  for (const auto& g : h.grades) CHECK(g.size() == c.hom(0, 1).size());
  CHECK(h.periodicity.preperiod == 0);
  CHECK(h.periodicity.period == 1);
}

TEST_CASE("orbit hom grades for the chain3 shift") {
  FiniteCategory c = chain3();
  Functor shift = poset_endofunctor(c, {1, 2, 2}, "F");
  OrbitHom h = orbit_hom(shift, 0, 1, 4);
  CHECK(h.grades[0].size() == 1);  // A(0,1)
  CHECK(h.grades[1].size() == 1);  // A(1,1)
  CHECK(h.grades[2].size() == 0);  // A(2,1) empty
  CHECK(h.grades[3].size() == 0);  // repeats with the orbit
  CHECK(h.grades[4].labels == h.grades[3].labels);
  CHECK(h.periodicity.preperiod == 2);
  CHECK(h.periodicity.period == 1);
}

TEST_CASE("orbit composition at grade zero is ordinary composition") {
  FiniteCategory c = chain3();
  Functor shift = poset_endofunctor(c, {1, 2, 2}, "F");
  GradedMorphism f{0, c.basis_morphism(0, 1, 0)};
  GradedMorphism g{0, c.basis_morphism(1, 2, 0)};
  GradedMorphism h = orbit_compose(shift, f, g);
  CHECK(h.grade == 0);
  CHECK(h.carrier == c.compose(c.basis_morphism(1, 2, 0), c.basis_morphism(0, 1, 0)));
}

TEST_CASE("theta powers compose to higher-grade identities") {
  FiniteCategory c = chain3();
  Functor shift = poset_endofunctor(c, {1, 2, 2}, "F");
  OrbitWellPointing wpg = orbit_well_pointing(shift, 4);
  // θ_X ∘ θ at the next object: (1, id) ∘ (1, id) = (2, id).
  GradedMorphism t0 = wpg.theta[0];
  GradedMorphism t1 = wpg.theta[shift.on_obj(0)];
  GradedMorphism square = orbit_compose(shift, t0, t1);
  CHECK(square.grade == 2);
  CHECK(square.carrier == c.identity(shift.on_obj(shift.on_obj(0))));
}

TEST_CASE("orbit composition is associative and grade-additive on random triples") {
  FiniteCategory c = chain3();
  Functor shift = poset_endofunctor(c, {1, 2, 2}, "F");
  std::mt19937 rng(20240817);
  auto random_graded = [&](ObjId x, int max_grade) -> std::optional<GradedMorphism> {
    for (int attempt = 0; attempt < 50; ++attempt) {
      int n = int(rng() % (max_grade + 1));
      ObjId src = x;
      for (int i = 0; i < n; ++i) src = shift.on_obj(src);
      ObjId y = int(rng() % 3);
      if (c.hom(src, y).size() == 0) continue;
      int idx = int(rng() % c.hom(src, y).size());
      return GradedMorphism{n, c.basis_morphism(src, y, idx)};
    }
    return std::nullopt;
  };
  int checked = 0;
  while (checked < 200) {
    ObjId x = int(rng() % 3);
    auto f = random_graded(x, 3);
    if (!f) continue;
    auto g = random_graded(f->carrier.dst, 3);
    if (!g) continue;
    auto h = random_graded(g->carrier.dst, 3);
    if (!h) continue;
    GradedMorphism left = orbit_compose(shift, orbit_compose(shift, *f, *g), *h);
    GradedMorphism right = orbit_compose(shift, *f, orbit_compose(shift, *g, *h));
    CHECK(left == right);
    CHECK(left.grade == f->grade + g->grade + h->grade);
    ++checked;
  }
}

TEST_CASE("identity endofunctor well-pointing: theta is the grade shift") {
  FiniteCategory m = monoid_e();
  Functor id = Functor::identity_functor(m);
  OrbitWellPointing wpg = orbit_well_pointing(id, 3);
  CHECK(wpg.ok());
  CHECK(wpg.theta[0].grade == 1);
  CHECK(wpg.theta[0].carrier == m.identity(0));
}

TEST_CASE("chain3 shift orbit well-pointing certificate passes") {
  FiniteCategory c = chain3();
  Functor shift = poset_endofunctor(c, {1, 2, 2}, "F");
  OrbitWellPointing wpg = orbit_well_pointing(shift, 4);
  CHECK(wpg.ok());
}
