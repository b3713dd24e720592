#pragma once

#include "fincat/localise.hpp"

namespace fincat {

// A graded morphism of the orbit category A_F: grade n with carrier
// f ∈ A(F^n X, Y). Set enrichment only; hom families are grade-bounded with
// ep metadata, since the full graded hom is infinite.
struct GradedMorphism {
  int grade = 0;
  Morphism carrier;

  bool operator==(const GradedMorphism& o) const {
    return grade == o.grade && carrier == o.carrier;
  }
};

struct OrbitHom {
  std::vector<Carrier> grades;  // A(F^n X, Y) for n = 0..max_grade
  OrbitData periodicity;        // orbit of X under F: carriers repeat with it
};

// Grades 0..max_grade of A_F(X, Y) = ⊔_n A(F^n X, Y).
OrbitHom orbit_hom(const Functor& f, ObjId x, ObjId y, int max_grade);

// (i, f : F^i X -> Y) then (j, g : F^j Y -> Z) compose to (i+j, g ∘ F^j f).
GradedMorphism orbit_compose(const Functor& f, const GradedMorphism& first,
                             const GradedMorphism& second);

GradedMorphism orbit_identity(const Functor& f, ObjId x);

struct OrbitWellPointing {
  // θ_X = (1, id_{FX}); the certificate verifies naturality against graded
  // morphisms and θΩ = Ωθ gradewise up to the bound, with the orbit
  // periodicity closing the check beyond it.
  std::vector<GradedMorphism> theta;  // component per object
  bool natural = false;
  bool well_pointed = false;
  bool periodicity_closes = false;
  std::string witness;
  bool ok() const { return natural && well_pointed && periodicity_closes; }
};

OrbitWellPointing orbit_well_pointing(const Functor& f, int max_grade);

// F as an endofunctor of A_F: X -> FX on objects, (n, g) -> (n, F g) on
// graded morphisms.
GradedMorphism orbit_apply_endofunctor(const Functor& f, const GradedMorphism& g);

}  // namespace fincat
