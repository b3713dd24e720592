#pragma once

#include "fincat/functor.hpp"

namespace fincat {

// Two-sided iso pair between objects of one category, if one exists. Exact in
// Set mode and for hom spaces of dimension <= 1 in Vec mode; larger Vec homs
// are probed on a deterministic sample of candidate morphisms.
std::optional<std::pair<Morphism, Morphism>> find_object_iso(const FiniteCategory& c, ObjId a,
                                                             ObjId b);
bool objects_isomorphic(const FiniteCategory& c, ObjId a, ObjId b);

// Basis of the space of natural transformations F => G (Vec mode: a genuine
// basis of the solution space; Set mode: the full finite list).
std::vector<NatTrans> natural_transformations(const Functor& F, const Functor& G,
                                              long long max_results = 200000);

// A natural isomorphism F => G, if one is found. Set mode is exhaustive.
std::optional<NatTrans> find_natural_iso(const Functor& F, const Functor& G);
bool naturally_isomorphic(const Functor& F, const Functor& G);

struct EquivReport {
  bool ok = false;
  bool fully_faithful = false;
  bool essentially_surjective = false;
  std::string witness;  // failing hom pair or object, when not an equivalence
  std::vector<std::string> certificates;
};

// Fully faithful + essentially surjective, with per-hom iso certificates.
EquivReport check_equivalence(const Functor& F);

}  // namespace fincat
