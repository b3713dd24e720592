#pragma once

#include "fincat/functor.hpp"

namespace fincat::fixtures {

// The chain poset 0 <= 1 <= 2.
FiniteCategory chain3();
// The idempotent monoid {1, e} with e*e = e, as a one-object category.
FiniteCategory monoid_e();
// Two objects a <= b; the collapse endofunctor sends everything to b.
FiniteCategory chain2();
// One-object Vec category with hom = Q spanned by the identity.
FiniteCategory vec_scalar();
// One-object Vec category Q[e]/(e^2 = e), basis {one, e}.
FiniteCategory vec_idempotent();

// A monotone map of a thin (poset-like) Set category as an endofunctor.
Functor poset_endofunctor(const FiniteCategory& poset, std::vector<ObjId> obj,
                          const std::string& name = "Om");
// The unique pointing of a monotone inflationary map on a poset.
NatTrans poset_pointing(const Functor& omega);

// Endofunctor of a one-object category from an element map (Set mode).
Functor monoid_endofunctor(const FiniteCategory& monoid, const std::vector<int>& elt_images,
                           const std::string& name = "Om");
// A natural transformation id => Om on a one-object category with component m.
NatTrans monoid_pointing(const Functor& omega, int component_index);

// Identity endofunctor with a scalar pointing on a one-object Vec category.
NatTrans vec_scalar_pointing(const Functor& omega, const Rat& scalar);

}  // namespace fincat::fixtures
