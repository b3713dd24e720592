#pragma once

#include "fincat/functor.hpp"

namespace fincat {

struct Adjunction {
  Functor left;     // Σ, with Σ ⊣ Ω
  NatTrans unit;    // id => ΩΣ
  NatTrans counit;  // ΣΩ => id
};

// Searches for a left adjoint of the endofunctor Ω by scanning universal
// arrows: for each object x, a pair (s, u : x -> Ωs) such that composing with
// u identifies hom(s, y) with hom(x, Ωy) for every y. The returned data is
// verified (functor laws, naturality, triangle identities); absence is
// definitive in Set mode and a negative probe result in Vec mode.
std::optional<Adjunction> find_left_adjoint(const Functor& omega);

}  // namespace fincat
