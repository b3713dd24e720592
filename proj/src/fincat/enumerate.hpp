#pragma once

#include <functional>

#include "fincat/functor.hpp"

namespace fincat {

struct EnumLimits {
  long long max_candidates = 2'000'000;  // refuse when the search space estimate exceeds this
  long long max_results = 1'000'000;

  // Honors the FINCAT_ENUM_LIMIT environment variable when set.
  static EnumLimits from_env();
};

struct EnumOutcome {
  bool refused = false;
  std::string reason;
  double estimate = 0;   // search-space size estimate reported on refusal
  long long count = 0;   // functors produced
};

using FunctorVisitor = std::function<bool(const Functor&)>;  // return false to stop early

// Exhaustive, duplicate-free stream of all functors src -> dst. Set mode
// searches morphism images with forced-composite propagation. Vec mode is
// supported for sources whose hom spaces are spanned by identities (object
// maps then determine the functor); richer Vec sources are refused since the
// functor space can be an infinite variety.
EnumOutcome enumerate_functors(const FiniteCategory& src, const FiniteCategory& dst,
                               const EnumLimits& limits, const FunctorVisitor& visit);

std::vector<Functor> all_functors(const FiniteCategory& src, const FiniteCategory& dst,
                                  const EnumLimits& limits = EnumLimits::from_env());

}  // namespace fincat
