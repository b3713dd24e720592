#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fincat/carrier.hpp"

namespace fincat {

// Stage index of an eventually periodic presentation with preperiod q and
// period p: n for n < q+p, else q + (n-q) mod p.
inline int ep_stage(long long n, int q, int p) {
  if (n < q + p) return int(n);
  return q + int((n - q) % p);
}

// Minimal (preperiod, period) of the orbit of `step` from `init` under exact
// state equality, by Brent's cycle-finding. The orbit must be eventually
// periodic (guaranteed for finite state spaces).
template <class State, class Step>
std::pair<int, int> brent_cycle(State init, Step step, long long max_iter = 1 << 22) {
  long long power = 1, lam = 1;
  State tortoise = init;
  State hare = step(init);
  long long guard = 0;
  while (!(tortoise == hare)) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    ++lam;
    if (++guard > max_iter) throw Error("brent_cycle: orbit did not close");
  }
  State t2 = init, h2 = init;
  for (long long i = 0; i < lam; ++i) h2 = step(h2);
  long long mu = 0;
  while (!(t2 == h2)) {
    t2 = step(t2);
    h2 = step(h2);
    ++mu;
  }
  return {int(mu), int(lam)};
}

// Minimizes a valid ep presentation (q0, p0) of a sequence of values to the
// canonical minimal (q, p). `prefix` must hold stages 0 .. q0 + 2*p0 - 1.
template <class T>
std::pair<int, int> minimize_ep(const std::vector<T>& prefix, int q0, int p0) {
  if (int(prefix.size()) < q0 + 2 * p0) throw Error("minimize_ep: prefix too short");
  int p = p0;
  for (int d = 1; d <= p0 / 2; ++d) {
    if (p0 % d != 0) continue;
    bool ok = true;
    for (int n = q0; n < q0 + p0 && ok; ++n) ok = prefix[n + d] == prefix[n];
    if (ok) {
      p = d;
      break;
    }
  }
  int q = q0;
  while (q > 0 && prefix[q - 1] == prefix[q - 1 + p]) --q;
  return {q, p};
}

// Eventually periodic telescope A_0 -> A_1 -> A_2 -> ... of carriers.
// Stages 0..q+p-1 are stored; maps[i] goes from stage i to stage i+1, where
// stage q+p wraps to stage q (so maps[q+p-1] lands in carriers[q]).
struct EpTower {
  std::vector<Carrier> carriers;
  std::vector<CarrierMap> maps;
  int preperiod = 0;
  int period = 1;

  int stage(long long n) const { return ep_stage(n, preperiod, period); }
  const Carrier& carrier_at(long long n) const { return carriers[stage(n)]; }
  const CarrierMap& map_at(long long n) const { return maps[stage(n)]; }
  // Composite map from stage a to stage b (a <= b).
  CarrierMap connect(long long a, long long b) const;
  void validate() const;
};

// The dual presentation: ... -> A_2 -> A_1 -> A_0, with maps[i] going from
// stage i+1 down to stage i (maps[q+p-1] starts at carriers[q]).
struct EpCotower {
  std::vector<Carrier> carriers;
  std::vector<CarrierMap> maps;
  int preperiod = 0;
  int period = 1;

  int stage(long long n) const { return ep_stage(n, preperiod, period); }
  const Carrier& carrier_at(long long n) const { return carriers[stage(n)]; }
  // Composite map from stage b down to stage a (a <= b).
  CarrierMap connect_down(long long a, long long b) const;
  void validate() const;
};

// Sequential colimit of an ep telescope. The carrier is the eventual image E
// of the loop composite g : A_q -> A_q; cocone legs are computed on demand
// and satisfy leg(n+1) ∘ map(n) = leg(n).
class SeqColimit {
 public:
  explicit SeqColimit(EpTower tower);

  const Carrier& carrier() const { return ei_.carrier; }
  const EventualImage& eventual() const { return ei_; }
  const EpTower& tower() const { return tower_; }
  const CarrierMap& loop() const { return loop_; }

  CarrierMap leg(long long n) const;  // carrier_at(n) -> E
  // Element of the colimit represented by `e` at stage n.
  Elt classify(long long n, const Elt& e) const { return leg(n).apply(e); }
  // Canonical representative of a colimit element at the base stage q.
  Elt represent(const Elt& cls) const { return ei_.inclusion.apply(cls); }
  long long base_stage() const { return tower_.preperiod; }

  // Factors a competing cocone through the colimit: give the cocone leg at
  // stage q; returns u : E -> Z with u ∘ leg(n) = cocone(n) for all n.
  CarrierMap factor_cocone(const CarrierMap& cocone_at_base) const;

 private:
  EpTower tower_;
  CarrierMap loop_;
  EventualImage ei_;
  CarrierMap aut_inv_;
  mutable std::vector<CarrierMap> aut_inv_pow_;  // cache of h^-m

  const CarrierMap& aut_inv_pow(int m) const;
};

// Sequential limit of an ep tower. The carrier is the eventual image E of the
// downward loop composite g : A_q -> A_q; cone legs satisfy
// map(n) ∘ leg(n+1) = leg(n).
class SeqLimit {
 public:
  explicit SeqLimit(EpCotower tower);

  const Carrier& carrier() const { return ei_.carrier; }
  const EventualImage& eventual() const { return ei_; }
  const EpCotower& tower() const { return tower_; }
  const CarrierMap& loop() const { return loop_; }

  CarrierMap leg(long long n) const;  // E -> carrier_at(n)
  long long base_stage() const { return tower_.preperiod; }

  // The element of the limit whose leg at the base stage is `at_base`;
  // nullopt if `at_base` is not in the stable image.
  std::optional<Elt> element_from_base(const Elt& at_base) const;
  // Factors a competing cone through the limit: give the cone leg at stage q;
  // returns u : Z -> E with leg(n) ∘ u = cone(n), or nullopt if the given map
  // does not land in the limit.
  std::optional<CarrierMap> factor_cone(const CarrierMap& cone_at_base) const;

 private:
  EpCotower tower_;
  CarrierMap loop_;
  EventualImage ei_;
  CarrierMap aut_inv_;
  mutable std::vector<CarrierMap> aut_inv_pow_;

  const CarrierMap& aut_inv_pow(int m) const;
};

}  // namespace fincat
