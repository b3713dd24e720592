#include "fincat/ep.hpp"

namespace fincat {

CarrierMap EpTower::connect(long long a, long long b) const {
  CarrierMap acc = CarrierMap::identity(carrier_at(a));
  for (long long n = a; n < b; ++n) acc = map_at(n).compose_after(acc);
  return acc;
}

void EpTower::validate() const {
  if (preperiod < 0 || period < 1) throw Error("ep tower: bad (q,p)");
  if (int(carriers.size()) != preperiod + period || carriers.size() != maps.size())
    throw Error("ep tower: stage count mismatch");
  for (int i = 0; i < int(maps.size()); ++i) {
    int dst = (i + 1 < preperiod + period) ? i + 1 : preperiod;
    if (maps[i].src_size() != carriers[i].size() || maps[i].dst_size() != carriers[dst].size())
      throw Error("ep tower: map " + std::to_string(i) + " has mismatched endpoints");
  }
}

CarrierMap EpCotower::connect_down(long long a, long long b) const {
  CarrierMap acc = CarrierMap::identity(carrier_at(b));
  for (long long n = b - 1; n >= a; --n) acc = maps[stage(n)].compose_after(acc);
  return acc;
}

void EpCotower::validate() const {
  if (preperiod < 0 || period < 1) throw Error("ep cotower: bad (q,p)");
  if (int(carriers.size()) != preperiod + period || carriers.size() != maps.size())
    throw Error("ep cotower: stage count mismatch");
  for (int i = 0; i < int(maps.size()); ++i) {
    int src = (i + 1 < preperiod + period) ? i + 1 : preperiod;
    if (maps[i].src_size() != carriers[src].size() || maps[i].dst_size() != carriers[i].size())
      throw Error("ep cotower: map " + std::to_string(i) + " has mismatched endpoints");
  }
}

SeqColimit::SeqColimit(EpTower tower) : tower_(std::move(tower)) {
  tower_.validate();
  int q = tower_.preperiod;
  loop_ = tower_.connect(q, q + tower_.period);
  ei_ = eventual_image(tower_.carriers[q], loop_);
  aut_inv_ = *ei_.automorphism.inverse();
  aut_inv_pow_.push_back(CarrierMap::identity(ei_.carrier));
}

const CarrierMap& SeqColimit::aut_inv_pow(int m) const {
  while (int(aut_inv_pow_.size()) <= m)
    aut_inv_pow_.push_back(aut_inv_.compose_after(aut_inv_pow_.back()));
  return aut_inv_pow_[m];
}

CarrierMap SeqColimit::leg(long long n) const {
  int q = tower_.preperiod, p = tower_.period;
  if (n < q) return leg(q).compose_after(tower_.connect(n, q));
  long long m = (n - q + p - 1) / p;  // ceil to the next multiple stage
  CarrierMap up = tower_.connect(n, q + m * p);
  return aut_inv_pow(int(m)).compose_after(ei_.projection.compose_after(up));
}

CarrierMap SeqColimit::factor_cocone(const CarrierMap& cocone_at_base) const {
  // leg(q) ∘ inclusion = id_E, so u := c_q ∘ incl factors the cocone and is
  // unique because leg(q) is surjective.
  return cocone_at_base.compose_after(ei_.inclusion);
}

SeqLimit::SeqLimit(EpCotower tower) : tower_(std::move(tower)) {
  tower_.validate();
  int q = tower_.preperiod;
  loop_ = tower_.connect_down(q, q + tower_.period);
  ei_ = eventual_image(tower_.carriers[q], loop_);
  aut_inv_ = *ei_.automorphism.inverse();
  aut_inv_pow_.push_back(CarrierMap::identity(ei_.carrier));
}

const CarrierMap& SeqLimit::aut_inv_pow(int m) const {
  while (int(aut_inv_pow_.size()) <= m)
    aut_inv_pow_.push_back(aut_inv_.compose_after(aut_inv_pow_.back()));
  return aut_inv_pow_[m];
}

CarrierMap SeqLimit::leg(long long n) const {
  int q = tower_.preperiod, p = tower_.period;
  if (n < q) return tower_.connect_down(n, q).compose_after(leg(q));
  long long m = (n - q + p - 1) / p;
  CarrierMap down = tower_.connect_down(n, q + m * p);
  return down.compose_after(ei_.inclusion.compose_after(aut_inv_pow(int(m))));
}

std::optional<Elt> SeqLimit::element_from_base(const Elt& at_base) const {
  return ei_.inclusion.preimage(at_base);
}

std::optional<CarrierMap> SeqLimit::factor_cone(const CarrierMap& cone_at_base) const {
  // The leg at the base stage is the inclusion E -> A_q, so the factoring is
  // the corestriction of the given map to E (when it lands there).
  if (cone_at_base.mode() == Mode::Set) {
    std::vector<int> img;
    for (int i = 0; i < cone_at_base.src_size(); ++i) {
      auto pre = ei_.inclusion.preimage(cone_at_base.apply_basis(i));
      if (!pre) return std::nullopt;
      img.push_back(pre->idx);
    }
    return CarrierMap::set_map(img, ei_.carrier.size());
  }
  auto sol = ei_.inclusion.matrix().solve_matrix(cone_at_base.matrix());
  if (!sol) return std::nullopt;
  // Confirm the solve is exact (the system may be inconsistent only if the
  // cone does not land in E; solve_matrix already returns nullopt then).
  return CarrierMap::vec_map(std::move(*sol));
}

}  // namespace fincat
