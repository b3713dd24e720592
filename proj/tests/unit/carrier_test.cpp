#include <doctest.h>

#include "fincat/carrier.hpp"

using namespace fincat;

TEST_CASE("eventual image of a finite set loop") {
  // g(1)=2, g(2)=3, g(3)=3: the stable image is {3}.
  Carrier a = Carrier::finite_set({"1", "2", "3"});
  CarrierMap g = CarrierMap::set_map({1, 2, 2}, 3);
  EventualImage ei = eventual_image(a, g);
  CHECK(ei.carrier.size() == 1);
  CHECK(ei.carrier.labels[0] == "3");
  CHECK(ei.stabilization == 2);
  CHECK(ei.automorphism.is_iso());
  // projection ∘ inclusion = identity on E here (g fixes 3)
  CHECK(ei.projection.compose_after(ei.inclusion).images()[0] == 0);
}

TEST_CASE("eventual image of a permutation is everything") {
  Carrier a = Carrier::finite_set({"x", "y"});
  CarrierMap swap = CarrierMap::set_map({1, 0}, 2);
  EventualImage ei = eventual_image(a, swap);
  CHECK(ei.carrier.size() == 2);
  CHECK(ei.stabilization == 0);
}

TEST_CASE("eventual image of a rational projection") {
  Carrier v = Carrier::vector_space({"b0", "b1"});
  QMat proj(2, 2);
  proj.at(0, 0) = Rat(1);  // diag(1, 0)
  EventualImage ei = eventual_image(v, CarrierMap::vec_map(proj));
  CHECK(ei.carrier.size() == 1);
  CHECK(ei.stabilization == 1);
  CHECK(ei.automorphism.matrix().at(0, 0) == Rat(1));
}

TEST_CASE("eventual image stabilization never exceeds carrier size") {
  // Scaling by 2 is invertible: stable immediately despite infinite order.
  Carrier v = Carrier::vector_space({"b0"});
  QMat two(1, 1);
  two.at(0, 0) = Rat(2);
  EventualImage ei = eventual_image(v, CarrierMap::vec_map(two));
  CHECK(ei.carrier.size() == 1);
  CHECK(ei.stabilization == 0);
  CHECK(ei.automorphism.matrix().at(0, 0) == Rat(2));
}

TEST_CASE("carrier map preimage is exact") {
  CarrierMap g = CarrierMap::set_map({1, 2, 2}, 3);
  CHECK(g.preimage(Elt::of_index(2)).has_value());
  CHECK(!g.preimage(Elt::of_index(0)).has_value());

  QMat m(2, 1);
  m.at(0, 0) = Rat(2);
  m.at(1, 0) = Rat(4);
  CarrierMap lin = CarrierMap::vec_map(m);
  auto pre = lin.preimage(Elt::of_vec({Rat(1), Rat(2)}));
  REQUIRE(pre.has_value());
  CHECK(pre->vec[0] == Rat(1, 2));
  CHECK(!lin.preimage(Elt::of_vec({Rat(1), Rat(0)})).has_value());
}
