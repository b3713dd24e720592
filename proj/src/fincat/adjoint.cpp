#include "fincat/adjoint.hpp"

namespace fincat {

namespace {

std::vector<Elt> arrow_candidates(const FiniteCategory& C, ObjId x, ObjId target) {
  const Carrier& h = C.hom(x, target);
  std::vector<Elt> out;
  if (C.mode == Mode::Set) {
    for (int i = 0; i < h.size(); ++i) out.push_back(Elt::of_index(i));
    return out;
  }
  out.push_back(Elt::of_vec(QVec(h.size())));
  for (int i = 0; i < h.size(); ++i) out.push_back(Elt::basis(i, h.size()));
  if (x == target) out.push_back(C.identity_elt(x));
  for (int t = 1; t <= 2 * h.size() + 3 && h.size() > 1; ++t) {
    QVec v(h.size());
    Rat power(1);
    for (int i = 0; i < h.size(); ++i) {
      v[i] = power;
      power *= Rat(t);
    }
    out.push_back(Elt::of_vec(v));
  }
  return out;
}

// The comparison hom(s,y) -> hom(x,Ωy), g ↦ Ω(g)∘u; (s,u) is a universal
// arrow exactly when this is an iso for every y.
CarrierMap comparison_map(const Functor& omega, ObjId x, ObjId s, const Morphism& u, ObjId y) {
  const FiniteCategory& C = *omega.src;
  std::vector<Elt> images;
  for (const auto& g : C.basis_morphisms(s, y)) images.push_back(C.compose(omega.on_mor(g), u).v);
  return CarrierMap::from_images(C.hom(s, y), C.hom(x, omega.on_obj(y)), images);
}

}  // namespace

std::optional<Adjunction> find_left_adjoint(const Functor& omega) {
  const FiniteCategory& C = *omega.src;
  int n = C.object_count();
  std::vector<ObjId> sigma_obj(n, -1);
  std::vector<Morphism> unit(n);
  std::vector<std::vector<CarrierMap>> comparisons(n);  // per x: iso per y

  for (ObjId x = 0; x < n; ++x) {
    bool found = false;
    for (ObjId s = 0; s < n && !found; ++s) {
      for (const auto& e : arrow_candidates(C, x, omega.on_obj(s))) {
        Morphism u{x, omega.on_obj(s), e};
        std::vector<CarrierMap> maps;
        bool universal = true;
        for (ObjId y = 0; y < n; ++y) {
          CarrierMap cm = comparison_map(omega, x, s, u, y);
          if (!cm.is_iso()) {
            universal = false;
            break;
          }
          maps.push_back(std::move(cm));
        }
        if (universal) {
          sigma_obj[x] = s;
          unit[x] = u;
          comparisons[x] = std::move(maps);
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
  }

  // Σ on morphisms: Σf is the unique g with Ω(g) ∘ u_x = u_{x'} ∘ f.
  Functor sigma;
  sigma.src = &C;
  sigma.dst = &C;
  sigma.name = "Σ";
  sigma.obj = sigma_obj;
  sigma.hom.resize(size_t(n) * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId x2 = 0; x2 < n; ++x2) {
      std::vector<Elt> images;
      for (const auto& f : C.basis_morphisms(x, x2)) {
        Elt rhs = C.compose(unit[x2], f).v;
        auto pre = comparisons[x][sigma_obj[x2]].preimage(rhs);
        if (!pre) return std::nullopt;
        images.push_back(*pre);
      }
      sigma.hom[size_t(x) * n + x2] = CarrierMap::from_images(
          C.hom(x, x2), C.hom(sigma_obj[x], sigma_obj[x2]), images);
    }
  if (!validate_functor(sigma).ok) return std::nullopt;

  Adjunction adj;
  adj.left = sigma;
  adj.unit.source = Functor::identity_functor(C);
  adj.unit.target = sigma.then(omega);
  adj.unit.name = "η";
  adj.unit.at = unit;
  if (!validate_nat(adj.unit).ok) return std::nullopt;

  // Counit at y: the unique g : ΣΩy -> y with Ω(g) ∘ u_{Ωy} = id_{Ωy}.
  adj.counit.source = omega.then(sigma);
  adj.counit.target = Functor::identity_functor(C);
  adj.counit.name = "ε";
  for (ObjId y = 0; y < n; ++y) {
    ObjId oy = omega.on_obj(y);
    auto pre = comparisons[oy][y].preimage(C.identity_elt(oy));
    if (!pre) return std::nullopt;
    adj.counit.at.push_back(Morphism{sigma_obj[oy], y, *pre});
  }
  if (!validate_nat(adj.counit).ok) return std::nullopt;

  // Triangle identities.
  for (ObjId x = 0; x < n; ++x) {
    Morphism t1 = C.compose(adj.counit.at[sigma_obj[x]], sigma.on_mor(unit[x]));
    if (!(t1 == C.identity(sigma_obj[x]))) return std::nullopt;
  }
  for (ObjId y = 0; y < n; ++y) {
    Morphism t2 = C.compose(omega.on_mor(adj.counit.at[y]), unit[omega.on_obj(y)]);
    if (!(t2 == C.identity(omega.on_obj(y)))) return std::nullopt;
  }
  return adj;
}

}  // namespace fincat
