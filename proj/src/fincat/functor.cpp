#include "fincat/functor.hpp"

namespace fincat {

Functor Functor::identity_functor(const FiniteCategory& c, const std::string& name) {
  Functor f;
  f.src = &c;
  f.dst = &c;
  f.name = name;
  f.obj.resize(c.object_count());
  for (ObjId a = 0; a < c.object_count(); ++a) f.obj[a] = a;
  for (ObjId a = 0; a < c.object_count(); ++a)
    for (ObjId b = 0; b < c.object_count(); ++b)
      f.hom.push_back(CarrierMap::identity(c.hom(a, b)));
  return f;
}

Functor Functor::from_basis_images(const FiniteCategory& src, const FiniteCategory& dst,
                                   std::vector<ObjId> obj,
                                   const std::vector<std::vector<Elt>>& images) {
  Functor f;
  f.src = &src;
  f.dst = &dst;
  f.obj = std::move(obj);
  int n = src.object_count();
  f.hom.resize(size_t(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      f.hom[size_t(a) * n + b] = CarrierMap::from_images(
          src.hom(a, b), dst.hom(f.obj[a], f.obj[b]), images[size_t(a) * n + b]);
  return f;
}

Functor Functor::then(const Functor& g) const {
  if (dst != g.src) throw Error("functor composition: endpoint mismatch");
  Functor out;
  out.src = src;
  out.dst = g.dst;
  out.name = g.name + "∘" + name;
  out.obj.resize(obj.size());
  for (size_t a = 0; a < obj.size(); ++a) out.obj[a] = g.obj[obj[a]];
  int n = src->object_count();
  out.hom.resize(size_t(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      out.hom[size_t(a) * n + b] = g.on_hom(obj[a], obj[b]).compose_after(on_hom(a, b));
  return out;
}

Report validate_functor(const Functor& f) {
  Report rep;
  const FiniteCategory& C = *f.src;
  const FiniteCategory& D = *f.dst;
  if (int(f.obj.size()) != C.object_count()) {
    rep.fail("typing", "object assignment has wrong arity");
    return rep;
  }
  for (ObjId a = 0; a < C.object_count(); ++a)
    if (f.obj[a] < 0 || f.obj[a] >= D.object_count()) {
      rep.fail("typing", "object image out of range");
      return rep;
    }
  for (ObjId a = 0; a < C.object_count(); ++a)
    for (ObjId b = 0; b < C.object_count(); ++b) {
      const CarrierMap& m = f.on_hom(a, b);
      if (m.src_size() != C.hom(a, b).size() ||
          m.dst_size() != D.hom(f.obj[a], f.obj[b]).size()) {
        rep.fail("typing", "hom map for (" + C.object_name(a) + "," + C.object_name(b) +
                               ") has mismatched endpoints");
        return rep;
      }
    }
  for (ObjId a = 0; a < C.object_count(); ++a)
    if (!(f.on_mor(C.identity(a)) == D.identity(f.obj[a])))
      rep.fail("identity", f.name + " does not preserve id_" + C.object_name(a));
  for (ObjId a = 0; a < C.object_count(); ++a)
    for (ObjId b = 0; b < C.object_count(); ++b)
      for (ObjId c = 0; c < C.object_count(); ++c)
        for (const auto& g : C.basis_morphisms(b, c))
          for (const auto& m : C.basis_morphisms(a, b)) {
            Morphism lhs = f.on_mor(C.compose(g, m));
            Morphism rhs = D.compose(f.on_mor(g), f.on_mor(m));
            if (!(lhs == rhs))
              rep.fail("composition", f.name + "(" + C.morphism_str(g) + " ∘ " +
                                          C.morphism_str(m) + ") ≠ image composite");
          }
  return rep;
}

Report validate_nat(const NatTrans& t) {
  Report rep;
  const Functor& F = t.source;
  const Functor& G = t.target;
  if (F.src != G.src || F.dst != G.dst) {
    rep.fail("typing", "natural transformation between functors with different endpoints");
    return rep;
  }
  const FiniteCategory& C = *F.src;
  const FiniteCategory& D = *F.dst;
  if (int(t.at.size()) != C.object_count()) {
    rep.fail("typing", "component list has wrong arity");
    return rep;
  }
  for (ObjId a = 0; a < C.object_count(); ++a) {
    const Morphism& c = t.at[a];
    if (c.src != F.obj[a] || c.dst != G.obj[a]) {
      rep.fail("typing", "component at " + C.object_name(a) + " has wrong endpoints: " +
                             D.morphism_str(c));
      return rep;
    }
  }
  for (ObjId a = 0; a < C.object_count(); ++a)
    for (ObjId b = 0; b < C.object_count(); ++b)
      for (const auto& m : C.basis_morphisms(a, b)) {
        Morphism lhs = D.compose(t.at[b], F.on_mor(m));
        Morphism rhs = D.compose(G.on_mor(m), t.at[a]);
        if (!(lhs == rhs))
          rep.fail("naturality", "square for " + C.morphism_str(m) + " does not commute");
      }
  return rep;
}

NatTrans nat_compose(const NatTrans& second, const NatTrans& first) {
  if (!first.target.same_data(second.source)) throw Error("nat_compose: middle functor mismatch");
  NatTrans out;
  out.source = first.source;
  out.target = second.target;
  out.name = second.name + "·" + first.name;
  const FiniteCategory& D = *first.source.dst;
  for (size_t a = 0; a < first.at.size(); ++a)
    out.at.push_back(D.compose(second.at[a], first.at[a]));
  return out;
}

NatTrans nat_identity(const Functor& f) {
  NatTrans t;
  t.source = f;
  t.target = f;
  t.name = "id_" + f.name;
  for (ObjId a = 0; a < f.src->object_count(); ++a) t.at.push_back(f.dst->identity(f.obj[a]));
  return t;
}

}  // namespace fincat
