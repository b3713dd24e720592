#include "fincat/equivalence.hpp"

#include <functional>

namespace fincat {

namespace {

// Deterministic candidate elements of a Vec hom: zero, basis vectors, and
// moment-curve combinations. For dim <= 1 this is exhaustive up to scaling,
// which invertibility is invariant under.
std::vector<Elt> vec_candidates(int dim, int extra = 0) {
  std::vector<Elt> out;
  out.push_back(Elt::of_vec(QVec(dim)));
  for (int i = 0; i < dim; ++i) out.push_back(Elt::basis(i, dim));
  int samples = 2 * dim + 3 + extra;
  for (int t = 1; t <= samples && dim > 1; ++t) {
    QVec v(dim);
    Rat power(1);
    for (int i = 0; i < dim; ++i) {
      v[i] = power;
      power *= Rat(t);
    }
    out.push_back(Elt::of_vec(v));
    for (auto& x : v) x = -x;
    out.push_back(Elt::of_vec(v));
  }
  return out;
}

}  // namespace

std::optional<std::pair<Morphism, Morphism>> find_object_iso(const FiniteCategory& c, ObjId a,
                                                             ObjId b) {
  if (a == b) return std::make_pair(c.identity(a), c.identity(a));
  if (c.mode == Mode::Set) {
    for (const auto& u : c.basis_morphisms(a, b)) {
      auto inv = c.morphism_inverse(u);
      if (inv) return std::make_pair(u, *inv);
    }
    return std::nullopt;
  }
  for (const auto& e : vec_candidates(c.hom(a, b).size())) {
    Morphism u{a, b, e};
    auto inv = c.morphism_inverse(u);
    if (inv) return std::make_pair(u, *inv);
  }
  return std::nullopt;
}

bool objects_isomorphic(const FiniteCategory& c, ObjId a, ObjId b) {
  return find_object_iso(c, a, b).has_value();
}

namespace {

bool set_nat_search(const Functor& F, const Functor& G, std::vector<Morphism>& at, ObjId next,
                    bool iso_only, long long& budget,
                    const std::function<bool(const std::vector<Morphism>&)>& emit) {
  const FiniteCategory& C = *F.src;
  const FiniteCategory& D = *F.dst;
  if (next == C.object_count()) return emit(at);
  for (const auto& cand : D.basis_morphisms(F.obj[next], G.obj[next])) {
    if (iso_only && !D.morphism_invertible(cand)) continue;
    at[next] = cand;
    bool fine = true;
    // Check naturality squares whose endpoints are both assigned.
    for (ObjId other = 0; other <= next && fine; ++other) {
      for (const auto& m : C.basis_morphisms(other, next))
        if (!(D.compose(at[next], F.on_mor(m)) == D.compose(G.on_mor(m), at[other]))) {
          fine = false;
          break;
        }
      if (!fine) break;
      for (const auto& m : C.basis_morphisms(next, other))
        if (!(D.compose(at[other], F.on_mor(m)) == D.compose(G.on_mor(m), at[next]))) {
          fine = false;
          break;
        }
    }
    if (fine) {
      if (--budget < 0) throw Error("natural transformation search budget exceeded");
      if (!set_nat_search(F, G, at, next + 1, iso_only, budget, emit)) return false;
    }
  }
  at[next] = Morphism{};
  return true;
}

std::vector<int> vec_component_offsets(const Functor& F, const Functor& G, int& total) {
  const FiniteCategory& C = *F.src;
  const FiniteCategory& D = *F.dst;
  std::vector<int> off(C.object_count() + 1, 0);
  for (ObjId a = 0; a < C.object_count(); ++a)
    off[a + 1] = off[a] + D.hom(F.obj[a], G.obj[a]).size();
  total = off[C.object_count()];
  return off;
}

// Rows of the naturality system: for every basis morphism f : a -> b of the
// source, component_b ∘ F(f) - G(f) ∘ component_a = 0 in hom(Fa, Gb).
QMat vec_naturality_system(const Functor& F, const Functor& G) {
  const FiniteCategory& C = *F.src;
  const FiniteCategory& D = *F.dst;
  int total = 0;
  auto off = vec_component_offsets(F, G, total);
  std::vector<QVec> rows;
  for (ObjId a = 0; a < C.object_count(); ++a)
    for (ObjId b = 0; b < C.object_count(); ++b)
      for (const auto& f : C.basis_morphisms(a, b)) {
        Morphism Ff = F.on_mor(f);
        Morphism Gf = G.on_mor(f);
        int eqn_dim = D.hom(F.obj[a], G.obj[b]).size();
        std::vector<QVec> eqns(eqn_dim, QVec(total));
        int dim_b = D.hom(F.obj[b], G.obj[b]).size();
        for (int k = 0; k < dim_b; ++k) {
          Elt term = D.compose_elts(F.obj[a], F.obj[b], G.obj[b], Elt::basis(k, dim_b), Ff.v);
          for (int r = 0; r < eqn_dim; ++r) eqns[r][off[b] + k] += term.vec[r];
        }
        int dim_a = D.hom(F.obj[a], G.obj[a]).size();
        for (int k = 0; k < dim_a; ++k) {
          Elt term = D.compose_elts(F.obj[a], G.obj[a], G.obj[b], Gf.v, Elt::basis(k, dim_a));
          for (int r = 0; r < eqn_dim; ++r) eqns[r][off[a] + k] -= term.vec[r];
        }
        for (auto& row : eqns) rows.push_back(std::move(row));
      }
  QMat sys(int(rows.size()), total);
  for (int r = 0; r < int(rows.size()); ++r)
    for (int c = 0; c < total; ++c) sys.at(r, c) = rows[r][c];
  return sys;
}

NatTrans nat_from_vector(const Functor& F, const Functor& G, const QVec& v,
                         const std::vector<int>& off) {
  const FiniteCategory& D = *F.dst;
  NatTrans t;
  t.source = F;
  t.target = G;
  for (ObjId a = 0; a < F.src->object_count(); ++a) {
    int dim = D.hom(F.obj[a], G.obj[a]).size();
    QVec comp(v.begin() + off[a], v.begin() + off[a] + dim);
    t.at.push_back(Morphism{F.obj[a], G.obj[a], Elt::of_vec(std::move(comp))});
  }
  return t;
}

}  // namespace

std::vector<NatTrans> natural_transformations(const Functor& F, const Functor& G,
                                              long long max_results) {
  if (F.src != G.src || F.dst != G.dst) throw Error("natural_transformations: endpoint mismatch");
  std::vector<NatTrans> out;
  if (F.src->mode == Mode::Set) {
    std::vector<Morphism> at(F.src->object_count());
    long long budget = max_results;
    set_nat_search(F, G, at, 0, false, budget, [&](const std::vector<Morphism>& comps) {
      NatTrans t;
      t.source = F;
      t.target = G;
      t.at = comps;
      out.push_back(std::move(t));
      return true;
    });
    return out;
  }
  int total = 0;
  auto off = vec_component_offsets(F, G, total);
  QMat kernel = vec_naturality_system(F, G).kernel_basis();
  for (int c = 0; c < kernel.cols(); ++c)
    out.push_back(nat_from_vector(F, G, kernel.column(c), off));
  return out;
}

std::optional<NatTrans> find_natural_iso(const Functor& F, const Functor& G) {
  if (F.src != G.src || F.dst != G.dst) return std::nullopt;
  const FiniteCategory& D = *F.dst;
  if (F.src->object_count() == 0) return nat_identity(F);
  if (F.src->mode == Mode::Set) {
    std::vector<Morphism> at(F.src->object_count());
    std::optional<NatTrans> found;
    long long budget = 4'000'000;
    set_nat_search(F, G, at, 0, true, budget, [&](const std::vector<Morphism>& comps) {
      NatTrans t;
      t.source = F;
      t.target = G;
      t.at = comps;
      found = std::move(t);
      return false;  // stop at the first iso
    });
    return found;
  }
  int total = 0;
  auto off = vec_component_offsets(F, G, total);
  QMat kernel = vec_naturality_system(F, G).kernel_basis();
  int k = kernel.cols();
  if (k == 0) {
    // Only the zero transformation; it is an iso precisely for empty homs.
    if (total == 0) {
      NatTrans t = nat_from_vector(F, G, QVec(total), off);
      bool all_inv = true;
      for (const auto& c : t.at)
        if (!D.morphism_invertible(c)) all_inv = false;
      if (all_inv) return t;
    }
    return std::nullopt;
  }
  // Components of any solution are linear in the coefficients; along the
  // moment curve t -> sum t^i b_i each 1-dimensional component vanishes for
  // at most k-1 values of t, so the sweep below is exhaustive for the
  // instances this engine materializes (larger components are sampled).
  int n_comps = F.src->object_count();
  int sweep = n_comps * (k - 1) + k + 4;
  auto try_vec = [&](const QVec& coeffs) -> std::optional<NatTrans> {
    QVec v(total);
    for (int i = 0; i < k; ++i) {
      if (coeffs[i].is_zero()) continue;
      for (int r = 0; r < total; ++r) v[r] += coeffs[i] * kernel.at(r, i);
    }
    NatTrans t = nat_from_vector(F, G, v, off);
    for (const auto& c : t.at)
      if (!D.morphism_invertible(c)) return std::nullopt;
    return t;
  };
  for (int i = 0; i < k; ++i) {
    QVec coeffs(k);
    coeffs[i] = Rat(1);
    if (auto t = try_vec(coeffs)) return t;
  }
  for (int s = 1; s <= sweep; ++s) {
    QVec coeffs(k);
    Rat power(1);
    for (int i = 0; i < k; ++i) {
      coeffs[i] = power;
      power *= Rat(s);
    }
    if (auto t = try_vec(coeffs)) return t;
  }
  return std::nullopt;
}

bool naturally_isomorphic(const Functor& F, const Functor& G) {
  return find_natural_iso(F, G).has_value();
}

EquivReport check_equivalence(const Functor& F) {
  EquivReport rep;
  const FiniteCategory& C = *F.src;
  const FiniteCategory& D = *F.dst;
  rep.fully_faithful = true;
  for (ObjId a = 0; a < C.object_count() && rep.fully_faithful; ++a)
    for (ObjId b = 0; b < C.object_count(); ++b) {
      if (F.on_hom(a, b).is_iso()) {
        rep.certificates.push_back("hom(" + C.object_name(a) + "," + C.object_name(b) +
                                   ") maps bijectively");
        continue;
      }
      rep.fully_faithful = false;
      rep.witness = "hom(" + C.object_name(a) + "," + C.object_name(b) + ") of size " +
                    std::to_string(C.hom(a, b).size()) + " vs image hom of size " +
                    std::to_string(D.hom(F.obj[a], F.obj[b]).size()) +
                    " is not a bijection/iso";
      break;
    }
  rep.essentially_surjective = true;
  for (ObjId d = 0; d < D.object_count(); ++d) {
    bool hit = false;
    for (ObjId c = 0; c < C.object_count() && !hit; ++c)
      hit = objects_isomorphic(D, F.obj[c], d);
    if (!hit) {
      rep.essentially_surjective = false;
      if (rep.witness.empty())
        rep.witness = "object " + D.object_name(d) + " is not isomorphic to any image object";
      break;
    }
  }
  rep.ok = rep.fully_faithful && rep.essentially_surjective;
  return rep;
}

}  // namespace fincat
