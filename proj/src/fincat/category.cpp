#include "fincat/category.hpp"

#include <algorithm>

namespace fincat {

std::string Report::summary() const {
  if (ok) return "ok";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.code + ": " + v.message;
  }
  return s;
}

ObjId FiniteCategory::add_object(const std::string& obj_name) {
  objects_.push_back(obj_name);
  int n = int(objects_.size());
  std::vector<Carrier> homs(size_t(n) * n);
  std::vector<std::vector<Elt>> comp(size_t(n) * n * n);
  std::vector<std::vector<bool>> comp_set(size_t(n) * n * n);
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b) {
      homs[size_t(a) * n + b] = std::move(homs_[size_t(a) * (n - 1) + b]);
      for (int c = 0; c < n - 1; ++c) {
        size_t old_i = (size_t(a) * (n - 1) + b) * (n - 1) + c;
        comp[(size_t(a) * n + b) * n + c] = std::move(comp_[old_i]);
        comp_set[(size_t(a) * n + b) * n + c] = std::move(comp_set_[old_i]);
      }
    }
  homs_ = std::move(homs);
  comp_ = std::move(comp);
  comp_set_ = std::move(comp_set);
  for (auto& h : homs_)
    if (h.labels.empty()) h.mode = mode;
  identities_.resize(objects_.size());
  return int(objects_.size()) - 1;
}

void FiniteCategory::set_hom(ObjId a, ObjId b, Carrier carrier) {
  if (carrier.mode != mode) throw Error("set_hom: enrichment mismatch");
  homs_[pair_index(a, b)] = std::move(carrier);
  size_t n2 = homs_[pair_index(a, b)].labels.size();
  // Size the composition tables that involve this hom.
  for (ObjId c = 0; c < object_count(); ++c) {
    auto& t1 = comp_[triple_index(a, b, c)];
    t1.assign(size_t(hom(b, c).size()) * n2, Elt{});
    comp_set_[triple_index(a, b, c)].assign(t1.size(), false);
    auto& t2 = comp_[triple_index(c, a, b)];
    t2.assign(size_t(n2) * hom(c, a).size(), Elt{});
    comp_set_[triple_index(c, a, b)].assign(t2.size(), false);
  }
}

void FiniteCategory::set_identity(ObjId a, Elt e) { identities_[a] = std::move(e); }

void FiniteCategory::set_compose(ObjId a, ObjId b, ObjId c, int g_index, int f_index, Elt result) {
  auto& table = comp_[triple_index(a, b, c)];
  size_t slot = size_t(g_index) * hom(a, b).size() + f_index;
  table.at(slot) = std::move(result);
  comp_set_[triple_index(a, b, c)].at(slot) = true;
}

bool FiniteCategory::has_compose(ObjId a, ObjId b, ObjId c, int g_index, int f_index) const {
  const auto& flags = comp_set_[triple_index(a, b, c)];
  size_t slot = size_t(g_index) * hom(a, b).size() + f_index;
  return slot < flags.size() && flags[slot];
}

void FiniteCategory::seal() {
  label_index_.clear();
  for (ObjId a = 0; a < object_count(); ++a)
    for (ObjId b = 0; b < object_count(); ++b) {
      const Carrier& h = hom(a, b);
      for (int i = 0; i < h.size(); ++i) label_index_[h.labels[i]] = {a, b, i};
    }
}

std::optional<ObjId> FiniteCategory::object_by_name(const std::string& n) const {
  for (ObjId a = 0; a < object_count(); ++a)
    if (objects_[a] == n) return a;
  return std::nullopt;
}

Elt FiniteCategory::compose_elts(ObjId a, ObjId b, ObjId c, const Elt& g, const Elt& f) const {
  const auto& table = comp_[triple_index(a, b, c)];
  size_t nf = hom(a, b).labels.size();
  if (mode == Mode::Set) {
    size_t slot = size_t(g.idx) * nf + f.idx;
    if (!comp_set_[triple_index(a, b, c)].at(slot))
      throw Error("composition undefined for pair in " + name);
    return table[slot];
  }
  QVec acc(hom(a, c).size());
  for (int gi = 0; gi < int(g.vec.size()); ++gi) {
    if (g.vec[gi].is_zero()) continue;
    for (int fi = 0; fi < int(f.vec.size()); ++fi) {
      if (f.vec[fi].is_zero()) continue;
      size_t slot = size_t(gi) * nf + fi;
      if (!comp_set_[triple_index(a, b, c)].at(slot))
        throw Error("composition undefined for basis pair in " + name);
      const Elt& entry = table[slot];
      Rat coeff = g.vec[gi] * f.vec[fi];
      for (int k = 0; k < int(acc.size()); ++k)
        if (!entry.vec[k].is_zero()) acc[k] += coeff * entry.vec[k];
    }
  }
  return Elt::of_vec(std::move(acc));
}

Morphism FiniteCategory::compose(const Morphism& g, const Morphism& f) const {
  if (f.dst != g.src) throw Error("compose: morphisms not composable");
  return Morphism{f.src, g.dst, compose_elts(f.src, f.dst, g.dst, g.v, f.v)};
}

std::vector<Morphism> FiniteCategory::basis_morphisms(ObjId a, ObjId b) const {
  std::vector<Morphism> out;
  const Carrier& h = hom(a, b);
  for (int i = 0; i < h.size(); ++i) out.push_back(basis_morphism(a, b, i));
  return out;
}

Morphism FiniteCategory::basis_morphism(ObjId a, ObjId b, int index) const {
  if (mode == Mode::Set) return Morphism{a, b, Elt::of_index(index)};
  return Morphism{a, b, Elt::basis(index, hom(a, b).size())};
}

std::vector<Morphism> FiniteCategory::basis_morphisms() const {
  std::vector<Morphism> out;
  for (ObjId a = 0; a < object_count(); ++a)
    for (ObjId b = 0; b < object_count(); ++b) {
      auto ms = basis_morphisms(a, b);
      out.insert(out.end(), ms.begin(), ms.end());
    }
  return out;
}

long long FiniteCategory::total_morphisms() const {
  long long t = 0;
  for (const auto& h : homs_) t += h.size();
  return t;
}

std::string FiniteCategory::morphism_str(const Morphism& m) const {
  if (m.src < 0) return "<none>";
  return elt_str(hom(m.src, m.dst), m.v) + " : " + objects_[m.src] + " -> " + objects_[m.dst];
}

std::optional<Morphism> FiniteCategory::morphism_by_label(const std::string& label) const {
  auto loc = locate_label(label);
  if (!loc) return std::nullopt;
  auto [a, b, i] = *loc;
  return basis_morphism(a, b, i);
}

std::optional<std::tuple<ObjId, ObjId, int>> FiniteCategory::locate_label(
    const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

CarrierMap FiniteCategory::postcompose(const Morphism& t, ObjId x) const {
  const Carrier& src = hom(x, t.src);
  const Carrier& dst = hom(x, t.dst);
  std::vector<Elt> images;
  for (int i = 0; i < src.size(); ++i)
    images.push_back(compose(t, basis_morphism(x, t.src, i)).v);
  return CarrierMap::from_images(src, dst, images);
}

CarrierMap FiniteCategory::precompose(const Morphism& t, ObjId z) const {
  const Carrier& src = hom(t.dst, z);
  const Carrier& dst = hom(t.src, z);
  std::vector<Elt> images;
  for (int i = 0; i < src.size(); ++i)
    images.push_back(compose(basis_morphism(t.dst, z, i), t).v);
  return CarrierMap::from_images(src, dst, images);
}

std::optional<Morphism> FiniteCategory::morphism_inverse(const Morphism& m) const {
  const Carrier& back = hom(m.dst, m.src);
  if (mode == Mode::Set) {
    for (int i = 0; i < back.size(); ++i) {
      Morphism cand = basis_morphism(m.dst, m.src, i);
      if (compose(cand, m) == identity(m.src) && compose(m, cand) == identity(m.dst))
        return cand;
    }
    return std::nullopt;
  }
  // x ∘ m = id_src and m ∘ x = id_dst are jointly linear in x: stack them.
  int n = back.size();
  const Carrier& h_ss = hom(m.src, m.src);
  const Carrier& h_dd = hom(m.dst, m.dst);
  QMat sys(h_ss.size() + h_dd.size(), n);
  for (int k = 0; k < n; ++k) {
    Elt xk = Elt::basis(k, n);
    Elt left = compose_elts(m.src, m.dst, m.src, xk, m.v);
    Elt right = compose_elts(m.dst, m.src, m.dst, m.v, xk);
    for (int r = 0; r < h_ss.size(); ++r) sys.at(r, k) = left.vec[r];
    for (int r = 0; r < h_dd.size(); ++r) sys.at(h_ss.size() + r, k) = right.vec[r];
  }
  QVec rhs(h_ss.size() + h_dd.size());
  for (int r = 0; r < h_ss.size(); ++r) rhs[r] = identity_elt(m.src).vec[r];
  for (int r = 0; r < h_dd.size(); ++r) rhs[h_ss.size() + r] = identity_elt(m.dst).vec[r];
  auto sol = sys.solve(rhs);
  if (!sol) return std::nullopt;
  return Morphism{m.dst, m.src, Elt::of_vec(std::move(*sol))};
}

Report FiniteCategory::validate() const {
  Report rep;
  // Globally unique labels across all hom carriers.
  std::map<std::string, int> seen;
  for (ObjId a = 0; a < object_count(); ++a)
    for (ObjId b = 0; b < object_count(); ++b)
      for (const auto& l : hom(a, b).labels)
        if (++seen[l] == 2) rep.fail("labels", "duplicate morphism label '" + l + "'");
  // Identities present and well typed.
  for (ObjId a = 0; a < object_count(); ++a) {
    const Elt& e = identities_[a];
    if (mode == Mode::Set) {
      if (e.idx < 0 || e.idx >= hom(a, a).size())
        rep.fail("identity", "object " + objects_[a] + " has no identity element");
    } else if (int(e.vec.size()) != hom(a, a).size()) {
      rep.fail("identity", "object " + objects_[a] + " has an ill-typed identity vector");
    }
  }
  if (!rep.ok) return rep;
  // Table completeness.
  for (ObjId a = 0; a < object_count(); ++a)
    for (ObjId b = 0; b < object_count(); ++b)
      for (ObjId c = 0; c < object_count(); ++c)
        for (int g = 0; g < hom(b, c).size(); ++g)
          for (int f = 0; f < hom(a, b).size(); ++f)
            if (!has_compose(a, b, c, g, f))
              rep.fail("table", "composition " + label_of(b, c, g) + " ∘ " + label_of(a, b, f) +
                                    " is undefined");
  if (!rep.ok) return rep;
  // Entry typing (Vec result vectors must match hom(a,c)).
  if (mode == Mode::Vec) {
    for (ObjId a = 0; a < object_count(); ++a)
      for (ObjId b = 0; b < object_count(); ++b)
        for (ObjId c = 0; c < object_count(); ++c)
          for (int g = 0; g < hom(b, c).size(); ++g)
            for (int f = 0; f < hom(a, b).size(); ++f) {
              const Elt& r = comp_[triple_index(a, b, c)][size_t(g) * hom(a, b).size() + f];
              if (int(r.vec.size()) != hom(a, c).size())
                rep.fail("table", "ill-typed composite of " + label_of(b, c, g) + " ∘ " +
                                      label_of(a, b, f));
            }
    if (!rep.ok) return rep;
  }
  // Identity laws on basis morphisms.
  for (ObjId a = 0; a < object_count(); ++a)
    for (ObjId b = 0; b < object_count(); ++b)
      for (const auto& f : basis_morphisms(a, b)) {
        if (!(compose(f, identity(a)) == f))
          rep.fail("unit", morphism_str(f) + " ∘ id ≠ itself");
        if (!(compose(identity(b), f) == f))
          rep.fail("unit", "id ∘ " + morphism_str(f) + " ≠ itself");
      }
  // Associativity on all composable basis triples.
  for (ObjId a = 0; a < object_count(); ++a)
    for (ObjId b = 0; b < object_count(); ++b)
      for (ObjId c = 0; c < object_count(); ++c)
        for (ObjId d = 0; d < object_count(); ++d)
          for (const auto& f : basis_morphisms(a, b))
            for (const auto& g : basis_morphisms(b, c))
              for (const auto& h : basis_morphisms(c, d)) {
                Morphism left = compose(h, compose(g, f));
                Morphism right = compose(compose(h, g), f);
                if (!(left == right))
                  rep.fail("assoc", "(" + label_of(c, d, 0) + "...) associativity fails on (" +
                                        morphism_str(h) + ", " + morphism_str(g) + ", " +
                                        morphism_str(f) + ")");
              }
  return rep;
}

FiniteCategory FiniteCategory::opposite() const {
  FiniteCategory op;
  op.mode = mode;
  op.name = name + "_op";
  for (const auto& o : objects_) op.add_object(o);
  for (ObjId a = 0; a < object_count(); ++a)
    for (ObjId b = 0; b < object_count(); ++b) op.set_hom(a, b, hom(b, a));
  for (ObjId a = 0; a < object_count(); ++a) op.set_identity(a, identities_[a]);
  // g ∘_op f  (g : b->c, f : a->b in op) is f ∘ g in the original category.
  for (ObjId a = 0; a < op.object_count(); ++a)
    for (ObjId b = 0; b < op.object_count(); ++b)
      for (ObjId c = 0; c < op.object_count(); ++c)
        for (int g = 0; g < op.hom(b, c).size(); ++g)
          for (int f = 0; f < op.hom(a, b).size(); ++f) {
            // In the original: g in hom(c,b), f in hom(b,a); f ∘ g in hom(c,a).
            Elt gv = mode == Mode::Set ? Elt::of_index(g) : Elt::basis(g, hom(c, b).size());
            Elt fv = mode == Mode::Set ? Elt::of_index(f) : Elt::basis(f, hom(b, a).size());
            op.set_compose(a, b, c, g, f, compose_elts(c, b, a, fv, gv));
          }
  op.seal();
  return op;
}

bool FiniteCategory::same_data(const FiniteCategory& o) const {
  return mode == o.mode && objects_ == o.objects_ && homs_ == o.homs_ &&
         identities_ == o.identities_ && comp_ == o.comp_;
}

FiniteCategory make_poset_category(const std::string& name, int n_objects,
                                   const std::vector<std::pair<int, int>>& le_pairs) {
  // Reflexive-transitive closure of the given relation.
  std::vector<std::vector<bool>> le(n_objects, std::vector<bool>(n_objects, false));
  for (int i = 0; i < n_objects; ++i) le[i][i] = true;
  for (auto [a, b] : le_pairs) le[a][b] = true;
  for (int k = 0; k < n_objects; ++k)
    for (int i = 0; i < n_objects; ++i)
      for (int j = 0; j < n_objects; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  FiniteCategory cat;
  cat.mode = Mode::Set;
  cat.name = name;
  for (int i = 0; i < n_objects; ++i) cat.add_object("x" + std::to_string(i));
  for (int a = 0; a < n_objects; ++a)
    for (int b = 0; b < n_objects; ++b) {
      if (le[a][b])
        cat.set_hom(a, b, Carrier::finite_set({"le_" + std::to_string(a) + "_" + std::to_string(b)}));
      else
        cat.set_hom(a, b, Carrier::finite_set({}));
    }
  for (int a = 0; a < n_objects; ++a) cat.set_identity(a, Elt::of_index(0));
  for (int a = 0; a < n_objects; ++a)
    for (int b = 0; b < n_objects; ++b)
      for (int c = 0; c < n_objects; ++c)
        if (le[a][b] && le[b][c]) cat.set_compose(a, b, c, 0, 0, Elt::of_index(0));
  cat.seal();
  return cat;
}

FiniteCategory make_chain_poset(const std::string& name, int length) {
  std::vector<std::pair<int, int>> le;
  for (int i = 0; i + 1 < length; ++i) le.push_back({i, i + 1});
  return make_poset_category(name, length, le);
}

FiniteCategory make_monoid_category(const std::string& name,
                                    const std::vector<std::string>& elements,
                                    const std::vector<std::vector<int>>& mult) {
  FiniteCategory cat;
  cat.mode = Mode::Set;
  cat.name = name;
  ObjId pt = cat.add_object("pt");
  cat.set_hom(pt, pt, Carrier::finite_set(elements));
  cat.set_identity(pt, Elt::of_index(0));
  for (int g = 0; g < int(elements.size()); ++g)
    for (int f = 0; f < int(elements.size()); ++f)
      cat.set_compose(pt, pt, pt, g, f, Elt::of_index(mult[g][f]));
  cat.seal();
  return cat;
}

FiniteCategory make_algebra_category(const std::string& name,
                                     const std::vector<std::string>& basis,
                                     const std::vector<std::vector<QVec>>& mult,
                                     const QVec& unit) {
  FiniteCategory cat;
  cat.mode = Mode::Vec;
  cat.name = name;
  ObjId pt = cat.add_object("pt");
  cat.set_hom(pt, pt, Carrier::vector_space(basis));
  cat.set_identity(pt, Elt::of_vec(unit));
  for (int g = 0; g < int(basis.size()); ++g)
    for (int f = 0; f < int(basis.size()); ++f)
      cat.set_compose(pt, pt, pt, g, f, Elt::of_vec(mult[g][f]));
  cat.seal();
  return cat;
}

FiniteCategory make_linear_poset_category(const std::string& name, int n_objects,
                                          const std::vector<std::pair<int, int>>& le_pairs) {
  std::vector<std::vector<bool>> le(n_objects, std::vector<bool>(n_objects, false));
  for (int i = 0; i < n_objects; ++i) le[i][i] = true;
  for (auto [a, b] : le_pairs) le[a][b] = true;
  for (int k = 0; k < n_objects; ++k)
    for (int i = 0; i < n_objects; ++i)
      for (int j = 0; j < n_objects; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  FiniteCategory cat;
  cat.mode = Mode::Vec;
  cat.name = name;
  for (int i = 0; i < n_objects; ++i) cat.add_object("x" + std::to_string(i));
  for (int a = 0; a < n_objects; ++a)
    for (int b = 0; b < n_objects; ++b) {
      if (le[a][b])
        cat.set_hom(a, b, Carrier::vector_space({"u_" + std::to_string(a) + "_" + std::to_string(b)}));
      else
        cat.set_hom(a, b, Carrier::vector_space({}));
    }
  for (int a = 0; a < n_objects; ++a) cat.set_identity(a, Elt::basis(0, 1));
  for (int a = 0; a < n_objects; ++a)
    for (int b = 0; b < n_objects; ++b)
      for (int c = 0; c < n_objects; ++c)
        if (le[a][b] && le[b][c]) cat.set_compose(a, b, c, 0, 0, Elt::basis(0, 1));
  cat.seal();
  return cat;
}

}  // namespace fincat
