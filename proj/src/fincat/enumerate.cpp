#include "fincat/enumerate.hpp"

#include <cmath>
#include <cstdlib>

namespace fincat {

EnumLimits EnumLimits::from_env() {
  EnumLimits l;
  if (const char* s = std::getenv("FINCAT_ENUM_LIMIT")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) l.max_candidates = v;
  }
  return l;
}

namespace {

// Backtracking state for Set-mode functor search over one object assignment.
struct SetSearch {
  const FiniteCategory& C;
  const FiniteCategory& D;
  const std::vector<ObjId>& obj;
  // image[a*n+b][i] = index in hom(Fa,Fb) of the image of element i, -1 if unset
  std::vector<std::vector<int>> image;
  std::vector<std::pair<int, int>> trail;  // (hom slot, element) assignments to undo

  SetSearch(const FiniteCategory& c, const FiniteCategory& d, const std::vector<ObjId>& o)
      : C(c), D(d), obj(o) {
    int n = C.object_count();
    image.resize(size_t(n) * n);
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        image[size_t(a) * n + b].assign(C.hom(a, b).size(), -1);
  }

  int& slot(ObjId a, ObjId b, int i) { return image[size_t(a) * C.object_count() + b][i]; }

  bool assign(ObjId a, ObjId b, int i, int value, size_t trail_mark) {
    int& s = slot(a, b, i);
    if (s == value) return true;
    if (s != -1) return false;
    s = value;
    trail.push_back({int(size_t(a) * C.object_count() + b), i});
    (void)trail_mark;
    return propagate(a, b, i);
  }

  // Enforce F(g∘f) = F(g)∘F(f) on every composable pair involving (a,b,i).
  bool propagate(ObjId a, ObjId b, int i) {
    int n = C.object_count();
    // As the f of a pair: g ranges over hom(b,c).
    for (ObjId c = 0; c < n; ++c)
      for (int g = 0; g < C.hom(b, c).size(); ++g) {
        int gi = slot(b, c, g);
        if (gi < 0) continue;
        if (!force(a, b, c, g, i, gi, slot(a, b, i))) return false;
      }
    // As the g of a pair: f ranges over hom(z,a).
    for (ObjId z = 0; z < n; ++z)
      for (int f = 0; f < C.hom(z, a).size(); ++f) {
        int fi = slot(z, a, f);
        if (fi < 0) continue;
        if (!force(z, a, b, i, f, slot(a, b, i), fi)) return false;
      }
    return true;
  }

  // Composite of (g in hom(b,c), f in hom(a,b)) must map to the composite of
  // the images. Assign it if unset, reject on clash.
  bool force(ObjId a, ObjId b, ObjId c, int g, int f, int img_g, int img_f) {
    Elt comp_src = C.compose_elts(a, b, c, Elt::of_index(g), Elt::of_index(f));
    Elt comp_dst = D.compose_elts(obj[a], obj[b], obj[c], Elt::of_index(img_g), Elt::of_index(img_f));
    int& s = slot(a, c, comp_src.idx);
    if (s == -1) {
      s = comp_dst.idx;
      trail.push_back({int(size_t(a) * C.object_count() + c), comp_src.idx});
      return propagate(a, c, comp_src.idx);
    }
    return s == comp_dst.idx;
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      auto [hom_slot, i] = trail.back();
      trail.pop_back();
      image[hom_slot][i] = -1;
    }
  }
};

bool emit_functor(const FiniteCategory& C, const FiniteCategory& D, const std::vector<ObjId>& obj,
                  const std::vector<std::vector<int>>& image, long long& count,
                  const FunctorVisitor& visit) {
  int n = C.object_count();
  std::vector<std::vector<Elt>> images(size_t(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (int i : image[size_t(a) * n + b]) images[size_t(a) * n + b].push_back(Elt::of_index(i));
  Functor f = Functor::from_basis_images(C, D, obj, images);
  f.name = "F" + std::to_string(count);
  ++count;
  return visit(f);
}

bool search_set(SetSearch& st, const std::vector<std::tuple<ObjId, ObjId, int>>& order, size_t k,
                long long& count, const FunctorVisitor& visit, bool& keep_going) {
  if (!keep_going) return false;
  const FiniteCategory& C = st.C;
  while (k < order.size()) {
    auto [a, b, i] = order[k];
    if (st.slot(a, b, i) != -1) {
      ++k;
      continue;
    }
    int target = st.D.hom(st.obj[a], st.obj[b]).size();
    for (int v = 0; v < target; ++v) {
      size_t mark = st.trail.size();
      if (st.assign(a, b, i, v, mark)) {
        if (!search_set(st, order, k + 1, count, visit, keep_going)) {
          st.undo_to(mark);
          return false;
        }
      }
      st.undo_to(mark);
      if (!keep_going) return false;
    }
    return true;  // exhausted all values for this slot
  }
  if (!emit_functor(st.C, st.D, st.obj, st.image, count, visit)) {
    keep_going = false;
    return false;
  }
  (void)C;
  return true;
}

}  // namespace

EnumOutcome enumerate_functors(const FiniteCategory& C, const FiniteCategory& D,
                               const EnumLimits& limits, const FunctorVisitor& visit) {
  EnumOutcome out;
  if (C.mode != D.mode) {
    out.refused = true;
    out.reason = "enrichment mismatch between source and target";
    return out;
  }
  int n = C.object_count();
  int m = D.object_count();
  if (m == 0) {
    if (n == 0) {
      Functor f;
      f.src = &C;
      f.dst = &D;
      visit(f);
      out.count = 1;
    }
    return out;
  }

  if (C.mode == Mode::Vec) {
    // Supported when every hom is spanned by identities: hom(a,a) = Q·id and
    // hom(a,b) = 0 for a ≠ b. Object maps then determine the functor.
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b) {
        int d = C.hom(a, b).size();
        bool fine = (a == b) ? (d == 1 && !C.identity_elt(a).vec[0].is_zero()) : (d == 0);
        if (!fine) {
          out.refused = true;
          out.reason =
              "FinVec functor enumeration requires identity-spanned homs; the functor space "
              "may be an infinite variety";
          return out;
        }
      }
    double est = std::pow(double(m), double(n));
    if (est > double(limits.max_candidates)) {
      out.refused = true;
      out.reason = "object-map space too large";
      out.estimate = est;
      return out;
    }
    std::vector<ObjId> obj(n, 0);
    bool keep = true;
    while (keep) {
      std::vector<std::vector<Elt>> images(size_t(n) * n);
      bool valid = true;
      for (ObjId a = 0; a < n && valid; ++a) {
        // id_a = λ·u with λ ≠ 0 must land on id_{Fa}: u ↦ (1/λ)·id_{Fa}.
        Rat lam = C.identity_elt(a).vec[0];
        QVec target = D.identity_elt(obj[a]).vec;
        for (auto& x : target) x = x / lam;
        images[size_t(a) * n + a].push_back(Elt::of_vec(target));
      }
      if (valid) {
        Functor f = Functor::from_basis_images(C, D, obj, images);
        f.name = "F" + std::to_string(out.count);
        ++out.count;
        if (!visit(f)) break;
      }
      int k = n - 1;
      while (k >= 0 && ++obj[k] == m) obj[k--] = 0;
      if (k < 0) keep = false;
    }
    return out;
  }

  // Set mode: estimate, then backtracking search per object assignment.
  double total_est = 0;
  {
    std::vector<ObjId> obj(n, 0);
    bool more = true;
    while (more) {
      double est = 1;
      for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b) {
          int free_elems = C.hom(a, b).size() - (a == b ? 1 : 0);
          if (free_elems > 0) est *= std::pow(double(D.hom(obj[a], obj[b]).size()), free_elems);
          if (C.hom(a, b).size() > 0 && D.hom(obj[a], obj[b]).size() == 0) est = 0;
        }
      total_est += est;
      int k = n - 1;
      while (k >= 0 && ++obj[k] == m) obj[k--] = 0;
      if (k < 0) more = false;
    }
  }
  if (total_est > double(limits.max_candidates)) {
    out.refused = true;
    out.reason = "functor search space too large";
    out.estimate = total_est;
    return out;
  }

  std::vector<ObjId> obj(n, 0);
  bool more = true;
  bool keep_going = true;
  while (more && keep_going) {
    bool viable = true;
    for (ObjId a = 0; a < n && viable; ++a)
      for (ObjId b = 0; b < n && viable; ++b)
        if (C.hom(a, b).size() > 0 && D.hom(obj[a], obj[b]).size() == 0) viable = false;
    if (viable) {
      SetSearch st(C, D, obj);
      bool seeded = true;
      size_t mark = st.trail.size();
      for (ObjId a = 0; a < n && seeded; ++a)
        seeded = st.assign(a, a, C.identity_elt(a).idx, D.identity_elt(obj[a]).idx, mark);
      if (seeded) {
        std::vector<std::tuple<ObjId, ObjId, int>> order;
        for (ObjId a = 0; a < n; ++a)
          for (ObjId b = 0; b < n; ++b)
            for (int i = 0; i < C.hom(a, b).size(); ++i) order.push_back({a, b, i});
        search_set(st, order, 0, out.count, visit, keep_going);
      }
    }
    int k = n - 1;
    while (k >= 0 && ++obj[k] == m) obj[k--] = 0;
    if (k < 0) more = false;
  }
  return out;
}

std::vector<Functor> all_functors(const FiniteCategory& src, const FiniteCategory& dst,
                                  const EnumLimits& limits) {
  std::vector<Functor> out;
  auto res = enumerate_functors(src, dst, limits, [&](const Functor& f) {
    out.push_back(f);
    return true;
  });
  if (res.refused) throw Error("enumerate_functors refused: " + res.reason);
  return out;
}

}  // namespace fincat
