#include "fincat/ind.hpp"

#include "fincat/equivalence.hpp"

namespace fincat {

Morphism IndObject::connect(long long a, long long b) const {
  Morphism acc = cat->identity(level(a));
  for (long long n = a; n < b; ++n) acc = cat->compose(transition(n), acc);
  return acc;
}

void IndObject::normalize() {
  validate();
  int q0 = preperiod, p0 = period;
  std::vector<std::pair<ObjId, Morphism>> prefix;
  for (int n = 0; n < q0 + 2 * p0; ++n) prefix.push_back({level(n), transition(n)});
  auto [q, p] = minimize_ep(prefix, q0, p0);
  std::vector<ObjId> lv;
  std::vector<Morphism> tr;
  for (int n = 0; n < q + p; ++n) {
    lv.push_back(prefix[n].first);
    tr.push_back(prefix[n].second);
  }
  levels = std::move(lv);
  transitions = std::move(tr);
  preperiod = q;
  period = p;
}

void IndObject::validate() const {
  if (!cat) throw Error("ind-object without a category");
  if (preperiod < 0 || period < 1 || int(levels.size()) != preperiod + period ||
      levels.size() != transitions.size())
    throw Error("ind-object: malformed ep presentation");
  for (int i = 0; i < int(levels.size()); ++i) {
    int next = (i + 1 < preperiod + period) ? i + 1 : preperiod;
    if (transitions[i].src != levels[i] || transitions[i].dst != levels[next])
      throw Error("ind-object: transition " + std::to_string(i) + " is ill-typed");
  }
}

std::string IndObject::str() const {
  std::string s = "[";
  for (int i = 0; i < int(levels.size()); ++i) {
    if (i) s += " -> ";
    if (i == preperiod && period >= 1) s += "(";
    s += cat->object_name(levels[i]);
  }
  s += " ...)";
  return s;
}

IndObject embed_ind(const FiniteCategory& cat, ObjId x) {
  IndObject out;
  out.cat = &cat;
  out.levels = {x};
  out.transitions = {cat.identity(x)};
  out.preperiod = 0;
  out.period = 1;
  return out;
}

IndObject extend_functor(const Functor& f, const IndObject& x) {
  IndObject out;
  out.cat = x.cat;
  out.preperiod = x.preperiod;
  out.period = x.period;
  for (int i = 0; i < int(x.levels.size()); ++i) {
    out.levels.push_back(f.on_obj(x.levels[i]));
    out.transitions.push_back(f.on_mor(x.transitions[i]));
  }
  out.normalize();
  return out;
}

IndHom::IndHom(IndObject x, IndObject y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.cat != y_.cat) throw Error("ind_hom: objects over different categories");
  const FiniteCategory& C = *x_.cat;
  int qx = x_.preperiod, px = x_.period;
  int qy = y_.preperiod, py = y_.period;
  for (int i = 0; i < qx + px; ++i) {
    EpTower row;
    row.preperiod = qy;
    row.period = py;
    for (int j = 0; j < qy + py; ++j) {
      row.carriers.push_back(C.hom(x_.levels[i], y_.levels[j]));
      row.maps.push_back(C.postcompose(y_.transitions[j], x_.levels[i]));
    }
    rows_.push_back(std::make_unique<SeqColimit>(std::move(row)));
  }
  EpCotower tower;
  tower.preperiod = qx;
  tower.period = px;
  for (int i = 0; i < qx + px; ++i) {
    tower.carriers.push_back(rows_[i]->carrier());
    int next = x_.stage(i + 1);
    // E_{i+1} -> E_i: include at the base column, precompose the transition,
    // push back into the row-i colimit.
    CarrierMap incl = rows_[next]->eventual().inclusion;
    CarrierMap pre = C.precompose(x_.transitions[i], y_.levels[qy]);
    CarrierMap leg = rows_[i]->leg(qy);
    tower.maps.push_back(leg.compose_after(pre.compose_after(incl)));
  }
  lim_ = std::make_unique<SeqLimit>(std::move(tower));
}

Morphism IndHom::germ(const Elt& e, long long i) const {
  const Elt in_row = lim_->leg(i).apply(e);
  const Elt ambient = row(i).eventual().inclusion.apply(in_row);
  return Morphism{x_.level(i), y_.levels[y_.preperiod], ambient};
}

Elt IndHom::from_levelwise(const std::function<Morphism(long long)>& f,
                           const std::function<long long(long long)>& s) const {
  int qx = x_.preperiod, px = x_.period;
  std::vector<Elt> values;
  for (int i = 0; i < qx + px; ++i) {
    Morphism m = f(i);
    if (m.src != x_.levels[i] || m.dst != y_.level(s(i)))
      throw Error("from_levelwise: germ " + std::to_string(i) + " ill-typed");
    values.push_back(rows_[i]->classify(s(i), m.v));
  }
  auto elt = lim_->element_from_base(values[qx]);
  if (!elt) throw Error("from_levelwise: family does not define a limit element");
  for (int i = 0; i < qx + px; ++i)
    if (!(lim_->leg(i).apply(*elt) == values[i]))
      throw Error("from_levelwise: family is not compatible at row " + std::to_string(i));
  return *elt;
}

Elt IndHom::from_levelwise(const std::function<Morphism(long long)>& f) const {
  return from_levelwise(f, [](long long i) { return i; });
}

Elt ind_identity(const IndHom& endo_hom) {
  const IndObject& x = endo_hom.source();
  return endo_hom.from_levelwise([&](long long i) { return x.cat->identity(x.level(i)); });
}

Elt ind_compose(const IndHom& yz, const Elt& g, const IndHom& xy, const Elt& f,
                const IndHom& xz) {
  const FiniteCategory& C = *xy.source().cat;
  long long qy = xy.target().preperiod;
  Morphism g_at_base = yz.germ(g, qy);  // Y_qY -> Z_qZ
  return xz.from_levelwise(
      [&](long long i) { return C.compose(g_at_base, xy.germ(f, i)); },
      [&](long long) { return yz.target().preperiod; });
}

IndSubcat::IndSubcat(const FiniteCategory& base, std::vector<IndObject> objects, std::string name)
    : base_(&base), objects_(std::move(objects)) {
  for (auto& x : objects_) {
    x.validate();
    if (x.cat != base_) throw Error("IndSubcat: object over a different base");
  }
  cat_.mode = base.mode;
  cat_.name = std::move(name);
  int n = int(objects_.size());
  for (int a = 0; a < n; ++a) cat_.add_object("I" + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto hom = std::make_unique<IndHom>(objects_[a], objects_[b]);
      Carrier carrier = hom->carrier();
      for (auto& l : carrier.labels)
        l = "h" + std::to_string(a) + "_" + std::to_string(b) + ":" + l;
      cat_.set_hom(a, b, carrier);
      homs_[{a, b}] = std::move(hom);
    }
  for (int a = 0; a < n; ++a) cat_.set_identity(a, ind_identity(*homs_[{a, a}]));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const IndHom& ab = *homs_[{a, b}];
        const IndHom& bc = *homs_[{b, c}];
        const IndHom& ac = *homs_[{a, c}];
        int ng = bc.carrier().size(), nf = ab.carrier().size();
        for (int gi = 0; gi < ng; ++gi)
          for (int fi = 0; fi < nf; ++fi) {
            Elt g = base.mode == Mode::Set ? Elt::of_index(gi) : Elt::basis(gi, ng);
            Elt f = base.mode == Mode::Set ? Elt::of_index(fi) : Elt::basis(fi, nf);
            cat_.set_compose(a, b, c, gi, fi, ind_compose(bc, g, ab, f, ac));
          }
      }
  cat_.seal();
}

std::optional<ObjId> IndSubcat::find_object(const IndObject& x) const {
  for (int a = 0; a < int(objects_.size()); ++a)
    if (objects_[a] == x) return a;
  return std::nullopt;
}

const IndHom& IndSubcat::hom_structure(ObjId a, ObjId b) const {
  return *homs_.at({a, b});
}

Functor IndSubcat::extend_endofunctor(const Functor& f, const std::string& name) const {
  Functor out;
  out.src = &cat_;
  out.dst = &cat_;
  out.name = name;
  int n = int(objects_.size());
  for (int a = 0; a < n; ++a) {
    IndObject fx = extend_functor(f, objects_[a]);
    auto found = find_object(fx);
    if (!found)
      throw Error("extend_endofunctor: subcategory not closed under " + f.name + " at " +
                  objects_[a].str());
    out.obj.push_back(*found);
  }
  out.hom.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const IndHom& ab = *homs_.at({a, b});
      const IndHom& target = *homs_.at({out.obj[a], out.obj[b]});
      std::vector<Elt> images;
      for (int i = 0; i < ab.carrier().size(); ++i) {
        Elt e = base_->mode == Mode::Set ? Elt::of_index(i) : Elt::basis(i, ab.carrier().size());
        // Image of a class: apply f to each germ of the family.
        images.push_back(target.from_levelwise(
            [&](long long row) { return f.on_mor(ab.germ(e, row)); },
            [&](long long) { return ab.target().preperiod; }));
      }
      out.hom[size_t(a) * n + b] =
          CarrierMap::from_images(cat_.hom(a, b), cat_.hom(out.obj[a], out.obj[b]), images);
    }
  return out;
}

Morphism IndSubcat::morphism_from_elt(ObjId a, ObjId b, const Elt& e) const {
  return Morphism{a, b, e};
}

namespace {

Elt basis_elt(const Carrier& c, int i) {
  return c.mode == Mode::Set ? Elt::of_index(i) : Elt::basis(i, c.size());
}

}  // namespace

CarrierMap ind_postcompose_map(const IndHom& xy, const IndHom& yz, const Elt& g,
                               const IndHom& xz) {
  std::vector<Elt> images;
  for (int i = 0; i < xy.carrier().size(); ++i)
    images.push_back(ind_compose(yz, g, xy, basis_elt(xy.carrier(), i), xz));
  return CarrierMap::from_images(xy.carrier(), xz.carrier(), images);
}

CarrierMap ind_precompose_map(const IndHom& yz, const IndHom& xy, const Elt& f,
                              const IndHom& xz) {
  std::vector<Elt> images;
  for (int i = 0; i < yz.carrier().size(); ++i)
    images.push_back(ind_compose(yz, basis_elt(yz.carrier(), i), xy, f, xz));
  return CarrierMap::from_images(yz.carrier(), xz.carrier(), images);
}

bool ind_isomorphic(const IndObject& x, const IndObject& y) {
  if (x == y) return true;
  IndSubcat pair(*x.cat, {x, y}, "iso_probe");
  return objects_isomorphic(pair.cat(), 0, 1);
}

}  // namespace fincat
