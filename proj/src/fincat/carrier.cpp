#include "fincat/carrier.hpp"

#include <algorithm>
#include <set>

namespace fincat {

size_t Elt::hash() const {
  size_t h = std::hash<int>()(idx);
  for (const auto& x : vec) h = h * 1000003u ^ x.hash();
  return h;
}

std::string elt_str(const Carrier& c, const Elt& e) {
  if (c.mode == Mode::Set) {
    if (e.idx < 0 || e.idx >= c.size()) return "<invalid>";
    return c.labels[e.idx];
  }
  std::string out;
  bool first = true;
  for (int i = 0; i < int(e.vec.size()); ++i) {
    if (e.vec[i].is_zero()) continue;
    if (!first) out += " + ";
    if (!e.vec[i].is_one()) out += e.vec[i].str() + "*";
    out += i < c.size() ? c.labels[i] : "?";
    first = false;
  }
  return first ? "0" : out;
}

CarrierMap CarrierMap::set_map(std::vector<int> images, int dst_size) {
  CarrierMap m;
  m.mode_ = Mode::Set;
  m.img_ = std::move(images);
  m.dst_size_ = dst_size;
  for (int i : m.img_)
    if (i < 0 || i >= dst_size) throw Error("set map image out of range");
  return m;
}

CarrierMap CarrierMap::vec_map(QMat mat) {
  CarrierMap m;
  m.mode_ = Mode::Vec;
  m.mat_ = std::move(mat);
  return m;
}

CarrierMap CarrierMap::identity(const Carrier& c) {
  if (c.mode == Mode::Set) {
    std::vector<int> img(c.size());
    for (int i = 0; i < c.size(); ++i) img[i] = i;
    return set_map(std::move(img), c.size());
  }
  return vec_map(QMat::identity(c.size()));
}

CarrierMap CarrierMap::from_images(const Carrier& src, const Carrier& dst,
                                   const std::vector<Elt>& images) {
  if (int(images.size()) != src.size()) throw Error("from_images: arity mismatch");
  if (src.mode != dst.mode) throw Error("from_images: mode mismatch");
  if (src.mode == Mode::Set) {
    std::vector<int> img;
    img.reserve(images.size());
    for (const auto& e : images) img.push_back(e.idx);
    return set_map(std::move(img), dst.size());
  }
  std::vector<QVec> cols;
  cols.reserve(images.size());
  for (const auto& e : images) cols.push_back(e.vec);
  return vec_map(QMat::from_columns(dst.size(), cols));
}

int CarrierMap::src_size() const {
  return mode_ == Mode::Set ? int(img_.size()) : mat_.cols();
}

int CarrierMap::dst_size() const { return mode_ == Mode::Set ? dst_size_ : mat_.rows(); }

Elt CarrierMap::apply(const Elt& e) const {
  if (mode_ == Mode::Set) {
    if (e.idx < 0 || e.idx >= int(img_.size())) throw Error("apply: element out of range");
    return Elt::of_index(img_[e.idx]);
  }
  return Elt::of_vec(mat_.apply(e.vec));
}

Elt CarrierMap::apply_basis(int i) const {
  if (mode_ == Mode::Set) return Elt::of_index(img_.at(i));
  return Elt::of_vec(mat_.column(i));
}

CarrierMap CarrierMap::compose_after(const CarrierMap& inner) const {
  if (mode_ != inner.mode_) throw Error("compose: mode mismatch");
  if (inner.dst_size() != src_size()) throw Error("compose: size mismatch");
  if (mode_ == Mode::Set) {
    std::vector<int> img(inner.img_.size());
    for (size_t i = 0; i < inner.img_.size(); ++i) img[i] = img_[inner.img_[i]];
    return set_map(std::move(img), dst_size_);
  }
  return vec_map(mat_ * inner.mat_);
}

bool CarrierMap::is_iso() const {
  if (mode_ == Mode::Set) {
    if (int(img_.size()) != dst_size_) return false;
    std::vector<bool> hit(dst_size_, false);
    for (int i : img_) {
      if (hit[i]) return false;
      hit[i] = true;
    }
    return true;
  }
  return mat_.is_invertible();
}

std::optional<CarrierMap> CarrierMap::inverse() const {
  if (!is_iso()) return std::nullopt;
  if (mode_ == Mode::Set) {
    std::vector<int> inv(dst_size_);
    for (int i = 0; i < int(img_.size()); ++i) inv[img_[i]] = i;
    return set_map(std::move(inv), int(img_.size()));
  }
  auto m = mat_.inverse();
  if (!m) return std::nullopt;
  return vec_map(std::move(*m));
}

std::optional<Elt> CarrierMap::preimage(const Elt& e) const {
  if (mode_ == Mode::Set) {
    for (int i = 0; i < int(img_.size()); ++i)
      if (img_[i] == e.idx) return Elt::of_index(i);
    return std::nullopt;
  }
  auto x = mat_.solve(e.vec);
  if (!x) return std::nullopt;
  return Elt::of_vec(std::move(*x));
}

CarrierMap CarrierMap::pow(int k) const {
  if (src_size() != dst_size()) throw Error("pow of non-endo carrier map");
  CarrierMap acc =
      mode_ == Mode::Set
          ? identity(Carrier::finite_set(std::vector<std::string>(img_.size())))
          : vec_map(QMat::identity(mat_.rows()));
  for (int i = 0; i < k; ++i) acc = compose_after(acc);
  return acc;
}

size_t CarrierMap::hash() const {
  size_t h = std::hash<int>()(int(mode_)) * 7 + std::hash<int>()(dst_size_);
  for (int i : img_) h = h * 31 + size_t(i);
  return h ^ mat_.hash();
}

EventualImage eventual_image(const Carrier& ambient, const CarrierMap& g) {
  if (g.src_size() != ambient.size() || g.dst_size() != ambient.size())
    throw Error("eventual_image: not an endo map of the carrier");
  EventualImage out;
  int n = ambient.size();
  if (ambient.mode == Mode::Set) {
    // Find the exact stabilization index, then work with g^N throughout.
    std::set<int> im;
    {
      CarrierMap gn = g.pow(n);
      im = std::set<int>(gn.images().begin(), gn.images().end());
    }
    int stab = 0;
    CarrierMap gk = CarrierMap::identity(ambient);
    for (; stab < n; ++stab) {
      std::set<int> imk(gk.images().begin(), gk.images().end());
      if (imk == im) break;
      gk = g.compose_after(gk);
    }
    out.stabilization = stab;
    std::vector<int> elems(im.begin(), im.end());
    std::vector<std::string> labels;
    for (int e : elems) labels.push_back(ambient.labels[e]);
    out.carrier = Carrier::finite_set(labels);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < int(elems.size()); ++i) pos[elems[i]] = i;
    out.inclusion = CarrierMap::set_map(elems, n);
    std::vector<int> aut(elems.size());
    for (int i = 0; i < int(elems.size()); ++i) aut[i] = pos[g.images()[elems[i]]];
    out.automorphism = CarrierMap::set_map(aut, int(elems.size()));
    auto ainv = out.automorphism.inverse();
    if (!ainv) throw Error("eventual_image: induced map not invertible");
    // Canonical collapse h^{-N} ∘ (g^N corestricted to E).
    std::vector<int> proj(n);
    for (int i = 0; i < n; ++i) proj[i] = pos[gk.images()[i]];
    CarrierMap raw = CarrierMap::set_map(proj, int(elems.size()));
    out.projection = ainv->pow(stab).compose_after(raw);
  } else {
    int stab = 0;
    CarrierMap gk = CarrierMap::identity(ambient);
    {
      int target = g.pow(n).matrix().image_basis().cols();
      for (; stab < n; ++stab) {
        if (gk.matrix().rank() == target) break;
        gk = g.compose_after(gk);
      }
    }
    out.stabilization = stab;
    QMat basis = gk.matrix().image_basis();  // n x e, columns of g^N
    out.carrier = Carrier::vector_space([&] {
      std::vector<std::string> labels;
      for (int i = 0; i < basis.cols(); ++i) labels.push_back("e" + std::to_string(i));
      return labels;
    }());
    out.inclusion = CarrierMap::vec_map(basis);
    auto aut = basis.solve_matrix(g.matrix() * basis);
    if (!aut) throw Error("eventual_image: automorphism solve failed");
    out.automorphism = CarrierMap::vec_map(std::move(*aut));
    auto ainv = out.automorphism.inverse();
    if (!ainv) throw Error("eventual_image: induced map not invertible");
    auto proj = basis.solve_matrix(gk.matrix());
    if (!proj) throw Error("eventual_image: projection solve failed");
    CarrierMap raw = CarrierMap::vec_map(std::move(*proj));
    out.projection = ainv->pow(stab).compose_after(raw);
  }
  return out;
}

}  // namespace fincat
