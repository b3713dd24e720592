#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fincat/qmat.hpp"

namespace fincat {

enum class Mode { Set, Vec };

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A finite carrier: a finite set of labelled elements (Set mode) or a
// finite-dimensional rational vector space with labelled basis (Vec mode).
struct Carrier {
  Mode mode = Mode::Set;
  std::vector<std::string> labels;

  int size() const { return int(labels.size()); }

  static Carrier finite_set(std::vector<std::string> labels) {
    return Carrier{Mode::Set, std::move(labels)};
  }
  static Carrier vector_space(std::vector<std::string> basis) {
    return Carrier{Mode::Vec, std::move(basis)};
  }
  bool operator==(const Carrier& o) const { return mode == o.mode && labels == o.labels; }
};

// An element of a carrier: index into the label list (Set) or a coordinate
// vector over the basis (Vec).
struct Elt {
  int idx = -1;
  QVec vec;

  static Elt of_index(int i) { return Elt{i, {}}; }
  static Elt of_vec(QVec v) { return Elt{-1, std::move(v)}; }
  static Elt basis(int i, int dim) {
    QVec v(dim);
    v[i] = Rat(1);
    return of_vec(std::move(v));
  }

  bool operator==(const Elt& o) const { return idx == o.idx && vec == o.vec; }
  size_t hash() const;
};

std::string elt_str(const Carrier& c, const Elt& e);

// A map of carriers: a function on elements (Set) or a linear map given by a
// matrix acting on coordinate columns (Vec).
class CarrierMap {
 public:
  CarrierMap() = default;

  static CarrierMap set_map(std::vector<int> images, int dst_size);
  static CarrierMap vec_map(QMat m);
  static CarrierMap identity(const Carrier& c);
  // Builds the map sending element/basis i of src to images[i] in dst.
  static CarrierMap from_images(const Carrier& src, const Carrier& dst, const std::vector<Elt>& images);

  Mode mode() const { return mode_; }
  int src_size() const;
  int dst_size() const;
  const QMat& matrix() const { return mat_; }
  const std::vector<int>& images() const { return img_; }

  Elt apply(const Elt& e) const;
  Elt apply_basis(int i) const;  // image of element/basis vector i

  CarrierMap compose_after(const CarrierMap& inner) const;  // this ∘ inner
  bool is_iso() const;
  std::optional<CarrierMap> inverse() const;
  // Some preimage of e, if any (exact; Vec solves the linear system).
  std::optional<Elt> preimage(const Elt& e) const;

  CarrierMap pow(int k) const;  // endo maps only, k >= 0

  bool operator==(const CarrierMap& o) const {
    return mode_ == o.mode_ && img_ == o.img_ && dst_size_ == o.dst_size_ && mat_ == o.mat_;
  }
  size_t hash() const;

 private:
  Mode mode_ = Mode::Set;
  std::vector<int> img_;
  int dst_size_ = 0;
  QMat mat_;
};

// Eventual image of an endo map g of a finite carrier: the stable image
// E = im(g^N) together with the induced automorphism. N never exceeds the
// carrier size (Set) or dimension (Vec). The projection is the canonical
// collapse h^{-N} ∘ g^N, so projection ∘ inclusion = id_E.
struct EventualImage {
  Carrier carrier;           // E, with labels inherited from the ambient carrier
  CarrierMap inclusion;      // E -> A
  CarrierMap projection;     // A -> E
  CarrierMap automorphism;   // g restricted to E (invertible)
  int stabilization = 0;     // N
};

EventualImage eventual_image(const Carrier& ambient, const CarrierMap& g);

}  // namespace fincat
