#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fincat/carrier.hpp"

namespace fincat {

using ObjId = int;

// A morphism of a finite category: an element of the hom carrier from src to
// dst. Equality is on-the-nose data equality.
struct Morphism {
  ObjId src = -1;
  ObjId dst = -1;
  Elt v;

  bool operator==(const Morphism& o) const { return src == o.src && dst == o.dst && v == o.v; }
  size_t hash() const {
    return std::hash<int>()(src) * 92821u ^ std::hash<int>()(dst) * 31u ^ v.hash();
  }
};

struct Violation {
  std::string code;
  std::string message;
};

struct Report {
  bool ok = true;
  std::vector<Violation> violations;

  void fail(std::string code, std::string message) {
    ok = false;
    violations.push_back({std::move(code), std::move(message)});
  }
  std::string summary() const;
};

// A finite category enriched in finite sets or finite-dimensional rational
// vector spaces. Hom carriers are pairwise disjoint labelled sets (Set mode)
// or labelled bases (Vec mode); composition is a total table on elements
// (Set) or structure constants on basis pairs, extended bilinearly (Vec).
class FiniteCategory {
 public:
  Mode mode = Mode::Set;
  std::string name = "C";

  ObjId add_object(const std::string& obj_name);
  void set_hom(ObjId a, ObjId b, Carrier carrier);
  void set_identity(ObjId a, Elt e);
  // result lives in hom(a,c); g is an element index of hom(b,c), f of hom(a,b)
  void set_compose(ObjId a, ObjId b, ObjId c, int g_index, int f_index, Elt result);
  bool has_compose(ObjId a, ObjId b, ObjId c, int g_index, int f_index) const;
  // Call once construction is complete; builds the label index.
  void seal();

  int object_count() const { return int(objects_.size()); }
  const std::string& object_name(ObjId a) const { return objects_[a]; }
  std::optional<ObjId> object_by_name(const std::string& n) const;

  const Carrier& hom(ObjId a, ObjId b) const { return homs_[pair_index(a, b)]; }
  Morphism identity(ObjId a) const { return Morphism{a, a, identities_[a]}; }
  const Elt& identity_elt(ObjId a) const { return identities_[a]; }

  Morphism compose(const Morphism& g, const Morphism& f) const;  // g ∘ f
  Elt compose_elts(ObjId a, ObjId b, ObjId c, const Elt& g, const Elt& f) const;

  // All element morphisms (Set) or basis morphisms (Vec), identities included.
  std::vector<Morphism> basis_morphisms() const;
  std::vector<Morphism> basis_morphisms(ObjId a, ObjId b) const;
  Morphism basis_morphism(ObjId a, ObjId b, int index) const;
  long long total_morphisms() const;

  std::string morphism_str(const Morphism& m) const;
  std::string label_of(ObjId a, ObjId b, int index) const { return hom(a, b).labels[index]; }
  // Looks a basis/element morphism up by its (globally unique) label.
  std::optional<Morphism> morphism_by_label(const std::string& label) const;
  std::optional<std::tuple<ObjId, ObjId, int>> locate_label(const std::string& label) const;

  // Postcomposition hom(x,a) -> hom(x,b) with t : a -> b.
  CarrierMap postcompose(const Morphism& t, ObjId x) const;
  // Precomposition hom(b,z) -> hom(a,z) with t : a -> b.
  CarrierMap precompose(const Morphism& t, ObjId z) const;

  // Two-sided invertibility; exact in both modes (Vec solves a linear system).
  bool morphism_invertible(const Morphism& m) const { return morphism_inverse(m).has_value(); }
  std::optional<Morphism> morphism_inverse(const Morphism& m) const;

  Report validate() const;
  FiniteCategory opposite() const;

  bool same_data(const FiniteCategory& o) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Carrier> homs_;
  std::vector<Elt> identities_;
  // comp_[(a,b,c)][g * |hom(a,b)| + f] = g∘f in hom(a,c)
  std::vector<std::vector<Elt>> comp_;
  std::vector<std::vector<bool>> comp_set_;
  std::map<std::string, std::tuple<ObjId, ObjId, int>> label_index_;

  size_t pair_index(ObjId a, ObjId b) const { return size_t(a) * objects_.size() + b; }
  size_t triple_index(ObjId a, ObjId b, ObjId c) const {
    return (size_t(a) * objects_.size() + b) * objects_.size() + c;
  }
  friend class CategoryBuilder;
};

// Convenience builders used by tests and fixtures.
FiniteCategory make_poset_category(const std::string& name, int n_objects,
                                   const std::vector<std::pair<int, int>>& le_pairs);
FiniteCategory make_chain_poset(const std::string& name, int length);
// One-object category from a monoid multiplication table; element 0 is the unit.
FiniteCategory make_monoid_category(const std::string& name,
                                    const std::vector<std::string>& elements,
                                    const std::vector<std::vector<int>>& mult);
// One-object Vec-mode category from a rational algebra given by structure
// constants: mult[i][j] = coordinates of e_i * e_j; unit is the given vector.
FiniteCategory make_algebra_category(const std::string& name,
                                     const std::vector<std::string>& basis,
                                     const std::vector<std::vector<QVec>>& mult,
                                     const QVec& unit);
// Vec-mode category of a poset: hom(a,b) is one-dimensional when a <= b.
FiniteCategory make_linear_poset_category(const std::string& name, int n_objects,
                                          const std::vector<std::pair<int, int>>& le_pairs);

}  // namespace fincat
