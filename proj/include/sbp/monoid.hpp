#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbp/error.hpp"

namespace sbp {

// A finite monoid given by its Cayley table over element indices 0..n-1.
// The two-sided identity sits at index 0; make_monoid rejects anything else.
// Values are immutable once built, so a MonoidTable in hand is always valid.
class MonoidTable {
 public:
  int size() const { return size_; }
  int op(int i, int j) const { return table_[i * size_ + j]; }

  const std::vector<int>& flat() const { return table_; }
  std::vector<std::vector<int>> rows() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label for one element, falling back to the decimal index.
  std::string label(int i) const;

  // Two-sided inverse, if the element has one.
  std::optional<int> inverse(int i) const;
  bool is_group() const;
  bool is_commutative() const;
  // x+x = x for every element.
  bool is_idempotent() const;

  // Structural equality: size and table cells. Labels are presentation only.
  friend bool operator==(const MonoidTable& a, const MonoidTable& b) {
    return a.size_ == b.size_ && a.table_ == b.table_;
  }

 private:
  MonoidTable(int size, std::vector<int> table, std::vector<std::string> labels)
      : size_(size), table_(std::move(table)), labels_(std::move(labels)) {}
  friend MonoidTable make_monoid(const std::vector<std::vector<int>>& rows,
                                 std::vector<std::string> labels);

  int size_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

// Validates shape, entry range, the identity at index 0, and associativity.
// Throws DimensionMismatch, IndexOutOfRange, NotIdentity, or NotAssociative
// with the offending cell as witness.
MonoidTable make_monoid(const std::vector<std::vector<int>>& rows,
                        std::vector<std::string> labels = {});

// A zero-preserving map between monoid carriers: f(0) = 0 and nothing more.
// Not assumed to respect the operation.
class PointedMap {
 public:
  PointedMap(MonoidTable dom, MonoidTable cod, std::vector<int> values);

  int operator()(int i) const { return values_[i]; }
  const MonoidTable& dom() const { return dom_; }
  const MonoidTable& cod() const { return cod_; }
  const std::vector<int>& values() const { return values_; }

  bool is_identity() const;
  bool is_zero() const;

  // Same dom table, cod table, and values.
  friend bool operator==(const PointedMap& a, const PointedMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.values_ == b.values_;
  }

 private:
  MonoidTable dom_;
  MonoidTable cod_;
  std::vector<int> values_;
};

bool is_homomorphism(const PointedMap& f);

// A PointedMap that also respects the operation; checked at construction.
class Homomorphism {
 public:
  explicit Homomorphism(PointedMap f);
  Homomorphism(MonoidTable dom, MonoidTable cod, std::vector<int> values)
      : Homomorphism(PointedMap(std::move(dom), std::move(cod),
                                std::move(values))) {}

  int operator()(int i) const { return map_(i); }
  const PointedMap& map() const { return map_; }
  const MonoidTable& dom() const { return map_.dom(); }
  const MonoidTable& cod() const { return map_.cod(); }
  const std::vector<int>& values() const { return map_.values(); }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.map_ == b.map_;
  }

 private:
  PointedMap map_;
};

PointedMap identity_map(const MonoidTable& m);
Homomorphism identity_hom(const MonoidTable& m);
PointedMap zero_map(MonoidTable dom, MonoidTable cod);
Homomorphism zero_hom(MonoidTable dom, MonoidTable cod);

// g after f. Throws DomainMismatch if dom(g) != cod(f).
PointedMap compose_maps(const PointedMap& g, const PointedMap& f);
Homomorphism compose_homs(const Homomorphism& g, const Homomorphism& f);

// Pointwise sum (f+g)(a) = f(a) + g(a) in the shared codomain.
PointedMap add_maps(const PointedMap& f, const PointedMap& g);

// Direct product; element (i,j) is encoded as i*|N|+j, so projections and
// pair insertions are index arithmetic.
MonoidTable product_monoid(const MonoidTable& m, const MonoidTable& n);
Homomorphism product_proj1(const MonoidTable& m, const MonoidTable& n);
Homomorphism product_proj2(const MonoidTable& m, const MonoidTable& n);

// A subset of a parent monoid's carrier that contains 0 and is closed under
// the operation, with the induced monoid structure on re-indexed elements.
class SubmonoidCarrier {
 public:
  SubmonoidCarrier(MonoidTable parent, std::vector<int> members);

  const MonoidTable& parent() const { return parent_; }
  // Sorted parent indices.
  const std::vector<int>& members() const { return members_; }
  // Position of a parent element in members(), or -1.
  int index_of(int parent_element) const;

  const MonoidTable& induced() const { return induced_; }
  Homomorphism inclusion() const;

 private:
  MonoidTable parent_;
  std::vector<int> members_;
  MonoidTable induced_;
};

struct PullbackSquare {
  SubmonoidCarrier carrier;  // inside product_monoid(dom(p), dom(h))
  Homomorphism proj1;        // induced -> dom(p)
  Homomorphism proj2;        // induced -> dom(h)
};

// {(a,c) | p(a) = h(c)} with its projections. Throws CodomainMismatch if the
// two maps do not land in the same monoid.
PullbackSquare pullback(const Homomorphism& p, const Homomorphism& h);

// All monoid homomorphisms m -> n, ordered lexicographically by value array.
std::vector<Homomorphism> find_homomorphisms(const MonoidTable& m,
                                             const MonoidTable& n);
// The invertible ones among them, same order.
std::vector<Homomorphism> find_isomorphisms(const MonoidTable& m,
                                            const MonoidTable& n);

// All monoids of order n up to isomorphism, one canonical representative
// each (least table bytes over relabelings fixing 0), sorted. Guarded to
// n <= 4; the search is a full sweep of the table space.
std::vector<MonoidTable> enumerate_monoids(int n);

}  // namespace sbp
