#include "sbp/monoid.hpp"

#include <algorithm>
#include <numeric>

namespace sbp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIdentity: return "NotIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::CodomainMismatch: return "CodomainMismatch";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::MiddleMismatch: return "MiddleMismatch";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotASubmonoid: return "NotASubmonoid";
    case ErrorCode::SectionNotSplitting: return "SectionNotSplitting";
    case ErrorCode::KernelMismatch: return "KernelMismatch";
    case ErrorCode::PreimageNotFound: return "PreimageNotFound";
    case ErrorCode::InvalidSemibiproduct: return "InvalidSemibiproduct";
    case ErrorCode::InvalidActionSystem: return "InvalidActionSystem";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string index_label(int i) { return std::to_string(i); }

}  // namespace

std::vector<std::vector<int>> MonoidTable::rows() const {
  std::vector<std::vector<int>> out(size_);
  for (int i = 0; i < size_; ++i)
    out[i].assign(table_.begin() + i * size_, table_.begin() + (i + 1) * size_);
  return out;
}

std::string MonoidTable::label(int i) const {
  if (i < 0 || i >= size_)
    throw Error(ErrorCode::IndexOutOfRange, "element index out of range",
                {{"i", i}});
  return has_labels() ? labels_[i] : index_label(i);
}

std::optional<int> MonoidTable::inverse(int i) const {
  for (int j = 0; j < size_; ++j)
    if (op(i, j) == 0 && op(j, i) == 0) return j;
  return std::nullopt;
}

bool MonoidTable::is_group() const {
  for (int i = 0; i < size_; ++i)
    if (!inverse(i)) return false;
  return true;
}

bool MonoidTable::is_commutative() const {
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (op(i, j) != op(j, i)) return false;
  return true;
}

bool MonoidTable::is_idempotent() const {
  for (int i = 0; i < size_; ++i)
    if (op(i, i) != i) return false;
  return true;
}

MonoidTable make_monoid(const std::vector<std::vector<int>>& rows,
                        std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  if (n == 0)
    throw Error(ErrorCode::DimensionMismatch, "empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "table row has wrong length", {{"i", i}});
    for (int j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v < 0 || v >= n)
        throw Error(ErrorCode::IndexOutOfRange, "table entry out of range",
                    {{"i", i}, {"j", j}, {"value", v}});
      flat.push_back(v);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (flat[0 * n + i] != i)
      throw Error(ErrorCode::NotIdentity, "0 is not a left identity",
                  {{"i", i}});
    if (flat[i * n + 0] != i)
      throw Error(ErrorCode::NotIdentity, "0 is not a right identity",
                  {{"i", i}});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (flat[flat[i * n + j] * n + k] != flat[i * n + flat[j * n + k]])
          throw Error(ErrorCode::NotAssociative,
                      "(i+j)+k differs from i+(j+k)",
                      {{"i", i}, {"j", j}, {"k", k}});
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::DimensionMismatch,
                "label count differs from table size");
  return MonoidTable(n, std::move(flat), std::move(labels));
}

PointedMap::PointedMap(MonoidTable dom, MonoidTable cod,
                       std::vector<int> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != dom_.size())
    throw Error(ErrorCode::DimensionMismatch,
                "value count differs from domain size");
  for (int i = 0; i < dom_.size(); ++i)
    if (values_[i] < 0 || values_[i] >= cod_.size())
      throw Error(ErrorCode::IndexOutOfRange, "map value out of range",
                  {{"i", i}, {"value", values_[i]}});
  if (values_[0] != 0)
    throw Error(ErrorCode::NotIdentity, "map does not send 0 to 0",
                {{"value", values_[0]}});
}

bool PointedMap::is_identity() const {
  if (!(dom_ == cod_)) return false;
  for (int i = 0; i < dom_.size(); ++i)
    if (values_[i] != i) return false;
  return true;
}

bool PointedMap::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](int v) { return v == 0; });
}

bool is_homomorphism(const PointedMap& f) {
  const MonoidTable& m = f.dom();
  const MonoidTable& n = f.cod();
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (f(m.op(i, j)) != n.op(f(i), f(j))) return false;
  return true;
}

Homomorphism::Homomorphism(PointedMap f) : map_(std::move(f)) {
  const MonoidTable& m = map_.dom();
  const MonoidTable& n = map_.cod();
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (map_(m.op(i, j)) != n.op(map_(i), map_(j)))
        throw Error(ErrorCode::NotAHomomorphism,
                    "f(i+j) differs from f(i)+f(j)", {{"i", i}, {"j", j}});
}

bool Homomorphism::is_injective() const {
  std::vector<char> seen(cod().size(), 0);
  for (int v : values()) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<char> seen(cod().size(), 0);
  for (int v : values()) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

PointedMap identity_map(const MonoidTable& m) {
  std::vector<int> v(m.size());
  std::iota(v.begin(), v.end(), 0);
  return PointedMap(m, m, std::move(v));
}

Homomorphism identity_hom(const MonoidTable& m) {
  return Homomorphism(identity_map(m));
}

PointedMap zero_map(MonoidTable dom, MonoidTable cod) {
  std::vector<int> v(dom.size(), 0);
  return PointedMap(std::move(dom), std::move(cod), std::move(v));
}

Homomorphism zero_hom(MonoidTable dom, MonoidTable cod) {
  return Homomorphism(zero_map(std::move(dom), std::move(cod)));
}

PointedMap compose_maps(const PointedMap& g, const PointedMap& f) {
  if (!(g.dom() == f.cod()))
    throw Error(ErrorCode::DomainMismatch,
                "domain of outer map differs from codomain of inner map");
  std::vector<int> v(f.dom().size());
  for (int i = 0; i < f.dom().size(); ++i) v[i] = g(f(i));
  return PointedMap(f.dom(), g.cod(), std::move(v));
}

Homomorphism compose_homs(const Homomorphism& g, const Homomorphism& f) {
  return Homomorphism(compose_maps(g.map(), f.map()));
}

PointedMap add_maps(const PointedMap& f, const PointedMap& g) {
  if (!(f.dom() == g.dom()))
    throw Error(ErrorCode::DomainMismatch, "summands have different domains");
  if (!(f.cod() == g.cod()))
    throw Error(ErrorCode::CodomainMismatch,
                "summands have different codomains");
  std::vector<int> v(f.dom().size());
  for (int i = 0; i < f.dom().size(); ++i) v[i] = f.cod().op(f(i), g(i));
  return PointedMap(f.dom(), f.cod(), std::move(v));
}

MonoidTable product_monoid(const MonoidTable& m, const MonoidTable& n) {
  const int nm = m.size(), nn = n.size();
  std::vector<std::vector<int>> rows(nm * nn, std::vector<int>(nm * nn));
  for (int i1 = 0; i1 < nm; ++i1)
    for (int j1 = 0; j1 < nn; ++j1)
      for (int i2 = 0; i2 < nm; ++i2)
        for (int j2 = 0; j2 < nn; ++j2)
          rows[i1 * nn + j1][i2 * nn + j2] =
              m.op(i1, i2) * nn + n.op(j1, j2);
  return make_monoid(rows);
}

Homomorphism product_proj1(const MonoidTable& m, const MonoidTable& n) {
  MonoidTable p = product_monoid(m, n);
  std::vector<int> v(p.size());
  for (int i = 0; i < p.size(); ++i) v[i] = i / n.size();
  return Homomorphism(std::move(p), m, std::move(v));
}

Homomorphism product_proj2(const MonoidTable& m, const MonoidTable& n) {
  MonoidTable p = product_monoid(m, n);
  std::vector<int> v(p.size());
  for (int i = 0; i < p.size(); ++i) v[i] = i % n.size();
  return Homomorphism(std::move(p), n, std::move(v));
}

namespace {

std::vector<int> checked_members(const MonoidTable& parent,
                                 std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int m : members)
    if (m < 0 || m >= parent.size())
      throw Error(ErrorCode::IndexOutOfRange, "member index out of range",
                  {{"i", m}});
  if (members.empty() || members[0] != 0)
    throw Error(ErrorCode::NotASubmonoid, "member set does not contain 0");
  return members;
}

MonoidTable induce(const MonoidTable& parent, const std::vector<int>& members) {
  const int k = static_cast<int>(members.size());
  std::vector<int> pos(parent.size(), -1);
  for (int i = 0; i < k; ++i) pos[members[i]] = i;
  std::vector<std::vector<int>> rows(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int p = parent.op(members[i], members[j]);
      if (pos[p] < 0)
        throw Error(ErrorCode::NotASubmonoid,
                    "member set is not closed under the operation",
                    {{"i", members[i]}, {"j", members[j]}, {"product", p}});
      rows[i][j] = pos[p];
    }
  return make_monoid(rows);
}

}  // namespace

SubmonoidCarrier::SubmonoidCarrier(MonoidTable parent, std::vector<int> members)
    : parent_(std::move(parent)),
      members_(checked_members(parent_, std::move(members))),
      induced_(induce(parent_, members_)) {}

int SubmonoidCarrier::index_of(int parent_element) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), parent_element);
  if (it == members_.end() || *it != parent_element) return -1;
  return static_cast<int>(it - members_.begin());
}

Homomorphism SubmonoidCarrier::inclusion() const {
  return Homomorphism(induced_, parent_, members_);
}

PullbackSquare pullback(const Homomorphism& p, const Homomorphism& h) {
  if (!(p.cod() == h.cod()))
    throw Error(ErrorCode::CodomainMismatch,
                "pullback legs have different codomains");
  const MonoidTable& a = p.dom();
  const MonoidTable& c = h.dom();
  MonoidTable prod = product_monoid(a, c);
  std::vector<int> members;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < c.size(); ++j)
      if (p(i) == h(j)) members.push_back(i * c.size() + j);
  SubmonoidCarrier carrier(prod, std::move(members));
  std::vector<int> v1(carrier.members().size()), v2(carrier.members().size());
  for (size_t t = 0; t < carrier.members().size(); ++t) {
    v1[t] = carrier.members()[t] / c.size();
    v2[t] = carrier.members()[t] % c.size();
  }
  Homomorphism proj1(carrier.induced(), a, std::move(v1));
  Homomorphism proj2(carrier.induced(), c, std::move(v2));
  return PullbackSquare{std::move(carrier), std::move(proj1),
                        std::move(proj2)};
}

namespace {

// Backtracking over images of 1..n-1 in order; emits value arrays in
// lexicographic order. bijective restricts candidates to unused targets.
void search_maps(const MonoidTable& m, const MonoidTable& n, bool bijective,
                 std::vector<int>& img, std::vector<char>& used, int depth,
                 std::vector<Homomorphism>& out) {
  const int sz = m.size();
  if (depth == sz) {
    PointedMap f(m, n, img);
    if (is_homomorphism(f)) out.emplace_back(std::move(f));
    return;
  }
  for (int t = 0; t < n.size(); ++t) {
    if (bijective && used[t]) continue;
    img[depth] = t;
    bool ok = true;
    for (int i = 0; i <= depth && ok; ++i)
      for (int j = 0; j <= depth && ok; ++j) {
        const int prod = m.op(i, j);
        if (prod <= depth && n.op(img[i], img[j]) != img[prod]) ok = false;
      }
    if (ok) {
      used[t] = 1;
      search_maps(m, n, bijective, img, used, depth + 1, out);
      used[t] = 0;
    }
  }
}

std::vector<Homomorphism> search_all(const MonoidTable& m,
                                     const MonoidTable& n, bool bijective) {
  std::vector<Homomorphism> out;
  if (bijective && m.size() != n.size()) return out;
  std::vector<int> img(m.size(), 0);
  std::vector<char> used(n.size(), 0);
  used[0] = 1;
  search_maps(m, n, bijective, img, used, 1, out);
  return out;
}

}  // namespace

std::vector<Homomorphism> find_homomorphisms(const MonoidTable& m,
                                             const MonoidTable& n) {
  return search_all(m, n, false);
}

std::vector<Homomorphism> find_isomorphisms(const MonoidTable& m,
                                            const MonoidTable& n) {
  return search_all(m, n, true);
}

namespace {

// Least table bytes over relabelings fixing 0.
std::vector<int> canonical_table(const MonoidTable& m) {
  const int n = m.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = m.flat();
  std::vector<int> cand(n * n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cand[perm[i] * n + perm[j]] = perm[m.op(i, j)];
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

MonoidTable from_flat(int n, const std::vector<int>& flat) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = flat[i * n + j];
  return make_monoid(rows);
}

}  // namespace

std::vector<MonoidTable> enumerate_monoids(int n) {
  if (n < 1 || n > 4)
    throw Error(ErrorCode::SizeTooLarge,
                "monoid enumeration is limited to orders 1..4", {{"n", n}});
  // Row 0 and column 0 are forced by the identity; sweep the rest.
  std::vector<int> table(n * n, 0);
  for (int i = 0; i < n; ++i) table[i] = table[i * n] = i;
  std::vector<int> free_cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) free_cells.push_back(i * n + j);

  std::vector<std::vector<int>> found;
  const auto assoc = [&] {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (table[table[i * n + j] * n + k] !=
              table[i * n + table[j * n + k]])
            return false;
    return true;
  };
  const size_t cells = free_cells.size();
  std::vector<int> odo(cells, 0);
  for (;;) {
    for (size_t t = 0; t < cells; ++t) table[free_cells[t]] = odo[t];
    if (assoc()) {
      std::vector<int> canon = canonical_table(from_flat(n, table));
      if (std::find(found.begin(), found.end(), canon) == found.end())
        found.push_back(std::move(canon));
    }
    size_t t = 0;
    while (t < cells && ++odo[t] == n) odo[t++] = 0;
    if (t == cells) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<MonoidTable> out;
  out.reserve(found.size());
  for (const auto& flat : found) out.push_back(from_flat(n, flat));
  return out;
}

}  // namespace sbp
