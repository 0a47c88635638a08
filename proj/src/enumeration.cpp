#include "sbp/enumeration.hpp"

#include <algorithm>
#include <map>

namespace sbp {

const char* to_string(Tag tag) {
  switch (tag) {
    case Tag::split: return "split";
    case Tag::schreier: return "schreier";
    case Tag::group_kernel: return "group-kernel";
    case Tag::group_quotient: return "group-quotient";
    case Tag::group_total: return "group-total";
  }
  return "unknown";
}

namespace {

void append_table(std::string& out, const std::vector<int>& flat) {
  for (int v : flat) out.push_back(static_cast<char>(v));
}

std::string key_of(const MonoidTable& X, const MonoidTable& B,
                   const std::vector<int>& rho, const std::vector<int>& phi,
                   const std::vector<int>& gamma) {
  std::string out;
  out.push_back(static_cast<char>(X.size()));
  append_table(out, X.flat());
  out.push_back(static_cast<char>(B.size()));
  append_table(out, B.flat());
  append_table(out, rho);
  append_table(out, phi);
  append_table(out, gamma);
  return out;
}

std::vector<int> flat_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

// All permutations of 0..n-1 with 0 fixed.
std::vector<std::vector<int>> perms_fixing_zero(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

std::vector<int> relabel_monoid(const MonoidTable& m,
                                const std::vector<int>& perm) {
  const int n = m.size();
  std::vector<int> out(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[perm[i] * n + perm[j]] = perm[m.op(i, j)];
  return out;
}

}  // namespace

std::string raw_key(const ActionSystem& T) {
  return key_of(T.X(), T.B(), flat_of(T.rho_rows()), flat_of(T.phi_rows()),
                flat_of(T.gamma_rows()));
}

std::string canonical_key(const ActionSystem& T) {
  const int xn = T.X().size(), bn = T.B().size();
  std::string best;
  for (const auto& sig : perms_fixing_zero(xn)) {
    const std::vector<int> xt = relabel_monoid(T.X(), sig);
    for (const auto& tau : perms_fixing_zero(bn)) {
      const std::vector<int> bt = relabel_monoid(T.B(), tau);
      std::vector<int> rho(xn * bn), phi(bn * xn), gamma(bn * bn);
      for (int x = 0; x < xn; ++x)
        for (int b = 0; b < bn; ++b)
          rho[sig[x] * bn + tau[b]] = sig[T.rho(x, b)];
      for (int b = 0; b < bn; ++b)
        for (int x = 0; x < xn; ++x)
          phi[tau[b] * xn + sig[x]] = sig[T.phi(b, x)];
      for (int b = 0; b < bn; ++b)
        for (int b2 = 0; b2 < bn; ++b2)
          gamma[tau[b] * bn + tau[b2]] = sig[T.gamma(b, b2)];
      std::string key;
      key.push_back(static_cast<char>(xn));
      append_table(key, xt);
      key.push_back(static_cast<char>(bn));
      append_table(key, bt);
      append_table(key, rho);
      append_table(key, phi);
      append_table(key, gamma);
      if (best.empty() || key < best) best = std::move(key);
    }
  }
  return best;
}

SystemFlags system_flags(const ActionSystem& T) {
  SystemFlags f{false, false, false};
  for (int x = 0; x < T.X().size(); ++x)
    for (int b = 0; b < T.B().size(); ++b) {
      if (T.rho(x, b) != x) f.rho_nontrivial = true;
      if (T.phi(b, x) != x) f.phi_nontrivial = true;
    }
  for (int b = 0; b < T.B().size(); ++b)
    for (int b2 = 0; b2 < T.B().size(); ++b2)
      if (T.gamma(b, b2) != 0) f.gamma_nontrivial = true;
  return f;
}

CensusEntry make_census_entry(const ActionSystem& T) {
  SyntheticRealization R = functor_Q(T);
  const SystemFlags f = system_flags(T);
  std::vector<Tag> tags;
  if (!f.gamma_nontrivial) tags.push_back(Tag::split);
  if (!f.rho_nontrivial) tags.push_back(Tag::schreier);
  if (T.X().is_group()) tags.push_back(Tag::group_kernel);
  if (T.B().is_group()) tags.push_back(Tag::group_quotient);
  if (R.monoid().is_group()) tags.push_back(Tag::group_total);
  return CensusEntry{T, std::move(tags), R.monoid().size(),
                     canonical_key(T)};
}

std::vector<ActionSystem> enumerate_action_systems(const MonoidTable& X,
                                                   const MonoidTable& B) {
  const int xn = X.size(), bn = B.size();
  if (xn > 4 || bn > 4)
    throw Error(ErrorCode::SizeTooLarge,
                "action system enumeration is limited to carriers of "
                "order <= 4",
                {{"|X|", xn}, {"|B|", bn}});

  // rho candidates: unit laws fix row 0 and column 0; each free column must
  // be idempotent so that rho(-,b) is a retraction (the later laws force
  // it anyway, and it prunes the sweep).
  std::vector<std::vector<int>> rhos;
  {
    std::vector<int> rho(xn * bn);
    for (int x = 0; x < xn; ++x) rho[x * bn] = x;
    for (int b = 0; b < bn; ++b) rho[b] = 0;
    std::vector<int> cells;
    for (int x = 1; x < xn; ++x)
      for (int b = 1; b < bn; ++b) cells.push_back(x * bn + b);
    std::vector<int> odo(cells.size(), 0);
    for (;;) {
      for (size_t t = 0; t < cells.size(); ++t) rho[cells[t]] = odo[t];
      bool ok = true;
      for (int x = 0; x < xn && ok; ++x)
        for (int b = 0; b < bn && ok; ++b)
          if (rho[rho[x * bn + b] * bn + b] != rho[x * bn + b]) ok = false;
      if (ok) rhos.push_back(rho);
      size_t t = 0;
      while (t < cells.size() && ++odo[t] == xn) odo[t++] = 0;
      if (t == cells.size()) break;
    }
  }

  std::vector<ActionSystem> out;
  for (const auto& rho : rhos) {
    // Fixed points of rho(-,b), per b; phi(b,x) and gamma(b,b') must land
    // in the fixed points of the relevant column.
    std::vector<std::vector<int>> fixed(bn);
    for (int b = 0; b < bn; ++b)
      for (int y = 0; y < xn; ++y)
        if (rho[y * bn + b] == y) fixed[b].push_back(y);

    std::vector<int> phi(bn * xn, 0);
    for (int x = 0; x < xn; ++x) phi[x] = x;
    std::vector<int> gamma(bn * bn, 0);
    std::vector<std::pair<int, const std::vector<int>*>> slots;
    for (int b = 1; b < bn; ++b)
      for (int x = 1; x < xn; ++x)
        slots.emplace_back(b * xn + x, &fixed[b]);
    const size_t phi_slots = slots.size();
    for (int b = 1; b < bn; ++b)
      for (int b2 = 1; b2 < bn; ++b2)
        slots.emplace_back(b * bn + b2, &fixed[B.op(b, b2)]);

    std::vector<size_t> odo(slots.size(), 0);
    for (;;) {
      for (size_t t = 0; t < slots.size(); ++t) {
        const int v = (*slots[t].second)[odo[t]];
        if (t < phi_slots)
          phi[slots[t].first] = v;
        else
          gamma[slots[t].first] = v;
      }
      auto unflat = [](const std::vector<int>& flat, int r,
                       int c) {
        std::vector<std::vector<int>> rows(r);
        for (int i = 0; i < r; ++i)
          rows[i].assign(flat.begin() + i * c, flat.begin() + (i + 1) * c);
        return rows;
      };
      ActionSystem cand(X, B, unflat(rho, xn, bn), unflat(phi, bn, xn),
                        unflat(gamma, bn, bn));
      if (satisfies_action_axioms(cand)) out.push_back(std::move(cand));
      size_t t = 0;
      while (t < slots.size() && ++odo[t] == slots[t].second->size())
        odo[t++] = 0;
      if (t == slots.size()) break;
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ActionSystem& a, const ActionSystem& b) {
              return raw_key(a) < raw_key(b);
            });
  return out;
}

std::optional<std::pair<Homomorphism, Homomorphism>> find_act_isomorphism(
    const ActionSystem& S, const ActionSystem& T) {
  for (const auto& f : find_isomorphisms(S.X(), T.X()))
    for (const auto& g : find_isomorphisms(S.B(), T.B()))
      if (is_act_morphism(ActMorphism(S, T, f, g)).passed())
        return std::make_pair(f, g);
  return std::nullopt;
}

bool act_isomorphic(const ActionSystem& S, const ActionSystem& T) {
  return find_act_isomorphism(S, T).has_value();
}

std::vector<IsoClass> classify(const std::vector<CensusEntry>& entries) {
  std::map<std::string, std::vector<int>> buckets;
  for (size_t i = 0; i < entries.size(); ++i)
    buckets[entries[i].canonical_key].push_back(static_cast<int>(i));
  std::vector<IsoClass> out;
  for (const auto& [key, members] : buckets) {
    int rep = members[0];
    for (int m : members)
      if (raw_key(entries[m].system) < raw_key(entries[rep].system)) rep = m;
    for (int m : members)
      if (m != rep &&
          !act_isomorphic(entries[m].system, entries[rep].system))
        throw Error(ErrorCode::InvalidActionSystem,
                    "canonical keys collide on non-isomorphic systems",
                    {{"i", rep}, {"j", m}});
    out.push_back(IsoClass{entries[rep], members});
  }
  return out;
}

std::vector<CensusEntry> census_2x2() {
  const MonoidTable G = make_monoid({{0, 1}, {1, 0}});
  const MonoidTable M = make_monoid({{0, 1}, {1, 1}});
  const std::vector<std::pair<MonoidTable, MonoidTable>> pairs = {
      {G, G}, {G, M}, {M, G}, {M, M}};
  std::vector<CensusEntry> out;
  for (const auto& [X, B] : pairs) {
    std::vector<ActionSystem> systems = enumerate_action_systems(X, B);
    std::stable_sort(systems.begin(), systems.end(),
                     [](const ActionSystem& a, const ActionSystem& b) {
                       const SystemFlags fa = system_flags(a);
                       const SystemFlags fb = system_flags(b);
                       return std::make_tuple(fa.rho_nontrivial,
                                              fa.phi_nontrivial,
                                              fa.gamma_nontrivial) <
                              std::make_tuple(fb.rho_nontrivial,
                                              fb.phi_nontrivial,
                                              fb.gamma_nontrivial);
                     });
    for (const auto& s : systems) out.push_back(make_census_entry(s));
  }
  return out;
}

namespace {

struct CatalogItem {
  const char* name;
  MonoidTable table;
};

const std::vector<CatalogItem>& catalog() {
  static const std::vector<CatalogItem> items = [] {
    const MonoidTable G = make_monoid({{0, 1}, {1, 0}});
    const MonoidTable M = make_monoid({{0, 1}, {1, 1}});
    std::vector<CatalogItem> out;
    out.push_back({"T", make_monoid({{0}})});
    out.push_back({"G", G});
    out.push_back({"M", M});
    out.push_back({"Z3", make_monoid({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})});
    out.push_back({"Z4", make_monoid({{0, 1, 2, 3},
                                      {1, 2, 3, 0},
                                      {2, 3, 0, 1},
                                      {3, 0, 1, 2}})});
    out.push_back({"V4", make_monoid({{0, 1, 2, 3},
                                      {1, 0, 3, 2},
                                      {2, 3, 0, 1},
                                      {3, 2, 1, 0}})});
    out.push_back({"GxM", product_monoid(G, M)});
    out.push_back({"MxM", product_monoid(M, M)});
    return out;
  }();
  return items;
}

}  // namespace

std::optional<std::string> identify_monoid(const MonoidTable& m) {
  for (const auto& item : catalog()) {
    if (item.table.size() != m.size()) continue;
    if (!find_isomorphisms(m, item.table).empty()) return item.name;
  }
  return std::nullopt;
}

std::vector<RealizationRow> realization_census(
    const std::vector<CensusEntry>& entries) {
  std::map<int, std::vector<MonoidTable>> by_order;
  std::vector<RealizationRow> out;
  for (const auto& e : entries) {
    MonoidTable R = functor_Q(e.system).monoid();
    auto it = by_order.find(R.size());
    if (it == by_order.end())
      it = by_order.emplace(R.size(), enumerate_monoids(R.size())).first;
    int iso_index = -1;
    for (size_t i = 0; i < it->second.size(); ++i)
      if (!find_isomorphisms(R, it->second[i]).empty()) {
        iso_index = static_cast<int>(i);
        break;
      }
    out.push_back(RealizationRow{R, iso_index, identify_monoid(R)});
  }
  return out;
}

}  // namespace sbp
