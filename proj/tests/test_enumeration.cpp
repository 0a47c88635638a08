#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sbp/enumeration.hpp"

using namespace sbp;

namespace {

template <typename Fn>
Error capture(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  REQUIRE_MESSAGE(false, "expected an Error to be thrown");
  return Error(ErrorCode::ParseError, "unreachable");
}

MonoidTable table_G() { return make_monoid({{0, 1}, {1, 0}}); }
MonoidTable table_M() { return make_monoid({{0, 1}, {1, 1}}); }
MonoidTable table_Z3() {
  return make_monoid({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

std::vector<std::vector<int>> unflat(const std::vector<int>& flat, int r,
                                     int c) {
  std::vector<std::vector<int>> rows(r);
  for (int i = 0; i < r; ++i)
    rows[i].assign(flat.begin() + i * c, flat.begin() + (i + 1) * c);
  return rows;
}

// Independent oracle: sweep every triple of tables cell by cell with no
// pruning at all and keep the ones satisfying the axioms. Feasible for
// two-element carriers (4096 candidates per pair).
std::vector<ActionSystem> oracle_2x2(const MonoidTable& X,
                                     const MonoidTable& B) {
  std::vector<ActionSystem> out;
  std::vector<int> rho(4), phi(4), gamma(4);
  for (int r = 0; r < 16; ++r)
    for (int p = 0; p < 16; ++p)
      for (int g = 0; g < 16; ++g) {
        for (int c = 0; c < 4; ++c) {
          rho[c] = (r >> c) & 1;
          phi[c] = (p >> c) & 1;
          gamma[c] = (g >> c) & 1;
        }
        ActionSystem cand(X, B, unflat(rho, 2, 2), unflat(phi, 2, 2),
                          unflat(gamma, 2, 2));
        if (satisfies_action_axioms(cand)) out.push_back(std::move(cand));
      }
  std::sort(out.begin(), out.end(),
            [](const ActionSystem& a, const ActionSystem& b) {
              return raw_key(a) < raw_key(b);
            });
  return out;
}

ActionSystem twisted_z3(int g) {
  std::vector<std::vector<int>> gamma = {{0, 0}, {0, g}};
  return ActionSystem(table_Z3(), table_G(), {{0, 0}, {1, 1}, {2, 2}},
                      {{0, 1, 2}, {0, 1, 2}}, gamma);
}

}  // namespace

TEST_CASE("two-element carrier pairs admit 2, 4, 3, and 5 systems") {
  CHECK(enumerate_action_systems(table_G(), table_G()).size() == 2);
  CHECK(enumerate_action_systems(table_G(), table_M()).size() == 4);
  CHECK(enumerate_action_systems(table_M(), table_G()).size() == 3);
  CHECK(enumerate_action_systems(table_M(), table_M()).size() == 5);
}

TEST_CASE("the structured sweep agrees with the unpruned oracle") {
  for (const auto& [x, b] :
       {std::pair{table_G(), table_G()}, {table_G(), table_M()},
        {table_M(), table_G()}, {table_M(), table_M()}}) {
    const auto fast = enumerate_action_systems(x, b);
    const auto slow = oracle_2x2(x, b);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
  }
}

TEST_CASE("a three-element kernel against the unit-cell oracle") {
  // Same idea at (Z3, G); here only the cells not forced by the unit laws
  // are swept, which is still independent of the structured generator's
  // fixed-point pruning.
  std::vector<ActionSystem> slow;
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = 0; r2 < 3; ++r2)
      for (int p1 = 0; p1 < 3; ++p1)
        for (int p2 = 0; p2 < 3; ++p2)
          for (int g = 0; g < 3; ++g) {
            ActionSystem cand(table_Z3(), table_G(),
                              {{0, 0}, {1, r1}, {2, r2}},
                              {{0, 1, 2}, {0, p1, p2}}, {{0, 0}, {0, g}});
            if (satisfies_action_axioms(cand)) slow.push_back(std::move(cand));
          }
  std::sort(slow.begin(), slow.end(),
            [](const ActionSystem& a, const ActionSystem& b) {
              return raw_key(a) < raw_key(b);
            });
  const auto fast = enumerate_action_systems(table_Z3(), table_G());
  REQUIRE(fast.size() == slow.size());
  for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);

  // The three cocycle twists of the trivial action are among them.
  for (int g = 0; g < 3; ++g)
    CHECK(std::count(fast.begin(), fast.end(), twisted_z3(g)) == 1);
}

TEST_CASE("enumeration refuses carriers above order four") {
  std::vector<std::vector<int>> z5(5, std::vector<int>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) z5[i][j] = (i + j) % 5;
  const Error e = capture(
      [&] { enumerate_action_systems(make_monoid(z5), table_G()); });
  CHECK(e.code() == ErrorCode::SizeTooLarge);
}

TEST_CASE("flags read the three tables independently") {
  const SystemFlags trivial =
      system_flags(trivial_action_system(table_G(), table_M()));
  CHECK_FALSE(trivial.rho_nontrivial);
  CHECK_FALSE(trivial.phi_nontrivial);
  CHECK_FALSE(trivial.gamma_nontrivial);

  const SystemFlags twisted = system_flags(twisted_z3(1));
  CHECK_FALSE(twisted.rho_nontrivial);
  CHECK_FALSE(twisted.phi_nontrivial);
  CHECK(twisted.gamma_nontrivial);
}

TEST_CASE("the fourteen extensions of two-element monoids") {
  const std::vector<CensusEntry> census = census_2x2();
  REQUIRE(census.size() == 14);

  // Carrier pairs appear in blocks of 2, 4, 3, 5.
  const std::vector<std::pair<MonoidTable, MonoidTable>> blocks = {
      {table_G(), table_G()}, {table_G(), table_M()},
      {table_M(), table_G()}, {table_M(), table_M()}};
  const std::vector<int> block_sizes = {2, 4, 3, 5};
  int at = 0;
  for (size_t p = 0; p < blocks.size(); ++p) {
    std::tuple<bool, bool, bool> prev{false, false, false};
    for (int i = 0; i < block_sizes[p]; ++i, ++at) {
      const CensusEntry& e = census[at];
      CHECK(e.system.X() == blocks[p].first);
      CHECK(e.system.B() == blocks[p].second);
      const SystemFlags f = system_flags(e.system);
      const std::tuple<bool, bool, bool> cur{f.rho_nontrivial,
                                             f.phi_nontrivial,
                                             f.gamma_nontrivial};
      CHECK(prev <= cur);
      prev = cur;
    }
  }

  const std::vector<int> sizes = {4, 4, 4, 4, 4, 3, 4, 4, 3, 4, 4, 4, 4, 3};
  for (int i = 0; i < 14; ++i) CHECK(census[i].realization_size == sizes[i]);

  using T = Tag;
  CHECK(census[0].tags ==
        std::vector<T>{T::split, T::schreier, T::group_kernel,
                       T::group_quotient, T::group_total});
  CHECK(census[1].tags == std::vector<T>{T::schreier, T::group_kernel,
                                         T::group_quotient, T::group_total});
  CHECK(census[5].tags == std::vector<T>{T::split, T::group_kernel});
  CHECK(census[8].tags == std::vector<T>{T::group_quotient});
  CHECK(census[13].tags == std::vector<T>{T::split});

  // Analysis is a strict inverse of synthesis on every item.
  for (const CensusEntry& e : census) {
    const SyntheticRealization R = functor_Q(e.system);
    CHECK(verify_semibiproduct(R.as_semibiproduct()).passed());
    CHECK(functor_P(R.as_semibiproduct()) == e.system);
  }
}

TEST_CASE("tag names render in kebab case") {
  CHECK(std::string(to_string(Tag::split)) == "split");
  CHECK(std::string(to_string(Tag::schreier)) == "schreier");
  CHECK(std::string(to_string(Tag::group_kernel)) == "group-kernel");
  CHECK(std::string(to_string(Tag::group_quotient)) == "group-quotient");
  CHECK(std::string(to_string(Tag::group_total)) == "group-total");
}

TEST_CASE("relabeled cocycles share a canonical key and classify together") {
  const ActionSystem a = twisted_z3(1);
  const ActionSystem b = twisted_z3(2);
  CHECK(raw_key(a) != raw_key(b));
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(act_isomorphic(a, b));
  const auto iso = find_act_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK(iso->first.values() == std::vector<int>{0, 2, 1});
  CHECK(iso->second.values() == std::vector<int>{0, 1});

  const auto classes = classify({make_census_entry(a), make_census_entry(b)});
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].member_indices == std::vector<int>{0, 1});
  CHECK(classes[0].representative.system == a);
}

TEST_CASE("the census entries are pairwise non-isomorphic") {
  const std::vector<CensusEntry> census = census_2x2();
  const auto classes = classify(census);
  CHECK(classes.size() == 14);
  std::vector<int> seen;
  for (const auto& c : classes) {
    CHECK(c.member_indices.size() == 1);
    seen.push_back(c.member_indices[0]);
  }
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < 14; ++i) CHECK(seen[i] == i);

  // Independent of the canonical keys: the explicit search finds no
  // isomorphism between any two distinct items either.
  for (size_t i = 0; i < census.size(); ++i)
    for (size_t j = i + 1; j < census.size(); ++j)
      CHECK_FALSE(act_isomorphic(census[i].system, census[j].system));
}

TEST_CASE("realizations of the census land on five named monoids") {
  const std::vector<CensusEntry> census = census_2x2();
  const std::vector<RealizationRow> rows = realization_census(census);
  REQUIRE(rows.size() == 14);

  const std::vector<std::optional<std::string>> names = {
      "V4", "Z4", "GxM", "GxM", std::nullopt, std::nullopt,
      "GxM", std::nullopt, std::nullopt, "MxM", std::nullopt,
      std::nullopt, std::nullopt, std::nullopt};
  for (int i = 0; i < 14; ++i) {
    CHECK(rows[i].name == names[i]);
    CHECK(rows[i].iso_index >= 0);
    CHECK(rows[i].realization.size() == census[i].realization_size);
  }
  // The ones isomorphic to the product of the two factors share an iso
  // class; the mixed-carrier product is not the idempotent square.
  CHECK(rows[2].iso_index == rows[3].iso_index);
  CHECK(rows[2].iso_index == rows[6].iso_index);
  CHECK(rows[2].iso_index != rows[9].iso_index);

  // The three-element realizations, written out.
  CHECK(rows[5].realization.rows() ==
        std::vector<std::vector<int>>{{0, 1, 2}, {1, 1, 1}, {2, 1, 0}});
  CHECK(rows[8].realization.rows() ==
        std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 1}, {2, 1, 2}});
  CHECK(rows[13].realization.rows() ==
        std::vector<std::vector<int>>{{0, 1, 2}, {1, 1, 1}, {2, 1, 2}});
  // The one idempotent four-element realization that is not a product.
  CHECK(rows[11].realization.rows() ==
        std::vector<std::vector<int>>{
            {0, 1, 2, 3}, {1, 1, 1, 1}, {2, 3, 2, 3}, {3, 3, 3, 3}});
  CHECK(rows[11].realization.is_idempotent());
}

TEST_CASE("catalog lookup works up to isomorphism") {
  CHECK(identify_monoid(make_monoid({{0}})) == std::optional<std::string>{"T"});
  CHECK(identify_monoid(table_G()) == std::optional<std::string>{"G"});
  CHECK(identify_monoid(table_M()) == std::optional<std::string>{"M"});
  CHECK(identify_monoid(table_Z3()) == std::optional<std::string>{"Z3"});
  // A relabeling of the cyclic group of order four.
  CHECK(identify_monoid(make_monoid({{0, 1, 2, 3},
                                     {1, 0, 3, 2},
                                     {2, 3, 1, 0},
                                     {3, 2, 0, 1}})) ==
        std::optional<std::string>{"Z4"});
  CHECK_FALSE(identify_monoid(
                  make_monoid({{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}))
                  .has_value());
}
