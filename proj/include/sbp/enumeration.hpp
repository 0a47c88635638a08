#pragma once

#include <optional>

#include "sbp/action_system.hpp"

namespace sbp {

// Structural features of an extension, read off from its action system and
// realization. Declaration order is also display order.
enum class Tag {
  split,           // gamma vanishes identically
  schreier,        // rho(x,b)=x everywhere (full carrier)
  group_kernel,    // X is a group
  group_quotient,  // B is a group
  group_total,     // the realization is a group
};

const char* to_string(Tag tag);

// One valid action system with its derived invariants. canonical_key is the
// least serialization over carrier relabelings fixing 0 on each side;
// equal keys mean isomorphic systems.
struct CensusEntry {
  ActionSystem system;
  std::vector<Tag> tags;
  int realization_size;
  std::string canonical_key;
};

CensusEntry make_census_entry(const ActionSystem& T);

std::string raw_key(const ActionSystem& T);
std::string canonical_key(const ActionSystem& T);

// All valid action systems over the given carriers, in lexicographic order
// of (rho,phi,gamma) tables. Both carriers are guarded to size <= 4. The
// candidate space is the unit-law solutions; the other laws filter it.
std::vector<ActionSystem> enumerate_action_systems(const MonoidTable& X,
                                                   const MonoidTable& B);

// Systems grouped up to isomorphism (simultaneous relabeling of both
// carriers). The representative is the member with least raw_key; classes
// are ordered by canonical key. Grouping is by canonical key, then every
// member is confirmed against its representative by explicit isomorphism
// search.
struct IsoClass {
  CensusEntry representative;
  std::vector<int> member_indices;  // positions in the input list
};

std::vector<IsoClass> classify(const std::vector<CensusEntry>& entries);

// An isomorphism of action systems as a pair of carrier bijections, if one
// exists.
std::optional<std::pair<Homomorphism, Homomorphism>> find_act_isomorphism(
    const ActionSystem& S, const ActionSystem& T);
bool act_isomorphic(const ActionSystem& S, const ActionSystem& T);

// The fourteen extensions of two-element monoids: for each ordered pair of
// carriers drawn from (G, M), every valid action system, ordered within a
// pair by (rho nontrivial, phi nontrivial, gamma nonzero) flags.
std::vector<CensusEntry> census_2x2();

// Flags used for census ordering and display; meaningful for any carriers.
struct SystemFlags {
  bool rho_nontrivial;    // rho(x,b) != x somewhere
  bool phi_nontrivial;    // phi(b,x) != x somewhere
  bool gamma_nontrivial;  // gamma != 0 somewhere
};

SystemFlags system_flags(const ActionSystem& T);

// Each entry's realization identified up to isomorphism among all monoids
// of its order: the class index within enumerate_monoids, plus a
// conventional name when the catalog recognizes it (Z2, Z3, Z4, V4, the
// two-element idempotent monoid, and direct products of those).
struct RealizationRow {
  MonoidTable realization;
  int iso_index;
  std::optional<std::string> name;
};

std::vector<RealizationRow> realization_census(
    const std::vector<CensusEntry>& entries);

// Catalog lookup on its own: a conventional name for a small monoid, up to
// isomorphism.
std::optional<std::string> identify_monoid(const MonoidTable& m);

}  // namespace sbp
