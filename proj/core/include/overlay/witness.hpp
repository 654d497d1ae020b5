#pragma once

#include <optional>

#include "overlay/family.hpp"
#include "overlay/graph.hpp"
#include "overlay/slices.hpp"

namespace overlay {

enum class WitnessKind { kIntersecting, kDisjoint };
enum class WitnessPreference { kAny, kIntersecting, kDisjoint };

/// Which construction produced a witness.
enum class WitnessRoute {
  kIsolatedPendant,  // member with an isolated vertex and a degree-1 vertex
  kStar,             // case analysis over sub-stars of S_p and the Q_p / R / T graphs
  kExhaustive,       // search over all graphs of order p
};

/// Hard-set witness: no member spans J, while J + e1 and J + e2 each contain a spanning member.
struct HardnessWitness {
  Graph j;
  Edge e1;
  Edge e2;
  WitnessKind kind = WitnessKind::kIntersecting;
  WitnessRoute route = WitnessRoute::kExhaustive;
};

enum class SearchStatus {
  kFound,
  kNone,          // exhaustive search proved that no witness exists
  kInconclusive,  // constructive routes failed and the order is past the exhaustive cap
};

struct WitnessSearch {
  SearchStatus status = SearchStatus::kInconclusive;
  std::optional<HardnessWitness> witness;
};

/// Looks for a witness at order p: isolated/pendant construction, then the star case
/// analysis, then (p <= kEnumerationCap) exhaustive search in canonical order.
WitnessSearch find_hard_witness(const FamilySpec& family, int p,
                                WitnessPreference preference = WitnessPreference::kAny);
WitnessSearch find_hard_witness(const OrderSlice& slice,
                                WitnessPreference preference = WitnessPreference::kAny);

/// Re-checks every defining clause from scratch.
bool validate_witness(const FamilySpec& family, const HardnessWitness& witness);
bool validate_witness(const OrderSlice& slice, const HardnessWitness& witness);

/// Greedily deletes edges of x while satisfies() stays true; the result is a core member
/// of F_{order(x)} up to isomorphism. nullopt if x does not satisfy the family.
std::optional<Graph> minimal_member_below(const FamilySpec& family, const Graph& x);

}  // namespace overlay
