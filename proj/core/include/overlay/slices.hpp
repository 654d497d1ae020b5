#pragma once

#include <vector>

#include "overlay/family.hpp"
#include "overlay/graph.hpp"

namespace overlay {

/// Explicit order slice F_p: members of exactly `order` vertices, deduplicated up to isomorphism.
struct OrderSlice {
  int order = 0;
  std::vector<Graph> members;
};

/// Materializes F_p. Throws CapExceeded when a builtin would need enumeration past kEnumerationCap.
OrderSlice slice_of(const FamilySpec& family, int p);

/// Minimal members under spanning-subgraph containment; the result is free.
OrderSlice core_of(const OrderSlice& slice);

/// All vertex-deleted subgraphs of members, deduplicated up to isomorphism, at order p - 1.
/// Throws PreconditionError for p < 2.
OrderSlice hypographs(const OrderSlice& slice);

/// The slice as an explicit family (no closure).
FamilySpec as_family(const OrderSlice& slice);

}  // namespace overlay
