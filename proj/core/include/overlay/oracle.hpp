#pragma once

#include <optional>

#include "overlay/solver.hpp"

namespace overlay {

struct OracleOptions {
  /// Maximum number of free (non-prescribed) pairs to enumerate over.
  int cap = 25;
  /// Enumerate over every pair of V(H) instead of candidate pairs only.
  bool all_pairs = false;
  /// Stop once cardinality exceeds this value (decision use).
  std::optional<int> max_value;
};

/// Ground truth by enumeration: supersets of the prescribed set are visited in order of
/// increasing cardinality (lexicographic within a cardinality) and the first one passing
/// every hyperedge is returned. Subtrees whose fully decided hyperedges already fail are
/// skipped, which does not change the visiting order of passing sets.
/// nullopt when infeasible or above max_value. Throws CapExceeded past the cap.
std::optional<Solution> brute_force_oracle(const Instance& inst, const OracleOptions& options = {});

}  // namespace overlay
