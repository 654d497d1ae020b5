#pragma once

namespace overlay {

/// Largest graph order; one adjacency row is one 64-bit word.
inline constexpr int kMaxGraphOrder = 64;

/// Largest order for which family slices of builtins are materialized by enumerating
/// all graphs up to isomorphism, and for which witness search may run exhaustively.
inline constexpr int kEnumerationCap = 6;

/// Largest order accepted by the Hamiltonicity subset DP.
inline constexpr int kHamiltonianCap = 24;

/// Current hyperedge-size cap. Defaults to 16, or to OVERLAY_MAX_HYPEREDGE when that
/// environment variable holds a positive integer at first use.
int max_hyperedge_size();

/// Overrides the hyperedge-size cap for the rest of the process.
void set_max_hyperedge_size(int cap);

}  // namespace overlay
