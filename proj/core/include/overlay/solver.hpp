#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "overlay/edge_set.hpp"
#include "overlay/family.hpp"
#include "overlay/hypergraph.hpp"

namespace overlay {

enum class Mode { kOverlay, kEncompass };

/// Overlay instance (H, F, k, prescribed edges). The hypergraph is normalized on
/// construction and encompass mode is rewritten as overlay with encompass(F).
class Instance {
 public:
  Instance(Hypergraph h, FamilySpec family, EdgeSet prescribed = {},
           std::optional<int> k = std::nullopt, Mode mode = Mode::kOverlay);

  const Hypergraph& hypergraph() const { return h_; }
  /// Family actually overlaid (encompass(F) in encompass mode).
  const FamilySpec& family() const { return family_; }
  const EdgeSet& prescribed() const { return prescribed_; }
  std::optional<int> budget() const { return k_; }
  Mode mode() const { return mode_; }

 private:
  Hypergraph h_;
  FamilySpec family_;
  EdgeSet prescribed_;
  std::optional<int> k_;
  Mode mode_;
};

/// Per-hyperedge evidence: a family member and where its vertices land in V(H).
struct Certificate {
  std::size_t hyperedge = 0;
  Graph member;
  std::vector<int> map;  // member vertex -> hypergraph vertex
  std::string predicate;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

struct Solution {
  EdgeSet edges;
  int value = 0;
  std::vector<Certificate> certificates;
  SearchStats stats;
  std::string engine;
};

struct CheckResult {
  bool ok = false;
  bool prescribed_ok = false;
  std::optional<std::size_t> failing_hyperedge;
  std::vector<Certificate> certificates;
};

/// Verifies prescribed containment and every hyperedge; throws PreconditionError on
/// edges outside [0, order(H)).
CheckResult check_solution(const Instance& inst, const EdgeSet& edges);

/// Re-validates one certificate against an edge set.
bool validate_certificate(const Instance& inst, const EdgeSet& edges, const Certificate& cert);

/// Every hyperedge size has a member of that order.
bool feasible(const Instance& inst);

/// Easy families only (every hyperedge order EMPTY / POLY_CLIQUE / POLY_EDGELESS);
/// throws PreconditionError otherwise. nullopt when infeasible.
std::optional<Solution> solve_poly(const Instance& inst);

/// Certified "no": some hyperedge has size >= g(k + 1). Throws PreconditionError when
/// the family has no density bound.
bool size_reject(const Instance& inst, int k);

struct BranchOptions {
  int workers = 1;
  /// Memoize failed edge states with their remaining budget. Switches branching from
  /// exclusive (branch i forbids the pairs of branches < i) to plain, where the memo pays off.
  bool transposition = false;
  /// Apply size rejection first when the family has a density bound.
  bool use_size_reject = true;
};

/// Solution with at most k edges (prescribed edges included) or nullopt.
/// Throws PreconditionError on an infeasible instance or k < 0.
std::optional<Solution> solve_branch(const Instance& inst, int k, const BranchOptions& options = {});

/// Optimum by iterative deepening over solve_branch; nullopt when infeasible.
std::optional<Solution> solve_exact(const Instance& inst, const BranchOptions& options = {});

/// Admissible bound on edges still to add: sum over a greedy vertex-disjoint selection of
/// unsatisfied hyperedges of max(0, min member edges - edges already induced).
int lower_bound(const Hypergraph& h, const FamilySpec& family, const EdgeSet& present,
                std::span<const std::size_t> unsatisfied);

/// Builds per-hyperedge certificates for a solution edge set (which must pass).
std::vector<Certificate> certificates_for(const Instance& inst, const EdgeSet& edges);

}  // namespace overlay
