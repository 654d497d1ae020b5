#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "overlay/edge_set.hpp"
#include "overlay/family.hpp"
#include "overlay/graph.hpp"
#include "overlay/hypergraph.hpp"
#include "overlay/slices.hpp"
#include "overlay/solver.hpp"
#include "overlay/witness.hpp"

namespace overlay {

/// Universe [0, n) and a list of nonempty subsets; k is the budget.
struct HittingSetInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
  int k = 0;

  friend bool operator==(const HittingSetInstance&, const HittingSetInstance&) = default;
};

/// `u <n>` then one `s e1 e2 ...` line per set; `#` comments.
HittingSetInstance parse_hs(std::string_view text, int k = 0);
std::string format_hs(const HittingSetInstance& hs);

enum class GadgetKind { kPrescribedToPlain, kLiftOrder, kVertexCover, kW1, kW2 };

enum class ClaimKind {
  kOffsetIdentity,  // ov(gadget) == ov(source) + offset
  kExactValue,      // ov(gadget; forced) == value
  kIff,             // tau <= k  <=>  ov <= k'
  kGapImplication,  // tau <= k => ov <= k'   and   ov <= k' => tau <= factor * k
};

struct Claim {
  ClaimKind kind = ClaimKind::kExactValue;
  long offset = 0;
  long value = 0;
  long gap_factor = 0;
};

struct GadgetOutput {
  GadgetKind kind = GadgetKind::kPrescribedToPlain;
  /// Generated instance; forced edges are its prescribed set, its budget is k'.
  Instance instance;
  int k_prime = 0;
  Claim claim;
  /// vertex_names[i] names gadget vertex i (a bijection onto [0, N)).
  std::vector<std::string> vertex_names;

  std::optional<Instance> source_instance{};
  std::optional<HittingSetInstance> source_hitting_set{};
  std::optional<Graph> source_graph{};
  std::optional<HardnessWitness> witness{};
};

std::string to_string(GadgetKind kind);
GadgetKind parse_gadget_kind(std::string_view name);

/// Replaces each forced edge e = uv by a fresh hyperedge {u, v} + X_e, |X_e| = p - 2, where p is
/// the order of a minimum-edge member F of an order slice without the edgeless graph
/// (smallest such order unless `order` is given). k' = k + |E| (m_F - 1).
GadgetOutput prescribed_to_plain(const Hypergraph& h, int k, const EdgeSet& forced,
                                 const FamilySpec& family, std::optional<int> order = std::nullopt);

/// Lifts a (p-1)-uniform prescribed instance to order p: a fresh x_S per hyperedge, hyperedges
/// S + x_S, forced stars x_S v. The source family is hypographs(fp). k = k^- + (p-1)|E(H^-)|.
GadgetOutput lift_order(const Hypergraph& h_minus, int k_minus, const EdgeSet& forced_minus,
                        const OrderSlice& fp);

/// Vertex-cover reduction driven by a hard-set witness of fp. Intersecting witnesses build
/// the {z_e, y_u, y_v} gadget, disjoint ones the four-vertex x^e / y^e gadget.
/// Claimed ov(H_G; forced) = |forced| + vc(G) + |E(G)|.
GadgetOutput vc_gadget(const Graph& g, const OrderSlice& fp, const HardnessWitness& witness);

/// Gap hitting-set reduction for isolated-closed families without edgeless members.
/// k' = C(r_is - 1, 2) m_e + k delta_is.
GadgetOutput w1_gadget(const HittingSetInstance& hs, const FamilySpec& family);

/// Exact hitting-set reduction; requires all members to share one non-isolated count r.
/// k' = C(r - 1, 2) m_e + k delta.
GadgetOutput w2_gadget(const HittingSetInstance& hs, const FamilySpec& family);

/// Minimum vertex cover by subset enumeration (<= 16 vertices).
int vertex_cover_bf(const Graph& g);
/// Minimum hitting set by subset enumeration (universe <= 20).
int hitting_set_bf(const HittingSetInstance& hs);

struct IdentityReport {
  enum class Status { kPass, kFail, kUnverifiable };
  Status status = Status::kUnverifiable;
  GadgetKind kind = GadgetKind::kPrescribedToPlain;
  ClaimKind claim = ClaimKind::kExactValue;
  long claimed = 0;
  std::optional<long> gadget_value;
  std::optional<long> source_value;
  std::optional<int> tau;
  bool forward_ok = true;
  bool reverse_ok = true;
  std::string detail;
};

struct VerifyOptions {
  /// Free-pair cap handed to the oracle.
  int oracle_cap = 48;
};

/// Runs the brute-force oracle on the gadget (and source where referenced) and compares
/// against the claim. Oracle caps surface as kUnverifiable, never as a pass.
IdentityReport verify_identity(const GadgetOutput& gadget, const VerifyOptions& options = {});

std::string to_string(IdentityReport::Status status);

}  // namespace overlay
