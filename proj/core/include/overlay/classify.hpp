#pragma once

#include <optional>
#include <string>
#include <vector>

#include "overlay/family.hpp"
#include "overlay/witness.hpp"

namespace overlay {

/// Extremal members that size the hitting-set gadgets.
struct IsolatedProfile {
  Graph f_is;  // minimizes (non-isolated count, min non-isolated degree)
  int r_is = 0;
  int delta_is = 0;
  int n_is = 0;
  int m_is = 0;
  Graph f_e;  // minimizes edge count
  int n_e = 0;
  int m_e = 0;
  std::optional<int> uniform_r;  // set when all sampled members share one non-isolated count
};

/// Profile over the explicit members, or over base members of order <= kEnumerationCap.
/// Ties break on smaller order, then lexicographically smaller canonical edge list.
/// Throws PreconditionError if a member is edgeless or the family is a plain builtin.
IsolatedProfile isolated_profile(const FamilySpec& family);

enum class OrderVerdictKind { kEmpty, kPolyClique, kPolyEdgeless, kNpComplete, kUnknown };

struct OrderVerdict {
  int p = 0;
  OrderVerdictKind kind = OrderVerdictKind::kUnknown;
  std::optional<HardnessWitness> witness;
  /// Order at which the witness lives; below p when hardness is lifted from hypographs.
  int witness_order = 0;
  int lift_depth = 0;
  std::string note;
};

enum class ParamVerdictKind { kFpt, kW1Hard, kW2Hard, kUnknown };
enum class FptReason { kNone, kFinite, kDensityBound, kEdgelessMember };

struct ParamVerdict {
  ParamVerdictKind kind = ParamVerdictKind::kUnknown;
  FptReason reason = FptReason::kNone;
  std::string detail;
};

struct Classification {
  std::vector<OrderVerdict> orders;  // p = 1 .. p_max
  ParamVerdict parameterized;
};

/// EMPTY / POLY_CLIQUE / POLY_EDGELESS when the order is easy, nullopt otherwise.
std::optional<OrderVerdictKind> easy_order_kind(const FamilySpec& family, int p);

OrderVerdict classify_order(const FamilySpec& family, int p);
ParamVerdict classify_parameterized(const FamilySpec& family);
Classification classify(const FamilySpec& family, int p_max);

std::string to_string(OrderVerdictKind kind);
std::string to_string(ParamVerdictKind kind);
std::string to_string(FptReason reason);

}  // namespace overlay
