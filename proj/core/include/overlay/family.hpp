#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "overlay/graph.hpp"

namespace overlay {

enum class BuiltinKind {
  kConnected,
  kHamiltonian,
  kClique,
  kEdgeless,
  kStar,              // {S_p : p >= 2}
  kMinDegree,         // mindeg(d)
  kEdgeConnectivity,  // edgeconn(c)
  kMatching,          // the single graph cK_2
};

struct BuiltinFamily {
  BuiltinKind kind = BuiltinKind::kConnected;
  int param = 0;

  friend bool operator==(const BuiltinFamily&, const BuiltinFamily&) = default;
};

struct ExplicitFamily {
  std::vector<Graph> members;

  friend bool operator==(const ExplicitFamily&, const ExplicitFamily&) = default;
};

/// Closure applied on top of the base family after modifier normalization.
///   kIsolated:   isoclose(X), members of X padded with any number of isolated vertices.
///   kSupergraph: encompass(X), every graph containing a member of X as a subgraph.
/// encompass absorbs isoclose in either nesting order, and each modifier is idempotent.
enum class Closure { kNone, kIsolated, kSupergraph };

/// Lower bound f on member edge counts by order, and its threshold g(k) = min{l : f(l) >= k}.
class DensityBound {
 public:
  enum class Form {
    kTree,        // f(n) = n - 1
    kCycle,       // f(n) = n
    kComplete,    // f(n) = n(n-1)/2
    kHalfDegree,  // f(n) = ceil(c*n/2)
    kFinite,      // f(n) = 0 for n <= N, n otherwise (N = largest member order)
  };

  DensityBound(Form form, int param) : form_(form), param_(param) {}

  long f(int n) const;
  int g(long k) const;
  std::string describe() const;
  Form form() const { return form_; }
  int param() const { return param_; }

 private:
  Form form_;
  int param_;
};

struct ExplicitIndex;

/// Algebraic description of a graph family: builtin predicate or explicit finite list,
/// optionally closed under isolated-vertex padding or under supergraphs.
class FamilySpec {
 public:
  /// Defaults to `connected`.
  FamilySpec() = default;

  static FamilySpec builtin(BuiltinKind kind, int param = 0);
  static FamilySpec connected() { return builtin(BuiltinKind::kConnected); }
  static FamilySpec hamiltonian() { return builtin(BuiltinKind::kHamiltonian); }
  static FamilySpec clique() { return builtin(BuiltinKind::kClique); }
  static FamilySpec edgeless() { return builtin(BuiltinKind::kEdgeless); }
  static FamilySpec star() { return builtin(BuiltinKind::kStar); }
  static FamilySpec min_degree(int d) { return builtin(BuiltinKind::kMinDegree, d); }
  static FamilySpec edge_connectivity(int c) { return builtin(BuiltinKind::kEdgeConnectivity, c); }
  static FamilySpec matching(int c) { return builtin(BuiltinKind::kMatching, c); }
  static FamilySpec explicit_members(std::vector<Graph> members);

  /// isoclose(*this), normalized.
  FamilySpec isoclosed() const;
  /// encompass(*this), normalized.
  FamilySpec encompassed() const;
  /// Same base without closure.
  FamilySpec base_family() const;

  bool is_builtin() const { return std::holds_alternative<BuiltinFamily>(base_); }
  bool is_explicit() const { return std::holds_alternative<ExplicitFamily>(base_); }
  const BuiltinFamily& builtin_base() const { return std::get<BuiltinFamily>(base_); }
  const ExplicitFamily& explicit_base() const { return std::get<ExplicitFamily>(base_); }
  Closure closure() const { return closure_; }

  /// Core (minimal members under spanning containment) of the explicit base at order p.
  const std::vector<Graph>& explicit_core(int p) const;
  /// Explicit base members of order <= p, minimal under (non-spanning) containment.
  const std::vector<Graph>& explicit_members_up_to(int p) const;

  friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
    return a.base_ == b.base_ && a.closure_ == b.closure_;
  }

 private:
  std::variant<BuiltinFamily, ExplicitFamily> base_;
  Closure closure_ = Closure::kNone;
  std::shared_ptr<const ExplicitIndex> index_;
};

/// Family DSL: connected | hamiltonian | clique | edgeless | star | mindeg(d) |
/// edgeconn(c) | matching(c) | explicit{<graph>;...}, optionally wrapped in
/// encompass(...) / isoclose(...). Throws ParseError with position and expected tokens.
FamilySpec parse_family(std::string_view text);
std::string to_dsl(const FamilySpec& family);

/// Smallest order of a base member, or nullopt for an empty base.
std::optional<int> min_base_order(const FamilySpec& family);

/// F_p is nonempty. Throws PreconditionError for p < 1.
bool has_member_of_order(const FamilySpec& family, int p);

/// g has a spanning subgraph in F_{order(g)}. Throws CapExceeded above the hyperedge cap.
bool satisfies(const FamilySpec& family, const Graph& g);

/// Concrete evidence for satisfies(): a member and an injective map member -> g.
/// For closed families the member is a base member and unmapped g vertices are padding.
struct MemberEmbedding {
  Graph member;
  std::vector<int> map;
  std::string predicate;
};
std::optional<MemberEmbedding> certify(const FamilySpec& family, const Graph& g);

/// Exact membership of g itself in the family.
bool is_member(const FamilySpec& family, const Graph& g);

/// Minimum edge count over members of order p; nullopt when F_p is empty.
std::optional<int> min_member_edges(const FamilySpec& family, int p);

/// Closed under edge addition at fixed order.
bool is_monotone(const FamilySpec& family);
/// Closed under adding isolated vertices.
bool is_isolated_closed(const FamilySpec& family);
bool has_edgeless_member(const FamilySpec& family);
bool is_finite(const FamilySpec& family);
std::optional<DensityBound> density_bound(const FamilySpec& family);

/// Members of the base family at exactly order q, up to isomorphism.
/// Builtins with a direct construction work at any order; the rest enumerate
/// and are limited to kEnumerationCap.
std::vector<Graph> base_members_of_order(const FamilySpec& family, int q);

std::string builtin_name(BuiltinKind kind);

}  // namespace overlay
