// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "overlay/classify.hpp"
#include "overlay/error.hpp"
#include "overlay/json_io.hpp"
#include "overlay/oracle.hpp"
#include "overlay/reductions.hpp"
#include "overlay/solver.hpp"
#include "support/corpus.hpp"

namespace {

using namespace overlay;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
  void require(bool condition, const std::string& what) {
    if (!condition) fail(what);
  }
};

/// Free-pair cap: every pair of an 8-vertex corpus instance, and the largest gadgets below.
constexpr int kOracleCap = 48;

std::optional<int> oracle_value(const Instance& inst, std::optional<int> max_value = std::nullopt) {
  auto s = brute_force_oracle(inst, {.cap = kOracleCap, .all_pairs = false, .max_value = max_value});
  if (!s) return std::nullopt;
  return s->value;
}

std::optional<int> exact_value(const Instance& inst) {
  auto s = solve_exact(inst);
  if (!s) return std::nullopt;
  return s->value;
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "none"; }

const Graph kP3 = Graph::path(3);
const Graph kP4 = Graph::path(4);
const Graph kK3 = Graph::complete(3);

std::vector<FamilySpec> equivalence_families() {
  return {FamilySpec::connected(),
          FamilySpec::hamiltonian(),
          FamilySpec::clique(),
          FamilySpec::explicit_members({kP3}),
          FamilySpec::explicit_members({kK3}),
          FamilySpec::star(),
          FamilySpec::matching(1).isoclosed()};
}

constexpr std::uint64_t kCorpusSeed = 20260419;
constexpr int kCorpusSize = 500;

void ac1_oracle_equivalence(Outcome& out) {
  const auto instances = corpus::solver_corpus(kCorpusSeed, kCorpusSize);
  int compared = 0;
  int feasible_pairs = 0;
  for (const FamilySpec& family : equivalence_families()) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      Instance inst(instances[i], family);
      auto exact = exact_value(inst);
      auto oracle = oracle_value(inst);
      ++compared;
      feasible_pairs += oracle ? 1 : 0;
      if (exact != oracle) {
        out.fail(to_dsl(family) + " instance " + std::to_string(i) + ": exact " + show(exact) + " vs oracle " +
                 show(oracle));
      }
    }
  }
  out.detail << compared << " (instance, family) pairs compared, " << feasible_pairs << " feasible";
}

void ac2_easy_families(Outcome& out) {
  const auto instances = corpus::solver_corpus(kCorpusSeed, kCorpusSize);
  int compared = 0;
  for (const FamilySpec& family : {FamilySpec::clique(), FamilySpec::edgeless()}) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      Instance inst(instances[i], family);
      auto poly = solve_poly(inst);
      auto oracle = oracle_value(inst);
      ++compared;
      std::optional<int> poly_value = poly ? std::optional<int>(poly->value) : std::nullopt;
      if (poly_value != oracle) {
        out.fail(to_dsl(family) + " instance " + std::to_string(i) + ": poly " + show(poly_value) + " vs oracle " +
                 show(oracle));
      }
      if (poly && !check_solution(inst, poly->edges).ok) out.fail("poly solution fails check");
    }
  }
  out.detail << compared << " pairs compared";
}

void ac3_prescribed_identity(Outcome& out) {
  // Worked case: one triple, P_3, forced 0-1.
  {
    GadgetOutput g = prescribed_to_plain(Hypergraph(3, {{0, 1, 2}}), 2, EdgeSet(3, {{0, 1}}),
                                         FamilySpec::explicit_members({kP3}));
    auto plain = oracle_value(g.instance);
    auto source = oracle_value(*g.source_instance);
    out.require(plain == 3 && source == 2 && g.k_prime == 3,
                "worked case: ov(H')=" + show(plain) + " ov(H;E)=" + show(source));
  }
  corpus::Rng rng(kCorpusSeed + 3);
  int checked = 0;
  for (const Graph& member : {kP3, kK3}) {
    const FamilySpec family = FamilySpec::explicit_members({member});
    const int m_f = member.size();
    for (int i = 0; i < 15; ++i) {
      const Hypergraph h = corpus::random_hypergraph(rng, 3, 6, 3, 3, 3);
      const EdgeSet forced = corpus::random_candidate_subset(rng, h, 3);
      GadgetOutput g = prescribed_to_plain(h, 0, forced, family);
      auto plain = oracle_value(g.instance);
      auto source = oracle_value(*g.source_instance);
      ++checked;
      if (!plain || !source || *plain != *source + static_cast<int>(forced.size()) * (m_f - 1)) {
        out.fail(to_literal(member) + " case " + std::to_string(i) + ": ov(H')=" + show(plain) +
                 " ov(H;E)=" + show(source) + " |E|=" + std::to_string(forced.size()));
      }
    }
  }
  out.detail << checked << " seeded (H,E) pairs plus the worked case";
}

void ac4_vertex_cover_identity(Outcome& out) {
  struct Case {
    const char* graph;
    Graph member;
    WitnessPreference preference;
  };
  const std::vector<Case> cases{
      {"2:0-1", kP3, WitnessPreference::kIntersecting},
      {"3:0-1,1-2", kP3, WitnessPreference::kIntersecting},
      {"3:0-1,0-2,1-2", kP3, WitnessPreference::kIntersecting},
      {"4:0-1,1-2,2-3,0-3", kP3, WitnessPreference::kIntersecting},
      {"2:0-1", kP4, WitnessPreference::kDisjoint},
      {"3:0-1,1-2", kP4, WitnessPreference::kDisjoint},
  };
  for (const Case& c : cases) {
    const OrderSlice slice{c.member.order(), {c.member}};
    WitnessSearch search = find_hard_witness(slice, c.preference);
    if (!search.witness) {
      out.fail(std::string("no witness for ") + to_literal(c.member));
      continue;
    }
    const Graph g = parse_graph_literal(c.graph);
    GadgetOutput gadget = vc_gadget(g, slice, *search.witness);
    const int claimed = static_cast<int>(gadget.instance.prescribed().size()) + vertex_cover_bf(g) + g.size();
    auto value = oracle_value(gadget.instance);
    if (value != claimed || gadget.k_prime != claimed) {
      out.fail(std::string(c.graph) + " with " + to_literal(c.member) + ": oracle " + show(value) + " claimed " +
               std::to_string(claimed));
    }
    if (std::string(c.graph) == "2:0-1" && c.member == kP3) out.require(value == 5, "worked K_2 value is not 5");
  }
  out.detail << cases.size() << " source graphs";
}

/// Seeded systems with n <= 4 and at most 4 sets; the triangle system is first.
std::vector<HittingSetInstance> hitting_corpus() {
  std::vector<HittingSetInstance> out{{3, {{0, 1}, {1, 2}, {0, 2}}, 0}};
  corpus::Rng rng(kCorpusSeed + 5);
  while (out.size() < 12) out.push_back(corpus::random_hitting_set(rng, 4, 4));
  return out;
}

void ac5_w2_iff(Outcome& out) {
  const FamilySpec family = FamilySpec::matching(1).isoclosed();
  {
    GadgetOutput g = w2_gadget({3, {{0, 1}, {1, 2}, {0, 2}}, 2}, family);
    auto ov = oracle_value(g.instance);
    out.require(ov == 2 && g.k_prime == 2 && g.instance.hypergraph().order() == 4,
                "triangle system: ov " + show(ov) + " k'=" + std::to_string(g.k_prime));
  }
  int checked = 0;
  for (HittingSetInstance hs : hitting_corpus()) {
    const int tau = hitting_set_bf(hs);
    for (int k : {tau - 1, tau}) {
      if (k < 0) continue;
      hs.k = k;
      GadgetOutput g = w2_gadget(hs, family);
      auto ov = oracle_value(g.instance);
      ++checked;
      if (!ov || ((tau <= k) != (*ov <= g.k_prime))) {
        out.fail(format_hs(hs) + " k=" + std::to_string(k) + ": ov " + show(ov) + " k'=" + std::to_string(g.k_prime));
      }
    }
  }
  out.detail << checked << " (system, k) pairs";
}

void ac6_w1_implications(Outcome& out) {
  const FamilySpec family = FamilySpec::matching(2).isoclosed();
  {
    GadgetOutput g = w1_gadget({1, {{0}}, 1}, family);
    auto ov = oracle_value(g.instance);
    out.require(ov == 7 && g.k_prime == 7, "worked n=1 case: ov " + show(ov));
  }
  const IsolatedProfile profile = isolated_profile(family);
  int checked = 0;
  for (HittingSetInstance hs : hitting_corpus()) {
    const int tau = hitting_set_bf(hs);
    for (int k : {tau - 1, tau}) {
      if (k < 0) continue;
      hs.k = k;
      GadgetOutput g = w1_gadget(hs, family);
      auto ov = oracle_value(g.instance);
      ++checked;
      const bool fits = ov && *ov <= g.k_prime;
      const bool forward = tau > k || fits;
      const bool reverse = !fits || tau <= 2 * profile.r_is * k;
      if (!forward || !reverse) {
        out.fail(format_hs(hs) + " k=" + std::to_string(k) + ": ov " + show(ov) + " k'=" + std::to_string(g.k_prime));
      }
    }
  }
  out.detail << checked << " (system, k) pairs";
}

void ac7_lift_identity(Outcome& out) {
  const OrderSlice p3{3, {kP3}};
  const OrderSlice k3{3, {kK3}};
  auto check = [&](const Hypergraph& h, const EdgeSet& forced, const OrderSlice& slice, std::optional<int> source_want,
                   std::optional<int> lifted_want) {
    GadgetOutput g = lift_order(h, 0, forced, slice);
    auto source = oracle_value(*g.source_instance);
    auto lifted = oracle_value(g.instance);
    const long offset = g.claim.offset;
    bool ok = source && lifted && *lifted == *source + offset;
    if (source_want) ok = ok && source == source_want && lifted == lifted_want;
    if (!ok) {
      out.fail("lift of " + format_hg(h) + " source " + show(source) + " lifted " + show(lifted) + " offset " +
               std::to_string(offset));
    }
  };
  check(Hypergraph(2, {{0, 1}}), EdgeSet(2), p3, 0, 2);
  check(Hypergraph(3, {{0, 1}, {1, 2}}), EdgeSet(3), k3, 2, 6);
  corpus::Rng rng(kCorpusSeed + 7);
  int checked = 2;
  for (const OrderSlice& slice : {p3, k3}) {
    for (int i = 0; i < 6; ++i) {
      const Hypergraph h = corpus::random_hypergraph(rng, 2, 5, 4, 2, 2);
      EdgeSet forced = rng.coin(50) ? corpus::random_candidate_subset(rng, h, 2) : EdgeSet(h.order());
      check(h, forced, slice, std::nullopt, std::nullopt);
      ++checked;
    }
  }
  out.detail << checked << " lifted instances";
}

void ac8_witness_search(Outcome& out) {
  auto found = [&](const OrderSlice& slice, WitnessPreference preference, const std::string& label) {
    WitnessSearch s = find_hard_witness(slice, preference);
    out.require(s.status == SearchStatus::kFound && s.witness && validate_witness(slice, *s.witness),
                label + " has no validated witness");
    return s;
  };
  found({3, {kP3}}, WitnessPreference::kAny, "{P_3}");
  found({4, {kP4}}, WitnessPreference::kAny, "{P_4}");
  WitnessSearch disjoint = found({4, {kP4}}, WitnessPreference::kDisjoint, "{P_4} disjoint");
  if (disjoint.witness) {
    out.require(disjoint.witness->kind == WitnessKind::kDisjoint &&
                    are_isomorphic(disjoint.witness->j, Graph::matching(2)),
                "{P_4} disjoint witness is not 2K_2-based");
  }
  out.require(find_hard_witness(OrderSlice{3, {kK3}}).status == SearchStatus::kNone, "{K_3} reported a witness");
  out.require(find_hard_witness(OrderSlice{3, {Graph::edgeless(3)}}).status == SearchStatus::kNone,
              "{edgeless 3} reported a witness");
  WitnessSearch pendant = found({4, {Graph(4, {{0, 1}})}}, WitnessPreference::kAny, "{K_2 + 2K_1}");
  out.require(pendant.witness && pendant.witness->route == WitnessRoute::kIsolatedPendant,
              "{K_2 + 2K_1} witness did not come from the isolated/pendant construction");

  // Free slices of order 4..6 whose first member has an isolated and a pendant vertex.
  corpus::Rng rng(kCorpusSeed + 8);
  int fired = 0;
  for (int trial = 0; trial < 200 && fired < 20; ++trial) {
    const int p = rng.between(4, 6);
    Graph g = corpus::random_graph(rng, p - 1, 40).padded(1);
    bool pendant_vertex = false;
    for (int v = 0; v < p; ++v) pendant_vertex = pendant_vertex || g.degree(v) == 1;
    if (!pendant_vertex) continue;
    std::vector<Graph> members{g};
    for (int extra = 0; extra < 2; ++extra) {
      Graph h = corpus::random_graph(rng, p, 50);
      bool comparable = false;
      for (const Graph& m : members) comparable = comparable || spanning_subgraph_iso(m, h) || spanning_subgraph_iso(h, m);
      if (!comparable) members.push_back(h);
    }
    WitnessSearch s = find_hard_witness(OrderSlice{p, members});
    out.require(s.witness && s.witness->route == WitnessRoute::kIsolatedPendant &&
                    validate_witness(OrderSlice{p, members}, *s.witness),
                "isolated/pendant construction missed on " + to_literal(g));
    ++fired;
  }
  out.require(fired >= 20, "too few free slices generated");
  out.detail << "fixed slices plus " << fired << " random free slices";
}

void ac9_size_rejection(Outcome& out) {
  corpus::Rng rng(kCorpusSeed + 9);
  int fired = 0;
  int checked = 0;
  BranchOptions raw;
  raw.use_size_reject = false;
  for (int i = 0; i < 100; ++i) {
    const Hypergraph h = corpus::random_hypergraph(rng, 4, 8, 4, 3, 7);
    for (const FamilySpec& family : {FamilySpec::connected(), FamilySpec::hamiltonian()}) {
      Instance inst(h, family);
      for (int k = 0; k <= 8; ++k) {
        if (!size_reject(inst, k)) continue;
        ++fired;
        if (solve_branch(inst, k, raw)) out.fail(to_dsl(family) + " instance " + std::to_string(i) + " at k=" +
                                                 std::to_string(k));
      }
      ++checked;
    }
  }
  out.require(fired > 0, "size rejection never fired");
  out.detail << checked << " instance/family pairs, " << fired << " rejections confirmed";
}

void ac10_determinism(Outcome& out) {
  const auto instances = corpus::solver_corpus(kCorpusSeed, kCorpusSize);
  const auto again = corpus::solver_corpus(kCorpusSeed, kCorpusSize);
  out.require(instances == again, "corpus generation is not deterministic");
  for (const Hypergraph& h : instances) {
    if (!(parse_hg(format_hg(h)) == h)) out.fail("hg round trip on " + format_hg(h));
  }
  for (std::size_t i = 0; i < instances.size(); i += 10) {
    Instance inst(instances[i], FamilySpec::connected());
    auto a = solve_exact(inst);
    auto b = solve_exact(inst);
    out.require(a && b && a->value == b->value && a->edges == b->edges, "solve_exact differs between runs");
  }
  std::vector<FamilySpec> families = equivalence_families();
  families.push_back(FamilySpec::matching(2).isoclosed());
  families.push_back(FamilySpec::min_degree(2).encompassed());
  families.push_back(parse_family("isoclose(explicit{3:0-1,1-2,0-2;4:0-1,0-2,0-3})"));
  for (const FamilySpec& f : families) {
    out.require(parse_family(to_dsl(f)) == f, "DSL round trip on " + to_dsl(f));
    out.require(classification_to_json(f, classify(f, 5)) == classification_to_json(f, classify(f, 5)),
                "classification differs between runs for " + to_dsl(f));
  }
  for (const HittingSetInstance& hs : hitting_corpus()) {
    out.require(parse_hs(format_hs(hs), hs.k) == hs, "hs round trip");
  }
  GadgetOutput g = w1_gadget({2, {{0, 1}, {1}}, 1}, FamilySpec::matching(2).isoclosed());
  out.require(gadget_to_json(gadget_from_json(gadget_to_json(g))) == gadget_to_json(g), "descriptor round trip");
  out.detail << instances.size() << " hypergraphs, " << families.size() << " families";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 oracle equivalence", ac1_oracle_equivalence},
      {"AC2 easy-family correctness", ac2_easy_families},
      {"AC3 prescribed-to-plain identity", ac3_prescribed_identity},
      {"AC4 vertex-cover gadget identity", ac4_vertex_cover_identity},
      {"AC5 exact hitting-set equivalence", ac5_w2_iff},
      {"AC6 gap hitting-set implications", ac6_w1_implications},
      {"AC7 order-lifting identity", ac7_lift_identity},
      {"AC8 hardness witness search", ac8_witness_search},
      {"AC9 size rejection soundness", ac9_size_rejection},
      {"AC10 determinism and round trips", ac10_determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << " (" << outcome.detail.str() << "; "
              << static_cast<int>(seconds * 1000) << " ms)" << std::endl;
    failures += outcome.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
