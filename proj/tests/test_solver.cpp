#include <gtest/gtest.h>

#include "overlay/error.hpp"
#include "overlay/oracle.hpp"
#include "overlay/solver.hpp"
#include "overlay/subgraph.hpp"
#include "support/corpus.hpp"
#include "support/naive.hpp"

namespace {

using namespace overlay;

const Hypergraph kSunflower(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
const FamilySpec kP3 = FamilySpec::explicit_members({Graph::path(3)});
const FamilySpec kK3 = FamilySpec::explicit_members({Graph::complete(3)});

std::vector<FamilySpec> solver_families() {
  return {FamilySpec::connected(), FamilySpec::hamiltonian(), FamilySpec::clique(), kP3, kK3,
          FamilySpec::star(), FamilySpec::matching(1).isoclosed()};
}

int value_of(const Instance& inst) {
  auto s = solve_exact(inst);
  return s ? s->value : -1;
}

// --- check_solution --------------------------------------------------------

TEST(CheckSolution, Examples) {
  const Instance tri(Hypergraph(3, {{0, 1, 2}}), FamilySpec::connected());
  EXPECT_TRUE(check_solution(tri, EdgeSet(3, {{0, 1}, {1, 2}})).ok);
  const CheckResult bad = check_solution(tri, EdgeSet(3, {{0, 1}}));
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.failing_hyperedge);
  EXPECT_EQ(*bad.failing_hyperedge, 0U);
  EXPECT_THROW(check_solution(tri, EdgeSet(5, {{0, 4}})), PreconditionError);

  const Instance pre(Hypergraph(3, {{0, 1, 2}}), kP3, EdgeSet(3, {{0, 1}}));
  const CheckResult missing = check_solution(pre, EdgeSet(3, {{0, 2}, {1, 2}}));
  EXPECT_FALSE(missing.prescribed_ok);
  EXPECT_FALSE(missing.ok);
}

TEST(CheckSolution, CertificatesAreValid) {
  const Instance inst(kSunflower, FamilySpec::connected());
  const EdgeSet edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const CheckResult r = check_solution(inst, edges);
  ASSERT_TRUE(r.ok);
  ASSERT_EQ(r.certificates.size(), 3U);
  for (const Certificate& c : r.certificates) EXPECT_TRUE(validate_certificate(inst, edges, c));
}

TEST(Instance, RejectsBadInput) {
  EXPECT_THROW(Instance(kSunflower, FamilySpec::connected(), EdgeSet(9, {{0, 8}})), PreconditionError);
  EXPECT_THROW(Instance(kSunflower, FamilySpec::connected(), {}, -1), PreconditionError);
  EXPECT_EQ(Instance(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}}), FamilySpec::connected()).hypergraph().hyperedge_count(),
            1U);
}

// --- feasibility and easy families -----------------------------------------

TEST(Feasible, Examples) {
  EXPECT_TRUE(feasible(Instance(kSunflower, FamilySpec::connected())));
  EXPECT_FALSE(feasible(Instance(Hypergraph(4, {{0, 1, 2, 3}}), kK3)));
  EXPECT_FALSE(feasible(Instance(Hypergraph(2, {{0, 1}}), FamilySpec::hamiltonian())));
}

TEST(SolvePoly, Examples) {
  const Instance clique(kSunflower, FamilySpec::clique());
  auto s = solve_poly(clique);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->value, 7);
  EXPECT_TRUE(check_solution(clique, s->edges).ok);

  auto e = solve_poly(Instance(kSunflower, FamilySpec::edgeless()));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->value, 0);

  EXPECT_FALSE(solve_poly(Instance(Hypergraph(4, {{0, 1, 2, 3}}), kK3)));
  EXPECT_THROW(solve_poly(Instance(kSunflower, FamilySpec::connected())), PreconditionError);
}

TEST(SolvePoly, MatchesNaiveEnumeration) {
  corpus::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Hypergraph h = corpus::random_hypergraph(rng, 3, 6, 4, 2, 5);
    for (const FamilySpec& f : {FamilySpec::clique(), FamilySpec::edgeless()}) {
      auto s = solve_poly(Instance(h, f));
      const auto expected = naive::overlay_number(h, f);
      ASSERT_EQ(s.has_value(), expected.has_value());
      if (s) EXPECT_EQ(s->value, *expected);
    }
  }
}

// --- size rejection ------------------------------------------------------------

TEST(SizeReject, Examples) {
  const Instance big(Hypergraph(6, {{0, 1, 2, 3, 4, 5}}), FamilySpec::connected());
  EXPECT_TRUE(size_reject(big, 4));
  EXPECT_FALSE(size_reject(big, 5));
  const Instance cycle(Hypergraph(5, {{0, 1, 2, 3, 4}}), FamilySpec::hamiltonian());
  EXPECT_TRUE(size_reject(cycle, 4));
  EXPECT_FALSE(size_reject(cycle, 5));
  EXPECT_THROW(size_reject(Instance(kSunflower, FamilySpec::edgeless()), 1), PreconditionError);
}

TEST(SizeReject, IsSound) {
  corpus::Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h = corpus::random_hypergraph(rng, 3, 7, 4, 2, 5);
    for (const FamilySpec& f : {FamilySpec::connected(), FamilySpec::hamiltonian()}) {
      const Instance inst(h, f);
      if (!feasible(inst)) continue;
      const int opt = value_of(inst);
      for (int k = 0; k < opt + 2; ++k) {
        if (size_reject(inst, k)) EXPECT_LT(k, opt);
      }
    }
  }
}

// --- branch and bound --------------------------------------------------------

TEST(SolveBranch, Examples) {
  auto s = solve_branch(Instance(kSunflower, FamilySpec::connected()), 4);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->value, 4);
  EXPECT_FALSE(solve_branch(Instance(kSunflower, FamilySpec::connected()), 3));

  EXPECT_FALSE(solve_branch(Instance(Hypergraph(3, {{0, 1, 2}}), kP3), 1));

  const Instance pre(Hypergraph(3, {{0, 1, 2}}), kP3, EdgeSet(3, {{0, 1}}));
  auto p = solve_branch(pre, 2);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->value, 2);
  EXPECT_TRUE(p->edges.contains({0, 1}));
  EXPECT_TRUE(check_solution(pre, p->edges).ok);

  EXPECT_THROW(solve_branch(Instance(kSunflower, FamilySpec::connected()), -1), PreconditionError);
  EXPECT_THROW(solve_branch(Instance(Hypergraph(4, {{0, 1, 2, 3}}), kK3), 6), PreconditionError);
}

TEST(SolveExact, Examples) {
  EXPECT_EQ(value_of(Instance(Hypergraph(4, {{0, 1, 2, 3}}), FamilySpec::connected())), 3);
  EXPECT_EQ(value_of(Instance(Hypergraph(4, {{0, 1, 2, 3}}), FamilySpec::hamiltonian())), 4);
  EXPECT_EQ(value_of(Instance(Hypergraph(4, {{0, 1, 2, 3}}), kK3)), -1);
}

TEST(SolveExact, OverlappingTriplesWithPathMembers) {
  // Every triple needs two of its own pairs; 12 and 23 are shared but no two triples
  // can share both their pairs, so the optimum is checked against plain enumeration.
  const Hypergraph h(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  const auto expected = naive::overlay_number(h, kP3);
  ASSERT_TRUE(expected);
  EXPECT_EQ(*expected, 4);
  EXPECT_EQ(value_of(Instance(h, kP3)), *expected);
}

TEST(SolveExact, SolutionsPassAndCarryCertificates) {
  const auto corpus = corpus::solver_corpus(33, 60);
  for (const Hypergraph& h : corpus) {
    for (const FamilySpec& f : solver_families()) {
      const Instance inst(h, f);
      auto s = solve_exact(inst);
      if (!s) {
        EXPECT_FALSE(feasible(inst));
        continue;
      }
      EXPECT_EQ(s->value, static_cast<int>(s->edges.size()));
      EXPECT_TRUE(check_solution(inst, s->edges).ok);
      ASSERT_EQ(s->certificates.size(), inst.hypergraph().hyperedge_count());
      for (const Certificate& c : s->certificates) EXPECT_TRUE(validate_certificate(inst, s->edges, c));
    }
  }
}

TEST(SolveExact, EdgesStayInsideHyperedges) {
  const Hypergraph h(7, {{0, 1, 2}, {2, 3, 4}});
  auto s = solve_exact(Instance(h, FamilySpec::connected()));
  ASSERT_TRUE(s);
  const EdgeSet candidates = candidate_edges(h);
  for (const Edge& e : s->edges) {
    EXPECT_TRUE(candidates.contains(e));
    EXPECT_LT(e.v, 5);
  }
}

TEST(SolveExact, MatchesNaiveOverlayNumber) {
  corpus::Rng rng(34);
  for (int trial = 0; trial < 25; ++trial) {
    const Hypergraph h = corpus::random_hypergraph(rng, 3, 6, 3, 2, 4);
    for (const FamilySpec& f : solver_families()) {
      const auto expected = naive::overlay_number(h, f);
      const int got = value_of(Instance(h, f));
      EXPECT_EQ(got, expected ? *expected : -1) << to_dsl(f) << "\n" << format_hg(h);
    }
  }
}

TEST(SolveExact, Minimality) {
  const auto corpus = corpus::solver_corpus(35, 40);
  for (const Hypergraph& h : corpus) {
    for (const FamilySpec& f : solver_families()) {
      const Instance inst(h, f);
      auto s = solve_exact(inst);
      if (!s || s->value == 0) continue;
      EXPECT_FALSE(solve_branch(inst, s->value - 1)) << to_dsl(f);
    }
  }
}

TEST(SolveBranch, MonotoneBudget) {
  const auto corpus = corpus::solver_corpus(36, 40);
  for (const Hypergraph& h : corpus) {
    for (const FamilySpec& f : solver_families()) {
      const Instance inst(h, f);
      if (!feasible(inst)) continue;
      bool found = false;
      for (int k = 0; k <= 12; ++k) {
        const bool now = solve_branch(inst, k).has_value();
        EXPECT_TRUE(now || !found) << to_dsl(f) << " k=" << k;
        found = now;
      }
    }
  }
}

TEST(SolveBranch, OptionsAgree) {
  const auto corpus = corpus::solver_corpus(37, 60);
  for (const Hypergraph& h : corpus) {
    for (const FamilySpec& f : solver_families()) {
      const Instance inst(h, f);
      const int base = value_of(inst);
      auto with = [&](BranchOptions o) {
        auto s = solve_exact(inst, o);
        return s ? s->value : -1;
      };
      EXPECT_EQ(with({.workers = 1, .transposition = true}), base);
      EXPECT_EQ(with({.workers = 4, .transposition = false}), base);
      EXPECT_EQ(with({.workers = 3, .transposition = true}), base);
      EXPECT_EQ(with({.workers = 1, .transposition = false, .use_size_reject = false}), base);
    }
  }
}

TEST(SolveBranch, SingleThreadedResultIsDeterministic) {
  const auto corpus = corpus::solver_corpus(38, 30);
  for (const Hypergraph& h : corpus) {
    const Instance inst(h, FamilySpec::connected());
    auto a = solve_exact(inst);
    auto b = solve_exact(inst);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) EXPECT_EQ(a->edges, b->edges);
  }
}

TEST(Prescribed, EmptySetMatchesPlainInstance) {
  const auto corpus = corpus::solver_corpus(39, 40);
  for (const Hypergraph& h : corpus) {
    for (const FamilySpec& f : solver_families()) {
      EXPECT_EQ(value_of(Instance(h, f, EdgeSet(h.order()))), value_of(Instance(h, f)));
    }
  }
}

TEST(Prescribed, MatchesNaiveOverlayNumber) {
  corpus::Rng rng(40);
  for (int trial = 0; trial < 30; ++trial) {
    const Hypergraph h = corpus::random_hypergraph(rng, 3, 6, 3, 2, 4);
    const EdgeSet pre = corpus::random_candidate_subset(rng, h, 3);
    for (const FamilySpec& f : {kP3, kK3, FamilySpec::connected()}) {
      const auto expected = naive::overlay_number(h, f, pre.edges());
      auto s = solve_exact(Instance(h, f, pre));
      ASSERT_EQ(s.has_value(), expected.has_value()) << to_dsl(f);
      if (!s) continue;
      EXPECT_EQ(s->value, *expected) << to_dsl(f);
      EXPECT_TRUE(s->edges.includes(pre));
    }
  }
}

TEST(EncompassMode, RewritesTheFamily) {
  const Instance inst(Hypergraph(4, {{0, 1, 2, 3}}), kP3, {}, std::nullopt, Mode::kEncompass);
  EXPECT_EQ(inst.family(), kP3.encompassed());
  EXPECT_EQ(inst.mode(), Mode::kEncompass);
  EXPECT_EQ(value_of(inst), 2);
  corpus::Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const Hypergraph h = corpus::random_hypergraph(rng, 3, 6, 3, 2, 4);
    const Instance enc(h, kK3, {}, std::nullopt, Mode::kEncompass);
    const auto expected = naive::overlay_number(h, kK3.encompassed());
    EXPECT_EQ(value_of(enc), expected ? *expected : -1);
  }
}

// --- oracle ------------------------------------------------------------------

TEST(Oracle, Examples) {
  auto a = brute_force_oracle(Instance(Hypergraph(3, {{0, 1, 2}}), FamilySpec::connected()));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->value, 2);
  auto b = brute_force_oracle(Instance(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}), FamilySpec::explicit_members({Graph::complete(2)})));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->value, 3);
  auto c = brute_force_oracle(Instance(kSunflower, FamilySpec::connected()));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->value, 4);
}

TEST(Oracle, CapAndMaxValue) {
  const Hypergraph big(8, {{0, 1, 2, 3, 4, 5, 6, 7}});
  EXPECT_THROW(brute_force_oracle(Instance(big, FamilySpec::connected())), CapExceeded);
  EXPECT_NO_THROW(brute_force_oracle(Instance(big, FamilySpec::connected()), {.cap = 28}));
  EXPECT_FALSE(brute_force_oracle(Instance(kSunflower, FamilySpec::connected()), {.max_value = 3}));
  EXPECT_TRUE(brute_force_oracle(Instance(kSunflower, FamilySpec::connected()), {.max_value = 4}));
}

TEST(Oracle, MatchesNaiveOverlayNumber) {
  corpus::Rng rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const Hypergraph h = corpus::random_hypergraph(rng, 3, 6, 3, 2, 4);
    for (const FamilySpec& f : solver_families()) {
      auto s = brute_force_oracle(Instance(h, f));
      const auto expected = naive::overlay_number(h, f);
      ASSERT_EQ(s.has_value(), expected.has_value()) << to_dsl(f);
      if (s) EXPECT_EQ(s->value, *expected) << to_dsl(f);
    }
  }
}

TEST(Oracle, CandidateRestrictionIsSound) {
  corpus::Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Hypergraph h = corpus::random_hypergraph(rng, 3, 6, 4, 2, 5);
    for (const FamilySpec& f : solver_families()) {
      const Instance inst(h, f);
      auto restricted = brute_force_oracle(inst);
      auto full = brute_force_oracle(inst, {.cap = 25, .all_pairs = true});
      ASSERT_EQ(restricted.has_value(), full.has_value());
      if (restricted) EXPECT_EQ(restricted->value, full->value);
    }
  }
}

// --- lower bound -------------------------------------------------------------

TEST(LowerBound, Examples) {
  const std::vector<std::size_t> first{0};
  EXPECT_EQ(lower_bound(Hypergraph(3, {{0, 1, 2}}), FamilySpec::connected(), EdgeSet(3), first), 2);
  const std::vector<std::size_t> both{0, 1};
  EXPECT_EQ(lower_bound(Hypergraph(6, {{0, 1, 2}, {3, 4, 5}}), FamilySpec::connected(), EdgeSet(6), both), 4);
  EXPECT_EQ(lower_bound(Hypergraph(3, {{0, 1, 2}}), kP3, EdgeSet(3, {{0, 1}}), first), 1);
  EXPECT_EQ(lower_bound(Hypergraph(3, {{0, 1, 2}}), kP3, EdgeSet(3, {{0, 1}, {1, 2}, {0, 2}}), first), 0);
}

TEST(LowerBound, NeverOverestimatesTheRemainingCost) {
  corpus::Rng rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h = corpus::random_hypergraph(rng, 3, 6, 4, 2, 4);
    const EdgeSet present = corpus::random_candidate_subset(rng, h, 3);
    for (const FamilySpec& f : solver_families()) {
      const Instance inst(h, f, present);
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < inst.hypergraph().hyperedge_count(); ++i) {
        const auto& s = inst.hypergraph().hyperedge(i);
        if (!satisfies(f, induced_subgraph(present, s))) open.push_back(i);
      }
      const auto completion = naive::overlay_number(inst.hypergraph(), f, present.edges());
      if (!completion) continue;
      const int bound = lower_bound(inst.hypergraph(), f, present, open);
      EXPECT_GE(bound, 0);
      EXPECT_LE(bound, *completion - static_cast<int>(present.size())) << to_dsl(f);
    }
  }
}

}  // namespace
