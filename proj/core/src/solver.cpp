#include "overlay/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "overlay/classify.hpp"
#include "overlay/error.hpp"
#include "overlay/subgraph.hpp"
#include "workspace.hpp"

namespace overlay {
namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

EdgeSet checked_prescribed(const Hypergraph& h, const EdgeSet& prescribed) {
  for (const Edge& e : prescribed) {
    if (e.v >= h.order()) {
      throw PreconditionError("prescribed edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " outside the hypergraph");
    }
  }
  return EdgeSet(h.order(), prescribed.edges());
}

std::vector<Edge> solver_universe(const Instance& inst) {
  EdgeSet all = candidate_edges(inst.hypergraph()).united(inst.prescribed());
  return all.edges();
}

struct VectorHash {
  std::size_t operator()(const std::vector<char>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (char c : v) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    return h;
  }
};

/// Depth-first branch and bound over the pairs of a fixed workspace.
class Search {
 public:
  Search(const Instance& inst, const BranchOptions& options)
      : inst_(inst), options_(options), ws_(inst.hypergraph(), inst.family(), solver_universe(inst)) {
    present_.assign(ws_.pair_count(), 0);
    forbidden_.assign(ws_.pair_count(), 0);
    for (const Edge& e : inst.prescribed()) {
      present_[*ws_.id_of(e)] = 1;
      ++count_;
    }
  }

  /// Hyperedges not yet satisfied by the current edge state.
  std::vector<std::size_t> unsatisfied() {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ws_.hyperedge_count(); ++i) {
      if (!ws_.satisfied(i, present_)) out.push_back(i);
    }
    return out;
  }

  int bound(const std::vector<std::size_t>& open) {
    std::set<int> used;
    int total = 0;
    for (std::size_t i : open) {
      const auto& vs = ws_.vertices(i);
      if (std::any_of(vs.begin(), vs.end(), [&](int v) { return used.count(v) != 0; })) continue;
      used.insert(vs.begin(), vs.end());
      // An unsatisfied hyperedge gains at least one edge before it can pass.
      total += std::max(1, ws_.min_edges(i) - ws_.induced(i, present_));
    }
    return total;
  }

  int count() const { return count_; }

  /// Branch list at the current state: absent, non-forbidden pairs of the chosen hyperedge.
  /// Empty optional when the state is already a solution.
  std::optional<std::vector<std::size_t>> branches(const std::vector<std::size_t>& open) {
    if (open.empty()) return std::nullopt;
    std::vector<std::size_t> best;
    bool have = false;
    for (std::size_t i : open) {
      std::vector<std::size_t> options;
      for (std::size_t id : ws_.hyperedge_pairs(i)) {
        if (present_[id] == 0 && forbidden_[id] == 0) options.push_back(id);
      }
      if (!have || options.size() < best.size()) {
        best = std::move(options);
        have = true;
      }
      if (best.empty()) break;
    }
    return best;
  }

  bool run(int k, std::atomic<bool>* stop) {
    ++nodes_;
    if (count_ > k) return false;
    if (stop != nullptr && stop->load(std::memory_order_relaxed)) return false;
    if (options_.transposition) {
      auto it = failed_.find(present_);
      if (it != failed_.end() && it->second >= k - count_) return false;
    }
    std::vector<std::size_t> open = unsatisfied();
    if (open.empty()) return true;
    bool ok = false;
    if (count_ + bound(open) <= k) {
      std::vector<std::size_t> choices = *branches(open);
      std::vector<std::size_t> forbidden_here;
      for (std::size_t id : choices) {
        present_[id] = 1;
        ++count_;
        ok = run(k, stop);
        if (ok) return true;
        present_[id] = 0;
        --count_;
        if (!options_.transposition) {
          forbidden_[id] = 1;
          forbidden_here.push_back(id);
        }
      }
      for (std::size_t id : forbidden_here) forbidden_[id] = 0;
    }
    if (options_.transposition) {
      int& slot = failed_[present_];
      slot = std::max(slot, k - count_);
    }
    return false;
  }

  void set_present(std::size_t id) {
    if (present_[id] == 0) {
      present_[id] = 1;
      ++count_;
    }
  }
  void set_forbidden(std::size_t id) { forbidden_[id] = 1; }
  void reset_failures() { failed_.clear(); }

  EdgeSet edges() const {
    EdgeSet out(inst_.hypergraph().order());
    for (std::size_t id = 0; id < present_.size(); ++id) {
      if (present_[id] != 0) out.insert(ws_.pairs()[id]);
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const Instance& inst_;
  BranchOptions options_;
  detail::Workspace ws_;
  std::vector<char> present_;
  std::vector<char> forbidden_;
  int count_ = 0;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::vector<char>, int, VectorHash> failed_;
};

/// Runs one budget on `search`, fanning the root branches out over worker threads.
std::optional<EdgeSet> run_budget(Search& search, int k, const BranchOptions& options, std::uint64_t& nodes) {
  if (search.count() > k) return std::nullopt;
  search.reset_failures();
  if (options.workers <= 1) {
    std::uint64_t before = search.nodes();
    bool ok = search.run(k, nullptr);
    nodes += search.nodes() - before;
    if (ok) return search.edges();
    return std::nullopt;
  }

  std::vector<std::size_t> open = search.unsatisfied();
  if (open.empty()) return search.edges();
  nodes += 1;
  if (search.count() + search.bound(open) > k) return std::nullopt;
  const std::vector<std::size_t> roots = *search.branches(open);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> found{false};
  std::atomic<std::uint64_t> worker_nodes{0};
  std::mutex result_mutex;
  std::optional<EdgeSet> result;
  auto worker = [&]() {
    while (!found.load()) {
      std::size_t i = next.fetch_add(1);
      if (i >= roots.size()) break;
      Search local = search;
      for (std::size_t j = 0; j < i && !options.transposition; ++j) local.set_forbidden(roots[j]);
      local.set_present(roots[i]);
      std::uint64_t before = local.nodes();
      bool ok = local.run(k, &found);
      worker_nodes += local.nodes() - before;
      if (ok) {
        std::lock_guard lock(result_mutex);
        if (!found.exchange(true)) result = local.edges();
      }
    }
  };
  std::vector<std::thread> threads;
  const int count = std::min<int>(options.workers, static_cast<int>(roots.size()));
  for (int t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  nodes += worker_nodes.load();
  return result;
}

Solution finish(const Instance& inst, EdgeSet edges, std::string engine, std::uint64_t nodes,
                Clock::time_point start) {
  Solution s;
  s.value = static_cast<int>(edges.size());
  s.certificates = certificates_for(inst, edges);
  s.edges = std::move(edges);
  s.engine = std::move(engine);
  s.stats.nodes = nodes;
  s.stats.millis = millis_since(start);
  return s;
}

}  // namespace

Instance::Instance(Hypergraph h, FamilySpec family, EdgeSet prescribed, std::optional<int> k, Mode mode)
    : h_(h.normalized()),
      family_(mode == Mode::kEncompass ? family.encompassed() : std::move(family)),
      prescribed_(checked_prescribed(h_, prescribed)),
      k_(k),
      mode_(mode) {
  if (k_ && *k_ < 0) throw PreconditionError("budget must be non-negative");
  const auto cap = static_cast<std::size_t>(max_hyperedge_size());
  if (h_.max_hyperedge_size() > cap) {
    throw CapExceeded("hyperedge of size " + std::to_string(h_.max_hyperedge_size()) +
                      " exceeds the hyperedge-size cap of " + std::to_string(cap));
  }
}

CheckResult check_solution(const Instance& inst, const EdgeSet& edges) {
  const Hypergraph& h = inst.hypergraph();
  for (const Edge& e : edges) {
    if (e.v >= h.order()) {
      throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " outside the hypergraph");
    }
  }
  CheckResult r;
  r.prescribed_ok = std::all_of(inst.prescribed().begin(), inst.prescribed().end(),
                                [&](const Edge& e) { return edges.contains(e); });
  for (std::size_t i = 0; i < h.hyperedge_count(); ++i) {
    const auto& s = h.hyperedge(i);
    auto evidence = certify(inst.family(), induced_subgraph(edges, s));
    if (!evidence) {
      if (!r.failing_hyperedge) r.failing_hyperedge = i;
      continue;
    }
    Certificate cert{i, std::move(evidence->member), {}, std::move(evidence->predicate)};
    for (int local : evidence->map) cert.map.push_back(s[static_cast<std::size_t>(local)]);
    r.certificates.push_back(std::move(cert));
  }
  r.ok = r.prescribed_ok && !r.failing_hyperedge;
  return r;
}

bool validate_certificate(const Instance& inst, const EdgeSet& edges, const Certificate& cert) {
  const Hypergraph& h = inst.hypergraph();
  if (cert.hyperedge >= h.hyperedge_count()) return false;
  const auto& s = h.hyperedge(cert.hyperedge);
  const FamilySpec& family = inst.family();
  const bool closed = family.closure() != Closure::kNone;
  if (static_cast<int>(cert.map.size()) != cert.member.order()) return false;
  if (!closed && cert.map.size() != s.size()) return false;
  std::set<int> image;
  for (int v : cert.map) {
    if (!std::binary_search(s.begin(), s.end(), v) || !image.insert(v).second) return false;
  }
  for (const Edge& e : cert.member.edges()) {
    if (!edges.contains(Edge(cert.map[e.u], cert.map[e.v]))) return false;
  }
  return is_member(closed ? family.base_family() : family, cert.member);
}

bool feasible(const Instance& inst) {
  for (const auto& s : inst.hypergraph().hyperedges()) {
    if (!has_member_of_order(inst.family(), static_cast<int>(s.size()))) return false;
  }
  return true;
}

std::optional<Solution> solve_poly(const Instance& inst) {
  const auto start = Clock::now();
  std::map<int, OrderVerdictKind> kinds;
  for (const auto& s : inst.hypergraph().hyperedges()) {
    const int p = static_cast<int>(s.size());
    if (kinds.count(p) != 0) continue;
    auto kind = easy_order_kind(inst.family(), p);
    if (!kind) throw PreconditionError("order " + std::to_string(p) + " is not an easy order for this family");
    kinds.emplace(p, *kind);
  }
  for (const auto& [p, kind] : kinds) {
    if (kind == OrderVerdictKind::kEmpty) return std::nullopt;
  }
  EdgeSet edges(inst.hypergraph().order(), inst.prescribed().edges());
  for (const auto& s : inst.hypergraph().hyperedges()) {
    if (kinds.at(static_cast<int>(s.size())) != OrderVerdictKind::kPolyClique) continue;
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) edges.insert(Edge(s[a], s[b]));
    }
  }
  return finish(inst, std::move(edges), "poly", 0, start);
}

bool size_reject(const Instance& inst, int k) {
  auto bound = density_bound(inst.family());
  if (!bound) throw PreconditionError("size rejection needs a family with a density bound");
  const long threshold = bound->g(static_cast<long>(k) + 1);
  for (const auto& s : inst.hypergraph().hyperedges()) {
    if (static_cast<long>(s.size()) >= threshold) return true;
  }
  return false;
}

std::optional<Solution> solve_branch(const Instance& inst, int k, const BranchOptions& options) {
  if (k < 0) throw PreconditionError("budget must be non-negative");
  if (!feasible(inst)) throw PreconditionError("instance is infeasible");
  const auto start = Clock::now();
  if (static_cast<int>(inst.prescribed().size()) > k) return std::nullopt;
  if (options.use_size_reject && density_bound(inst.family()) && size_reject(inst, k)) return std::nullopt;
  Search search(inst, options);
  std::uint64_t nodes = 0;
  auto edges = run_budget(search, k, options, nodes);
  if (!edges) return std::nullopt;
  return finish(inst, std::move(*edges), "branch", nodes, start);
}

std::optional<Solution> solve_exact(const Instance& inst, const BranchOptions& options) {
  if (!feasible(inst)) return std::nullopt;
  const auto start = Clock::now();
  Search search(inst, options);
  int k = search.count() + search.bound(search.unsatisfied());
  for (const auto& s : inst.hypergraph().hyperedges()) {
    k = std::max(k, min_member_edges(inst.family(), static_cast<int>(s.size())).value_or(0));
  }
  const auto ceiling = static_cast<int>(solver_universe(inst).size());
  std::uint64_t nodes = 0;
  for (; k <= ceiling; ++k) {
    if (options.use_size_reject && density_bound(inst.family()) && size_reject(inst, k)) continue;
    if (auto edges = run_budget(search, k, options, nodes)) {
      return finish(inst, std::move(*edges), "branch", nodes, start);
    }
  }
  throw Error("iterative deepening exhausted the candidate pairs on a feasible instance");
}

int lower_bound(const Hypergraph& h, const FamilySpec& family, const EdgeSet& present,
                std::span<const std::size_t> unsatisfied) {
  std::set<int> used;
  int total = 0;
  for (std::size_t i : unsatisfied) {
    if (i >= h.hyperedge_count()) throw PreconditionError("hyperedge index out of range");
    const auto& s = h.hyperedge(i);
    if (std::any_of(s.begin(), s.end(), [&](int v) { return used.count(v) != 0; })) continue;
    used.insert(s.begin(), s.end());
    auto need = min_member_edges(family, static_cast<int>(s.size()));
    if (!need) continue;
    total += std::max(0, *need - induced_subgraph(present, s).size());
  }
  return total;
}

std::vector<Certificate> certificates_for(const Instance& inst, const EdgeSet& edges) {
  CheckResult r = check_solution(inst, edges);
  if (!r.ok) throw PreconditionError("edge set does not solve the instance");
  return r.certificates;
}

}  // namespace overlay
