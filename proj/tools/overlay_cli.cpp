// Command-line front end: solve, classify, gadget, verify, gen, check.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "overlay/classify.hpp"
#include "overlay/error.hpp"
#include "overlay/generate.hpp"
#include "overlay/json_io.hpp"
#include "overlay/oracle.hpp"
#include "overlay/reductions.hpp"
#include "overlay/solver.hpp"

namespace {

using namespace overlay;

enum Exit : int {
  kYes = 0,
  kNo = 1,
  kInfeasible = 2,
  kFailure = 3,
  kParse = 64,
  kCap = 65,
};

constexpr const char* kExitHelp =
    "Exit codes: 0 yes/valid/PASS, 1 no/invalid/FAIL, 2 infeasible, 3 precondition or I/O error,\n"
    "64 malformed input, 65 size cap exceeded (including UNVERIFIABLE reports).\n"
    "OVERLAY_MAX_HYPEREDGE overrides the hyperedge size cap (default 16).";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

Mode parse_mode(const std::string& mode) { return mode == "encompass" ? Mode::kEncompass : Mode::kOverlay; }

// --- solve -------------------------------------------------------------

struct SolveConfig {
  std::string input;
  std::string family = "connected";
  std::optional<int> k;
  std::string prescribed;
  std::string engine = "auto";
  std::string mode = "overlay";
  int workers = 1;
  bool transposition = false;
  int oracle_cap = 25;
  std::string format = "json";
};

bool all_orders_easy(const Instance& inst) {
  for (const auto& s : inst.hypergraph().hyperedges()) {
    if (!easy_order_kind(inst.family(), static_cast<int>(s.size()))) return false;
  }
  return true;
}

std::string solution_text(const Solution& s, std::string_view result) {
  std::ostringstream os;
  os << "result " << result << "\nvalue " << s.value << "\nedges " << format_edge_list(s.edges) << "\nengine "
     << s.engine << "\nnodes " << s.stats.nodes << "\nmillis " << s.stats.millis << '\n';
  return os.str();
}

std::string verdict_json(std::string_view result, const std::string& engine, std::optional<int> k) {
  nlohmann::ordered_json j{{"result", result}, {"engine", engine}};
  j["k"] = k ? nlohmann::ordered_json(*k) : nlohmann::ordered_json(nullptr);
  return j.dump(2);
}

int cmd_solve(const SolveConfig& cfg) {
  Hypergraph h = parse_hg(read_file(cfg.input));
  EdgeSet prescribed = parse_edge_list(cfg.prescribed, h.order());
  Instance inst(h, parse_family(cfg.family), prescribed, cfg.k, parse_mode(cfg.mode));

  std::string engine = cfg.engine;
  if (engine == "auto") engine = all_orders_easy(inst) ? "poly" : "branch";

  auto emit_none = [&](std::string_view result) {
    if (cfg.format == "text") {
      std::cout << "result " << result << "\nengine " << engine << '\n';
    } else {
      std::cout << verdict_json(result, engine, cfg.k) << '\n';
    }
  };
  if (!feasible(inst)) {
    emit_none("infeasible");
    return kInfeasible;
  }

  std::optional<Solution> solution;
  if (engine == "poly") {
    solution = solve_poly(inst);
  } else if (engine == "branch") {
    BranchOptions options{.workers = cfg.workers, .transposition = cfg.transposition};
    solution = cfg.k ? solve_branch(inst, *cfg.k, options) : solve_exact(inst, options);
  } else {
    solution = brute_force_oracle(inst, {.cap = cfg.oracle_cap, .all_pairs = false, .max_value = cfg.k});
  }
  if (solution && cfg.k && solution->value > *cfg.k) solution.reset();
  if (!solution) {
    emit_none("no");
    return kNo;
  }
  std::cout << (cfg.format == "text" ? solution_text(*solution, "yes") : solution_to_json(*solution) + "\n");
  return kYes;
}

// --- classify ----------------------------------------------------------

int cmd_classify(const std::string& dsl, int p_max, const std::string& format) {
  FamilySpec family = parse_family(dsl);
  Classification c = classify(family, p_max);
  if (format != "text") {
    std::cout << classification_to_json(family, c) << '\n';
    return kYes;
  }
  std::cout << "family " << to_dsl(family) << '\n';
  for (const auto& v : c.orders) {
    std::cout << "p=" << v.p << ' ' << to_string(v.kind);
    if (v.witness) {
      std::cout << " J=" << to_literal(v.witness->j) << " e1=" << v.witness->e1.u << '-' << v.witness->e1.v
                << " e2=" << v.witness->e2.u << '-' << v.witness->e2.v;
      if (v.witness_order != v.p) std::cout << " (lifted from p=" << v.witness_order << ')';
    }
    if (!v.note.empty()) std::cout << " [" << v.note << ']';
    std::cout << '\n';
  }
  std::cout << "parameterized " << to_string(c.parameterized.kind);
  if (c.parameterized.reason != FptReason::kNone) std::cout << " (" << to_string(c.parameterized.reason) << ')';
  if (!c.parameterized.detail.empty()) std::cout << ": " << c.parameterized.detail;
  std::cout << '\n';
  return kYes;
}

// --- gadget ------------------------------------------------------------

struct GadgetConfig {
  std::string kind;
  std::string family;
  std::string hg;
  std::string hs;
  std::string graph;
  std::string forced;
  int k = 0;
  std::optional<int> order;
  std::string witness = "any";
  std::string out;
  std::string hg_out;
};

WitnessPreference parse_preference(const std::string& name) {
  if (name == "intersecting") return WitnessPreference::kIntersecting;
  if (name == "disjoint") return WitnessPreference::kDisjoint;
  return WitnessPreference::kAny;
}

GadgetOutput build_vc(const GadgetConfig& cfg, const FamilySpec& family) {
  const Graph g = parse_graph_literal(cfg.graph);
  const WitnessPreference preference = parse_preference(cfg.witness);
  const int first = preference == WitnessPreference::kDisjoint ? 4 : 3;
  std::vector<int> orders;
  if (cfg.order) {
    orders.push_back(*cfg.order);
  } else {
    for (int p = first; p <= kEnumerationCap; ++p) orders.push_back(p);
  }
  for (int p : orders) {
    OrderSlice slice = slice_of(family, p);
    if (slice.members.empty()) continue;
    WitnessSearch search = find_hard_witness(slice, preference);
    if (search.witness) return vc_gadget(g, slice, *search.witness);
  }
  throw PreconditionError("no hard-set witness of the requested kind at the tried orders");
}

GadgetOutput build_gadget(const GadgetConfig& cfg) {
  const FamilySpec family = parse_family(cfg.family);
  switch (parse_gadget_kind(cfg.kind)) {
    case GadgetKind::kPrescribedToPlain: {
      Hypergraph h = parse_hg(read_file(cfg.hg));
      return prescribed_to_plain(h, cfg.k, parse_edge_list(cfg.forced, h.order()), family, cfg.order);
    }
    case GadgetKind::kLiftOrder: {
      Hypergraph h = parse_hg(read_file(cfg.hg));
      const int p = cfg.order ? *cfg.order : static_cast<int>(h.max_hyperedge_size()) + 1;
      return lift_order(h, cfg.k, parse_edge_list(cfg.forced, h.order()), slice_of(family, p));
    }
    case GadgetKind::kVertexCover:
      return build_vc(cfg, family);
    case GadgetKind::kW1:
      return w1_gadget(parse_hs(read_file(cfg.hs), cfg.k), family);
    case GadgetKind::kW2:
      return w2_gadget(parse_hs(read_file(cfg.hs), cfg.k), family);
  }
  throw PreconditionError("unknown gadget kind");
}

int cmd_gadget(const GadgetConfig& cfg) {
  GadgetOutput gadget = build_gadget(cfg);
  write_output(cfg.out, gadget_to_json(gadget));
  if (!cfg.hg_out.empty()) {
    std::vector<std::string> comments{"gadget " + to_string(gadget.kind), "k' " + std::to_string(gadget.k_prime),
                                      "forced " + format_edge_list(gadget.instance.prescribed()),
                                      "family " + to_dsl(gadget.instance.family())};
    write_output(cfg.hg_out, format_hg(gadget.instance.hypergraph(), comments));
  }
  return kYes;
}

// --- verify ------------------------------------------------------------

int cmd_verify(const std::string& path, int cap, const std::string& format) {
  GadgetOutput gadget = gadget_from_json(read_file(path));
  IdentityReport report = verify_identity(gadget, {.oracle_cap = cap});
  if (format == "text") {
    std::cout << to_string(report.status) << ' ' << to_string(report.kind) << " claimed=" << report.claimed;
    if (report.gadget_value) std::cout << " computed=" << *report.gadget_value;
    if (report.tau) std::cout << " tau=" << *report.tau;
    if (!report.detail.empty()) std::cout << " (" << report.detail << ')';
    std::cout << '\n';
  } else {
    std::cout << report_to_json(report) << '\n';
  }
  switch (report.status) {
    case IdentityReport::Status::kPass:
      return kYes;
    case IdentityReport::Status::kFail:
      return kNo;
    case IdentityReport::Status::kUnverifiable:
      return kCap;
  }
  return kFailure;
}

// --- gen ---------------------------------------------------------------

struct GenConfig {
  std::string kind;
  int vertices = 8;
  int hyperedges = 5;
  int min_size = 2;
  int max_size = 5;
  int size = 3;
  int petals = 3;
  int core = 2;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenConfig& cfg) {
  std::ostringstream params;
  Hypergraph h;
  if (cfg.kind == "random") {
    h = random_hypergraph({cfg.vertices, cfg.hyperedges, cfg.min_size, cfg.max_size}, cfg.seed);
    params << "gen random vertices=" << cfg.vertices << " hyperedges=" << cfg.hyperedges
           << " min-size=" << cfg.min_size << " max-size=" << cfg.max_size << " seed=" << cfg.seed;
  } else if (cfg.kind == "uniform") {
    h = random_uniform_hypergraph(cfg.vertices, cfg.hyperedges, cfg.size, cfg.seed);
    params << "gen uniform vertices=" << cfg.vertices << " hyperedges=" << cfg.hyperedges << " size=" << cfg.size
           << " seed=" << cfg.seed;
  } else {
    h = sunflower(cfg.petals, cfg.core);
    params << "gen sunflower petals=" << cfg.petals << " core=" << cfg.core;
  }
  write_output(cfg.out, format_hg(h, {params.str()}));
  return kYes;
}

// --- check -------------------------------------------------------------

int cmd_check(const SolveConfig& cfg, const std::string& edges_text) {
  Hypergraph h = parse_hg(read_file(cfg.input));
  Instance inst(h, parse_family(cfg.family), parse_edge_list(cfg.prescribed, h.order()), std::nullopt,
                parse_mode(cfg.mode));
  CheckResult result = check_solution(inst, parse_edge_list(edges_text, h.order()));
  if (cfg.format == "text") {
    std::cout << (result.ok ? "valid" : "invalid");
    if (!result.prescribed_ok) std::cout << " (prescribed edges missing)";
    if (result.failing_hyperedge) std::cout << " (hyperedge " << *result.failing_hyperedge << " fails)";
    std::cout << '\n';
  } else {
    std::cout << check_to_json(result) << '\n';
  }
  return result.ok ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum F-overlay solver, classifier and reduction toolkit"};
  app.footer(kExitHelp);
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "text"};

  SolveConfig solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an overlay instance (decision mode when --k is given)");
  solve_cmd->add_option("instance", solve.input, ".hg instance file")->required();
  solve_cmd->add_option("-f,--family", solve.family, "family DSL")->capture_default_str();
  solve_cmd->add_option("-k,--k", solve.k, "edge budget, prescribed edges included");
  solve_cmd->add_option("--prescribed", solve.prescribed, "prescribed edges, e.g. 0-1,1-2");
  solve_cmd->add_option("--engine", solve.engine)
      ->check(CLI::IsMember({"auto", "poly", "branch", "oracle"}))
      ->capture_default_str();
  solve_cmd->add_option("--mode", solve.mode)->check(CLI::IsMember({"overlay", "encompass"}))->capture_default_str();
  solve_cmd->add_option("--workers", solve.workers)->check(CLI::PositiveNumber)->capture_default_str();
  solve_cmd->add_flag("--transposition", solve.transposition, "memoize failed branch states");
  solve_cmd->add_option("--oracle-cap", solve.oracle_cap, "free-pair cap for the oracle engine")
      ->capture_default_str();
  solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember(formats))->capture_default_str();

  std::string classify_family;
  int p_max = 6;
  std::string classify_format = "json";
  auto* classify_cmd = app.add_subcommand("classify", "Classify a family per order and parameterized by k");
  classify_cmd->add_option("family", classify_family, "family DSL")->required();
  classify_cmd->add_option("--pmax", p_max)->check(CLI::Range(1, 16))->capture_default_str();
  classify_cmd->add_option("--format", classify_format)->check(CLI::IsMember(formats))->capture_default_str();

  GadgetConfig gadget;
  auto* gadget_cmd = app.add_subcommand("gadget", "Materialize a reduction gadget as a JSON descriptor");
  gadget_cmd->add_option("kind", gadget.kind)
      ->required()
      ->check(CLI::IsMember({"prescribed-to-plain", "lift", "vc", "w1", "w2"}));
  gadget_cmd->add_option("-f,--family", gadget.family, "family DSL")->required();
  gadget_cmd->add_option("--hg", gadget.hg, "source .hg (prescribed-to-plain, lift)");
  gadget_cmd->add_option("--hs", gadget.hs, "source hitting-set file (w1, w2)");
  gadget_cmd->add_option("--graph", gadget.graph, "source graph literal (vc), e.g. 2:0-1");
  gadget_cmd->add_option("--forced", gadget.forced, "source forced edges (prescribed-to-plain, lift)");
  gadget_cmd->add_option("-k,--k", gadget.k, "source budget")->capture_default_str();
  gadget_cmd->add_option("--order", gadget.order, "slice order p");
  gadget_cmd->add_option("--witness", gadget.witness, "witness kind for vc")
      ->check(CLI::IsMember({"any", "intersecting", "disjoint"}))
      ->capture_default_str();
  gadget_cmd->add_option("-o,--out", gadget.out, "descriptor path (default stdout)");
  gadget_cmd->add_option("--hg-out", gadget.hg_out, "also write the gadget hypergraph as .hg");

  std::string verify_path;
  int verify_cap = 48;
  std::string verify_format = "json";
  auto* verify_cmd = app.add_subcommand("verify", "Check a gadget descriptor's identity by brute force");
  verify_cmd->add_option("descriptor", verify_path)->required();
  verify_cmd->add_option("--cap", verify_cap, "oracle free-pair cap")->capture_default_str();
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember(formats))->capture_default_str();

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  gen_cmd->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"random", "sunflower", "uniform"}));
  gen_cmd->add_option("--vertices", gen.vertices)->capture_default_str();
  gen_cmd->add_option("--hyperedges", gen.hyperedges)->capture_default_str();
  gen_cmd->add_option("--min-size", gen.min_size)->capture_default_str();
  gen_cmd->add_option("--max-size", gen.max_size)->capture_default_str();
  gen_cmd->add_option("--size", gen.size, "hyperedge size (uniform)")->capture_default_str();
  gen_cmd->add_option("--petals", gen.petals)->capture_default_str();
  gen_cmd->add_option("--core", gen.core)->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("-o,--out", gen.out, "output path (default stdout)");

  SolveConfig check;
  std::string check_edges;
  auto* check_cmd = app.add_subcommand("check", "Validate an edge set against an instance");
  check_cmd->add_option("instance", check.input)->required();
  check_cmd->add_option("-f,--family", check.family)->capture_default_str();
  check_cmd->add_option("--edges", check_edges, "candidate edge set, e.g. 0-1,0-2")->required();
  check_cmd->add_option("--prescribed", check.prescribed);
  check_cmd->add_option("--mode", check.mode)->check(CLI::IsMember({"overlay", "encompass"}))->capture_default_str();
  check_cmd->add_option("--format", check.format)->check(CLI::IsMember(formats))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kParse;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*classify_cmd) return cmd_classify(classify_family, p_max, classify_format);
    if (*gadget_cmd) return cmd_gadget(gadget);
    if (*verify_cmd) return cmd_verify(verify_path, verify_cap, verify_format);
    if (*gen_cmd) return cmd_gen(gen);
    if (*check_cmd) return cmd_check(check, check_edges);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
