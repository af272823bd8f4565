// seating: command-line front end.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 error, 2 when solve proves that no arrangement exists.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seating/constructions.hpp"
#include "seating/dynamics.hpp"
#include "seating/exact.hpp"
#include "seating/judge.hpp"
#include "seating/polyclass.hpp"
#include "seating/randomized.hpp"
#include "seating/search.hpp"

using json = nlohmann::ordered_json;
using namespace seating;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNone = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Topology make_topology(const std::string& kind, std::size_t n) {
  return parse_topology_kind(kind) == TopologyKind::Cycle ? Topology::cycle(n) : Topology::path(n);
}

std::vector<Value> parse_values(const std::string& text) {
  std::vector<Value> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty value set");
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw std::invalid_argument("repeated value");
  return out;
}

json seats_json(const Arrangement& a) { return json(std::vector<int>(a.seats().begin(), a.seats().end())); }

json matrix_json(const Profile& p) {
  json rows = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.size(); ++j) row.push_back(p(i, j));
    rows.push_back(row);
  }
  return rows;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string topology = "cycle", criterion = "stable", algo = "auto";
  std::string profile, classes;
  bool verify = false;
};

struct Answer {
  std::optional<Arrangement> arrangement;
  json diagnostics = json::object();
};

/// Seats the input agents carrying each class label in ascending id order.
Arrangement seat_labels(const ClassDecomposition& d, const std::vector<int>& sequence) {
  auto members = std::vector<std::vector<Agent>>(d.classes.k());
  for (std::size_t i = 0; i < d.label.size(); ++i) members[d.label[i]].push_back(static_cast<Agent>(i));
  std::vector<std::size_t> next(d.classes.k(), 0);
  std::vector<Agent> seats;
  for (int c : sequence) seats.push_back(members[c][next[c]++]);
  return Arrangement(std::move(seats));
}

Answer solve_exact(const Profile& p, const ClassDecomposition& d, const Topology& t, Criterion crit) {
  Answer a;
  if (d.classes.k() < p.size()) {
    auto r = find_class_arrangement(d.classes, t, crit);
    a.diagnostics["enumerated"] = r.enumerated;
    if (r.sequence) a.arrangement = seat_labels(d, *r.sequence);
  } else {
    auto r = find_arrangement(p, t, crit);
    a.diagnostics["enumerated"] = r.enumerated;
    a.arrangement = r.arrangement;
  }
  return a;
}

Answer solve_poly(const ClassDecomposition& d, const Topology& t, Criterion crit) {
  Answer a;
  auto r = decide(d.classes, t, crit);
  a.diagnostics["visited"] = r.visited;
  a.diagnostics["frontier_peak"] = r.frontier_peak;
  if (r.sequence) a.arrangement = seat_labels(d, *r.sequence);
  return a;
}

Answer solve_constructive(const ClassDecomposition& d, const Topology& t, Criterion crit) {
  if (crit != Criterion::Stable) throw std::invalid_argument("constructive algorithms build stable arrangements only");
  const auto& c = d.classes;
  Arrangement built;
  if (c.k() <= 2) {
    built = two_class_stable(c, t);
  } else if (c.k() == 3 && t.is_cycle() && value_meta(expand_classes(c)).k_valued <= 2) {
    built = three_class_two_valued_cycle_stable(c);
  } else {
    throw std::invalid_argument("no construction for " + std::to_string(c.k()) + " classes on a " + to_string(t.kind));
  }
  // built seats agents of expand_classes(c); keep only its class sequence.
  const auto members = class_members(c);
  std::vector<int> cls_of(c.n());
  for (std::size_t k = 0; k < members.size(); ++k)
    for (Agent a : members[k]) cls_of[a] = static_cast<int>(k);
  std::vector<int> sequence;
  for (Agent a : built.seats()) sequence.push_back(cls_of[a]);
  Answer a;
  a.arrangement = seat_labels(d, sequence);
  return a;
}

int run_solve(const SolveArgs& args) {
  if (args.profile.empty() == args.classes.empty()) throw std::invalid_argument("give exactly one of --profile, --classes");
  const Profile p = args.profile.empty() ? expand_classes(parse_classes(slurp(args.classes)))
                                         : parse_profile(slurp(args.profile));
  const Topology t = make_topology(args.topology, p.size());
  const Criterion crit = parse_criterion(args.criterion);
  const auto d = detect_classes(p);

  std::string algo = args.algo;
  if (algo == "auto") algo = d.classes.k() <= 5 ? "polyclass" : "exact";
  Answer ans;
  if (algo == "exact")
    ans = solve_exact(p, d, t, crit);
  else if (algo == "polyclass")
    ans = solve_poly(d, t, crit);
  else if (algo == "constructive")
    ans = solve_constructive(d, t, crit);
  else
    throw std::invalid_argument("unknown algorithm '" + algo + "'");

  if (ans.arrangement && !check(p, t, *ans.arrangement, crit))
    throw std::logic_error("solver returned an arrangement that fails the judge");
  if (args.verify) {
    const Answer other = algo == "exact" ? solve_poly(d, t, crit) : solve_exact(p, d, t, crit);
    if (ans.arrangement.has_value() != other.arrangement.has_value())
      throw std::logic_error("polyclass and exact search disagree on existence");
    std::cerr << "verify: exact and polyclass agree\n";
  }

  json out;
  out["exists"] = ans.arrangement.has_value();
  out["topology"] = to_string(t.kind);
  out["criterion"] = to_string(crit);
  out["algo"] = algo;
  out["classes"] = d.classes.k();
  if (ans.arrangement) out["arrangement"] = seats_json(*ans.arrangement);
  for (auto& [k, v] : ans.diagnostics.items()) out[k] = v;
  print(out);
  return ans.arrangement ? kExitOk : kExitNone;
}

// ---- check -----------------------------------------------------------------

int run_check(const std::string& profile, const std::string& arrangement, const std::string& topology,
              const std::string& criterion) {
  const Profile p = parse_profile(slurp(profile));
  const Arrangement a = parse_arrangement(arrangement);
  const Topology t = make_topology(topology, p.size());
  const Criterion crit = parse_criterion(criterion);
  const Verdict v = check(p, t, a, crit);
  json out;
  out[crit == Criterion::Stable ? "stable" : "envy_free"] = v.ok;
  if (v.witness) out["witness"] = json::parse(witness_json(*v.witness));
  json util = json::array();
  for (Agent i = 0; i < static_cast<Agent>(p.size()); ++i) util.push_back(utility(p, t, a, i));
  out["utilities"] = util;
  print(out);
  return kExitOk;
}

// ---- dynamics --------------------------------------------------------------

struct DynamicsArgs {
  std::string profile, topology = "path", start, policy = "lexicographic";
  std::optional<std::size_t> distance;
  std::optional<std::uint64_t> seed;
  std::size_t max_steps = 0;
  bool trace = false, keep_going = false;
};

int run_dynamics(const DynamicsArgs& args) {
  const Profile p = parse_profile(slurp(args.profile));
  const Topology t = make_topology(args.topology, p.size());
  SwapPolicy policy;
  policy.selection = parse_selection(args.policy);
  policy.max_distance = args.distance;
  if (policy.selection == Selection::SeededRandom && !args.seed)
    throw std::invalid_argument("--policy random needs --seed");
  const Arrangement a0 = args.start.empty() ? Arrangement::identity(p.size()) : parse_arrangement(args.start);
  RunOptions opts;
  opts.max_steps = args.max_steps;
  opts.seed = args.seed.value_or(0);
  opts.continue_after_loop = args.keep_going;
  opts.keep_trace = args.trace;
  const auto r = run(p, t, a0, policy, opts);

  json out;
  out["outcome"] = to_string(r.outcome);
  out["steps"] = r.steps;
  if (r.outcome == Outcome::LoopDetected) out["period"] = r.period;
  if (r.first_revisit) out["first_revisit"] = *r.first_revisit;
  out["start"] = seats_json(r.start);
  out["final"] = seats_json(r.final_arrangement);
  if (!r.potentials.empty()) out["potential_increasing"] = audit_potential(p, r);
  if (args.trace) {
    json steps = json::array();
    for (const auto& s : r.trace) steps.push_back({{"swap", {s.first, s.second}}, {"arrangement", seats_json(s.arrangement)}});
    out["trace"] = steps;
  }
  print(out);
  return kExitOk;
}

// ---- reduce ----------------------------------------------------------------

int run_reduce(const std::string& which, const std::string& graph, std::optional<std::size_t> sink) {
  const Digraph g = parse_edge_list(slurp(graph));
  Profile p;
  if (which == "hc") {
    p = hamiltonian_cycle_profile(g);
  } else if (which == "hp") {
    if (!sink) {
      for (std::size_t v = 0; v < g.vertices && !sink; ++v)
        if (g.out_degree(static_cast<int>(v)) == 0) sink = v;
      if (!sink) throw std::invalid_argument("path reduction needs a sink; pass --sink");
    }
    p = hamiltonian_path_profile(g, *sink);
  } else {
    throw std::invalid_argument("reduce expects hc or hp");
  }
  std::cout << emit_profile_json(p) << "\n";
  return kExitOk;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  std::size_t n = 0;
  std::string values = "0,1", topology = "cycle", mode = "full", shard;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
  std::string fixtures, prefix = "family";
};

SearchMode parse_mode(const EnumerateArgs& args) {
  if (args.mode == "full") return SearchMode::full();
  if (args.mode == "sharded") {
    const auto slash = args.shard.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("--shard must look like a/b");
    return SearchMode::sharded(std::stoull(args.shard.substr(0, slash)), std::stoull(args.shard.substr(slash + 1)));
  }
  if (args.mode == "sampled") {
    if (!args.seed) throw std::invalid_argument("sampled mode needs --seed");
    return SearchMode::sampled(args.trials, *args.seed);
  }
  throw std::invalid_argument("unknown mode '" + args.mode + "'");
}

int run_enumerate(const EnumerateArgs& args) {
  const auto values = parse_values(args.values);
  const Topology t = make_topology(args.topology, args.n);
  const auto report = exhaust(args.n, values, t, parse_mode(args));
  json out;
  out["n"] = report.n;
  out["values"] = report.values;
  out["topology"] = to_string(report.topology);
  out["mode"] = to_string(report.mode);
  out["scanned"] = report.scanned;
  out["tested"] = report.tested;
  out["unstable"] = report.unstable;
  out["families"] = report.family_count();
  json fams = json::array();
  for (const auto& f : report.families) {
    json j;
    if (auto label = family_label(f); label && t.is_cycle()) j["label"] = *label;
    j["matrix"] = matrix_json(f);
    j["stable_arrangements"] = count_stable(f, t);
    fams.push_back(j);
  }
  out["profiles"] = fams;
  if (!args.fixtures.empty()) out["fixtures"] = write_family_fixtures(report, args.fixtures, args.prefix);
  print(out);
  return kExitOk;
}

// ---- sample ----------------------------------------------------------------

int run_sample(std::size_t n, const std::string& prob, std::size_t trials, std::uint64_t seed) {
  const Rational p = parse_probability(prob);
  const auto e = estimate_expected_stable(n, p, trials, seed);
  std::cout << "trial,stable_count\n";
  for (std::size_t i = 0; i < e.counts.size(); ++i) std::cout << i << "," << e.counts[i] << "\n";
  std::cerr << "mean " << e.mean << " se " << e.std_error;
  if (auto b = lll_bound(n, static_cast<double>(p))) std::cerr << " lll_bound " << *b;
  std::cerr << "\n";
  return kExitOk;
}

// ---- chain -----------------------------------------------------------------

int run_chain(std::size_t k) {
  const auto tr = expand_chain(k);
  json out;
  out["k"] = k;
  out["length"] = tr.steps.size();
  out["start"] = tr.start;
  out["end"] = tr.end;
  json steps = json::array();
  for (const auto& s : tr.steps)
    steps.push_back({{"op", to_string(s.op)}, {"pos", s.pos}, {"before", s.before}, {"after", s.after}});
  out["steps"] = steps;
  print(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exchange-stable and envy-free seating on path and cycle tables"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

  const std::vector<std::string> topologies{"path", "cycle"};
  const std::vector<std::string> criteria{"stable", "ef"};

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "find an arrangement or prove none exists");
  s->add_option("--topology", solve.topology)->check(CLI::IsMember(topologies));
  s->add_option("--criterion", solve.criterion)->check(CLI::IsMember(criteria));
  s->add_option("--algo", solve.algo)->check(CLI::IsMember({"exact", "polyclass", "constructive", "auto"}));
  s->add_option("--profile", solve.profile, "profile JSON or CSV");
  s->add_option("--classes", solve.classes, "class structure JSON");
  s->add_flag("--verify", solve.verify, "also run the other solver and compare");

  std::string chk_profile, chk_arr, chk_topo = "cycle", chk_crit = "stable";
  auto* c = app.add_subcommand("check", "judge one arrangement");
  c->add_option("--profile", chk_profile)->required();
  c->add_option("--arrangement", chk_arr, "agent per seat, comma separated")->required();
  c->add_option("--topology", chk_topo)->check(CLI::IsMember(topologies));
  c->add_option("--criterion", chk_crit)->check(CLI::IsMember(criteria));

  DynamicsArgs dyn;
  auto* d = app.add_subcommand("dynamics", "run swap dynamics");
  d->add_option("--profile", dyn.profile)->required();
  d->add_option("--topology", dyn.topology)->check(CLI::IsMember(topologies));
  d->add_option("--arrangement", dyn.start, "start (default identity)");
  d->add_option("--policy", dyn.policy);
  d->add_option("--distance", dyn.distance, "largest seat distance of a swap");
  d->add_option("--seed", dyn.seed);
  d->add_option("--max-steps", dyn.max_steps);
  d->add_flag("--trace", dyn.trace);
  d->add_flag("--keep-going", dyn.keep_going, "continue past a repeated state");

  std::string family;
  std::size_t family_n = 0;
  auto* con = app.add_subcommand("construct", "emit a named profile family");
  con->add_option("family", family)->required()->check(CLI::IsMember(family_names()));
  con->add_option("--n", family_n);

  std::string which, graph;
  std::optional<std::size_t> sink;
  auto* red = app.add_subcommand("reduce", "Hamiltonicity gadget profile of a digraph");
  red->add_option("kind", which)->required()->check(CLI::IsMember({"hc", "hp"}));
  red->add_option("--graph", graph, "edge list, \"u v\" per line")->required();
  red->add_option("--sink", sink);

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "scan a profile space for unstable profiles");
  e->add_option("--n", en.n)->required();
  e->add_option("--values", en.values, "comma separated value set");
  e->add_option("--topology", en.topology)->check(CLI::IsMember(topologies));
  e->add_option("--mode", en.mode)->check(CLI::IsMember({"full", "sharded", "sampled"}));
  e->add_option("--shard", en.shard, "a/b");
  e->add_option("--trials", en.trials);
  e->add_option("--seed", en.seed);
  e->add_option("--fixtures", en.fixtures, "directory for family profile JSON");
  e->add_option("--prefix", en.prefix);

  std::size_t sn = 0, trials = 0;
  std::string prob;
  std::uint64_t seed = 0;
  auto* sa = app.add_subcommand("sample", "stable cycle arrangements of random binary profiles");
  sa->add_option("--n", sn)->required();
  sa->add_option("--p", prob, "approval probability, e.g. 1/50")->required();
  sa->add_option("--trials", trials)->required();
  sa->add_option("--seed", seed)->required();

  std::size_t k = 0;
  auto* ch = app.add_subcommand("chain", "rewriting chain of length 2^k - 2");
  ch->add_option("--k", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (*s) return run_solve(solve);
    if (*c) return run_check(chk_profile, chk_arr, chk_topo, chk_crit);
    if (*d) return run_dynamics(dyn);
    if (*con) {
      std::cout << emit_profile_json(construct_family(family, family_n)) << "\n";
      return kExitOk;
    }
    if (*red) return run_reduce(which, graph, sink);
    if (*e) return run_enumerate(en);
    if (*sa) return run_sample(sn, prob, trials, seed);
    if (*ch) return run_chain(k);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
