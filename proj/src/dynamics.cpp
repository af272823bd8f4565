#include "seating/dynamics.hpp"

#include <algorithm>
#include <unordered_map>

#include "seating/detail/kernels.hpp"

namespace seating {

std::string to_string(Selection s) {
  switch (s) {
    case Selection::Lexicographic: return "lexicographic";
    case Selection::SeededRandom: return "random";
    case Selection::MaxPotentialGain: return "max-gain";
  }
  return "?";
}

Selection parse_selection(const std::string& text) {
  if (text == "lexicographic" || text == "lex") return Selection::Lexicographic;
  if (text == "random") return Selection::SeededRandom;
  if (text == "max-gain" || text == "max-potential-gain") return Selection::MaxPotentialGain;
  throw std::invalid_argument("unknown swap policy '" + text + "'");
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Converged: return "converged";
    case Outcome::LoopDetected: return "loop";
    case Outcome::StepCapReached: return "step_cap";
  }
  return "?";
}

std::vector<std::pair<Agent, Agent>> admissible_pairs(const Profile& p, const Topology& t, const Arrangement& a,
                                                      const SwapPolicy& policy) {
  const auto pos = a.positions();
  const detail::ProfileVal val{&p};
  std::vector<std::pair<Agent, Agent>> out;
  for (Agent i = 0; i < static_cast<Agent>(t.n); ++i)
    for (Agent j = i + 1; j < static_cast<Agent>(t.n); ++j) {
      if (policy.max_distance && t.distance(pos[i], pos[j]) > *policy.max_distance) continue;
      if (detail::blocks_seats(val, a.seats(), t, pos[i], pos[j])) out.emplace_back(i, j);
    }
  return out;
}

namespace {

bool potential_applies(const Profile& p, const Topology& t) { return !t.is_cycle() && value_meta(p).is_binary; }

}  // namespace

std::optional<SwapStep> step(const Profile& p, const Topology& t, const Arrangement& a, const SwapPolicy& policy,
                             std::mt19937_64& rng) {
  if (p.size() != t.n || a.size() != t.n) throw std::invalid_argument("profile, topology and arrangement sizes disagree");
  const auto pairs = admissible_pairs(p, t, a, policy);
  if (pairs.empty()) return std::nullopt;
  const auto pos = a.positions();
  auto make = [&](std::pair<Agent, Agent> pr) {
    return SwapStep{pr.first, pr.second, a.swapped_seats(pos[pr.first], pos[pr.second])};
  };
  switch (policy.selection) {
    case Selection::Lexicographic: return make(pairs.front());
    case Selection::SeededRandom: {
      std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
      return make(pairs[pick(rng)]);
    }
    case Selection::MaxPotentialGain: {
      // Potential on binary paths, welfare otherwise; ties keep the first pair.
      const bool use_phi = potential_applies(p, t);
      std::optional<SwapStep> best;
      PotentialValue best_phi;
      Value best_w = 0;
      for (auto pr : pairs) {
        SwapStep s = make(pr);
        if (use_phi) {
          PotentialValue phi = potential(p, s.arrangement, t);
          if (!best || phi > best_phi) {
            best_phi = std::move(phi);
            best = std::move(s);
          }
        } else {
          const Value w = welfare(p, t, s.arrangement);
          if (!best || w > best_w) {
            best_w = w;
            best = std::move(s);
          }
        }
      }
      return best;
    }
  }
  return std::nullopt;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

std::vector<int> canonical_key(const Arrangement& a, const Topology& t) {
  const Arrangement c = canonical_arrangement(a, t);
  return {c.seats().begin(), c.seats().end()};
}

}  // namespace

DynamicsReport run(const Profile& p, const Topology& t, const Arrangement& a0, const SwapPolicy& policy,
                   const RunOptions& opts) {
  if (p.size() != t.n || a0.size() != t.n) throw std::invalid_argument("profile, topology and arrangement sizes disagree");
  const std::size_t cap = opts.max_steps ? opts.max_steps : 10'000 * t.n;
  const bool track_phi = potential_applies(p, t);
  std::mt19937_64 rng(opts.seed);

  DynamicsReport r;
  r.start = a0;
  Arrangement cur = a0;
  std::unordered_map<std::vector<int>, std::size_t, VecHash> seen;
  seen.emplace(canonical_key(cur, t), 0);
  if (track_phi) r.potentials.push_back(potential(p, cur, t));

  while (true) {
    auto s = step(p, t, cur, policy, rng);
    if (!s) {
      r.outcome = Outcome::Converged;
      break;
    }
    if (r.steps == cap) {
      r.outcome = Outcome::StepCapReached;
      break;
    }
    ++r.steps;
    cur = s->arrangement;
    if (track_phi) r.potentials.push_back(potential(p, cur, t));
    if (opts.keep_trace) r.trace.push_back(std::move(*s));
    auto [it, fresh] = seen.emplace(canonical_key(cur, t), r.steps);
    if (!fresh) {
      if (!r.first_revisit) {
        r.first_revisit = r.steps;
        r.period = r.steps - it->second;
      }
      if (!opts.continue_after_loop) {
        r.outcome = Outcome::LoopDetected;
        break;
      }
      it->second = r.steps;
    }
  }
  r.final_arrangement = cur;
  return r;
}

bool audit_potential(const Profile& p, const DynamicsReport& report) {
  if (report.potentials.empty()) {
    if (!value_meta(p).is_binary) throw std::invalid_argument("potential audit needs a binary profile");
    throw std::invalid_argument("potential audit needs a path run");
  }
  for (std::size_t i = 1; i < report.potentials.size(); ++i)
    if (!(report.potentials[i] > report.potentials[i - 1])) return false;
  return true;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

DynamicsReport ensemble_run(const Profile& p, const Topology& t, const SwapPolicy& policy, std::uint64_t seed,
                            std::size_t r, std::size_t max_steps) {
  std::mt19937_64 rng(derive_seed(seed, r));
  std::vector<Agent> seats(t.n);
  for (std::size_t i = 0; i < t.n; ++i) seats[i] = static_cast<Agent>(i);
  std::shuffle(seats.begin(), seats.end(), rng);
  RunOptions o;
  o.max_steps = max_steps;
  o.seed = rng();
  o.keep_trace = false;
  return run(p, t, Arrangement(std::move(seats)), policy, o);
}

void tally(EnsembleSummary& s, const DynamicsReport& r) {
  s.converged += r.outcome == Outcome::Converged;
  s.loops += r.outcome == Outcome::LoopDetected;
  s.capped += r.outcome == Outcome::StepCapReached;
  s.total_steps += r.steps;
}

}  // namespace

EnsembleSummary run_ensemble_serial(const Profile& p, const Topology& t, const SwapPolicy& policy, std::size_t runs,
                                    std::uint64_t seed, std::size_t max_steps) {
  EnsembleSummary s;
  s.runs = runs;
  for (std::size_t r = 0; r < runs; ++r) tally(s, ensemble_run(p, t, policy, seed, r, max_steps));
  return s;
}

EnsembleSummary run_ensemble(const Profile& p, const Topology& t, const SwapPolicy& policy, std::size_t runs,
                             std::uint64_t seed, std::size_t max_steps) {
  std::vector<DynamicsReport> reports(runs);
#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < static_cast<long>(runs); ++r)
    reports[r] = ensemble_run(p, t, policy, seed, static_cast<std::size_t>(r), max_steps);
  EnsembleSummary s;
  s.runs = runs;
  for (const auto& r : reports) tally(s, r);
  return s;
}

// ---- rewriting operators ----------------------------------------------------

std::string to_string(RewriteOp op) { return op == RewriteOp::F3 ? "f3" : "f4"; }

std::string apply_f(RewriteOp op, const std::string& s, std::size_t pos) {
  const std::size_t w = op == RewriteOp::F3 ? 3 : 4;
  if (pos + w > s.size()) throw std::invalid_argument(to_string(op) + ": window runs past the end of the string");
  for (char ch : s)
    if (ch != '0' && ch != '1') throw std::invalid_argument("rewriting needs a binary string");
  if (s[pos] != '0' || s[pos + w - 1] != '1')
    throw std::invalid_argument(to_string(op) + ": pattern mismatch at position " + std::to_string(pos));
  auto flip = [](char ch) { return ch == '0' ? '1' : '0'; };
  std::string out = s;
  out[pos] = '1';
  out[pos + w - 1] = '0';
  if (op == RewriteOp::F3) {
    out[pos + 1] = flip(s[pos + 1]);
  } else {
    out[pos + 1] = flip(s[pos + 2]);
    out[pos + 2] = flip(s[pos + 1]);
  }
  return out;
}

namespace {

/// Appends the atomic steps of f_{3k-1} applied at `offset`.
void expand(std::size_t k, std::size_t offset, std::vector<std::pair<RewriteOp, std::size_t>>& ops) {
  if (k == 3) {
    // 1-based: f3@6, f4@3, f4@2, f4@4, f4@3, f3@1
    const std::pair<RewriteOp, std::size_t> base[] = {{RewriteOp::F3, 5}, {RewriteOp::F4, 2}, {RewriteOp::F4, 1},
                                                      {RewriteOp::F4, 3}, {RewriteOp::F4, 2}, {RewriteOp::F3, 0}};
    for (auto [op, pos] : base) ops.emplace_back(op, offset + pos);
    return;
  }
  ops.emplace_back(RewriteOp::F3, offset + 3 * (k - 1) - 1);
  expand(k - 1, offset + 1, ops);
  expand(k - 1, offset + 2, ops);
  ops.emplace_back(RewriteOp::F3, offset);
}

}  // namespace

RewriteTrace expand_chain(std::size_t k) {
  if (k < 3 || k > 20) throw std::invalid_argument("expand_chain needs 3 <= k <= 20");
  std::vector<std::pair<RewriteOp, std::size_t>> ops;
  expand(k, 0, ops);
  RewriteTrace tr;
  tr.start = std::string(3 * k - 2, '0') + "1";
  std::string cur = tr.start;
  for (auto [op, pos] : ops) {
    std::string next = apply_f(op, cur, pos);
    if (!(next > cur)) throw std::logic_error("rewrite step did not increase the string");
    tr.steps.push_back({op, pos, cur, next});
    cur = std::move(next);
  }
  tr.end = cur;
  if (tr.end != "1" + std::string(3 * k - 2, '0')) throw std::logic_error("rewrite chain ended in the wrong string");
  return tr;
}

}  // namespace seating
