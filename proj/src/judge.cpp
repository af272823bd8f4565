#include "seating/judge.hpp"

#include <algorithm>

#include "seating/detail/kernels.hpp"

namespace seating {

namespace {

void require_fit(const Profile& p, const Topology& t, const Arrangement& a) {
  if (p.size() != t.n || a.size() != t.n)
    throw std::invalid_argument("profile, topology and arrangement sizes disagree");
}

std::span<const int> occupants(const Arrangement& a) { return a.seats(); }

}  // namespace

std::string to_string(Criterion c) { return c == Criterion::Stable ? "stable" : "ef"; }

Criterion parse_criterion(const std::string& text) {
  if (text == "stable") return Criterion::Stable;
  if (text == "ef" || text == "envy-free") return Criterion::EnvyFree;
  throw std::invalid_argument("unknown criterion '" + text + "'");
}

std::string witness_json(const Witness& w) {
  return std::string("{\"kind\":\"") + (w.kind == Witness::Kind::Envy ? "envy" : "blocking_pair") +
         "\",\"agents\":[" + std::to_string(w.first) + "," + std::to_string(w.second) + "]}";
}

Value utility(const Profile& p, const Topology& t, const Arrangement& a, Agent agent) {
  require_fit(p, t, a);
  const auto pos = a.positions();
  return detail::utility_at(detail::ProfileVal{&p}, occupants(a), t, pos[agent], agent, t.n, 0);
}

bool envies(const Profile& p, const Topology& t, const Arrangement& a, Agent i, Agent j) {
  require_fit(p, t, a);
  if (i == j) throw std::invalid_argument("envy needs two distinct agents");
  const auto pos = a.positions();
  return detail::envies_seat(detail::ProfileVal{&p}, occupants(a), t, pos[i], pos[j]);
}

bool envies_by_definition(const Profile& p, const Topology& t, const Arrangement& a, Agent i, Agent j) {
  require_fit(p, t, a);
  if (i == j) throw std::invalid_argument("envy needs two distinct agents");
  const auto pos = a.positions();
  const Arrangement swapped = a.swapped_seats(pos[i], pos[j]);
  auto u = [&](const Arrangement& arr) {
    const auto where = arr.positions();
    std::size_t nb[2];
    const int k = t.neighbors(where[i], nb);
    Value s = 0;
    for (int q = 0; q < k; ++q) s += p(i, arr[nb[q]]);
    return s;
  };
  return u(swapped) > u(a);
}

std::vector<Witness> blocking_pairs(const Profile& p, const Topology& t, const Arrangement& a) {
  require_fit(p, t, a);
  const auto pos = a.positions();
  const detail::ProfileVal val{&p};
  std::vector<Witness> out;
  for (Agent i = 0; i < static_cast<Agent>(p.size()); ++i)
    for (Agent j = i + 1; j < static_cast<Agent>(p.size()); ++j)
      if (detail::blocks_seats(val, occupants(a), t, pos[i], pos[j]))
        out.push_back({Witness::Kind::BlockingPair, i, j, pos[i], pos[j]});
  return out;
}

std::vector<Witness> envy_edges(const Profile& p, const Topology& t, const Arrangement& a) {
  require_fit(p, t, a);
  const auto pos = a.positions();
  const detail::ProfileVal val{&p};
  std::vector<Witness> out;
  for (Agent i = 0; i < static_cast<Agent>(p.size()); ++i)
    for (Agent j = 0; j < static_cast<Agent>(p.size()); ++j)
      if (i != j && detail::envies_seat(val, occupants(a), t, pos[i], pos[j]))
        out.push_back({Witness::Kind::Envy, i, j, pos[i], pos[j]});
  return out;
}

Verdict is_stable(const Profile& p, const Topology& t, const Arrangement& a) {
  auto pairs = blocking_pairs(p, t, a);
  if (pairs.empty()) return {};
  return {false, pairs.front()};
}

Verdict is_envy_free(const Profile& p, const Topology& t, const Arrangement& a) {
  auto edges = envy_edges(p, t, a);
  if (edges.empty()) return {};
  return {false, edges.front()};
}

Verdict check(const Profile& p, const Topology& t, const Arrangement& a, Criterion c) {
  return c == Criterion::Stable ? is_stable(p, t, a) : is_envy_free(p, t, a);
}

Value welfare(const Profile& p, const Topology& t, const Arrangement& a) {
  require_fit(p, t, a);
  Value w = 0;
  for (std::size_t s = 0; s < t.n; ++s)
    w += detail::utility_at(detail::ProfileVal{&p}, occupants(a), t, s, a[s], t.n, 0);
  return w;
}

std::vector<int> edge_sequence(const Profile& p, const Arrangement& a, const Topology& t) {
  require_fit(p, t, a);
  if (t.is_cycle()) throw std::invalid_argument("edge sequence is defined on paths only");
  if (!value_meta(p).is_binary) throw std::invalid_argument("edge sequence needs a binary profile");
  std::vector<int> seq;
  for (std::size_t s = 0; s + 1 < t.n; ++s) {
    const bool fwd = p(a[s], a[s + 1]) == 1;
    const bool bwd = p(a[s + 1], a[s]) == 1;
    seq.push_back(fwd && bwd ? 3 : fwd ? 1 : bwd ? 2 : 0);
  }
  return seq;
}

PotentialValue potential(const Profile& p, const Arrangement& a, const Topology& t) {
  PotentialValue v;
  v.edge_seq = edge_sequence(p, a, t);
  v.welfare = welfare(p, t, a);
  return v;
}

}  // namespace seating
