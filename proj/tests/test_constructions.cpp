#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "seating/constructions.hpp"
#include "seating/exact.hpp"
#include "support.hpp"

using namespace seating;

namespace {

bool has_stable_by_classes(const Profile& p, const Topology& t) {
  return bool(find_class_arrangement(detect_classes(p).classes, t, Criterion::Stable));
}

bool hamiltonian_oracle(const Digraph& g, bool cycle) {
  std::vector<int> order(g.vertices);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < order.size() && ok; ++i) ok = g.has_edge(order[i], order[i + 1]);
    if (ok && cycle) ok = g.vertices == 1 || g.has_edge(order.back(), order.front());
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

TEST_CASE("abf_cycle has no stable cycle arrangement") {
  for (std::size_t n = 4; n <= 7; ++n) CHECK_FALSE(oracle::exists(support::to_matrix(abf_cycle(n)), true, false));
  for (std::size_t n = 8; n <= 12; ++n) CHECK_FALSE(has_stable_by_classes(abf_cycle(n), Topology::cycle(n)));
  // (F, F, B, A, F) on a path
  CHECK(is_stable(abf_cycle(5), Topology::path(5), Arrangement({2, 3, 1, 0, 4})));
  const auto v = value_meta(abf_cycle(6));
  CHECK(v.is_nonnegative);
  CHECK(v.value_set == std::vector<Value>{0, 1, 2});
}

TEST_CASE("abf_path has no stable path arrangement") {
  for (std::size_t n = 12; n <= 14; ++n) {
    const auto c = detect_classes(abf_path(n)).classes;
    CHECK(c.k() == 3);
    const auto r = find_class_arrangement(c, Topology::path(n), Criterion::Stable);
    CHECK_FALSE(r);
    CHECK(r.enumerated <= 10'000);
  }
}

TEST_CASE("pm1_path has no stable path arrangement") {
  for (std::size_t n = 3; n <= 7; ++n) CHECK_FALSE(oracle::exists(support::to_matrix(pm1_path(n)), false, false));
  for (std::size_t n = 8; n <= 12; ++n) CHECK_FALSE(has_stable_by_classes(pm1_path(n), Topology::path(n)));
}

TEST_CASE("four_class_cycle has no stable cycle arrangement") {
  CHECK_FALSE(oracle::exists(support::to_matrix(four_class_cycle(7)), true, false));
  for (std::size_t n = 7; n <= 12; ++n) {
    CHECK(detect_classes(four_class_cycle(n)).classes.k() == 4);
    CHECK_FALSE(has_stable_by_classes(four_class_cycle(n), Topology::cycle(n)));
  }
}

TEST_CASE("P4 is the only one-out digraph with the two-step loop") {
  // Every agent approves exactly one other: 3^4 profiles.
  int matches = 0;
  const Arrangement star({0, 1, 2, 3}), pi1({0, 3, 1, 2}), pi2({2, 3, 1, 0});
  const Topology t = Topology::path(4);
  for (int code = 0; code < 81; ++code) {
    Profile p(4);
    int c = code;
    for (std::size_t i = 0; i < 4; ++i, c /= 3) {
      std::size_t target = c % 3;
      if (target >= i) ++target;
      p.set(i, target, 1);
    }
    const auto b1 = blocking_pairs(p, t, pi1);
    const auto b2 = blocking_pairs(p, t, pi2);
    const bool loop = is_stable(p, t, star) && b1.size() == 1 && b1[0].first == 0 && b1[0].second == 2 &&
                      b2.size() == 1 && b2[0].first == 1 && b2[0].second == 3;
    if (loop) {
      ++matches;
      CHECK(p == p4_loop());
    }
  }
  CHECK(matches == 1);
}

TEST_CASE("cycle reduction over all 3-vertex digraphs") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Digraph g = Digraph::from_mask(3, mask);
    const bool ham = hamiltonian_oracle(g, true);
    const auto r = ef_equiv_hamiltonicity_cycle(g);
    CHECK(r.ham_exists == ham);
    CHECK(r.ef_exists == ham);
  }
}

TEST_CASE("path reduction over all 3-vertex sink digraphs") {
  int graphs = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Digraph g = Digraph::from_mask(3, mask);
    for (std::size_t sink = 0; sink < 3; ++sink) {
      if (g.out_degree(static_cast<int>(sink)) != 0) continue;
      ++graphs;
      // Hamiltonian paths must end at the sink, which has no way out anyway.
      const auto r = ef_equiv_hamiltonicity_path(g, sink);
      CHECK(r.ham_exists == hamiltonian_oracle(g, false));
      CHECK(r.ef_exists == r.ham_exists);
    }
  }
  CHECK(graphs > 0);
}

TEST_CASE("gadget profile layout") {
  const Digraph g = parse_edge_list("0 1\n1 2\n2 0\n");
  CHECK(g.vertices == 3);
  const Profile p = hamiltonian_cycle_profile(g);
  CHECK(p.size() == 9);
  CHECK(p(gadget_x(0), gadget_y(0)) > 0);
  CHECK(find_arrangement(p, Topology::cycle(9), Criterion::EnvyFree));
  CHECK_THROWS(parse_edge_list("0 0\n"));
}

TEST_CASE("nonmonotone triples") {
  for (std::size_t n = 7; n <= 9; ++n) {
    const auto t = nonmonotone_pair(n);
    CHECK_FALSE(has_stable_by_classes(t.unstable, Topology::cycle(n)));
    CHECK(t.minus_a.size() == n - 1);
    CHECK(t.plus_b3.size() == n + 1);
    CHECK(is_stable(t.minus_a, Topology::cycle(n - 1), t.minus_a_stable));
    CHECK(is_stable(t.plus_b3, Topology::cycle(n + 1), t.plus_b3_stable));
  }
}

TEST_CASE("Euler tour of complete graphs") {
  for (std::size_t k : {3u, 5u, 7u, 9u}) {
    const auto tour = complete_graph_euler_tour(k);
    CHECK(tour.size() == k * (k - 1) / 2);
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < tour.size(); ++i) {
      const int a = tour[i], b = tour[(i + 1) % tour.size()];
      CHECK(a != b);
      edges.insert({std::min(a, b), std::max(a, b)});
    }
    CHECK(edges.size() == tour.size());
  }
  CHECK_THROWS(complete_graph_euler_tour(4));
}

TEST_CASE("blockwise Euler construction") {
  const auto b = blockwise_euler(pm1_path(5));
  CHECK(b.profile.size() == 55);
  CHECK(zero_utility_lemma_holds(b.profile, b.arrangement));
  CHECK(is_stable(b.profile, Topology::cycle(55), b.arrangement));
  const auto small = blockwise_euler(p4_loop());
  CHECK(is_stable(small.profile, Topology::cycle(small.profile.size()), small.arrangement));
}

TEST_CASE("two-class constructions are stable") {
  std::mt19937_64 rng(97);
  for (int rep = 0; rep < 400; ++rep) {
    const ClassStructure c = support::random_classes(2, 4, {-2, -1, 0, 1, 3}, rng);
    for (bool cyc : {false, true}) {
      if (cyc && c.n() < 3) continue;
      const Topology t = cyc ? Topology::cycle(c.n()) : Topology::path(c.n());
      const Arrangement a = two_class_stable(c, t);
      CHECK(oracle::stable(support::to_matrix(expand_classes(c)), support::to_seats(a), cyc));
    }
  }
}

TEST_CASE("three-class two-valued cycle constructions are stable") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 300; ++rep) {
    const ClassStructure c = support::random_classes(3, 3, {0, 1}, rng);
    if (c.n() < 3) continue;
    const Arrangement a = three_class_two_valued_cycle_stable(c);
    CHECK(oracle::stable(support::to_matrix(expand_classes(c)), support::to_seats(a), true));
  }
}

TEST_CASE("fewest same-class adjacencies") {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      for (std::size_t c = 1; c <= 3; ++c) {
        const std::vector<std::size_t> sizes{a, b, c};
        std::vector<int> seq;
        for (int k = 0; k < 3; ++k) seq.insert(seq.end(), sizes[k], k);
        std::size_t best = seq.size();
        do best = std::min(best, monochromatic_adjacencies(seq, true));
        while (std::next_permutation(seq.begin(), seq.end()));
        const auto got = min_monochromatic_cycle_sequence(sizes);
        CHECK(monochromatic_adjacencies(got, true) == best);
        std::map<int, std::size_t> counts;
        for (int x : got) ++counts[x];
        CHECK(counts[0] == a);
        CHECK(counts[1] == b);
        CHECK(counts[2] == c);
      }
}

TEST_CASE("cyclic likes: welfare is n minus same-class adjacencies") {
  std::mt19937_64 rng(103);
  const std::vector<std::vector<Value>> likes{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  for (int rep = 0; rep < 200; ++rep) {
    std::uniform_int_distribution<std::size_t> size(1, 4);
    const ClassStructure c{{size(rng), size(rng), size(rng)}, likes};
    std::vector<int> seq;
    for (int k = 0; k < 3; ++k) seq.insert(seq.end(), c.sizes[k], k);
    std::shuffle(seq.begin(), seq.end(), rng);
    const Topology t = Topology::cycle(c.n());
    const Value w = welfare(expand_classes(c), t, arrangement_from_classes(c, seq));
    CHECK(w == static_cast<Value>(c.n() - monochromatic_adjacencies(seq, true)));
  }
}

TEST_CASE("named families") {
  for (const auto& name : family_names()) CHECK(construct_family(name, 12).size() >= 4);
  CHECK_THROWS(construct_family("nope", 5));
  CHECK_THROWS(abf_cycle(3));
}
