#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seating/constructions.hpp"
#include "seating/exact.hpp"
#include "seating/polyclass.hpp"
#include "support.hpp"

using namespace seating;

namespace {

Topology topo(bool cyc, std::size_t n) { return cyc ? Topology::cycle(n) : Topology::path(n); }

}  // namespace

TEST_CASE("triple table conditions") {
  const ClassStructure c{{1, 1, 1}, {{0, 2, 1}, {1, 0, 3}, {0, 0, 0}}};
  const TripleTable ef(c, Criterion::EnvyFree);
  const TripleTable st(c, Criterion::Stable);
  // Table symbols are classes shifted by one; symbol 0 is the dummy.
  for (int a = 0; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int cc = 1; cc <= 3; ++cc)
        for (int d = 0; d <= 3; ++d) {
          const bool left = ef.pref(b, a) >= ef.pref(b, d);
          const bool right = ef.pref(cc, d) >= ef.pref(cc, a);
          CHECK(ef.short_ok(a, b, cc, d) == (left && right));
          CHECK(st.short_ok(a, b, cc, d) == (left || right));
        }
  CHECK(ef.pref(0, 2) == 0);
  CHECK(ef.pref(2, 3) == c.matrix[1][2]);
}

TEST_CASE("decisions match brute force on random instances") {
  std::mt19937_64 rng(61);
  int decided = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const ClassStructure c = support::random_classes(1 + rep % 3, 3, {-1, 0, 1}, rng);
    const std::size_t n = c.n();
    if (n > 8) continue;
    for (bool cyc : {false, true}) {
      if (cyc && n < 3) continue;
      for (Criterion crit : {Criterion::Stable, Criterion::EnvyFree}) {
        const auto r = decide(c, topo(cyc, n), crit);
        const Profile p = expand_classes(c);
        CHECK(bool(r) == oracle::exists(support::to_matrix(p), cyc, crit == Criterion::EnvyFree));
        if (r) CHECK(check(p, topo(cyc, n), *r.arrangement, crit));
        ++decided;
      }
    }
  }
  CHECK(decided > 500);
}

TEST_CASE("memory modes agree") {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 300; ++rep) {
    const ClassStructure c = support::random_classes(2 + rep % 3, 3, {-1, 0, 1}, rng);
    const bool cyc = rep % 2;
    if (cyc && c.n() < 3) continue;
    const Topology t = topo(cyc, c.n());
    for (Criterion crit : {Criterion::Stable, Criterion::EnvyFree}) {
      PolyOptions capped, exact_counts, forbidden;
      capped.memory = exact_counts.memory = TripleMemory::Counts;
      exact_counts.cap_counters = false;
      const bool f = bool(decide(c, t, crit, forbidden));
      CHECK(bool(decide(c, t, crit, capped)) == f);
      CHECK(bool(decide(c, t, crit, exact_counts)) == f);
    }
  }
}

TEST_CASE("pairwise triple check agrees with the judge") {
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 400; ++rep) {
    const ClassStructure c = support::random_classes(3, 3, {-2, 0, 1, 3}, rng);
    const bool cyc = rep % 2;
    if (cyc && c.n() < 3) continue;
    const Topology t = topo(cyc, c.n());
    std::vector<int> seq;
    for (std::size_t k = 0; k < c.k(); ++k) seq.insert(seq.end(), c.sizes[k], static_cast<int>(k));
    std::shuffle(seq.begin(), seq.end(), rng);
    const Profile p = expand_classes(c);
    const Arrangement a = arrangement_from_classes(c, seq);
    for (Criterion crit : {Criterion::Stable, Criterion::EnvyFree}) {
      const auto r = check_compatible(c, t, seq, crit);
      CHECK(r.ok == check(p, t, a, crit).ok);
      CHECK(r.pair.has_value() == !r.ok);
    }
  }
}

TEST_CASE("larger instances beyond agent-level search") {
  for (std::size_t n = 12; n <= 14; ++n) CHECK_FALSE(decide(detect_classes(abf_path(n)).classes, Topology::path(n), Criterion::Stable));
  for (std::size_t n = 4; n <= 12; ++n) CHECK_FALSE(decide(detect_classes(abf_cycle(n)).classes, Topology::cycle(n), Criterion::Stable));
  const auto r = decide(ClassStructure{{10, 10, 10}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}, Topology::cycle(30), Criterion::Stable);
  REQUIRE(r);
  CHECK(is_stable(expand_classes({{10, 10, 10}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}), Topology::cycle(30), *r.arrangement));
}

TEST_CASE("class limit") {
  ClassStructure c{std::vector<std::size_t>(kPolyMaxClasses + 1, 1),
                   std::vector<std::vector<Value>>(kPolyMaxClasses + 1, std::vector<Value>(kPolyMaxClasses + 1, 0))};
  CHECK_THROWS(decide(c, Topology::path(c.n()), Criterion::Stable));
}
