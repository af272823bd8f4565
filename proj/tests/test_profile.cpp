#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "seating/profile.hpp"
#include "support.hpp"

using namespace seating;

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(Profile::from_rows({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Profile::from_rows({{0, 1}, {1}}), std::invalid_argument);
  Profile p(3);
  CHECK_THROWS_AS(p.set(1, 1, 4), std::invalid_argument);
  p.set(0, 2, -5);
  CHECK(p(0, 2) == -5);
  CHECK_THROWS(Topology::cycle(2));
  CHECK_THROWS(Arrangement({0, 0, 1}));
}

TEST_CASE("text formats round-trip") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const Profile p = support::random_profile(1 + rep % 7, {-3, 0, 2, 17}, rng);
    CHECK(parse_profile(emit_profile_json(p)) == p);
    CHECK(parse_profile(emit_profile_csv(p)) == p);

    std::vector<Agent> seats(p.size());
    std::iota(seats.begin(), seats.end(), 0);
    std::shuffle(seats.begin(), seats.end(), rng);
    const Arrangement a(seats);
    CHECK(parse_arrangement(format_arrangement(a)) == a);

    const ClassStructure c = support::random_classes(1 + rep % 4, 3, {-1, 0, 1}, rng);
    CHECK(parse_classes(emit_classes_json(c)) == c);
  }
  CHECK_THROWS(parse_profile("{\"n\": 2, \"values\": [[0, 1.5], [1, 0]]}"));
  CHECK_THROWS(parse_arrangement("0,1,1"));
}

namespace {

bool indistinguishable(const oracle::Matrix& m, std::size_t i, std::size_t j) {
  if (m[i][j] != m[j][i]) return false;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (x == i || x == j) continue;
    if (m[i][x] != m[j][x] || m[x][i] != m[x][j]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("detect_classes matches pairwise indistinguishability") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 300; ++rep) {
    const ClassStructure c = support::random_classes(1 + rep % 4, 3, {0, 1}, rng);
    const Profile p = support::shuffled(expand_classes(c), rng);
    const auto m = support::to_matrix(p);
    const auto d = detect_classes(p);
    REQUIRE(d.label.size() == p.size());
    CHECK(d.classes.k() <= c.k());
    CHECK(expand_classes(d.classes).size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) CHECK((d.label[i] == d.label[j]) == indistinguishable(m, i, j));
  }
}

TEST_CASE("canonical_profile is the least relabeling") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 60; ++rep) {
    const Profile p = support::random_profile(2 + rep % 5, {0, 1, 2}, rng);
    const Profile c = canonical_profile(p);
    CHECK(support::to_matrix(c) == oracle::canonical(support::to_matrix(p)));
    CHECK(canonical_profile(c) == c);
    CHECK(canonical_profile(support::shuffled(p, rng)) == c);
  }
  CHECK_THROWS_AS(canonical_profile(Profile(kCanonicalLimit + 1)), LimitExceeded);
}

TEST_CASE("normalize_for_cycle keeps every envy relation") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 80; ++rep) {
    const std::size_t n = 3 + rep % 3;
    const Profile p = support::random_profile(n, {-4, -1, 0, 2, 6}, rng);
    const auto m = support::to_matrix(p);
    const auto q = support::to_matrix(normalize_for_cycle(p));
    oracle::for_each_seating(n, [&](const oracle::Seats& s) {
      for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j)
          if (i != j) CHECK(oracle::envies(m, s, true, i, j) == oracle::envies(q, s, true, i, j));
    });
  }
}

TEST_CASE("normalize_for_cycle maps two-valued rows to binary") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 40; ++rep) {
    const Profile q = normalize_for_cycle(support::random_profile(5, {3, 8}, rng));
    for (Value v : q.data()) CHECK((v == 0 || v == 1));
  }
}

TEST_CASE("components follow the cares-about graph") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 100; ++rep) {
    const Profile p = support::random_profile(6, {0, 0, 0, 0, 0, 1}, rng);
    const auto comp = components(p);
    // Oracle: reachability by repeated relaxation.
    std::vector<int> lab(6);
    std::iota(lab.begin(), lab.end(), 0);
    for (int round = 0; round < 6; ++round)
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
          if (p(i, j) != 0 || p(j, i) != 0) lab[i] = lab[j] = std::min(lab[i], lab[j]);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) CHECK((comp[i] == comp[j]) == (lab[i] == lab[j]));
  }
}

TEST_CASE("value_meta") {
  const auto m = value_meta(Profile::from_rows({{0, 1, 1}, {0, 0, 1}, {1, 1, 0}}));
  CHECK(m.is_binary);
  CHECK(m.is_nonnegative);
  CHECK(m.k_valued == 2);
  const auto q = value_meta(Profile::from_rows({{0, -1}, {1, 0}}));
  CHECK_FALSE(q.is_binary);
  CHECK_FALSE(q.is_nonnegative);
}

TEST_CASE("canonical_arrangement picks one representative per orbit") {
  const Topology t = Topology::cycle(5);
  std::set<Arrangement> reps;
  oracle::for_each_seating(5, [&](const oracle::Seats& s) { reps.insert(canonical_arrangement(Arrangement(s), t)); });
  CHECK(reps.size() == 12);
  std::set<Arrangement> path_reps;
  oracle::for_each_seating(5, [&](const oracle::Seats& s) {
    path_reps.insert(canonical_arrangement(Arrangement(s), Topology::path(5)));
  });
  CHECK(path_reps.size() == 60);
}
