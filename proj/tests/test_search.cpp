#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "seating/constructions.hpp"
#include "seating/exact.hpp"
#include "seating/search.hpp"
#include "support.hpp"

using namespace seating;

namespace {

std::set<oracle::Matrix> oracle_families(std::size_t n, const std::vector<long long>& values, bool cyc) {
  std::set<oracle::Matrix> out;
  const std::size_t cells = n * (n - 1);
  std::vector<std::size_t> digit(cells, 0);
  while (true) {
    oracle::Matrix m(n, std::vector<long long>(n, 0));
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) m[i][j] = values[digit[c++]];
    if (!oracle::exists(m, cyc, false)) out.insert(oracle::canonical(m));
    std::size_t k = 0;
    while (k < cells && ++digit[k] == values.size()) digit[k++] = 0;
    if (k == cells) break;
  }
  return out;
}

std::set<oracle::Matrix> as_matrices(const SearchReport& r) {
  std::set<oracle::Matrix> out;
  for (const auto& f : r.families) out.insert(support::to_matrix(f));
  return out;
}

}  // namespace

TEST_CASE("index encoding") {
  CHECK(profile_space_size(3, 2) == 64u);
  CHECK(profile_space_size(5, 2) == std::uint64_t{1} << 20);
  CHECK_FALSE(profile_space_size(9, 2).has_value());
  const std::vector<Value> values{-1, 0, 4};
  std::mt19937_64 rng(107);
  for (int rep = 0; rep < 100; ++rep) {
    const std::uint64_t idx = rng() % *profile_space_size(4, 3);
    const Profile p = decode_profile(4, values, idx);
    std::uint64_t back = 0, scale = 1;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) continue;
        back += scale * (std::find(values.begin(), values.end(), p(i, j)) - values.begin());
        scale *= 3;
      }
    CHECK(back == idx);
  }
}

TEST_CASE("families match a brute-force scan") {
  for (bool cyc : {false, true}) {
    const Topology t = cyc ? Topology::cycle(4) : Topology::path(4);
    const auto r = exhaust(4, {-1, 1}, t, SearchMode::full());
    CHECK(r.scanned == 4096);
    CHECK(as_matrices(r) == oracle_families(4, {-1, 1}, cyc));
  }
  const auto r3 = exhaust(3, {-1, 0, 1}, Topology::path(3), SearchMode::full());
  CHECK(as_matrices(r3) == oracle_families(3, {-1, 0, 1}, false));
  CHECK(r3.family_count() > 0);
}

TEST_CASE("small binary cycles") {
  CHECK(exhaust(3, {0, 1}, Topology::cycle(3), SearchMode::full()).family_count() == 0);
  CHECK(exhaust(4, {0, 1}, Topology::cycle(4), SearchMode::full()).family_count() == 0);
}

TEST_CASE("shards partition the index space") {
  for (bool cyc : {false, true}) {
    const Topology t = cyc ? Topology::cycle(4) : Topology::path(4);
    const auto full = exhaust(4, {-1, 1}, t, SearchMode::full());
    for (std::uint64_t b : {1u, 3u, 7u}) {
      std::vector<SearchReport> parts;
      for (std::uint64_t a = 0; a < b; ++a) parts.push_back(exhaust(4, {-1, 1}, t, SearchMode::sharded(a, b)));
      const auto merged = merge_reports(parts);
      CHECK(merged.scanned == full.scanned);
      CHECK(merged.tested == full.tested);
      CHECK(merged.unstable == full.unstable);
      CHECK(merged.families == full.families);
      CHECK(merged.mode.kind == SearchMode::Kind::Full);
    }
  }
  CHECK_THROWS(SearchMode::sharded(3, 3));
}

TEST_CASE("serial and parallel scans agree") {
  const auto a = exhaust(4, {0, 1, 2}, Topology::path(4), SearchMode::sharded(1, 40));
  const auto b = exhaust_serial(4, {0, 1, 2}, Topology::path(4), SearchMode::sharded(1, 40));
  CHECK(a.families == b.families);
  CHECK(a.tested == b.tested);
  const auto s1 = exhaust(5, {0, 1}, Topology::cycle(5), SearchMode::sampled(3000, 4));
  const auto s2 = exhaust_serial(5, {0, 1}, Topology::cycle(5), SearchMode::sampled(3000, 4));
  CHECK(s1.scanned == 3000);
  CHECK(s1.families == s2.families);
  CHECK(s1.unstable == s2.unstable);
}

TEST_CASE("representatives are canonical") {
  const auto r = exhaust(5, {0, 1}, Topology::cycle(5), SearchMode::full());
  REQUIRE(r.family_count() == 1);
  for (const auto& f : r.families) CHECK(canonical_profile(f) == f);
  const Profile p5 = recover_family(r, 0);
  CHECK(family_label(p5) == "P5");
  CHECK(count_stable(p5, Topology::cycle(5)) == 0);
  CHECK(oracle::count_stable_raw(support::to_matrix(p5), true) == 0);
  CHECK_THROWS_AS(recover_family(r, 1), std::out_of_range);
  CHECK(family_label(canonical_profile(four_class_cycle(7))) == "P7(2)");
}

TEST_CASE("two-valued cycles reduce to binary ones") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto binary = exhaust(n, {0, 1}, Topology::cycle(n), SearchMode::full());
    for (const std::vector<Value> g : {std::vector<Value>{1, 3}, std::vector<Value>{-2, 5}}) {
      const auto r = exhaust(n, g, Topology::cycle(n), SearchMode::full());
      CHECK(r.family_count() == binary.family_count());
      std::set<Profile> mapped;
      for (const auto& f : r.families) {
        Profile b(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (i != j) b.set(i, j, f(i, j) == g[1] ? 1 : 0);
        mapped.insert(canonical_profile(b));
      }
      CHECK(std::vector<Profile>(mapped.begin(), mapped.end()) == binary.families);
    }
  }
}

TEST_CASE("budgets") {
  SearchOptions small;
  small.budget = 1000;
  CHECK_THROWS_AS(exhaust(4, {0, 1}, Topology::cycle(4), SearchMode::full(), small), LimitExceeded);
  CHECK_THROWS_AS(exhaust(7, {0, 1}, Topology::cycle(7), SearchMode::full()), LimitExceeded);
  CHECK_NOTHROW(exhaust(7, {0, 1}, Topology::cycle(7), SearchMode::sampled(20, 1)));
}

TEST_CASE("two-class sweeps find nothing") {
  for (auto tk : {TopologyKind::Path, TopologyKind::Cycle}) {
    const auto r = kclass_sweep(2, 6, {-1, 0, 1}, tk);
    CHECK(r.unstable.empty());
    CHECK(r.instances > 0);
    CHECK(r.cross_checked > 0);
  }
}

TEST_CASE("sweep with negative values finds the pm1 family") {
  const auto r = kclass_sweep(3, 4, {-1, 1}, TopologyKind::Path);
  CHECK_FALSE(r.unstable.empty());
  std::set<Profile> pm1;
  for (std::size_t n = 3; n <= 6; ++n) pm1.insert(canonical_profile(pm1_path(n)));
  bool found = false;
  for (const auto& c : r.unstable) {
    const Profile p = expand_classes(c);
    if (p.size() <= 6 && pm1.count(canonical_profile(p))) found = true;
    if (p.size() <= 7) CHECK_FALSE(oracle::exists(support::to_matrix(p), false, false));
  }
  CHECK(found);
  const auto s = kclass_sweep_serial(3, 4, {-1, 1}, TopologyKind::Path);
  CHECK(s.unstable == r.unstable);
  CHECK(s.instances == r.instances);
}

TEST_CASE("sweep skips exactly the relabelings") {
  // Two classes with sizes up to 2 over one value: 1 matrix, tuples (1,1),(1,2),(2,2).
  const auto r = kclass_sweep(2, 2, {0}, TopologyKind::Path);
  CHECK(r.instances == 3);
  CHECK(r.skipped == 1);
}

TEST_CASE("family fixtures round-trip") {
  const auto r = exhaust(5, {0, 1}, Topology::cycle(5), SearchMode::full());
  const auto dir = std::filesystem::temp_directory_path() / "seating_fixture_test";
  std::filesystem::remove_all(dir);
  const auto paths = write_family_fixtures(r, dir.string(), "p5_");
  REQUIRE(paths.size() == 1);
  std::ifstream in(paths[0]);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(parse_profile(ss.str()) == r.families[0]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("stored P5 fixture matches the scan") {
  const Profile stored = parse_profile(support::read_file(std::string(SEATING_FIXTURES) + "/p5_0.json"));
  CHECK(stored == recover_family(5, {0, 1}, Topology::cycle(5), 0));
}

TEST_CASE("merging different scans fails") {
  const auto a = exhaust(3, {0, 1}, Topology::cycle(3), SearchMode::full());
  const auto b = exhaust(3, {0, 1}, Topology::path(3), SearchMode::full());
  CHECK_THROWS(merge_reports({a, b}));
}
