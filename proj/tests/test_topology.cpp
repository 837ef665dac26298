#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <clubswarm/topology.hpp>

#include "oracles.hpp"

using namespace clubswarm;
using oracles::oracle_best;
using oracles::oracle_neighbors;

namespace {

// Eight particles over six clubs, written with 1-based labels and converted
// on the way in.
// Particle 3 is the best in its neighborhood, particle 5 the worst, particle 2
// sits above the default level and particle 4 below it.
const std::vector<std::vector<std::size_t>> kSnapshotClubs1Based{
    {1, 4, 6},     // particle 1
    {1, 2, 3, 4},  // particle 2
    {1, 2, 3},     // particle 3
    {1, 5},        // particle 4
    {3, 5, 6},     // particle 5
    {2, 4, 5},     // particle 6
    {4, 5, 6},     // particle 7
    {2, 5, 6},     // particle 8
};
const std::vector<double> kSnapshotFitness{10, 20, 1, 30, 100, 40, 50, 60};

ClubState snapshot_state() {
  ClubParams p;
  p.n_clubs = 6;
  p.min_level = 2;
  p.default_level = 3;
  p.max_level = 5;
  p.retention_ratio = 2;
  std::vector<std::vector<std::size_t>> clubs;
  for (const auto& row : kSnapshotClubs1Based) {
    clubs.emplace_back();
    for (auto c : row) clubs.back().push_back(c - 1);
  }
  return ClubState::from_memberships(p, clubs);
}

std::vector<Particle> swarm_with_best(const std::vector<double>& best_fitness) {
  std::vector<Particle> swarm(best_fitness.size());
  for (std::size_t i = 0; i < swarm.size(); ++i) swarm[i].best_fitness = best_fitness[i];
  return swarm;
}

ClubParams small_params(std::size_t clubs) {
  ClubParams p;
  p.n_clubs = clubs;
  p.min_level = 1;
  p.default_level = 1;
  p.max_level = clubs;
  return p;
}

}  // namespace

TEST_CASE("club parameter validation") {
  ClubParams p;
  CHECK_NOTHROW(p.validate());
  p.default_level = 40;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.min_level = 0;
  CHECK_THROWS(p.validate());
  p = {};
  p.default_level = 4;
  CHECK_THROWS(p.validate());
  p = {};
  p.max_level = 101;
  CHECK_THROWS(p.validate());
  p = {};
  p.retention_ratio = 0;
  CHECK_THROWS(p.validate());
}

TEST_CASE("random club assignment") {
  ClubParams p;
  Rng rng(1);
  const auto s = ClubState::random(20, p, rng);
  for (std::size_t i = 0; i < 20; ++i) CHECK(s.level(i) == 10);

  Rng other(2);
  CHECK_FALSE(ClubState::random(20, p, other) == s);

  ClubParams all;
  all.n_clubs = 7;
  all.min_level = all.default_level = all.max_level = 7;
  Rng r3(3);
  const auto full = ClubState::random(5, all, r3);
  for (std::size_t c = 0; c < 7; ++c) CHECK(full.members_of(c).size() == 5);

  ClubParams bad;
  bad.n_clubs = 8;
  bad.max_level = 8;
  bad.default_level = 9;
  CHECK_THROWS(ClubState::random(3, bad, rng));
}

TEST_CASE("club choice at initialization is uniform") {
  ClubParams p;
  p.n_clubs = 10;
  p.min_level = p.default_level = 3;
  p.max_level = 10;
  Rng rng(77);
  std::vector<int> counts(10, 0);
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    const auto s = ClubState::random(1, p, rng);
    for (auto c : s.clubs_of(0)) ++counts[c];
  }
  // each club expected 0.3 * trials = 6000, sd ~ 65
  for (int c : counts) CHECK(std::abs(c - 6000) < 400);
}

TEST_CASE("neighbors in the walkthrough snapshot") {
  const Topology t = snapshot_state();
  // particle 3 (index 2) shares clubs 1..3 with particles 1, 2, 4, 5, 6, 8
  CHECK(neighbors(t, 2, 8) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 7});
  // particle 5 (index 4): clubs 3, 5, 6
  CHECK(neighbors(t, 4, 8) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});

  const auto& clubs = std::get<ClubState>(t);
  std::vector<std::vector<bool>> member(8, std::vector<bool>(6));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t c = 0; c < 6; ++c) member[i][c] = clubs.is_member(i, c);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto o = oracle_neighbors(member, i);
    CHECK(neighbors(t, i, 8) == std::vector<std::size_t>(o.begin(), o.end()));
  }
}

TEST_CASE("walkthrough membership changes") {
  std::set<std::size_t> leave3, join5, leave2, join4;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ClubState s = snapshot_state();
    Rng rng(seed);
    const auto changes = update_membership(s, kSnapshotFitness, 2, rng);

    REQUIRE(changes[2].action == MembershipAction::Leave);
    REQUIRE(changes[4].action == MembershipAction::Join);
    REQUIRE(changes[1].action == MembershipAction::Leave);
    REQUIRE(changes[3].action == MembershipAction::Join);
    for (std::size_t j : {0u, 5u, 6u, 7u}) REQUIRE(changes[j].action == MembershipAction::None);

    leave3.insert(changes[2].club + 1);
    join5.insert(changes[4].club + 1);
    leave2.insert(changes[1].club + 1);
    join4.insert(changes[3].club + 1);

    CHECK(s.level(2) == 2);
    CHECK(s.level(4) == 4);
    CHECK(s.level(1) == 3);
    CHECK(s.level(3) == 3);
  }
  CHECK(leave3 == std::set<std::size_t>{1, 2, 3});
  CHECK(join5 == std::set<std::size_t>{1, 2, 4});
  CHECK(leave2 == std::set<std::size_t>{1, 2, 3, 4});
  CHECK(join4 == std::set<std::size_t>{2, 3, 4, 6});
}

TEST_CASE("off-schedule iteration only moves extreme particles") {
  ClubState s = snapshot_state();
  Rng rng(4);
  const auto changes = update_membership(s, kSnapshotFitness, 3, rng);
  CHECK(changes[2].action == MembershipAction::Leave);
  CHECK(changes[4].action == MembershipAction::Join);
  CHECK(changes[1].action == MembershipAction::None);
  CHECK(changes[3].action == MembershipAction::None);
}

TEST_CASE("extreme particles at their bound do not move") {
  ClubParams p = small_params(6);
  p.min_level = 2;
  p.default_level = 3;
  p.max_level = 3;
  // 0 is best and at min, 1 is worst and at max; retention would otherwise act
  ClubState s = ClubState::from_memberships(p, {{0, 1}, {0, 2, 3}, {1, 2, 3}});
  Rng rng(1);
  const auto changes = update_membership(s, std::vector<double>{1.0, 9.0, 5.0}, 2, rng);
  CHECK(changes[0].action == MembershipAction::None);
  CHECK(changes[1].action == MembershipAction::None);
  CHECK(s.level(0) == 2);
}

TEST_CASE("a particle alone in its clubs is not extreme") {
  ClubParams p = small_params(6);
  p.min_level = 1;
  p.default_level = 2;
  p.max_level = 4;
  // particles 1 and 2 are pinned at their bounds so only particle 0 can move
  ClubState s = ClubState::from_memberships(p, {{0}, {1}, {1, 2, 3, 4}});
  const Topology t = s;
  CHECK(neighbors(t, 0, 3) == std::vector<std::size_t>{0});
  CHECK(neighborhood_best(t, 0, swarm_with_best({5.0, 1.0, 2.0})) == 0);

  Rng rng(2);
  const auto off = update_membership(s, std::vector<double>{0.0, 1.0, 2.0}, 1, rng);
  CHECK(off[0].action == MembershipAction::None);
  const auto on = update_membership(s, std::vector<double>{0.0, 1.0, 2.0}, 2, rng);
  CHECK(on[0].action == MembershipAction::Join);  // below default, retention step
}

TEST_CASE("ring neighborhoods wrap around") {
  const Topology ring = RingTopology{};
  CHECK(neighbors(ring, 0, 20) == std::vector<std::size_t>{0, 1, 19});
  CHECK(neighbors(ring, 19, 20) == std::vector<std::size_t>{0, 18, 19});
  CHECK(neighbors(ring, 7, 20) == std::vector<std::size_t>{6, 7, 8});
  CHECK(neighbors(ring, 1, 2) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("global neighborhood best is the swarm best") {
  const Topology g = GlobalTopology{};
  const auto swarm = swarm_with_best({4.0, 2.0, 7.0, 2.0, 9.0});
  for (std::size_t i = 0; i < swarm.size(); ++i) CHECK(neighborhood_best(g, i, swarm) == 1);
  CHECK(neighbors(g, 2, 5).size() == 5);
}

TEST_CASE("neighborhood best matches brute force on random instances") {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.index(10);
    const std::size_t clubs = 1 + rng.index(10);
    std::vector<std::vector<bool>> member(n, std::vector<bool>(clubs));
    std::vector<std::vector<std::size_t>> rosters(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < clubs; ++c)
        if (rng.uniform01() < 0.3) {
          member[i][c] = true;
          rosters[i].push_back(c);
        }
    std::vector<double> fit(n);
    for (auto& f : fit) f = static_cast<double>(rng.index(4));  // plenty of ties
    const Topology t = ClubState::from_memberships(small_params(clubs), rosters);
    const auto swarm = swarm_with_best(fit);
    for (std::size_t i = 0; i < n; ++i) {
      const auto o = oracle_neighbors(member, i);
      REQUIRE(neighbors(t, i, n) == std::vector<std::size_t>(o.begin(), o.end()));
      REQUIRE(neighborhood_best(t, i, swarm) == oracle_best(o, fit));
    }
  }
}

TEST_CASE("neighbor relations are symmetric") {
  Rng rng(31);
  ClubParams p;
  p.n_clubs = 30;
  p.default_level = 6;
  p.max_level = 30;
  const std::vector<Topology> topologies{GlobalTopology{}, RingTopology{},
                                         ClubState::random(20, p, rng)};
  for (const auto& t : topologies)
    for (std::size_t i = 0; i < 20; ++i)
      for (auto j : neighbors(t, i, 20)) {
        const auto back = neighbors(t, j, 20);
        CHECK(std::ranges::binary_search(back, i));
      }
}

TEST_CASE("membership stays in bounds and moves at most one step") {
  ClubParams p;
  Rng rng(5);
  ClubState s = ClubState::random(20, p, rng);
  for (std::size_t it = 1; it <= 2000; ++it) {
    std::vector<double> fit(20);
    for (auto& f : fit) f = rng.uniform01();
    std::vector<std::size_t> before(20);
    for (std::size_t j = 0; j < 20; ++j) before[j] = s.level(j);
    update_membership(s, fit, it, rng);
    for (std::size_t j = 0; j < 20; ++j) {
      const auto lvl = s.level(j);
      REQUIRE(lvl >= p.min_level);
      REQUIRE(lvl <= p.max_level);
      REQUIRE((lvl > before[j] ? lvl - before[j] : before[j] - lvl) <= 1);
    }
  }
}

TEST_CASE("off schedule with extremes pinned at their bounds leaves the state unchanged") {
  ClubParams p = small_params(4);
  p.min_level = 1;
  p.default_level = 2;
  p.max_level = 4;
  // 0 is best at the minimum, 2 is worst at the maximum, 1 is off-default
  ClubState s = ClubState::from_memberships(p, {{0}, {0}, {0, 1, 2, 3}});
  const ClubState pinned = s;
  Rng rng(3);
  update_membership(s, std::vector<double>{1.0, 2.0, 3.0}, 3, rng);
  CHECK(s == pinned);
  update_membership(s, std::vector<double>{1.0, 2.0, 3.0}, 4, rng);
  CHECK(s.level(1) == 2);
}

TEST_CASE("persistent swarm best shrinks to the minimum level") {
  ClubParams p;
  Rng rng(8);
  ClubState s = ClubState::random(20, p, rng);
  const std::size_t steps = p.default_level - p.min_level;
  for (std::size_t it = 1; it <= 40; ++it) {
    std::vector<double> fit(20);
    fit[0] = -1.0;
    for (std::size_t j = 1; j < 20; ++j) fit[j] = rng.uniform01();
    update_membership(s, fit, it, rng);
    const std::size_t expected = it < steps ? p.default_level - it : p.min_level;
    REQUIRE(s.level(0) == expected);
  }
}
