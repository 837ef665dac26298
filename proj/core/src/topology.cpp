#include "clubswarm/topology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace clubswarm {

void ClubParams::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("clubs: " + msg); };
  if (n_clubs == 0) fail("number of clubs must be positive");
  if (min_level == 0) fail("minimum membership must be at least 1");
  if (min_level > default_level)
    fail("default membership " + std::to_string(default_level) + " is below minimum " +
         std::to_string(min_level));
  if (default_level > max_level)
    fail("default membership " + std::to_string(default_level) + " exceeds maximum " +
         std::to_string(max_level));
  if (max_level > n_clubs)
    fail("maximum membership " + std::to_string(max_level) + " exceeds number of clubs " +
         std::to_string(n_clubs));
  if (retention_ratio == 0) fail("retention ratio must be at least 1");
}

ClubState::ClubState(std::size_t n_particles, const ClubParams& params)
    : params_(params),
      n_particles_(n_particles),
      words_((params.n_clubs + 63) / 64),
      bits_(n_particles * words_, 0) {}

ClubState ClubState::random(std::size_t n_particles, const ClubParams& params, Rng& rng) {
  params.validate();
  ClubState s(n_particles, params);
  std::vector<std::size_t> pool(params.n_clubs);
  for (std::size_t i = 0; i < n_particles; ++i) {
    for (std::size_t c = 0; c < pool.size(); ++c) pool[c] = c;
    // partial Fisher-Yates: the first default_level slots form the subset
    for (std::size_t k = 0; k < params.default_level; ++k) {
      const std::size_t j = k + rng.index(pool.size() - k);
      std::swap(pool[k], pool[j]);
      s.join(i, pool[k]);
    }
  }
  return s;
}

ClubState ClubState::from_memberships(const ClubParams& params,
                                      const std::vector<std::vector<std::size_t>>& clubs) {
  ClubState s(clubs.size(), params);
  for (std::size_t i = 0; i < clubs.size(); ++i)
    for (std::size_t c : clubs[i]) {
      if (c >= params.n_clubs)
        throw std::out_of_range("club index " + std::to_string(c) + " out of range");
      s.join(i, c);
    }
  return s;
}

std::span<std::uint64_t> ClubState::row(std::size_t particle) {
  return {bits_.data() + particle * words_, words_};
}

std::span<const std::uint64_t> ClubState::row(std::size_t particle) const {
  return {bits_.data() + particle * words_, words_};
}

std::size_t ClubState::level(std::size_t particle) const {
  std::size_t n = 0;
  for (auto w : row(particle)) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ClubState::is_member(std::size_t particle, std::size_t club) const {
  return (row(particle)[club / 64] >> (club % 64)) & 1u;
}

bool ClubState::share_club(std::size_t a, std::size_t b) const {
  auto ra = row(a);
  auto rb = row(b);
  for (std::size_t w = 0; w < words_; ++w)
    if (ra[w] & rb[w]) return true;
  return false;
}

std::vector<std::size_t> ClubState::clubs_of(std::size_t particle) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < params_.n_clubs; ++c)
    if (is_member(particle, c)) out.push_back(c);
  return out;
}

std::vector<std::size_t> ClubState::members_of(std::size_t club) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_particles_; ++i)
    if (is_member(i, club)) out.push_back(i);
  return out;
}

void ClubState::join(std::size_t particle, std::size_t club) {
  row(particle)[club / 64] |= std::uint64_t{1} << (club % 64);
}

void ClubState::leave(std::size_t particle, std::size_t club) {
  row(particle)[club / 64] &= ~(std::uint64_t{1} << (club % 64));
}

std::size_t ClubState::leave_random(std::size_t particle, Rng& rng) {
  const std::size_t n = level(particle);
  if (n == 0) throw std::logic_error("leave_random: particle has no clubs");
  std::size_t k = rng.index(n);
  for (std::size_t c = 0; c < params_.n_clubs; ++c) {
    if (!is_member(particle, c)) continue;
    if (k-- == 0) {
      leave(particle, c);
      return c;
    }
  }
  throw std::logic_error("leave_random: unreachable");
}

std::size_t ClubState::join_random(std::size_t particle, Rng& rng) {
  const std::size_t n = params_.n_clubs - level(particle);
  if (n == 0) throw std::logic_error("join_random: particle is in every club");
  std::size_t k = rng.index(n);
  for (std::size_t c = 0; c < params_.n_clubs; ++c) {
    if (is_member(particle, c)) continue;
    if (k-- == 0) {
      join(particle, c);
      return c;
    }
  }
  throw std::logic_error("join_random: unreachable");
}

namespace {

template <typename Visit>
void for_each_neighbor(const Topology& t, std::size_t i, std::size_t n, Visit&& visit) {
  if (std::holds_alternative<GlobalTopology>(t)) {
    for (std::size_t j = 0; j < n; ++j) visit(j);
  } else if (std::holds_alternative<RingTopology>(t)) {
    if (n <= 3) {
      for (std::size_t j = 0; j < n; ++j) visit(j);
      return;
    }
    visit((i + n - 1) % n);
    visit(i);
    visit((i + 1) % n);
  } else {
    const auto& clubs = std::get<ClubState>(t);
    for (std::size_t j = 0; j < n; ++j)
      if (j == i || clubs.share_club(i, j)) visit(j);
  }
}

// Strict "a before b" under (value, index).
bool precedes(double va, std::size_t a, double vb, std::size_t b) {
  return va < vb || (va == vb && a < b);
}

}  // namespace

std::vector<std::size_t> neighbors(const Topology& t, std::size_t i, std::size_t n_particles) {
  std::vector<std::size_t> out;
  for_each_neighbor(t, i, n_particles, [&](std::size_t j) { out.push_back(j); });
  std::ranges::sort(out);
  return out;
}

std::size_t neighborhood_best(const Topology& t, std::size_t i,
                              std::span<const Particle> swarm) {
  std::size_t best = i;
  for_each_neighbor(t, i, swarm.size(), [&](std::size_t j) {
    if (precedes(swarm[j].best_fitness, j, swarm[best].best_fitness, best)) best = j;
  });
  return best;
}

std::vector<MembershipChange> update_membership(ClubState& state,
                                                std::span<const double> current_fitness,
                                                std::size_t iteration, Rng& rng) {
  const std::size_t n = state.n_particles();
  if (current_fitness.size() != n)
    throw std::invalid_argument("update_membership: fitness count does not match swarm");
  const ClubParams& p = state.params();
  const bool retention_due = iteration % p.retention_ratio == 0;

  std::vector<MembershipAction> decisions(n, MembershipAction::None);
  for (std::size_t j = 0; j < n; ++j) {
    bool has_other = false;
    bool best = true;
    bool worst = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j || !state.share_club(j, k)) continue;
      has_other = true;
      if (!precedes(current_fitness[j], j, current_fitness[k], k)) best = false;
      if (!precedes(current_fitness[k], k, current_fitness[j], j)) worst = false;
    }
    const std::size_t lvl = state.level(j);
    if (has_other && best) {
      if (lvl > p.min_level) decisions[j] = MembershipAction::Leave;
    } else if (has_other && worst) {
      if (lvl < p.max_level) decisions[j] = MembershipAction::Join;
    } else if (retention_due && lvl != p.default_level) {
      decisions[j] = lvl > p.default_level ? MembershipAction::Leave : MembershipAction::Join;
    }
  }

  std::vector<MembershipChange> changes(n);
  for (std::size_t j = 0; j < n; ++j) {
    changes[j].action = decisions[j];
    if (decisions[j] == MembershipAction::Leave)
      changes[j].club = state.leave_random(j, rng);
    else if (decisions[j] == MembershipAction::Join)
      changes[j].club = state.join_random(j, rng);
  }
  return changes;
}

}  // namespace clubswarm
