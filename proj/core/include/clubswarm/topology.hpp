#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "clubswarm/rng.hpp"
#include "clubswarm/swarm_core.hpp"

namespace clubswarm {

struct ClubParams {
  std::size_t n_clubs = 100;
  std::size_t min_level = 5;
  std::size_t default_level = 10;
  std::size_t max_level = 33;
  std::size_t retention_ratio = 2;

  /// Throws std::invalid_argument unless
  /// 1 <= min <= default <= max <= n_clubs and retention_ratio >= 1.
  void validate() const;

  bool operator==(const ClubParams&) const = default;
};

/// Dynamic club membership. Each particle belongs to a set of clubs; its
/// neighborhood is every particle sharing at least one club with it,
/// itself included. Clubs may be empty.
class ClubState {
 public:
  ClubState(std::size_t n_particles, const ClubParams& params);

  /// Every particle joins a uniformly random `default_level`-subset of clubs.
  static ClubState random(std::size_t n_particles, const ClubParams& params, Rng& rng);

  /// Builds a state from explicit rosters (0-based club indices per
  /// particle). Level bounds are not enforced here; used for fixtures and
  /// frozen-membership experiments.
  static ClubState from_memberships(const ClubParams& params,
                                    const std::vector<std::vector<std::size_t>>& clubs);

  std::size_t n_particles() const { return n_particles_; }
  std::size_t n_clubs() const { return params_.n_clubs; }
  const ClubParams& params() const { return params_; }

  std::size_t level(std::size_t particle) const;
  bool is_member(std::size_t particle, std::size_t club) const;
  bool share_club(std::size_t a, std::size_t b) const;

  /// Sorted club indices of `particle`.
  std::vector<std::size_t> clubs_of(std::size_t particle) const;
  /// Sorted particle indices enrolled in `club`.
  std::vector<std::size_t> members_of(std::size_t club) const;

  void join(std::size_t particle, std::size_t club);
  void leave(std::size_t particle, std::size_t club);

  /// Leaves one uniformly chosen current club; returns it.
  std::size_t leave_random(std::size_t particle, Rng& rng);
  /// Joins one uniformly chosen club the particle is not yet in; returns it.
  std::size_t join_random(std::size_t particle, Rng& rng);

  bool operator==(const ClubState&) const = default;

 private:
  std::span<std::uint64_t> row(std::size_t particle);
  std::span<const std::uint64_t> row(std::size_t particle) const;

  ClubParams params_;
  std::size_t n_particles_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;  // n_particles_ rows of words_ words
};

struct GlobalTopology {
  bool operator==(const GlobalTopology&) const = default;
};
struct RingTopology {
  bool operator==(const RingTopology&) const = default;
};

using Topology = std::variant<GlobalTopology, RingTopology, ClubState>;

/// Sorted neighbor indices of particle i, always containing i.
std::vector<std::size_t> neighbors(const Topology& t, std::size_t i, std::size_t n_particles);

/// Index of the neighbor with the lowest personal-best fitness; ties go to
/// the lowest index.
std::size_t neighborhood_best(const Topology& t, std::size_t i, std::span<const Particle> swarm);

enum class MembershipAction { None, Leave, Join };

/// What update_membership did to one particle.
struct MembershipChange {
  MembershipAction action = MembershipAction::None;
  std::size_t club = 0;
};

/// One join/leave/retention step for every particle.
///
/// Extremeness is judged on `current_fitness` against the particle's other
/// neighbors under the ordering (fitness, index); a particle alone in its
/// clubs is never extreme. All decisions read the membership as it was on
/// entry and are applied afterwards in particle order.
///   best and level > min      -> leave a random club
///   worst and level < max     -> join a random club
///   not extreme, level != default, iteration % rr == 0
///                             -> one step toward default
/// `iteration` counts from 1.
std::vector<MembershipChange> update_membership(ClubState& state,
                                                std::span<const double> current_fitness,
                                                std::size_t iteration, Rng& rng);

}  // namespace clubswarm
