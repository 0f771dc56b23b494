#pragma once

// World construction: agent placement, clustering, the follower network and
// the sensor's concentric rings.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "tweetsim/core.hpp"
#include "tweetsim/random.hpp"

namespace tweetsim {

using AgentId = std::uint32_t;

struct Agent {
    AgentId id = 0;
    GridCoord position;
    bool clustered = false;
    // Always false; night behaviour is a time window shared by all agents.
    bool night_owl = false;
};

/// Undirected simple graph on agent ids 0..people-1.
class Network {
public:
    Network() = default;
    /// Takes pairs with a < b; sorts them. Throws std::invalid_argument on a
    /// self-loop, duplicate or out-of-range id.
    Network(std::size_t people, std::vector<std::pair<AgentId, AgentId>> edges);

    std::size_t people() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::pair<AgentId, AgentId>>& edges() const noexcept { return edges_; }
    std::span<const AgentId> neighbors(AgentId a) const { return adjacency_.at(a); }

private:
    std::vector<std::pair<AgentId, AgentId>> edges_;
    std::vector<std::vector<AgentId>> adjacency_;
};

struct RingSet {
    std::vector<double> radii;

    /// Index of the innermost ring whose radius is >= d, or -1 beyond the outer ring.
    int ring_of(double d) const noexcept;
};

std::vector<Agent> place_users(const ValidatedConfig& config, Rng& rng);

Network build_network(const ValidatedConfig& config, Rng& rng);

/// Radii step, 2*step, ... up to and including max_radius.
RingSet build_rings(int step, double max_radius);

/// Event sources: the configured location, then (with n_events) further
/// sources drawn uniformly over the world.
std::vector<GridCoord> place_event_sources(const ValidatedConfig& config, Rng& rng);

/// Debug tables: `id,x,y,clustered` and `id_a,id_b`.
void write_agents_table(std::ostream& out, std::span<const Agent> agents);
void write_edges_table(std::ostream& out, const Network& network);

/// Number of unordered pairs on n vertices.
constexpr std::uint64_t pair_count(std::uint64_t n) noexcept { return n * (n - 1) / 2; }

/// Inverse of the row-major pair enumeration (0,1),(0,2),...,(1,2),...
std::pair<AgentId, AgentId> pair_from_index(std::uint64_t index, std::uint64_t n);

}  // namespace tweetsim
