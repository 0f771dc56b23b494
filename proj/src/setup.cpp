#include "tweetsim/setup.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace tweetsim {

Network::Network(std::size_t people, std::vector<std::pair<AgentId, AgentId>> edges)
    : edges_(std::move(edges)), adjacency_(people) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [a, b] = edges_[i];
        if (a >= b) throw std::invalid_argument("network edge must satisfy a < b");
        if (b >= people) throw std::invalid_argument("network edge id out of range");
        if (i > 0 && edges_[i - 1] == edges_[i])
            throw std::invalid_argument("duplicate network edge");
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

int RingSet::ring_of(double d) const noexcept {
    const auto it = std::lower_bound(radii.begin(), radii.end(), d);
    return it == radii.end() ? -1 : static_cast<int>(it - radii.begin());
}

namespace {

GridCoord uniform_coord(Rng& rng, int h) {
    const int x = static_cast<int>(rng.between(-h, h));
    const int y = static_cast<int>(rng.between(-h, h));
    return {x, y};
}

// Uniform over the lattice points of the closed disk of the given radius.
GridCoord disk_offset(Rng& rng, int radius) {
    for (;;) {
        const int dx = static_cast<int>(rng.between(-radius, radius));
        const int dy = static_cast<int>(rng.between(-radius, radius));
        if (dx * dx + dy * dy <= radius * radius) return {dx, dy};
    }
}

int clip(int v, int h) { return std::clamp(v, -h, h); }

}  // namespace

std::vector<Agent> place_users(const ValidatedConfig& config, Rng& rng) {
    const FixedParams& f = config.fixed();
    const int h = f.world_half_extent;
    const auto people = static_cast<std::size_t>(f.people);

    std::vector<Agent> agents(people);
    for (std::size_t i = 0; i < people; ++i) agents[i].id = static_cast<AgentId>(i);

    std::size_t clustered = 0;
    if (f.cluster) {
        clustered = static_cast<std::size_t>(
            std::floor(f.percentage_clustering * static_cast<double>(people)));
        clustered = std::min(clustered, people);
    }

    std::vector<GridCoord> centers;
    if (clustered > 0) {
        centers.reserve(static_cast<std::size_t>(f.num_clusters));
        for (int c = 0; c < f.num_clusters; ++c) centers.push_back(uniform_coord(rng, h));
    }

    for (std::size_t i = 0; i < people; ++i) {
        Agent& a = agents[i];
        if (i < clustered) {
            const GridCoord center = centers[i % centers.size()];
            const GridCoord off = disk_offset(rng, f.cluster_spread);
            a.position = {clip(center.x + off.x, h), clip(center.y + off.y, h)};
            a.clustered = true;
        } else {
            a.position = uniform_coord(rng, h);
        }
    }
    return agents;
}

std::pair<AgentId, AgentId> pair_from_index(std::uint64_t index, std::uint64_t n) {
    // Row a starts at a*(2n-a-1)/2.
    auto row_start = [n](std::uint64_t a) { return a * (2 * n - a - 1) / 2; };
    const double b = 2.0 * static_cast<double>(n) - 1.0;
    double guess = std::floor((b - std::sqrt(b * b - 8.0 * static_cast<double>(index))) / 2.0);
    std::uint64_t a = guess < 0 ? 0 : static_cast<std::uint64_t>(guess);
    while (a > 0 && row_start(a) > index) --a;
    while (a + 1 < n && row_start(a + 1) <= index) ++a;
    const std::uint64_t second = a + 1 + (index - row_start(a));
    return {static_cast<AgentId>(a), static_cast<AgentId>(second)};
}

Network build_network(const ValidatedConfig& config, Rng& rng) {
    const FixedParams& f = config.fixed();
    const auto n = static_cast<std::uint64_t>(f.people);
    std::vector<std::pair<AgentId, AgentId>> edges;

    if (f.twitter_network == NetworkModel::ErdosRenyi) {
        const double p = f.probability;
        edges.reserve(static_cast<std::size_t>(p * static_cast<double>(pair_count(n)) * 1.01) + 16);
        for (AgentId a = 0; a + 1 < n; ++a)
            for (AgentId b = a + 1; b < n; ++b)
                if (rng.uniform() < p) edges.emplace_back(a, b);
    } else {
        const std::uint64_t total = pair_count(n);
        const auto k = static_cast<std::uint64_t>(f.num_links);
        if (k > total) throw ConfigError("num_links", "exceeds the number of distinct pairs");
        // Floyd's sampling without replacement over pair indices.
        std::unordered_set<std::uint64_t> chosen;
        chosen.reserve(static_cast<std::size_t>(k) * 2);
        std::vector<std::uint64_t> order;
        order.reserve(static_cast<std::size_t>(k));
        for (std::uint64_t j = total - k; j < total; ++j) {
            const std::uint64_t t = rng.below(j + 1);
            const std::uint64_t pick = chosen.insert(t).second ? t : j;
            if (pick == j) chosen.insert(j);
            order.push_back(pick);
        }
        edges.reserve(order.size());
        for (auto idx : order) edges.push_back(pair_from_index(idx, n));
    }
    return Network(static_cast<std::size_t>(n), std::move(edges));
}

RingSet build_rings(int step, double max_radius) {
    if (step < 1) throw std::invalid_argument("ring step must be at least 1");
    RingSet rings;
    for (int k = 1; static_cast<double>(k) * step <= max_radius + 1e-12; ++k)
        rings.radii.push_back(static_cast<double>(k) * step);
    return rings;
}

std::vector<GridCoord> place_event_sources(const ValidatedConfig& config, Rng& rng) {
    std::vector<GridCoord> sources{config->event_location};
    const int extra = config.fixed().n_events ? config.fixed().event_sources - 1 : 0;
    for (int i = 0; i < extra; ++i)
        sources.push_back(uniform_coord(rng, config.fixed().world_half_extent));
    return sources;
}

void write_agents_table(std::ostream& out, std::span<const Agent> agents) {
    out << "id,x,y,clustered\n";
    for (const auto& a : agents)
        out << a.id << ',' << a.position.x << ',' << a.position.y << ',' << (a.clustered ? 1 : 0)
            << '\n';
}

void write_edges_table(std::ostream& out, const Network& network) {
    out << "id_a,id_b\n";
    for (const auto& [a, b] : network.edges()) out << a << ',' << b << '\n';
}

}  // namespace tweetsim
