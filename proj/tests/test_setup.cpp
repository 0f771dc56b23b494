#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "test_support.hpp"
#include "tweetsim/setup.hpp"

using namespace tweetsim;
using tweetsim::testing::ks_critical_1pct;
using tweetsim::testing::ks_statistic;

namespace {

ValidatedConfig config_with(auto&& edit) {
    SimulationConfig c;
    edit(c);
    return validate_config(c);
}

}  // namespace

TEST_CASE("clustered share follows percentage_clustering") {
    const auto cfg = config_with([](SimulationConfig&) {});
    Rng rng(7);
    const auto agents = place_users(cfg, rng);
    REQUIRE(agents.size() == 1000);
    const auto clustered = std::count_if(agents.begin(), agents.end(), [](const Agent& a) { return a.clustered; });
    CHECK(clustered == 750);
    for (std::size_t i = 0; i < agents.size(); ++i) {
        CHECK(agents[i].id == i);
        CHECK(in_world(agents[i].position, 50));
    }
}

TEST_CASE("single full cluster keeps everyone within the spread radius of one center") {
    const auto cfg = config_with([](SimulationConfig& c) {
        c.fixed.percentage_clustering = 1.0;
        c.fixed.num_clusters = 1;
    });
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Rng rng(seed);
        const auto agents = place_users(cfg, rng);
        bool found = false;
        for (int cx = -50; cx <= 50 && !found; ++cx)
            for (int cy = -50; cy <= 50 && !found; ++cy)
                found = std::all_of(agents.begin(), agents.end(), [&](const Agent& a) {
                    return distance(a.position, {cx, cy}) <= 3.0;
                });
        CHECK(found);
    }
}

TEST_CASE("cluster members near the world edge are clipped into bounds") {
    const auto cfg = config_with([](SimulationConfig& c) {
        c.fixed.world_half_extent = 2;
        c.fixed.cluster_spread = 6;
        c.event_location = {0, 0};
        c.fixed.percentage_clustering = 1.0;
    });
    Rng rng(11);
    for (const auto& a : place_users(cfg, rng)) CHECK(in_world(a.position, 2));
}

TEST_CASE("unclustered x coordinates are indistinguishable from uniform") {
    const auto cfg = config_with([](SimulationConfig& c) { c.fixed.cluster = false; });
    int rejections = 0;
    std::mt19937_64 oracle(99);
    std::uniform_int_distribution<int> coord(-50, 50);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Rng rng(seed);
        const auto agents = place_users(cfg, rng);
        std::vector<double> xs, ref;
        for (const auto& a : agents) {
            CHECK_FALSE(a.clustered);
            xs.push_back(a.position.x);
        }
        for (std::size_t i = 0; i < 1000; ++i) ref.push_back(coord(oracle));
        if (ks_statistic(xs, ref) > ks_critical_1pct(xs.size(), ref.size())) ++rejections;
    }
    // Binomial(30, 0.01): three or more rejections has probability ~0.3%.
    CHECK(rejections <= 2);
}

TEST_CASE("placement and network are deterministic per seed") {
    const auto cfg = config_with([](SimulationConfig& c) { c.fixed.people = 300; });
    Rng a(5), b(5), c(6);
    const auto p1 = place_users(cfg, a);
    const auto p2 = place_users(cfg, b);
    const auto p3 = place_users(cfg, c);
    for (std::size_t i = 0; i < p1.size(); ++i) CHECK(p1[i].position == p2[i].position);
    bool differs = false;
    for (std::size_t i = 0; i < p1.size(); ++i) differs |= !(p1[i].position == p3[i].position);
    CHECK(differs);

    Rng n1(5), n2(5);
    CHECK(build_network(cfg, n1).edges() == build_network(cfg, n2).edges());
}

TEST_CASE("Erdos-Renyi extremes") {
    Rng rng(1);
    CHECK(build_network(config_with([](SimulationConfig& c) { c.fixed.probability = 0.0; }), rng).edge_count() == 0);
    const auto full = build_network(config_with([](SimulationConfig& c) {
        c.fixed.probability = 1.0;
        c.fixed.people = 5;
    }), rng);
    CHECK(full.edge_count() == 10);
    for (AgentId a = 0; a < 5; ++a) CHECK(full.neighbors(a).size() == 4);
}

TEST_CASE("Erdos-Renyi edge count is binomial around p*N(N-1)/2") {
    const auto cfg = config_with([](SimulationConfig& c) {
        c.fixed.people = 200;
        c.fixed.probability = 0.3;
    });
    const double pairs = 200.0 * 199.0 / 2.0;
    const double expected = 0.3 * pairs;
    const double sd = std::sqrt(pairs * 0.3 * 0.7);
    double mean = 0.0;
    for (std::uint64_t s = 1; s <= 100; ++s) {
        Rng rng(s);
        mean += static_cast<double>(build_network(cfg, rng).edge_count());
    }
    mean /= 100.0;
    CHECK(std::abs(mean - expected) < 3.0 * sd / std::sqrt(100.0));
}

TEST_CASE("random-edge network has exactly num_links distinct pairs") {
    for (std::int64_t k : {0, 1, 17, 44, 45}) {
        const auto cfg = config_with([k](SimulationConfig& c) {
            c.fixed.twitter_network = NetworkModel::RandomEdges;
            c.fixed.people = 10;
            c.fixed.num_links = k;
        });
        Rng rng(static_cast<std::uint64_t>(k) + 3);
        const auto net = build_network(cfg, rng);
        CHECK(net.edge_count() == static_cast<std::size_t>(k));
        std::set<std::pair<AgentId, AgentId>> uniq(net.edges().begin(), net.edges().end());
        CHECK(uniq.size() == static_cast<std::size_t>(k));
        for (auto [a, b] : net.edges()) {
            CHECK(a < b);
            CHECK(b < 10);
        }
    }
}

TEST_CASE("random-edge sampling is uniform over pairs") {
    // Each of the 10 pairs on 5 vertices should be drawn with probability 3/10.
    const auto cfg = config_with([](SimulationConfig& c) {
        c.fixed.twitter_network = NetworkModel::RandomEdges;
        c.fixed.people = 5;
        c.fixed.num_links = 3;
    });
    std::map<std::pair<AgentId, AgentId>, int> hits;
    const int trials = 20000;
    Rng rng(123);
    for (int i = 0; i < trials; ++i) {
        const auto net = build_network(cfg, rng);
        for (const auto& e : net.edges()) ++hits[e];
    }
    REQUIRE(hits.size() == 10);
    const double sd = std::sqrt(trials * 0.3 * 0.7);
    for (const auto& [pair, n] : hits) CHECK(std::abs(n - trials * 0.3) < 4 * sd);
}

TEST_CASE("pair index decoding enumerates every pair once") {
    for (std::uint64_t n : {2u, 3u, 7u, 50u}) {
        std::vector<std::pair<AgentId, AgentId>> expected;
        for (AgentId a = 0; a < n; ++a)
            for (AgentId b = a + 1; b < n; ++b) expected.emplace_back(a, b);
        REQUIRE(expected.size() == pair_count(n));
        for (std::uint64_t i = 0; i < expected.size(); ++i) CHECK(pair_from_index(i, n) == expected[i]);
    }
}

TEST_CASE("network rejects malformed edges") {
    CHECK_THROWS(Network(3, {{1, 1}}));
    CHECK_THROWS(Network(3, {{0, 1}, {0, 1}}));
    CHECK_THROWS(Network(3, {{0, 3}}));
    CHECK_THROWS(Network(3, {{2, 1}}));
}

TEST_CASE("rings") {
    CHECK(build_rings(7, 21).radii == std::vector<double>{7, 14, 21});
    CHECK(build_rings(1, 3).radii == std::vector<double>{1, 2, 3});
    CHECK(build_rings(5, 4).radii.empty());
    CHECK(build_rings(7, 20.5).radii == std::vector<double>{7, 14});

    const RingSet r = build_rings(7, 21);
    CHECK(r.ring_of(0.0) == 0);
    CHECK(r.ring_of(7.0) == 0);
    CHECK(r.ring_of(7.01) == 1);
    CHECK(r.ring_of(21.0) == 2);
    CHECK(r.ring_of(21.5) == -1);
}

TEST_CASE("extra event sources appear only with n_events") {
    Rng rng(4);
    CHECK(place_event_sources(config_with([](SimulationConfig&) {}), rng).size() == 1);
    const auto multi = place_event_sources(config_with([](SimulationConfig& c) {
        c.fixed.n_events = true;
        c.fixed.event_sources = 4;
    }), rng);
    REQUIRE(multi.size() == 4);
    CHECK(multi.front() == GridCoord{0, 4});
    for (auto s : multi) CHECK(in_world(s, 50));
}

TEST_CASE("debug tables") {
    std::vector<Agent> agents{{0, {1, -2}, true, false}, {1, {3, 4}, false, false}};
    std::ostringstream a;
    write_agents_table(a, agents);
    CHECK(a.str() == "id,x,y,clustered\n0,1,-2,1\n1,3,4,0\n");
    std::ostringstream e;
    write_edges_table(e, Network(3, {{1, 2}, {0, 2}}));
    CHECK(e.str() == "id_a,id_b\n0,2\n1,2\n");
}
