#include <doctest.h>

#include <random>
#include <set>

#include "tweetsim/config_io.hpp"
#include "tweetsim/core.hpp"

using namespace tweetsim;

namespace {

std::string field_of(const SimulationConfig& c) {
    try {
        validate_config(c);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "";
}

}  // namespace

TEST_CASE("VIRG column validates") {
    SimulationConfig c;
    c.variable = {0.33, 31, 0.49, 0.17, 8, 0.07};
    const ValidatedConfig v = validate_config(c);
    CHECK(v.get() == c);
    CHECK(v.variable().event_duration == 31);
}

TEST_CASE("defaults carry the fixed parameter table") {
    const FixedParams f;
    CHECK_FALSE(f.n_events);
    CHECK(f.event_sources == 1);
    CHECK(f.eight_mode);
    CHECK(f.twitter_network == NetworkModel::ErdosRenyi);
    CHECK(f.people == 1000);
    CHECK(f.probability == 0.45);
    CHECK(f.step == 7);
    CHECK(f.num_clusters == 9);
    CHECK(f.cluster);
    CHECK(f.percentage_clustering == 0.75);
    CHECK(f.tweet_threshold == 0.7);
    CHECK(f.user_interest == 5);
    CHECK(f.event_interest == 5);
    CHECK(f.night_mode);
    CHECK(f.alpha == 1.0);
    CHECK(f.beta == 20.0);
    CHECK(f.z_variance == 0.2);
}

TEST_CASE("validation names the offending field") {
    SimulationConfig c;
    c.fixed.probability = 1.5;
    CHECK(field_of(c) == "probability");

    c = {};
    c.variable.tweet_chance = -0.1;
    CHECK(field_of(c) == "tweet_chance");

    c = {};
    c.event_tick = c.total_ticks;
    CHECK(field_of(c) == "event_tick");

    c = {};
    c.event_location = {51, 0};
    CHECK(field_of(c) == "event_location");

    c = {};
    c.sensor_location = {0, -51};
    CHECK(field_of(c) == "sensor_location");

    c = {};
    c.total_ticks = 0;
    CHECK(field_of(c) == "total_ticks");

    c = {};
    c.fixed.event_sources = 3;
    CHECK(field_of(c) == "event_sources");
    c.fixed.n_events = true;
    CHECK(field_of(c) == "");

    c = {};
    c.fixed.twitter_network = NetworkModel::RandomEdges;
    c.fixed.people = 5;
    c.fixed.num_links = 11;
    CHECK(field_of(c) == "num_links");
    c.fixed.num_links = 10;
    CHECK(field_of(c) == "");

    c = {};
    c.variable.night_duration = 25;
    CHECK(field_of(c) == "night_duration");

    c = {};
    c.variable.event_duration = 0;
    CHECK(field_of(c) == "event_duration");

    c = {};
    c.fixed.people = 0;
    CHECK(field_of(c) == "people");
}

TEST_CASE("empty clusters are valid") {
    SimulationConfig c;
    c.fixed.cluster = true;
    c.fixed.percentage_clustering = 0.0;
    CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("night window is the tail of each day") {
    CHECK_FALSE(is_night_tick(15, 24, 8));
    CHECK(is_night_tick(16, 24, 8));
    CHECK(is_night_tick(23, 24, 8));
    CHECK_FALSE(is_night_tick(24, 24, 8));
    CHECK(is_night_tick(40, 24, 8));
    CHECK_FALSE(is_night_tick(5, 24, 0));
}

TEST_CASE("published parameter names map one-to-one onto config keys") {
    std::set<std::string_view> keys(config_keys().begin(), config_keys().end());
    std::set<std::string_view> mapped;
    for (const auto& p : parameter_names()) {
        CAPTURE(p.published);
        CHECK(normalize_key(p.published) == p.key);
        CHECK(keys.count(p.key) == 1);
        CHECK(mapped.insert(p.key).second);
    }
    CHECK(parameter_names().size() == 21);
}

TEST_CASE("parser accepts published spellings and comments") {
    const auto c = parse_config(
        "# scenario\n"
        "eight-mode? = false\n"
        "twitter-network = random_edges   # alt model\n"
        "num-links = 12\n"
        "event_location = -3, 7\n"
        "seed = 18446744073709551615\n");
    CHECK_FALSE(c.fixed.eight_mode);
    CHECK(c.fixed.twitter_network == NetworkModel::RandomEdges);
    CHECK(c.fixed.num_links == 12);
    CHECK(c.event_location == GridCoord{-3, 7});
    CHECK(c.seed == 18446744073709551615ULL);
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_config("nonsense = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("people = many\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("cluster = maybe\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("event_location = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("just a line\n"), ConfigError);
    try {
        parse_config("probability = abc\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "probability");
    }
}

TEST_CASE("property: format then parse reproduces any config") {
    std::mt19937_64 gen(20240611);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> small(0, 40);
    for (int trial = 0; trial < 200; ++trial) {
        SimulationConfig c;
        c.fixed.n_events = gen() & 1;
        c.fixed.event_sources = c.fixed.n_events ? 1 + small(gen) % 4 : 1;
        c.fixed.eight_mode = gen() & 1;
        c.fixed.twitter_network = (gen() & 1) ? NetworkModel::ErdosRenyi : NetworkModel::RandomEdges;
        c.fixed.people = 26 + small(gen) * 25;
        c.fixed.num_links = small(gen);
        c.fixed.probability = unit(gen);
        c.fixed.percentage_clustering = unit(gen);
        c.fixed.tweet_threshold = unit(gen) * 2 - 0.5;
        c.fixed.alpha = 0.1 + unit(gen);
        c.fixed.beta = 1 + 40 * unit(gen);
        c.fixed.z_variance = 0.01 + unit(gen);
        c.fixed.spread_rate = 0.1 + 3 * unit(gen);
        c.variable.tweet_chance = unit(gen);
        c.variable.event_tweet_chance = unit(gen);
        c.variable.night_tweet_chance = unit(gen);
        c.variable.ndist = 0.01 + 3 * unit(gen);
        c.seed = gen();
        c.event_location = {small(gen) - 20, small(gen) - 20};
        c.sensor_max_radius = 1 + 30 * unit(gen);
        const ValidatedConfig v = validate_config(c);
        CHECK(validate_config(parse_config(format_config(v.get()))) == v);
    }
}
