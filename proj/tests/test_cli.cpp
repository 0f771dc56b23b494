#include <doctest.h>

#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "tweetsim/cli.hpp"
#include "tweetsim/config_io.hpp"
#include "tweetsim/series_io.hpp"

using namespace tweetsim;
using tweetsim::testing::gate_rate;
using tweetsim::testing::TempDir;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "tweetsim");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

std::string small_config(const std::string& extra = "") {
    return "people = 120\ntotal_ticks = 72\nevent_tick = 30\nseed = 4\n" + extra;
}

}  // namespace

TEST_CASE("simulate writes one row per tick and a manifest") {
    TempDir dir;
    write_file(dir / "c.cfg", small_config());
    const auto r = invoke({"simulate", "--config", (dir / "c.cfg").string(), "--out", (dir / "a.csv").string()});
    REQUIRE(r.code == 0);
    const auto s = read_series(dir / "a.csv");
    CHECK(s.series.size() == 72);
    CHECK(s.series.event_tick == 30);
    const auto manifest = read_text_file(dir / "a.csv.manifest.json");
    CHECK(manifest.find("\"seed\": 4") != std::string::npos);
    CHECK(manifest.find("\"version\": \"0.1.0\"") != std::string::npos);
}

TEST_CASE("simulate is reproducible from config and from its own output") {
    TempDir dir;
    write_file(dir / "c.cfg", small_config());
    REQUIRE(invoke({"simulate", "--config", (dir / "c.cfg").string(), "--out", (dir / "a.csv").string()}).code == 0);
    REQUIRE(invoke({"simulate", "--config", (dir / "c.cfg").string(), "--out", (dir / "b.csv").string()}).code == 0);
    REQUIRE(invoke({"simulate", "--config", (dir / "a.csv").string(), "--out", (dir / "c.csv").string()}).code == 0);
    const auto a = read_text_file(dir / "a.csv");
    CHECK(a == read_text_file(dir / "b.csv"));
    CHECK(a == read_text_file(dir / "c.csv"));

    // stdout variant matches the file.
    CHECK(invoke({"simulate", "--config", (dir / "c.cfg").string()}).out == a);

    // A seed override changes the counts.
    REQUIRE(invoke({"simulate", "--config", (dir / "c.cfg").string(), "--seed", "5", "--out",
                 (dir / "d.csv").string()}).code == 0);
    CHECK(read_series(dir / "d.csv").series.values != read_series(dir / "a.csv").series.values);
}

TEST_CASE("simulate debug dumps") {
    TempDir dir;
    write_file(dir / "c.cfg", small_config());
    REQUIRE(invoke({"simulate", "--config", (dir / "c.cfg").string(), "--out", (dir / "a.csv").string(),
                 "--dump-agents", (dir / "agents.csv").string(), "--dump-edges", (dir / "edges.csv").string()})
                .code == 0);
    const auto agents = read_text_file(dir / "agents.csv");
    CHECK(agents.starts_with("id,x,y,clustered\n"));
    CHECK(std::count(agents.begin(), agents.end(), '\n') == 121);
    CHECK(read_text_file(dir / "edges.csv").starts_with("id_a,id_b\n"));
}

TEST_CASE("simulate error codes") {
    TempDir dir;
    const auto missing = (dir / "nope.cfg").string();
    const auto r = invoke({"simulate", "--config", missing});
    CHECK(r.code == cli::kIoError);
    CHECK(r.err.find(missing) != std::string::npos);

    write_file(dir / "bad.cfg", "probability = 2\n");
    const auto bad = invoke({"simulate", "--config", (dir / "bad.cfg").string()});
    CHECK(bad.code == cli::kConfigError);
    CHECK(bad.err.find("probability") != std::string::npos);

    CHECK(invoke({"simulate"}).code == cli::kUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kUsage);
    CHECK(invoke({}).code == cli::kUsage);
}

TEST_CASE("estimate recovers a plateau and the segment ratios") {
    TempDir dir;
    std::ostringstream s;
    s << "tick,count,night\n";
    for (int t = 0; t < 200; ++t) s << t << ',' << (t >= 100 && t < 148 ? 30 : 10) << ",0\n";
    write_file(dir / "p.csv", s.str());
    const auto r = invoke({"estimate", (dir / "p.csv").string(), "--event-tick", "100"});
    REQUIRE(r.code == 0);
    const auto cfg = parse_config(r.out);
    CHECK(std::abs(cfg.variable.event_duration - 48) <= 3);
    // No night ticks: pre 10, post mean over ticks 100..199 = (48*30 + 52*10)/100.
    const double post = (48.0 * 30 + 52.0 * 10) / 100.0;
    CHECK(cfg.variable.tweet_chance == doctest::Approx(10.0 / (10.0 + post)).epsilon(1e-5));
    CHECK(cfg.variable.night_tweet_chance == 0.0);
}

TEST_CASE("estimate with an explicit mask and equal means") {
    TempDir dir;
    write_file(dir / "e.csv", "# event_tick = 4\ntick,count,night\n0,6,0\n1,6,0\n2,6,1\n3,6,1\n4,6,0\n5,6,0\n");
    const auto r = invoke({"estimate", (dir / "e.csv").string()});
    REQUIRE(r.code == 0);
    const auto cfg = parse_config(r.out);
    CHECK(cfg.variable.tweet_chance == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
    CHECK(cfg.variable.event_tweet_chance == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
    CHECK(cfg.variable.night_tweet_chance == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
    CHECK(cfg.variable.event_duration == 1);
}

TEST_CASE("estimate numeric failure and missing event tick") {
    TempDir dir;
    write_file(dir / "z.csv", "tick,count\n0,0\n1,0\n2,0\n3,0\n");
    CHECK(invoke({"estimate", (dir / "z.csv").string(), "--event-tick", "2"}).code == cli::kNumericError);
    CHECK(invoke({"estimate", (dir / "z.csv").string()}).code == cli::kUsage);
    CHECK(invoke({"estimate", (dir / "missing.csv").string(), "--event-tick", "2"}).code == cli::kIoError);
}

TEST_CASE("validate a series against itself and against a mismatch") {
    TempDir dir;
    write_file(dir / "c.cfg", small_config());
    REQUIRE(invoke({"simulate", "--config", (dir / "c.cfg").string(), "--out", (dir / "a.csv").string()}).code == 0);
    const auto r = invoke({"validate", (dir / "a.csv").string(), (dir / "a.csv").string(), "--max-lag", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# rho0 = 1\n") != std::string::npos);
    CHECK(r.out.find("# lag0_significant = true") != std::string::npos);
    CHECK(r.out.find("lag,rho\n-5,") != std::string::npos);

    write_file(dir / "short.csv", "tick,count\n0,1\n1,2\n2,3\n");
    CHECK(invoke({"validate", (dir / "a.csv").string(), (dir / "short.csv").string()}).code == cli::kNumericError);
}

TEST_CASE("sweep writes every seed and a summary") {
    TempDir dir;
    // Routine tweets only: the per-tick mean is people * P(z < tc).
    write_file(dir / "c.cfg",
               "people = 300\ntotal_ticks = 40\nevent_tick = 20\nevent_enabled = false\n"
               "night_mode = false\nuser_interest = 0\n");
    const auto r = invoke({"sweep", "--config", (dir / "c.cfg").string(), "--seeds", "1..10", "--out",
                        (dir / "runs").string(), "--threads", "3"});
    REQUIRE(r.code == 0);
    for (int s = 1; s <= 10; ++s) {
        CHECK(std::filesystem::exists(dir / ("runs/seed_" + std::to_string(s) + ".csv")));
        CHECK(std::filesystem::exists(dir / ("runs/seed_" + std::to_string(s) + ".csv.manifest.json")));
    }
    // Sweep output must equal single runs with the same seed.
    REQUIRE(invoke({"simulate", "--config", (dir / "c.cfg").string(), "--seed", "7", "--out",
                 (dir / "single.csv").string()}).code == 0);
    CHECK(read_series(dir / "single.csv").series.values == read_series(dir / "runs/seed_7.csv").series.values);

    const std::string text = read_text_file(dir / "runs/summary.csv");
    double grand = 0.0;
    std::istringstream in(text);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.starts_with("tick")) continue;
        const auto a = line.find(','), b = line.find(',', a + 1);
        grand += std::stod(line.substr(a + 1, b - a - 1));
        ++rows;
    }
    REQUIRE(rows == 40);
    grand /= rows;
    const double expected = 300.0 * gate_rate(0.33, 0.7, 0.2);
    const double se = std::sqrt(300.0 * gate_rate(0.33, 0.7, 0.2) * (1 - gate_rate(0.33, 0.7, 0.2)) / 400.0);
    CHECK(std::abs(grand - expected) < 4 * se);
}

TEST_CASE("sweep rejects bad seed ranges") {
    TempDir dir;
    write_file(dir / "c.cfg", small_config());
    CHECK(invoke({"sweep", "--config", (dir / "c.cfg").string(), "--seeds", "5..2", "--out", (dir / "r").string()})
              .code == cli::kUsage);
    CHECK(invoke({"sweep", "--config", (dir / "c.cfg").string(), "--seeds", "five", "--out", (dir / "r").string()})
              .code == cli::kUsage);
    CHECK(cli::parse_seed_range("3..3") == std::pair<std::uint64_t, std::uint64_t>{3, 3});
    CHECK_THROWS_AS(cli::parse_seed_range("1..x"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_seed_range("..4"), std::invalid_argument);
}

TEST_CASE("baseline is bounded, reproducible and uncorrelated with the reference") {
    TempDir dir;
    write_file(dir / "c.cfg", "people = 300\ntotal_ticks = 200\nevent_tick = 100\nseed = 8\n");
    REQUIRE(invoke({"simulate", "--config", (dir / "c.cfg").string(), "--out", (dir / "a.csv").string()}).code == 0);
    REQUIRE(invoke({"baseline", "--reference", (dir / "a.csv").string(), "--seed", "3", "--out",
                 (dir / "u.csv").string()}).code == 0);
    const auto ref = read_series(dir / "a.csv").series;
    const auto u = read_series(dir / "u.csv").series;
    REQUIRE(u.size() == ref.size());
    CHECK(u.event_tick == 100);
    for (auto v : u.values) CHECK((v >= 1 && v <= ref.max()));
    CHECK(invoke({"baseline", "--reference", (dir / "a.csv").string(), "--seed", "3"}).out ==
          read_text_file(dir / "u.csv"));

    const auto r = invoke({"validate", (dir / "a.csv").string(), (dir / "u.csv").string(), "--max-lag", "20"});
    REQUIRE(r.code == 0);
    const auto pos = r.out.find("# significant_fraction = ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(r.out.substr(pos + 25)) < 0.3);
}
