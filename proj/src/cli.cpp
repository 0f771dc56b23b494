#include "tweetsim/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tweetsim/config_io.hpp"
#include "tweetsim/engine.hpp"
#include "tweetsim/estimate.hpp"
#include "tweetsim/random.hpp"
#include "tweetsim/series_io.hpp"
#include "tweetsim/setup.hpp"
#include "tweetsim/stats.hpp"

namespace tweetsim::cli {

namespace fs = std::filesystem;

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return kIoError;
    } catch (const fs::filesystem_error& e) {
        err << "io error: " << e.what() << '\n';
        return kIoError;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumericError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

// Accepts a plain config document or a previous simulation table.
SimulationConfig load_any_config(const fs::path& path) {
    if (!fs::exists(path)) throw IoError("config file '" + path.string() + "' does not exist");
    const std::string text = read_text_file(path);
    if (auto embedded = embedded_config(text)) return *embedded;
    return parse_config(text);
}

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + path.string() + "'");
    return f;
}

void write_manifest(const fs::path& path, const ValidatedConfig& cfg, const std::string& started,
                    const std::vector<std::string>& outputs) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["seed"] = cfg->seed;
    j["config"] = format_config(cfg.get());
    j["started_at"] = started;
    j["finished_at"] = timestamp_utc();
    j["outputs"] = outputs;
    auto f = open_out(path);
    f << j.dump(2) << '\n';
}

fs::path manifest_path(const fs::path& out) {
    fs::path p = out;
    p += ".manifest.json";
    return p;
}

// Runs one seed and writes its table plus manifest.
std::vector<TickRecord> simulate_to(const ValidatedConfig& cfg, const fs::path& out) {
    const std::string started = timestamp_utc();
    const auto records = run(cfg);
    const auto rings = build_rings(cfg.fixed().step, cfg->sensor_max_radius).radii.size();
    {
        auto f = open_out(out);
        write_tick_table(f, cfg, records, rings);
        if (!f) throw IoError("failed writing '" + out.string() + "'");
    }
    write_manifest(manifest_path(out), cfg, started, {out.string()});
    return records;
}

std::optional<std::string_view> as_view(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    return std::string_view(*s);
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("seed range must look like A..B");
    std::uint64_t a{}, b{};
    try {
        std::size_t used = 0;
        a = std::stoull(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument("");
        const std::string rhs = text.substr(dots + 2);
        b = std::stoull(rhs, &used);
        if (used != rhs.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("seed range must look like A..B, got '" + text + "'");
    }
    if (b < a) throw std::invalid_argument("seed range '" + text + "' is empty");
    return {a, b};
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SimulationConfig raw = load_any_config(o.config_path);
        if (o.seed) raw.seed = *o.seed;
        const ValidatedConfig cfg = validate_config(raw);

        if (o.dump_agents || o.dump_edges) {
            const Simulation sim(cfg);
            if (o.dump_agents) {
                auto f = open_out(*o.dump_agents);
                write_agents_table(f, sim.agents());
            }
            if (o.dump_edges) {
                auto f = open_out(*o.dump_edges);
                write_edges_table(f, sim.network());
            }
        }

        if (o.out) {
            simulate_to(cfg, *o.out);
        } else {
            const auto records = run(cfg);
            write_tick_table(out, cfg, records,
                             build_rings(cfg.fixed().step, cfg->sensor_max_radius).radii.size());
        }
        return static_cast<int>(kOk);
    });
}

int cmd_estimate(const EstimateOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LoadedSeries loaded = read_series(o.series_path, as_view(o.column));
        const std::optional<int> event_tick = o.event_tick ? o.event_tick : loaded.series.event_tick;
        if (!event_tick)
            throw std::invalid_argument("no event tick: pass --event-tick or add '# event_tick = N'");

        std::optional<std::vector<bool>> mask = loaded.night_mask;
        if (o.night_mask) {
            if (*o.night_mask == "auto") {
                mask.reset();
            } else {
                const LoadedSeries m = read_series(*o.night_mask, "night");
                mask = std::vector<bool>();
                for (auto v : m.series.values) mask->push_back(v != 0);
            }
        }

        const SegmentStats stats = segment_series(loaded.series, *event_tick, mask, o.night_duration);
        const EstimatedProbabilities p = estimate_probabilities(stats);
        const int duration =
            estimate_event_duration(loaded.series, *event_tick, stats, o.smoothing_window);

        out << std::setprecision(6);
        out << "# estimated from " << o.series_path.string() << " (event_tick = " << *event_tick << ")\n";
        out << "# tweets_night = " << stats.tweets_night << '\n';
        out << "# tweets_pre_event = " << stats.tweets_pre_event << '\n';
        out << "# tweets_post_event = " << stats.tweets_post_event << '\n';
        out << "# raw event duration = " << duration << '\n';
        out << "tweet_chance = " << p.tweet_chance << '\n';
        out << "event_tweet_chance = " << p.event_tweet_chance << '\n';
        out << "night_tweet_chance = " << p.night_tweet_chance << '\n';
        out << "event_duration = " << std::max(1, duration) << '\n';
        return static_cast<int>(kOk);
    });
}

int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LoadedSeries a = read_series(o.series_a, as_view(o.column));
        const LoadedSeries b = read_series(o.series_b, as_view(o.column));
        const CcfSummary s = compare(a.series, b.series, o.max_lag);

        auto emit = [&](std::ostream& os) {
            os << std::setprecision(10);
            os << "# n = " << s.report.n << '\n';
            os << "# threshold = " << s.report.threshold << '\n';
            os << "# rho0 = " << s.rho0 << '\n';
            os << "# lag0_significant = " << (s.lag0_significant ? "true" : "false") << '\n';
            os << "# significant_fraction = " << s.significant_fraction << '\n';
            os << "lag,rho\n";
            for (std::size_t i = 0; i < s.report.lags.size(); ++i)
                os << s.report.lags[i] << ',' << s.report.rho[i] << '\n';
        };
        if (o.out) {
            auto f = open_out(*o.out);
            emit(f);
        } else {
            emit(out);
        }
        err << "n=" << s.report.n << " threshold=" << s.report.threshold << " rho0=" << s.rho0
            << " significant_fraction=" << s.significant_fraction << '\n';
        return static_cast<int>(kOk);
    });
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto [first, last] = parse_seed_range(o.seeds);
        const ValidatedConfig base = validate_config(load_any_config(o.config_path));
        fs::create_directories(o.out_dir);

        const std::size_t count = static_cast<std::size_t>(last - first + 1);
        std::vector<std::vector<TickRecord>> results(count);
        std::vector<std::string> errors(count);

        unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < count; i = next++) {
                const std::uint64_t seed = first + i;
                const fs::path file = o.out_dir / ("seed_" + std::to_string(seed) + ".csv");
                try {
                    results[i] = simulate_to(base.with_seed(seed), file);
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        }
        for (std::size_t i = 0; i < count; ++i)
            if (!errors[i].empty())
                throw IoError("seed " + std::to_string(first + i) + ": " + errors[i]);

        // Per-tick mean and sample standard deviation across seeds.
        const auto ticks = static_cast<std::size_t>(base->total_ticks);
        const fs::path summary = o.out_dir / "summary.csv";
        auto f = open_out(summary);
        f << "# seeds = " << first << ".." << last << '\n';
        f << "# event_tick = " << base->event_tick << '\n';
        f << std::setprecision(10);
        f << "tick,mean_total,sd_total\n";
        for (std::size_t t = 0; t < ticks; ++t) {
            double mean = 0.0;
            for (const auto& r : results) mean += static_cast<double>(r[t].total);
            mean /= static_cast<double>(count);
            double ss = 0.0;
            for (const auto& r : results) {
                const double d = static_cast<double>(r[t].total) - mean;
                ss += d * d;
            }
            const double sd = count > 1 ? std::sqrt(ss / static_cast<double>(count - 1)) : 0.0;
            f << t << ',' << mean << ',' << sd << '\n';
        }
        out << "wrote " << count << " runs and " << summary.string() << '\n';
        return static_cast<int>(kOk);
    });
}

int cmd_baseline(const BaselineOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LoadedSeries ref = read_series(o.reference, as_view(o.column));
        Rng rng = make_stream(o.seed, Stream::Baseline);
        CountSeries base = uniform_baseline(o.length.value_or(ref.series.size()), ref.series, rng);
        base.event_tick = ref.series.event_tick;
        if (o.out) {
            auto f = open_out(*o.out);
            write_series(f, base);
        } else {
            write_series(out, base);
        }
        return static_cast<int>(kOk);
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Agent-based synthetic microblogging count generator"};
    app.require_subcommand(1);

    SimulateOptions sim;
    std::string sim_out, sim_agents, sim_edges;
    auto* simulate = app.add_subcommand("simulate", "Run one simulation and write the tick table");
    simulate->add_option("--config", sim.config_path, "Config file (or a previous output table)")->required();
    simulate->add_option("--seed", sim.seed, "Override the config seed");
    simulate->add_option("--out", sim_out, "Output table (default stdout); manifest goes to <out>.manifest.json");
    simulate->add_option("--dump-agents", sim_agents, "Write id,x,y,clustered");
    simulate->add_option("--dump-edges", sim_edges, "Write id_a,id_b");

    EstimateOptions est;
    auto* estimate = app.add_subcommand("estimate", "Estimate scenario parameters from a count series");
    estimate->add_option("series", est.series_path, "Series file tick,count[,night]")->required();
    estimate->add_option("--event-tick", est.event_tick, "Event tick (else '# event_tick' metadata)");
    estimate->add_option("--night-mask", est.night_mask, "'auto' or a tick,count file of 0/1 flags");
    estimate->add_option("--night-duration", est.night_duration, "Expected night length for auto detection");
    estimate->add_option("--smoothing-window", est.smoothing_window, "Moving-average window");
    estimate->add_option("--column", est.column, "Count column to read");

    ValidateOptions val;
    std::string val_out;
    auto* validate = app.add_subcommand("validate", "Cross-correlate two series");
    validate->add_option("series_a", val.series_a)->required();
    validate->add_option("series_b", val.series_b)->required();
    validate->add_option("--max-lag", val.max_lag, "Largest lag in ticks");
    validate->add_option("--column", val.column, "Count column to read from both files");
    validate->add_option("--out", val_out, "Report file (default stdout)");

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "Run a range of seeds");
    sweep->add_option("--config", sw.config_path)->required();
    sweep->add_option("--seeds", sw.seeds, "Inclusive range A..B")->required();
    sweep->add_option("--out", sw.out_dir, "Output directory")->required();
    sweep->add_option("--threads", sw.threads, "Worker threads (0 = all cores)");

    BaselineOptions bl;
    std::string bl_out;
    auto* baseline = app.add_subcommand("baseline", "Uniform random series on [1, max(reference)]");
    baseline->add_option("--reference", bl.reference)->required();
    baseline->add_option("--seed", bl.seed);
    baseline->add_option("--length", bl.length);
    baseline->add_option("--column", bl.column);
    baseline->add_option("--out", bl_out);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << e.what() << '\n';
        return kUsage;
    }

    if (*simulate) {
        if (!sim_out.empty()) sim.out = sim_out;
        if (!sim_agents.empty()) sim.dump_agents = sim_agents;
        if (!sim_edges.empty()) sim.dump_edges = sim_edges;
        return cmd_simulate(sim, out, err);
    }
    if (*estimate) return cmd_estimate(est, out, err);
    if (*validate) {
        if (!val_out.empty()) val.out = val_out;
        return cmd_validate(val, out, err);
    }
    if (*sweep) return cmd_sweep(sw, out, err);
    if (!bl_out.empty()) bl.out = bl_out;
    return cmd_baseline(bl, out, err);
}

}  // namespace tweetsim::cli
