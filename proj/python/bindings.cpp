#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "tweetsim/config_io.hpp"
#include "tweetsim/engine.hpp"
#include "tweetsim/estimate.hpp"
#include "tweetsim/random.hpp"
#include "tweetsim/series_io.hpp"
#include "tweetsim/setup.hpp"
#include "tweetsim/stats.hpp"

namespace py = pybind11;
using namespace tweetsim;

namespace {

// Config from a `key = value` document plus keyword overrides.
ValidatedConfig make_config(const std::string& text, const py::dict& overrides) {
    SimulationConfig raw = parse_config(text);
    for (auto item : overrides) {
        const auto key = py::str(item.first).cast<std::string>();
        std::string value;
        if (py::isinstance<py::bool_>(item.second))
            value = item.second.cast<bool>() ? "true" : "false";
        else if (py::isinstance<py::tuple>(item.second) || py::isinstance<py::list>(item.second)) {
            auto seq = item.second.cast<std::vector<int>>();
            if (seq.size() != 2) throw ConfigError(key, "coordinate needs two values");
            value = std::to_string(seq[0]) + "," + std::to_string(seq[1]);
        } else
            value = py::str(item.second).cast<std::string>();
        set_config_value(raw, key, value);
    }
    return validate_config(raw);
}

CountSeries to_series(const std::vector<std::int64_t>& values, const std::string& label) {
    CountSeries s;
    s.values = values;
    s.label = label;
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Agent-based synthetic microblogging count generator";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<ValidatedConfig>(m, "Config")
        .def(py::init([](const std::string& text, py::kwargs kw) { return make_config(text, kw); }),
             py::arg("text") = "")
        .def_static("load", [](const std::filesystem::path& p) { return validate_config(load_config(p)); })
        .def("to_text", [](const ValidatedConfig& c) { return format_config(c.get()); })
        .def("with_seed", &ValidatedConfig::with_seed)
        .def_property_readonly("seed", [](const ValidatedConfig& c) { return c->seed; })
        .def_property_readonly("total_ticks", [](const ValidatedConfig& c) { return c->total_ticks; })
        .def_property_readonly("event_tick", [](const ValidatedConfig& c) { return c->event_tick; })
        .def("__eq__", [](const ValidatedConfig& a, const ValidatedConfig& b) { return a == b; })
        .def("__repr__", [](const ValidatedConfig& c) {
            return "<Config seed=" + std::to_string(c->seed) + " people=" +
                   std::to_string(c.fixed().people) + ">";
        });

    py::class_<TickRecord>(m, "TickRecord")
        .def_readonly("tick", &TickRecord::tick)
        .def_readonly("total", &TickRecord::total)
        .def_readonly("ring_counts", &TickRecord::ring_counts)
        .def_property_readonly("standard", [](const TickRecord& r) { return r.count(TweetKind::Standard); })
        .def_property_readonly("event", [](const TickRecord& r) { return r.count(TweetKind::EventRelated); })
        .def_property_readonly("night", [](const TickRecord& r) { return r.count(TweetKind::Night); })
        .def_property_readonly("standard_retweet",
                               [](const TickRecord& r) { return r.count(TweetKind::StandardRetweet); })
        .def_property_readonly("event_retweet",
                               [](const TickRecord& r) { return r.count(TweetKind::EventRetweet); });

    m.def("run", &run, py::arg("config"), py::call_guard<py::gil_scoped_release>(),
          "Run a full simulation; one TickRecord per tick.");
    m.def(
        "run_series",
        [](const ValidatedConfig& c, const std::string& column) {
            std::vector<TickRecord> recs;
            {
                py::gil_scoped_release release;
                recs = run(c);
            }
            return series_from_records(recs, column).values;
        },
        py::arg("config"), py::arg("column") = "total");
    m.def(
        "tick_table",
        [](const ValidatedConfig& c) {
            const auto recs = run(c);
            std::ostringstream os;
            write_tick_table(os, c, recs, build_rings(c.fixed().step, c->sensor_max_radius).radii.size());
            return os.str();
        },
        py::arg("config"));

    m.def(
        "event_tweet_probability",
        [](int t, int t_event, double d, double event_tweet_chance, double ndist, double alpha,
           double beta) {
            return event_tweet_probability(t, t_event, d, {event_tweet_chance, ndist, alpha, beta});
        },
        py::arg("t"), py::arg("t_event"), py::arg("d_event"), py::arg("event_tweet_chance"),
        py::arg("ndist"), py::arg("alpha") = 1.0, py::arg("beta") = 20.0);
    m.def("build_rings", [](int step, double max_radius) { return build_rings(step, max_radius).radii; },
          py::arg("step"), py::arg("max_radius"));
    m.def(
        "network_edge_count",
        [](const ValidatedConfig& c) {
            Rng rng = make_stream(c->seed, Stream::Network);
            return build_network(c, rng).edge_count();
        },
        py::arg("config"));

    m.def(
        "ccf",
        [](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y, int max_lag) {
            const CcfReport r = ccf(to_series(x, "x"), to_series(y, "y"), max_lag);
            py::dict d;
            d["lags"] = r.lags;
            d["rho"] = r.rho;
            d["threshold"] = r.threshold;
            d["n"] = r.n;
            d["means"] = r.means;
            return d;
        },
        py::arg("x"), py::arg("y"), py::arg("max_lag"));
    m.def(
        "compare",
        [](const std::vector<std::int64_t>& synthetic, const std::vector<std::int64_t>& reference,
           int max_lag) {
            const CcfSummary s = compare(to_series(synthetic, "synthetic"), to_series(reference, "reference"), max_lag);
            py::dict d;
            d["rho0"] = s.rho0;
            d["lag0_significant"] = s.lag0_significant;
            d["significant_fraction"] = s.significant_fraction;
            d["threshold"] = s.report.threshold;
            return d;
        },
        py::arg("synthetic"), py::arg("reference"), py::arg("max_lag"));
    m.def("significance_threshold", &significance_threshold, py::arg("n"));
    m.def(
        "uniform_baseline",
        [](std::size_t n, const std::vector<std::int64_t>& reference, std::uint64_t seed) {
            Rng rng = make_stream(seed, Stream::Baseline);
            return uniform_baseline(n, to_series(reference, "reference"), rng).values;
        },
        py::arg("n"), py::arg("reference"), py::arg("seed"));

    m.def(
        "estimate",
        [](const std::vector<std::int64_t>& values, int event_tick,
           std::optional<std::vector<bool>> night_mask, int night_duration, int smoothing_window) {
            const CountSeries s = to_series(values, "series");
            const SegmentStats st = segment_series(s, event_tick, night_mask, night_duration);
            const EstimatedProbabilities p = estimate_probabilities(st);
            py::dict d;
            d["tweet_chance"] = p.tweet_chance;
            d["event_tweet_chance"] = p.event_tweet_chance;
            d["night_tweet_chance"] = p.night_tweet_chance;
            d["event_duration"] = estimate_event_duration(s, event_tick, st, smoothing_window);
            d["tweets_night"] = st.tweets_night;
            d["tweets_pre_event"] = st.tweets_pre_event;
            d["tweets_post_event"] = st.tweets_post_event;
            return d;
        },
        py::arg("values"), py::arg("event_tick"), py::arg("night_mask") = py::none(),
        py::arg("night_duration") = 8, py::arg("smoothing_window") = 3);
}
