#include "tweetsim/config_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace tweetsim {

namespace {

constexpr std::array<ParameterName, 21> kParameterNames{{
    {"n-events?", "n_events"},
    {"event-sources", "event_sources"},
    {"eight-mode?", "eight_mode"},
    {"twitter-network", "twitter_network"},
    {"num-links", "num_links"},
    {"people", "people"},
    {"probability", "probability"},
    {"step", "step"},
    {"num-clusters", "num_clusters"},
    {"cluster?", "cluster"},
    {"percentage-clustering", "percentage_clustering"},
    {"tweet-threshold", "tweet_threshold"},
    {"user-interest", "user_interest"},
    {"event-interest", "event_interest"},
    {"night-mode", "night_mode"},
    {"tweet-chance", "tweet_chance"},
    {"event-duration", "event_duration"},
    {"event-tweet-chance", "event_tweet_chance"},
    {"night-tweet-chance", "night_tweet_chance"},
    {"night-duration", "night_duration"},
    {"ndist", "ndist"},
}};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* expected) {
    throw ConfigError(std::string(key),
                      "cannot parse '" + std::string(value) + "' as " + expected);
}

bool parse_bool(std::string_view key, std::string_view v) {
    std::string lower(v);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "true" || lower == "1" || lower == "yes") return true;
    if (lower == "false" || lower == "0" || lower == "no") return false;
    bad_value(key, v, "boolean");
}

template <class Int>
Int parse_int(std::string_view key, std::string_view v) {
    Int out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, v, "integer");
    return out;
}

double parse_real(std::string_view key, std::string_view v) {
    double out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, v, "real");
    return out;
}

GridCoord parse_coord(std::string_view key, std::string_view v) {
    const auto comma = v.find(',');
    if (comma == std::string_view::npos) bad_value(key, v, "coordinate 'x,y'");
    return GridCoord{parse_int<int>(key, trim(v.substr(0, comma))),
                     parse_int<int>(key, trim(v.substr(comma + 1)))};
}

NetworkModel parse_network(std::string_view key, std::string_view v) {
    const std::string n = normalize_key(v);
    if (n == "erdos_renyi" || n == "erdos_renyii") return NetworkModel::ErdosRenyi;
    if (n == "random_edges" || n == "random") return NetworkModel::RandomEdges;
    bad_value(key, v, "network model (erdos_renyi | random_edges)");
}

std::string format_real(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

std::string format_coord(GridCoord c) {
    return std::to_string(c.x) + "," + std::to_string(c.y);
}

struct Field {
    std::string_view key;
    std::function<void(SimulationConfig&, std::string_view)> set;
    std::function<std::string(const SimulationConfig&)> get;
};

// Field accessors built from member pointers into the nested structs.
template <class Owner, class T>
Field make_field(std::string_view key, Owner SimulationConfig::*owner, T Owner::*member) {
    Field f;
    f.key = key;
    f.set = [key, owner, member](SimulationConfig& c, std::string_view v) {
        T& dst = (c.*owner).*member;
        if constexpr (std::is_same_v<T, bool>) dst = parse_bool(key, v);
        else if constexpr (std::is_same_v<T, double>) dst = parse_real(key, v);
        else if constexpr (std::is_same_v<T, NetworkModel>) dst = parse_network(key, v);
        else dst = parse_int<T>(key, v);
    };
    f.get = [owner, member](const SimulationConfig& c) -> std::string {
        const T& src = (c.*owner).*member;
        if constexpr (std::is_same_v<T, bool>) return format_bool(src);
        else if constexpr (std::is_same_v<T, double>) return format_real(src);
        else if constexpr (std::is_same_v<T, NetworkModel>)
            return src == NetworkModel::ErdosRenyi ? "erdos_renyi" : "random_edges";
        else return std::to_string(src);
    };
    return f;
}

template <class T>
Field make_top(std::string_view key, T SimulationConfig::*member) {
    Field f;
    f.key = key;
    f.set = [key, member](SimulationConfig& c, std::string_view v) {
        T& dst = c.*member;
        if constexpr (std::is_same_v<T, bool>) dst = parse_bool(key, v);
        else if constexpr (std::is_same_v<T, double>) dst = parse_real(key, v);
        else if constexpr (std::is_same_v<T, GridCoord>) dst = parse_coord(key, v);
        else dst = parse_int<T>(key, v);
    };
    f.get = [member](const SimulationConfig& c) -> std::string {
        const T& src = c.*member;
        if constexpr (std::is_same_v<T, bool>) return format_bool(src);
        else if constexpr (std::is_same_v<T, double>) return format_real(src);
        else if constexpr (std::is_same_v<T, GridCoord>) return format_coord(src);
        else return std::to_string(src);
    };
    return f;
}

const std::vector<Field>& fields() {
    using C = SimulationConfig;
    using F = FixedParams;
    using V = VariableParams;
    static const std::vector<Field> table = {
        make_field("n_events", &C::fixed, &F::n_events),
        make_field("event_sources", &C::fixed, &F::event_sources),
        make_field("eight_mode", &C::fixed, &F::eight_mode),
        make_field("twitter_network", &C::fixed, &F::twitter_network),
        make_field("num_links", &C::fixed, &F::num_links),
        make_field("people", &C::fixed, &F::people),
        make_field("probability", &C::fixed, &F::probability),
        make_field("step", &C::fixed, &F::step),
        make_field("num_clusters", &C::fixed, &F::num_clusters),
        make_field("cluster", &C::fixed, &F::cluster),
        make_field("percentage_clustering", &C::fixed, &F::percentage_clustering),
        make_field("tweet_threshold", &C::fixed, &F::tweet_threshold),
        make_field("user_interest", &C::fixed, &F::user_interest),
        make_field("event_interest", &C::fixed, &F::event_interest),
        make_field("night_mode", &C::fixed, &F::night_mode),
        make_field("alpha", &C::fixed, &F::alpha),
        make_field("beta", &C::fixed, &F::beta),
        make_field("z_variance", &C::fixed, &F::z_variance),
        make_field("world_half_extent", &C::fixed, &F::world_half_extent),
        make_field("initial_spread_radius", &C::fixed, &F::initial_spread_radius),
        make_field("spread_rate", &C::fixed, &F::spread_rate),
        make_field("day_length", &C::fixed, &F::day_length),
        make_field("cluster_spread", &C::fixed, &F::cluster_spread),
        make_field("tweet_chance", &C::variable, &V::tweet_chance),
        make_field("event_duration", &C::variable, &V::event_duration),
        make_field("event_tweet_chance", &C::variable, &V::event_tweet_chance),
        make_field("night_tweet_chance", &C::variable, &V::night_tweet_chance),
        make_field("night_duration", &C::variable, &V::night_duration),
        make_field("ndist", &C::variable, &V::ndist),
        make_top("seed", &C::seed),
        make_top("total_ticks", &C::total_ticks),
        make_top("event_enabled", &C::event_enabled),
        make_top("event_tick", &C::event_tick),
        make_top("event_location", &C::event_location),
        make_top("sensor_location", &C::sensor_location),
        make_top("sensor_max_radius", &C::sensor_max_radius),
    };
    return table;
}

}  // namespace

std::span<const ParameterName> parameter_names() { return kParameterNames; }

std::span<const std::string_view> config_keys() {
    static const std::vector<std::string_view> keys = [] {
        std::vector<std::string_view> out;
        for (const auto& f : fields()) out.push_back(f.key);
        return out;
    }();
    return keys;
}

std::string normalize_key(std::string_view name) {
    std::string out;
    for (char c : trim(name)) {
        if (c == '-') out.push_back('_');
        else out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (!out.empty() && out.back() == '?') out.pop_back();
    return out;
}

void set_config_value(SimulationConfig& cfg, std::string_view key, std::string_view value) {
    const std::string k = normalize_key(key);
    for (const auto& f : fields()) {
        if (f.key == k) {
            f.set(cfg, trim(value));
            return;
        }
    }
    throw ConfigError(k, "unknown config key");
}

SimulationConfig parse_config(std::string_view text) {
    SimulationConfig cfg;
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
        set_config_value(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

SimulationConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string format_config(const SimulationConfig& cfg) {
    std::string out;
    for (const auto& f : fields()) {
        out.append(f.key);
        out.append(" = ");
        out.append(f.get(cfg));
        out.push_back('\n');
    }
    return out;
}

}  // namespace tweetsim
