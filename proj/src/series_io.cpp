#include "tweetsim/series_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tweetsim/config_io.hpp"

namespace tweetsim {

namespace {

constexpr std::string_view kConfigPrefix = "# config: ";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> out;
    for (;;) {
        const auto comma = line.find(',');
        out.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return out;
}

std::int64_t parse_count(std::string_view cell, std::size_t lineno) {
    std::int64_t v{};
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw IoError("line " + std::to_string(lineno) + ": '" + std::string(cell) +
                      "' is not an integer");
    return v;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto eol = text.find('\n');
        f(trim(text.substr(0, eol)), lineno);
        if (eol == std::string_view::npos) break;
        text.remove_prefix(eol + 1);
    }
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoadedSeries parse_series(std::string_view text, std::string_view label,
                          std::optional<std::string_view> column) {
    LoadedSeries out;
    out.series.label = std::string(label);

    std::vector<std::string_view> header;
    std::size_t value_col = 0, night_col = 0;
    bool has_night = false;
    std::vector<bool> mask;

    for_each_line(text, [&](std::string_view line, std::size_t lineno) {
        if (line.empty()) return;
        if (line.front() == '#') {
            std::string_view body = trim(line.substr(1));
            if (const auto eq = body.find('='); eq != std::string_view::npos)
                out.metadata.emplace_back(std::string(trim(body.substr(0, eq))),
                                          std::string(trim(body.substr(eq + 1))));
            return;
        }
        if (header.empty()) {
            header = split_csv(line);
            if (header.empty() || header.front() != "tick")
                throw IoError("line " + std::to_string(lineno) + ": header must start with 'tick'");
            const bool series_file = std::find(header.begin(), header.end(), "count") != header.end();
            const std::string_view want = column ? *column : (series_file ? "count" : "total");
            const auto it = std::find(header.begin(), header.end(), want);
            if (it == header.end())
                throw IoError("no column '" + std::string(want) + "' in header");
            value_col = static_cast<std::size_t>(it - header.begin());
            if (series_file) {
                const auto nit = std::find(header.begin(), header.end(), "night");
                if (nit != header.end()) {
                    has_night = true;
                    night_col = static_cast<std::size_t>(nit - header.begin());
                }
            }
            return;
        }
        const auto cells = split_csv(line);
        if (cells.size() != header.size())
            throw IoError("line " + std::to_string(lineno) + ": expected " +
                          std::to_string(header.size()) + " columns");
        const auto tick = parse_count(cells[0], lineno);
        if (tick != static_cast<std::int64_t>(out.series.values.size()))
            throw IoError("line " + std::to_string(lineno) + ": ticks must be dense from 0");
        const auto v = parse_count(cells[value_col], lineno);
        if (v < 0) throw IoError("line " + std::to_string(lineno) + ": negative count");
        out.series.values.push_back(v);
        if (has_night) mask.push_back(parse_count(cells[night_col], lineno) != 0);
    });

    if (header.empty()) throw IoError("series has no header row");
    if (out.series.values.empty()) throw IoError("series has no rows");
    if (has_night) out.night_mask = std::move(mask);
    for (const auto& [k, v] : out.metadata) {
        if (k == "event_tick") {
            int t{};
            auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), t);
            if (ec == std::errc{} && ptr == v.data() + v.size()) out.series.event_tick = t;
        }
    }
    return out;
}

LoadedSeries read_series(const std::filesystem::path& path, std::optional<std::string_view> column) {
    return parse_series(read_text_file(path), path.filename().string(), column);
}

void write_series(std::ostream& out, const CountSeries& series,
                  const std::optional<std::vector<bool>>& night_mask) {
    if (series.event_tick) out << "# event_tick = " << *series.event_tick << '\n';
    out << (night_mask ? "tick,count,night\n" : "tick,count\n");
    for (std::size_t t = 0; t < series.size(); ++t) {
        out << t << ',' << series.values[t];
        if (night_mask) out << ',' << ((*night_mask)[t] ? 1 : 0);
        out << '\n';
    }
}

void write_tick_table(std::ostream& out, const ValidatedConfig& config,
                      std::span<const TickRecord> records, std::size_t ring_count) {
    out << "# " << kToolName << ' ' << kToolVersion << '\n';
    out << "# seed = " << config->seed << '\n';
    out << "# event_tick = " << config->event_tick << '\n';
    const std::string cfg = format_config(config.get());
    for_each_line(cfg, [&](std::string_view line, std::size_t) {
        if (!line.empty()) out << kConfigPrefix << line << '\n';
    });

    out << "tick,standard,event,night,standard_retweet,event_retweet,total";
    for (std::size_t k = 0; k < ring_count; ++k) out << ",ring_" << (k + 1);
    out << '\n';
    for (const auto& r : records) {
        out << r.tick << ',' << r.count(TweetKind::Standard) << ',' << r.count(TweetKind::EventRelated)
            << ',' << r.count(TweetKind::Night) << ',' << r.count(TweetKind::StandardRetweet) << ','
            << r.count(TweetKind::EventRetweet) << ',' << r.total;
        for (auto c : r.ring_counts) out << ',' << c;
        out << '\n';
    }
}

std::optional<SimulationConfig> embedded_config(std::string_view text) {
    std::string body;
    bool found = false;
    for_each_line(text, [&](std::string_view line, std::size_t) {
        constexpr std::string_view tag = "# config:";
        if (line.starts_with(tag)) {
            found = true;
            body.append(trim(line.substr(tag.size())));
            body.push_back('\n');
        }
    });
    if (!found) return std::nullopt;
    return parse_config(body);
}

CountSeries series_from_records(std::span<const TickRecord> records, std::string_view column,
                                std::optional<int> event_tick) {
    CountSeries s;
    s.label = std::string(column);
    s.event_tick = event_tick;
    s.values.reserve(records.size());

    std::optional<TweetKind> kind;
    for (auto k : {TweetKind::Standard, TweetKind::EventRelated, TweetKind::Night,
                   TweetKind::StandardRetweet, TweetKind::EventRetweet})
        if (to_string(k) == column) kind = k;
    std::optional<std::size_t> ring;
    if (column.substr(0, 5) == "ring_") {
        std::size_t k{};
        auto [ptr, ec] = std::from_chars(column.data() + 5, column.data() + column.size(), k);
        if (ec != std::errc{} || ptr != column.data() + column.size() || k == 0)
            throw IoError("bad ring column '" + std::string(column) + "'");
        ring = k - 1;
    }
    if (!kind && !ring && column != "total")
        throw IoError("unknown column '" + std::string(column) + "'");

    for (const auto& r : records) {
        if (kind) s.values.push_back(r.count(*kind));
        else if (ring) s.values.push_back(r.ring_counts.at(*ring));
        else s.values.push_back(r.total);
    }
    return s;
}

}  // namespace tweetsim
