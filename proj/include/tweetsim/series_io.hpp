#pragma once

// Tabular text I/O for count series and simulation output.
//
// Series files:       tick,count[,night]       (dense ticks from 0)
// Simulation tables:  # metadata lines, then
//                     tick,standard,event,night,standard_retweet,event_retweet,total,ring_1..ring_k

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tweetsim/core.hpp"
#include "tweetsim/engine.hpp"

namespace tweetsim {

inline constexpr std::string_view kToolName = "tweetsim";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct LoadedSeries {
    CountSeries series;
    std::optional<std::vector<bool>> night_mask;
    /// Metadata lines `# key = value` preceding the header.
    std::vector<std::pair<std::string, std::string>> metadata;
};

/// Reads either file kind. `column` picks the count column; the default is
/// `count` for series files and `total` for simulation tables. A `night`
/// column is read as a 0/1 mask only in series files.
LoadedSeries parse_series(std::string_view text, std::string_view label = "",
                          std::optional<std::string_view> column = std::nullopt);
LoadedSeries read_series(const std::filesystem::path& path,
                         std::optional<std::string_view> column = std::nullopt);

void write_series(std::ostream& out, const CountSeries& series,
                  const std::optional<std::vector<bool>>& night_mask = std::nullopt);

/// Simulation table with the config snapshot embedded as `# config: key = value`
/// lines, so the file alone reproduces the run.
void write_tick_table(std::ostream& out, const ValidatedConfig& config,
                      std::span<const TickRecord> records, std::size_t ring_count);

/// Config embedded in a simulation table, if the text carries one.
std::optional<SimulationConfig> embedded_config(std::string_view text);

/// Column of a run as a series: "total", a kind name, or "ring_<k>".
CountSeries series_from_records(std::span<const TickRecord> records, std::string_view column,
                                std::optional<int> event_tick = std::nullopt);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace tweetsim
