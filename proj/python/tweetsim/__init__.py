"""Agent-based synthetic microblogging count generator."""

from ._core import (
    Config,
    ConfigError,
    IoError,
    NumericError,
    TickRecord,
    build_rings,
    ccf,
    compare,
    estimate,
    event_tweet_probability,
    network_edge_count,
    run,
    run_series,
    significance_threshold,
    tick_table,
    uniform_baseline,
)

__version__ = "0.1.0"

__all__ = [
    "Config",
    "ConfigError",
    "IoError",
    "NumericError",
    "TickRecord",
    "build_rings",
    "ccf",
    "compare",
    "estimate",
    "event_tweet_probability",
    "network_edge_count",
    "run",
    "run_series",
    "significance_threshold",
    "tick_table",
    "uniform_baseline",
]
