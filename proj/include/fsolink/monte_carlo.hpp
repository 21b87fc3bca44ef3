#pragma once

#include <cstdint>
#include <vector>

#include "fsolink/link_budget.hpp"
#include "fsolink/pointing_stats.hpp"

namespace fsolink {

// Identifies a reproducible sample stream: identical (seed, stream_id)
// always replays the same sequence; distinct stream_ids are independent.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

struct OutageEstimate {
    double point_estimate = 0.0;
    std::int64_t sample_count = 0;
    double ci_low = 0.0;   // 99% Wilson interval
    double ci_high = 0.0;
};

// Radial pointing offsets drawn constructively:
// r = sqrt((s + sigma Z1)^2 + (sigma Z2)^2), sigma = distance * jitter.
std::vector<double> sample_radial(const PointingModel& model, const RngStream& stream,
                                  std::int64_t n);

// Gains drawn by rejection against the gain density with a uniform proposal
// on (0, peak_gain] under a numerically located envelope. When the density
// is unbounded (width_jitter_ratio^2 <= 1, divergence as gain -> 0) or the
// model is deterministic, falls back to transforming radial samples, which
// follows the same distribution by construction.
std::vector<double> sample_gain_rejection(const PointingModel& model, const RngStream& stream,
                                          std::int64_t n);

// Fraction of samples whose gain falls below the threshold, with the 99%
// Wilson score interval. Thresholds at or above the peak gain (or <= 0)
// return exactly 1 (or 0) without drawing.
OutageEstimate estimate_outage_at_threshold(const PointingModel& model, double threshold_gain,
                                            const RngStream& stream, std::int64_t n);

// Convenience wrapper deriving the threshold from the link budget.
OutageEstimate estimate_outage(const PointingModel& model, double transmit_power_w,
                               const TransceiverParams& t, const RngStream& stream,
                               std::int64_t n);

}  // namespace fsolink
