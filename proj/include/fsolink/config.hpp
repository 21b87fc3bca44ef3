#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsolink/constellation.hpp"

namespace fsolink {

// Scenario configuration, loaded from a JSON file. Key names carry explicit
// units; defaults match the reference transceiver (1550 nm, 12.5 mm waist,
// 0.2 m aperture, 8 urad jitter, 28 dBm, R = 0.87 A/W, 1.6e-14 A^2 noise,
// 1 Gbps over 1 GHz).

struct GeometryConfig {
    enum class Mode { constellation, explicit_distance };
    Mode mode = Mode::constellation;
    std::string constellation = "starlink";  // starlink | iridium | custom
    ConstellationSpec custom;                // used when constellation == "custom"
    LinkType link_type = LinkType::intra_plane;
    bool use_arc_distance = false;  // substitute the along-orbit arc for the chord
    double distance_m = 0.0;        // explicit mode only
};

struct MisalignmentConfig {
    enum class Mode { computed, fixed, none };
    Mode mode = Mode::computed;
    double displacement_m = 0.0;  // fixed mode only
};

enum class SweepAxis { transmit_power_dbm, beam_waist_m, target_rate_bps, distance_m };

struct SweepConfig {
    SweepAxis axis = SweepAxis::transmit_power_dbm;
    std::vector<double> values;  // strictly increasing
};

struct MonteCarloConfig {
    bool enabled = false;
    std::int64_t samples = 1000000;
    std::uint64_t seed = 1;
};

struct DesignSearchConfig {
    std::vector<double> targets{1e-2, 1e-4, 1e-6};
    int max_planes = 100;
    int min_sats_per_plane = 2;
    int max_sats_per_plane = 40;
};

struct ScenarioConfig {
    BeamParams beam;
    double aperture_radius_m = 0.2;
    double jitter_angle_rad = 8e-6;
    double transmit_power_dbm = 28.0;
    TransceiverParams transceiver;
    GeometryConfig geometry;
    MisalignmentConfig misalignment;
    SweepConfig sweep;
    TruncationPolicy truncation;
    MonteCarloConfig monte_carlo;
    DesignSearchConfig design_search;
};

// Default scenario: Starlink intra-plane link, computed misalignment,
// 20..36 dBm transmit-power sweep, Monte Carlo off.
ScenarioConfig default_config();

// Parse/serialize against the JSON schema. Parsing validates every field
// and rejects unknown keys; errors carry the offending path. The serialized
// form is canonical (sorted keys, shortest round-trip numbers), so
// parse(serialize(c)) == c and serialize is byte-stable.
ScenarioConfig parse_config(const std::string& json_text);
std::string serialize_config(const ScenarioConfig& config, int indent = 2);
ScenarioConfig load_config_file(const std::string& path);

// FNV-1a 64-bit hash of the canonical (compact) serialization, as 16 hex
// digits; stamped on every output row for reproducibility.
std::uint64_t fnv1a64(const std::string& bytes);
std::string config_hash(const ScenarioConfig& config);

// Resolved geometry used by the sweep drivers.
ConstellationSpec resolve_constellation(const GeometryConfig& geometry);

}  // namespace fsolink
