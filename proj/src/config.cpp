#include "fsolink/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fsolink/errors.hpp"

namespace fsolink {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ConfigError("config: " + path + ": " + msg);
}

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail(path, "unknown key '" + it.key() + "'");
        }
    }
}

double get_number(const json& j, const std::string& path, const char* key, double def) {
    if (!j.contains(key)) {
        return def;
    }
    const json& v = j.at(key);
    if (!v.is_number()) {
        fail(path + "." + key, "expected a number");
    }
    return v.get<double>();
}

std::int64_t get_int(const json& j, const std::string& path, const char* key, std::int64_t def) {
    if (!j.contains(key)) {
        return def;
    }
    const json& v = j.at(key);
    if (!v.is_number_integer()) {
        fail(path + "." + key, "expected an integer");
    }
    return v.get<std::int64_t>();
}

std::uint64_t get_uint(const json& j, const std::string& path, const char* key, std::uint64_t def) {
    if (!j.contains(key)) {
        return def;
    }
    const json& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        fail(path + "." + key, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

bool get_bool(const json& j, const std::string& path, const char* key, bool def) {
    if (!j.contains(key)) {
        return def;
    }
    const json& v = j.at(key);
    if (!v.is_boolean()) {
        fail(path + "." + key, "expected a boolean");
    }
    return v.get<bool>();
}

std::string get_string(const json& j, const std::string& path, const char* key,
                       const std::string& def) {
    if (!j.contains(key)) {
        return def;
    }
    const json& v = j.at(key);
    if (!v.is_string()) {
        fail(path + "." + key, "expected a string");
    }
    return v.get<std::string>();
}

const char* pattern_name(Pattern p) { return p == Pattern::star ? "star" : "delta"; }

Pattern pattern_from(const std::string& s, const std::string& path) {
    if (s == "star") return Pattern::star;
    if (s == "delta") return Pattern::delta;
    fail(path, "expected \"star\" or \"delta\", got \"" + s + "\"");
}

const char* link_type_name(LinkType t) {
    return t == LinkType::intra_plane ? "intra" : "inter";
}

LinkType link_type_from(const std::string& s, const std::string& path) {
    if (s == "intra") return LinkType::intra_plane;
    if (s == "inter") return LinkType::inter_plane;
    fail(path, "expected \"intra\" or \"inter\", got \"" + s + "\"");
}

const char* geometry_mode_name(GeometryConfig::Mode m) {
    return m == GeometryConfig::Mode::constellation ? "constellation" : "explicit";
}

GeometryConfig::Mode geometry_mode_from(const std::string& s, const std::string& path) {
    if (s == "constellation") return GeometryConfig::Mode::constellation;
    if (s == "explicit") return GeometryConfig::Mode::explicit_distance;
    fail(path, "expected \"constellation\" or \"explicit\", got \"" + s + "\"");
}

const char* misalignment_mode_name(MisalignmentConfig::Mode m) {
    switch (m) {
        case MisalignmentConfig::Mode::computed: return "computed";
        case MisalignmentConfig::Mode::fixed: return "fixed";
        default: return "none";
    }
}

MisalignmentConfig::Mode misalignment_mode_from(const std::string& s, const std::string& path) {
    if (s == "computed") return MisalignmentConfig::Mode::computed;
    if (s == "fixed") return MisalignmentConfig::Mode::fixed;
    if (s == "none") return MisalignmentConfig::Mode::none;
    fail(path, "expected \"computed\", \"fixed\" or \"none\", got \"" + s + "\"");
}

const char* axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::transmit_power_dbm: return "transmit_power_dbm";
        case SweepAxis::beam_waist_m: return "beam_waist_m";
        case SweepAxis::target_rate_bps: return "target_rate_bps";
        default: return "distance_m";
    }
}

SweepAxis axis_from(const std::string& s, const std::string& path) {
    if (s == "transmit_power_dbm") return SweepAxis::transmit_power_dbm;
    if (s == "beam_waist_m") return SweepAxis::beam_waist_m;
    if (s == "target_rate_bps") return SweepAxis::target_rate_bps;
    if (s == "distance_m") return SweepAxis::distance_m;
    fail(path, "unknown sweep axis \"" + s + "\"");
}

void validate(const ScenarioConfig& c) {
    if (!(c.beam.wavelength_m > 0.0)) fail("beam.wavelength_m", "must be positive");
    if (!(c.beam.waist_radius_m > 0.0)) fail("beam.waist_radius_m", "must be positive");
    if (!(c.aperture_radius_m > 0.0)) fail("aperture_radius_m", "must be positive");
    if (c.jitter_angle_rad < 0.0) fail("jitter_angle_rad", "must be non-negative");
    if (!std::isfinite(c.transmit_power_dbm)) fail("transmit_power_dbm", "must be finite");
    if (!(c.transceiver.responsivity_a_w > 0.0)) fail("transceiver.responsivity_a_w", "must be positive");
    if (!(c.transceiver.noise_variance_a2 > 0.0)) fail("transceiver.noise_variance_a2", "must be positive");
    if (!(c.transceiver.bandwidth_hz > 0.0)) fail("transceiver.bandwidth_hz", "must be positive");
    if (!(c.transceiver.target_rate_bps > 0.0)) fail("transceiver.target_rate_bps", "must be positive");

    if (c.geometry.mode == GeometryConfig::Mode::constellation) {
        if (c.geometry.constellation != "starlink" && c.geometry.constellation != "iridium" &&
            c.geometry.constellation != "custom") {
            fail("geometry.constellation", "expected \"starlink\", \"iridium\" or \"custom\"");
        }
        const ConstellationSpec spec = resolve_constellation(c.geometry);
        if (spec.altitude_m <= 0.0) fail("geometry.custom.altitude_m", "must be positive");
        if (spec.num_planes < 1) fail("geometry.custom.num_planes", "must be at least 1");
        if (spec.sats_per_plane < 1) fail("geometry.custom.sats_per_plane", "must be at least 1");
        if (c.geometry.link_type == LinkType::intra_plane && spec.sats_per_plane < 2) {
            fail("geometry.link_type", "an intra-plane link needs at least 2 satellites per plane");
        }
        if (c.geometry.link_type == LinkType::inter_plane && spec.num_planes < 2) {
            fail("geometry.link_type", "an inter-plane link needs at least 2 planes");
        }
    } else {
        if (c.misalignment.mode == MisalignmentConfig::Mode::computed) {
            fail("misalignment.mode",
                 "computed displacement requires geometry.mode = \"constellation\"");
        }
        if (c.sweep.axis != SweepAxis::distance_m && !(c.geometry.distance_m > 0.0)) {
            fail("geometry.distance_m", "must be positive in explicit mode");
        }
    }
    if (c.sweep.axis == SweepAxis::distance_m &&
        c.geometry.mode != GeometryConfig::Mode::explicit_distance) {
        fail("sweep.axis", "distance_m sweeps require geometry.mode = \"explicit\"");
    }
    if (c.misalignment.displacement_m < 0.0) fail("misalignment.displacement_m", "must be non-negative");

    if (c.sweep.values.empty()) fail("sweep.values", "must be non-empty");
    for (size_t i = 0; i < c.sweep.values.size(); ++i) {
        if (!std::isfinite(c.sweep.values[i])) fail("sweep.values", "must be finite");
        if (i > 0 && !(c.sweep.values[i] > c.sweep.values[i - 1])) {
            fail("sweep.values", "must be strictly increasing");
        }
    }
    if (c.sweep.axis == SweepAxis::beam_waist_m || c.sweep.axis == SweepAxis::target_rate_bps ||
        c.sweep.axis == SweepAxis::distance_m) {
        if (!(c.sweep.values.front() > 0.0)) fail("sweep.values", "must be positive for this axis");
    }

    if (!(c.truncation.term_tolerance > 0.0) || !(c.truncation.term_tolerance < 1.0)) {
        fail("truncation.term_tolerance", "must lie in (0, 1)");
    }
    if (c.truncation.initial_terms < 1) fail("truncation.initial_terms", "must be at least 1");
    if (c.truncation.max_terms < c.truncation.initial_terms) {
        fail("truncation.max_terms", "must be at least initial_terms");
    }

    if (c.monte_carlo.samples < 1) fail("monte_carlo.samples", "must be at least 1");

    for (double t : c.design_search.targets) {
        if (!(t > 0.0) || t > 1.0) fail("design_search.targets", "entries must lie in (0, 1]");
    }
    if (c.design_search.max_planes < 1) fail("design_search.max_planes", "must be at least 1");
    if (c.design_search.min_sats_per_plane < 2) {
        fail("design_search.min_sats_per_plane", "must be at least 2");
    }
    if (c.design_search.max_sats_per_plane < c.design_search.min_sats_per_plane) {
        fail("design_search.max_sats_per_plane", "must be at least min_sats_per_plane");
    }
}

json to_json(const ScenarioConfig& c) {
    json j;
    j["beam"] = {{"wavelength_m", c.beam.wavelength_m}, {"waist_radius_m", c.beam.waist_radius_m}};
    j["aperture_radius_m"] = c.aperture_radius_m;
    j["jitter_angle_rad"] = c.jitter_angle_rad;
    j["transmit_power_dbm"] = c.transmit_power_dbm;
    j["transceiver"] = {{"responsivity_a_w", c.transceiver.responsivity_a_w},
                        {"noise_variance_a2", c.transceiver.noise_variance_a2},
                        {"bandwidth_hz", c.transceiver.bandwidth_hz},
                        {"target_rate_bps", c.transceiver.target_rate_bps}};
    j["geometry"] = {{"mode", geometry_mode_name(c.geometry.mode)},
                     {"constellation", c.geometry.constellation},
                     {"link_type", link_type_name(c.geometry.link_type)},
                     {"use_arc_distance", c.geometry.use_arc_distance},
                     {"distance_m", c.geometry.distance_m},
                     {"custom",
                      {{"altitude_m", c.geometry.custom.altitude_m},
                       {"num_planes", c.geometry.custom.num_planes},
                       {"sats_per_plane", c.geometry.custom.sats_per_plane},
                       {"inclination_rad", c.geometry.custom.inclination_rad},
                       {"pattern", pattern_name(c.geometry.custom.pattern)},
                       {"phasing_offset", c.geometry.custom.phasing_offset}}}};
    j["misalignment"] = {{"mode", misalignment_mode_name(c.misalignment.mode)},
                         {"displacement_m", c.misalignment.displacement_m}};
    j["sweep"] = {{"axis", axis_name(c.sweep.axis)}, {"values", c.sweep.values}};
    j["truncation"] = {{"term_tolerance", c.truncation.term_tolerance},
                       {"initial_terms", c.truncation.initial_terms},
                       {"max_terms", c.truncation.max_terms}};
    j["monte_carlo"] = {{"enabled", c.monte_carlo.enabled},
                        {"samples", c.monte_carlo.samples},
                        {"seed", c.monte_carlo.seed}};
    j["design_search"] = {{"targets", c.design_search.targets},
                          {"max_planes", c.design_search.max_planes},
                          {"min_sats_per_plane", c.design_search.min_sats_per_plane},
                          {"max_sats_per_plane", c.design_search.max_sats_per_plane}};
    return j;
}

ScenarioConfig from_json(const json& j) {
    ScenarioConfig c = default_config();
    check_keys(j, "$",
               {"beam", "aperture_radius_m", "jitter_angle_rad", "transmit_power_dbm",
                "transceiver", "geometry", "misalignment", "sweep", "truncation", "monte_carlo",
                "design_search"});
    if (j.contains("beam")) {
        const json& b = j.at("beam");
        check_keys(b, "beam", {"wavelength_m", "waist_radius_m"});
        c.beam.wavelength_m = get_number(b, "beam", "wavelength_m", c.beam.wavelength_m);
        c.beam.waist_radius_m = get_number(b, "beam", "waist_radius_m", c.beam.waist_radius_m);
    }
    c.aperture_radius_m = get_number(j, "$", "aperture_radius_m", c.aperture_radius_m);
    c.jitter_angle_rad = get_number(j, "$", "jitter_angle_rad", c.jitter_angle_rad);
    c.transmit_power_dbm = get_number(j, "$", "transmit_power_dbm", c.transmit_power_dbm);
    if (j.contains("transceiver")) {
        const json& t = j.at("transceiver");
        check_keys(t, "transceiver",
                   {"responsivity_a_w", "noise_variance_a2", "bandwidth_hz", "target_rate_bps"});
        c.transceiver.responsivity_a_w =
            get_number(t, "transceiver", "responsivity_a_w", c.transceiver.responsivity_a_w);
        c.transceiver.noise_variance_a2 =
            get_number(t, "transceiver", "noise_variance_a2", c.transceiver.noise_variance_a2);
        c.transceiver.bandwidth_hz =
            get_number(t, "transceiver", "bandwidth_hz", c.transceiver.bandwidth_hz);
        c.transceiver.target_rate_bps =
            get_number(t, "transceiver", "target_rate_bps", c.transceiver.target_rate_bps);
    }
    if (j.contains("geometry")) {
        const json& g = j.at("geometry");
        check_keys(g, "geometry",
                   {"mode", "constellation", "link_type", "use_arc_distance", "distance_m",
                    "custom"});
        c.geometry.mode = geometry_mode_from(
            get_string(g, "geometry", "mode", geometry_mode_name(c.geometry.mode)),
            "geometry.mode");
        c.geometry.constellation =
            get_string(g, "geometry", "constellation", c.geometry.constellation);
        c.geometry.link_type = link_type_from(
            get_string(g, "geometry", "link_type", link_type_name(c.geometry.link_type)),
            "geometry.link_type");
        c.geometry.use_arc_distance =
            get_bool(g, "geometry", "use_arc_distance", c.geometry.use_arc_distance);
        c.geometry.distance_m = get_number(g, "geometry", "distance_m", c.geometry.distance_m);
        if (g.contains("custom")) {
            const json& cu = g.at("custom");
            check_keys(cu, "geometry.custom",
                       {"altitude_m", "num_planes", "sats_per_plane", "inclination_rad", "pattern",
                        "phasing_offset"});
            ConstellationSpec& s = c.geometry.custom;
            s.altitude_m = get_number(cu, "geometry.custom", "altitude_m", s.altitude_m);
            s.num_planes = static_cast<int>(
                get_int(cu, "geometry.custom", "num_planes", s.num_planes));
            s.sats_per_plane = static_cast<int>(
                get_int(cu, "geometry.custom", "sats_per_plane", s.sats_per_plane));
            s.inclination_rad =
                get_number(cu, "geometry.custom", "inclination_rad", s.inclination_rad);
            s.pattern = pattern_from(
                get_string(cu, "geometry.custom", "pattern", pattern_name(s.pattern)),
                "geometry.custom.pattern");
            s.phasing_offset = get_number(cu, "geometry.custom", "phasing_offset", s.phasing_offset);
        }
    }
    if (j.contains("misalignment")) {
        const json& m = j.at("misalignment");
        check_keys(m, "misalignment", {"mode", "displacement_m"});
        c.misalignment.mode = misalignment_mode_from(
            get_string(m, "misalignment", "mode", misalignment_mode_name(c.misalignment.mode)),
            "misalignment.mode");
        c.misalignment.displacement_m =
            get_number(m, "misalignment", "displacement_m", c.misalignment.displacement_m);
    }
    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        check_keys(s, "sweep", {"axis", "values"});
        c.sweep.axis =
            axis_from(get_string(s, "sweep", "axis", axis_name(c.sweep.axis)), "sweep.axis");
        if (s.contains("values")) {
            const json& v = s.at("values");
            if (!v.is_array()) fail("sweep.values", "expected an array of numbers");
            c.sweep.values.clear();
            for (const json& e : v) {
                if (!e.is_number()) fail("sweep.values", "expected an array of numbers");
                c.sweep.values.push_back(e.get<double>());
            }
        }
    }
    if (j.contains("truncation")) {
        const json& t = j.at("truncation");
        check_keys(t, "truncation", {"term_tolerance", "initial_terms", "max_terms"});
        c.truncation.term_tolerance =
            get_number(t, "truncation", "term_tolerance", c.truncation.term_tolerance);
        c.truncation.initial_terms = static_cast<int>(
            get_int(t, "truncation", "initial_terms", c.truncation.initial_terms));
        c.truncation.max_terms =
            static_cast<int>(get_int(t, "truncation", "max_terms", c.truncation.max_terms));
    }
    if (j.contains("monte_carlo")) {
        const json& m = j.at("monte_carlo");
        check_keys(m, "monte_carlo", {"enabled", "samples", "seed"});
        c.monte_carlo.enabled = get_bool(m, "monte_carlo", "enabled", c.monte_carlo.enabled);
        c.monte_carlo.samples = get_int(m, "monte_carlo", "samples", c.monte_carlo.samples);
        c.monte_carlo.seed = get_uint(m, "monte_carlo", "seed", c.monte_carlo.seed);
    }
    if (j.contains("design_search")) {
        const json& d = j.at("design_search");
        check_keys(d, "design_search",
                   {"targets", "max_planes", "min_sats_per_plane", "max_sats_per_plane"});
        if (d.contains("targets")) {
            const json& v = d.at("targets");
            if (!v.is_array()) fail("design_search.targets", "expected an array of numbers");
            c.design_search.targets.clear();
            for (const json& e : v) {
                if (!e.is_number()) fail("design_search.targets", "expected an array of numbers");
                c.design_search.targets.push_back(e.get<double>());
            }
        }
        c.design_search.max_planes = static_cast<int>(
            get_int(d, "design_search", "max_planes", c.design_search.max_planes));
        c.design_search.min_sats_per_plane = static_cast<int>(get_int(
            d, "design_search", "min_sats_per_plane", c.design_search.min_sats_per_plane));
        c.design_search.max_sats_per_plane = static_cast<int>(get_int(
            d, "design_search", "max_sats_per_plane", c.design_search.max_sats_per_plane));
    }
    validate(c);
    return c;
}

}  // namespace

ScenarioConfig default_config() {
    ScenarioConfig c;
    c.sweep.axis = SweepAxis::transmit_power_dbm;
    c.sweep.values.clear();
    for (int p = 20; p <= 36; ++p) {
        c.sweep.values.push_back(static_cast<double>(p));
    }
    c.geometry.custom = starlink_spec();
    return c;
}

ScenarioConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return from_json(j);
}

std::string serialize_config(const ScenarioConfig& config, int indent) {
    return to_json(config).dump(indent) + "\n";
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config: cannot open file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string config_hash(const ScenarioConfig& config) {
    const std::uint64_t h = fnv1a64(to_json(config).dump());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

ConstellationSpec resolve_constellation(const GeometryConfig& geometry) {
    if (geometry.constellation == "starlink") {
        return starlink_spec();
    }
    if (geometry.constellation == "iridium") {
        return iridium_spec();
    }
    return geometry.custom;
}

}  // namespace fsolink
