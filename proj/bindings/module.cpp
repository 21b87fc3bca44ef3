#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsolink/beam_optics.hpp"
#include "fsolink/config.hpp"
#include "fsolink/constellation.hpp"
#include "fsolink/errors.hpp"
#include "fsolink/link_budget.hpp"
#include "fsolink/monte_carlo.hpp"
#include "fsolink/orbital_geometry.hpp"
#include "fsolink/pointing_stats.hpp"

namespace py = pybind11;
using namespace fsolink;

PYBIND11_MODULE(_fsolink, m) {
    m.doc() = "Inter-satellite optical link outage model (native core)";

    py::register_exception<ConvergenceError>(m, "ConvergenceError");
    py::register_exception<ConfigError>(m, "ConfigError");

    py::class_<BeamParams>(m, "BeamParams")
        .def(py::init<>())
        .def(py::init([](double waist_radius_m, double wavelength_m) {
                 return BeamParams{waist_radius_m, wavelength_m};
             }),
             py::arg("waist_radius_m"), py::arg("wavelength_m"))
        .def_readwrite("waist_radius_m", &BeamParams::waist_radius_m)
        .def_readwrite("wavelength_m", &BeamParams::wavelength_m);

    py::class_<ApertureChannel>(m, "ApertureChannel")
        .def_readonly("distance_m", &ApertureChannel::distance_m)
        .def_readonly("aperture_radius_m", &ApertureChannel::aperture_radius_m)
        .def_readonly("beam_radius_m", &ApertureChannel::beam_radius_m)
        .def_readonly("aperture_ratio", &ApertureChannel::aperture_ratio)
        .def_readonly("peak_gain", &ApertureChannel::peak_gain)
        .def_readonly("equiv_beam_radius_m", &ApertureChannel::equiv_beam_radius_m);

    py::class_<PointingModel>(m, "PointingModel")
        .def_readonly("distance_m", &PointingModel::distance_m)
        .def_readonly("jitter_angle_rad", &PointingModel::jitter_angle_rad)
        .def_readonly("displacement_m", &PointingModel::displacement_m)
        .def_readonly("equiv_beam_radius_m", &PointingModel::equiv_beam_radius_m)
        .def_readonly("peak_gain", &PointingModel::peak_gain)
        .def_readonly("width_jitter_ratio", &PointingModel::width_jitter_ratio)
        .def_readonly("noncentrality", &PointingModel::noncentrality)
        .def("deterministic", &PointingModel::deterministic);

    py::class_<TruncationPolicy>(m, "TruncationPolicy")
        .def(py::init<>())
        .def_readwrite("term_tolerance", &TruncationPolicy::term_tolerance)
        .def_readwrite("initial_terms", &TruncationPolicy::initial_terms)
        .def_readwrite("max_terms", &TruncationPolicy::max_terms);

    py::class_<TransceiverParams>(m, "TransceiverParams")
        .def(py::init<>())
        .def_readwrite("responsivity_a_w", &TransceiverParams::responsivity_a_w)
        .def_readwrite("noise_variance_a2", &TransceiverParams::noise_variance_a2)
        .def_readwrite("bandwidth_hz", &TransceiverParams::bandwidth_hz)
        .def_readwrite("target_rate_bps", &TransceiverParams::target_rate_bps);

    py::enum_<Pattern>(m, "Pattern")
        .value("star", Pattern::star)
        .value("delta", Pattern::delta);

    py::enum_<LinkType>(m, "LinkType")
        .value("intra_plane", LinkType::intra_plane)
        .value("inter_plane", LinkType::inter_plane);

    py::class_<ConstellationSpec>(m, "ConstellationSpec")
        .def(py::init<>())
        .def_readwrite("altitude_m", &ConstellationSpec::altitude_m)
        .def_readwrite("num_planes", &ConstellationSpec::num_planes)
        .def_readwrite("sats_per_plane", &ConstellationSpec::sats_per_plane)
        .def_readwrite("inclination_rad", &ConstellationSpec::inclination_rad)
        .def_readwrite("pattern", &ConstellationSpec::pattern)
        .def_readwrite("phasing_offset", &ConstellationSpec::phasing_offset);

    py::class_<SatIndex>(m, "SatIndex")
        .def(py::init([](int plane, int slot) { return SatIndex{plane, slot}; }),
             py::arg("plane"), py::arg("slot"))
        .def_readwrite("plane", &SatIndex::plane)
        .def_readwrite("slot", &SatIndex::slot);

    py::class_<LinkSelection>(m, "LinkSelection")
        .def(py::init<>())
        .def_readwrite("link_type", &LinkSelection::link_type)
        .def_readwrite("tx", &LinkSelection::tx)
        .def_readwrite("rx", &LinkSelection::rx);

    py::class_<LinkDistances>(m, "LinkDistances")
        .def_readonly("intra_arc_m", &LinkDistances::intra_arc_m)
        .def_readonly("intra_chord_m", &LinkDistances::intra_chord_m)
        .def_readonly("inter_arc_m", &LinkDistances::inter_arc_m)
        .def_readonly("inter_chord_m", &LinkDistances::inter_chord_m);

    py::class_<LinkGeometry>(m, "LinkGeometry")
        .def_readonly("chord_distance_m", &LinkGeometry::chord_distance_m)
        .def_readonly("arrival_time_s", &LinkGeometry::arrival_time_s)
        .def_readonly("displacement_m", &LinkGeometry::displacement_m);

    py::class_<OutageEstimate>(m, "OutageEstimate")
        .def_readonly("point_estimate", &OutageEstimate::point_estimate)
        .def_readonly("sample_count", &OutageEstimate::sample_count)
        .def_readonly("ci_low", &OutageEstimate::ci_low)
        .def_readonly("ci_high", &OutageEstimate::ci_high);

    py::class_<DesignResult>(m, "DesignResult")
        .def_readonly("feasible", &DesignResult::feasible)
        .def_readonly("num_planes", &DesignResult::num_planes)
        .def_readonly("sats_per_plane", &DesignResult::sats_per_plane)
        .def_readonly("total_satellites", &DesignResult::total_satellites)
        .def_readonly("intra_outage", &DesignResult::intra_outage)
        .def_readonly("inter_outage", &DesignResult::inter_outage);

    py::class_<DesignSearchParams>(m, "DesignSearchParams")
        .def(py::init<>())
        .def_readwrite("altitude_m", &DesignSearchParams::altitude_m)
        .def_readwrite("inclination_rad", &DesignSearchParams::inclination_rad)
        .def_readwrite("pattern", &DesignSearchParams::pattern)
        .def_readwrite("beam", &DesignSearchParams::beam)
        .def_readwrite("aperture_radius_m", &DesignSearchParams::aperture_radius_m)
        .def_readwrite("jitter_angle_rad", &DesignSearchParams::jitter_angle_rad)
        .def_readwrite("transmit_power_w", &DesignSearchParams::transmit_power_w)
        .def_readwrite("transceiver", &DesignSearchParams::transceiver)
        .def_readwrite("truncation", &DesignSearchParams::truncation)
        .def_readwrite("max_planes", &DesignSearchParams::max_planes)
        .def_readwrite("min_sats_per_plane", &DesignSearchParams::min_sats_per_plane)
        .def_readwrite("max_sats_per_plane", &DesignSearchParams::max_sats_per_plane)
        .def_readwrite("use_arc_distance", &DesignSearchParams::use_arc_distance);

    // beam optics
    m.def("beam_radius", &beam_radius, py::arg("beam"), py::arg("distance_m"),
          "Spot radius after free-space propagation");
    m.def("aperture_params", &aperture_params, py::arg("beam"), py::arg("distance_m"),
          py::arg("aperture_radius_m"), "Aperture channel at a propagation distance");
    m.def("channel_gain", &channel_gain, py::arg("channel"), py::arg("pointing_offset_m"),
          "Collected fraction at a radial pointing offset");
    m.def("collected_power_exact", &collected_power_exact, py::arg("beam"), py::arg("distance_m"),
          py::arg("aperture_radius_m"), py::arg("pointing_offset_m"), py::arg("abs_tol") = 1e-12,
          "Collected fraction by quadrature over the aperture disk");

    // pointing statistics
    m.def("make_pointing_model", &make_pointing_model, py::arg("channel"),
          py::arg("jitter_angle_rad"), py::arg("displacement_m"));
    m.def("truncation_index", &truncation_index, py::arg("noncentrality"),
          py::arg("policy") = TruncationPolicy{});
    m.def("gain_cdf_series", &gain_cdf_series, py::arg("model"), py::arg("gain"),
          py::arg("policy") = TruncationPolicy{}, "CDF of the channel gain");
    m.def("gain_pdf", &gain_pdf, py::arg("model"), py::arg("gain"));
    m.def("rayleigh_gain_cdf", &rayleigh_gain_cdf, py::arg("model"), py::arg("gain"),
          "Zero-displacement closed form");

    // link budget
    m.def("dbm_to_watts", &dbm_to_watts, py::arg("power_dbm"));
    m.def("watts_to_dbm", &watts_to_dbm, py::arg("power_w"));
    m.def("snr", &snr, py::arg("gain"), py::arg("transmit_power_w"), py::arg("transceiver"));
    m.def("threshold_gain", &threshold_gain, py::arg("transmit_power_w"), py::arg("transceiver"));
    m.def("outage_probability", &outage_probability, py::arg("model"),
          py::arg("transmit_power_w"), py::arg("transceiver"),
          py::arg("policy") = TruncationPolicy{});

    // constellations and geometry
    m.def("iridium_spec", &iridium_spec);
    m.def("starlink_spec", &starlink_spec);
    m.def("orbit_radius_m", [](const ConstellationSpec& s) { return orbit_radius_m(s); },
          py::arg("spec"));
    m.def("link_distances", [](const ConstellationSpec& s) { return link_distances(s); },
          py::arg("spec"));
    m.def("adjacent_intra_link", &adjacent_intra_link);
    m.def("adjacent_inter_link", &adjacent_inter_link);
    m.def("scenario_links",
          [](const ConstellationSpec& s, const LinkSelection& sel) {
              return scenario_links(s, sel);
          },
          py::arg("spec"), py::arg("selection"),
          "Distance, flight time and displacement of one link");
    m.def("design_search",
          [](double target, const DesignSearchParams& params) {
              return design_search(target, params);
          },
          py::arg("outage_target"), py::arg("params") = DesignSearchParams{});

    // Monte Carlo
    m.def("sample_gain_rejection",
          [](const PointingModel& model, std::uint64_t seed, std::uint64_t stream_id,
             std::int64_t n) { return sample_gain_rejection(model, RngStream{seed, stream_id}, n); },
          py::arg("model"), py::arg("seed"), py::arg("stream_id"), py::arg("n"));
    m.def("estimate_outage",
          [](const PointingModel& model, double transmit_power_w, const TransceiverParams& t,
             std::uint64_t seed, std::uint64_t stream_id, std::int64_t n) {
              return estimate_outage(model, transmit_power_w, t, RngStream{seed, stream_id}, n);
          },
          py::arg("model"), py::arg("transmit_power_w"), py::arg("transceiver"), py::arg("seed"),
          py::arg("stream_id"), py::arg("n"),
          "Seeded Monte-Carlo outage estimate with a 99% Wilson interval");

    // configuration
    m.def("default_config_json", [] { return serialize_config(default_config()); });
    m.def("canonicalize_config",
          [](const std::string& text) { return serialize_config(parse_config(text)); },
          py::arg("json_text"), "Parse, validate and re-serialize a scenario config");
    m.def("config_hash_hex",
          [](const std::string& text) { return config_hash(parse_config(text)); },
          py::arg("json_text"));
}
