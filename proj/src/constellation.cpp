#include "fsolink/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fsolink {

ConstellationSpec iridium_spec() {
    ConstellationSpec s;
    s.altitude_m = 781e3;
    s.num_planes = 6;
    s.sats_per_plane = 11;
    s.inclination_rad = 86.4 * M_PI / 180.0;
    s.pattern = Pattern::star;
    return s;
}

ConstellationSpec starlink_spec() {
    ConstellationSpec s;
    s.altitude_m = 550e3;
    s.num_planes = 72;
    s.sats_per_plane = 22;
    s.inclination_rad = 53.0 * M_PI / 180.0;
    s.pattern = Pattern::delta;
    return s;
}

double raan_span_rad(Pattern pattern) { return pattern == Pattern::star ? M_PI : 2.0 * M_PI; }

double orbit_radius_m(const ConstellationSpec& spec, const PhysicalConstants& k) {
    return k.earth_radius_m + spec.altitude_m;
}

namespace {

void check_spec(const ConstellationSpec& spec) {
    if (spec.num_planes < 1 || spec.sats_per_plane < 1) {
        throw std::invalid_argument("constellation needs at least one plane and one slot");
    }
    if (spec.altitude_m <= 0.0) {
        throw std::invalid_argument("constellation altitude must be positive");
    }
}

void check_index(const ConstellationSpec& spec, const SatIndex& idx) {
    if (idx.plane < 0 || idx.plane >= spec.num_planes || idx.slot < 0 ||
        idx.slot >= spec.sats_per_plane) {
        throw std::invalid_argument("satellite index (" + std::to_string(idx.plane) + ", " +
                                    std::to_string(idx.slot) + ") outside constellation");
    }
}

double plane_raan(const ConstellationSpec& spec, int plane) {
    return plane * raan_span_rad(spec.pattern) / spec.num_planes;
}

double slot_anomaly(const ConstellationSpec& spec, int plane, int slot) {
    const double in_plane_step = 2.0 * M_PI / spec.sats_per_plane;
    return slot * in_plane_step + plane * spec.phasing_offset * in_plane_step;
}

OrbitState spherical_state(const Vec3& p, double angular_rate) {
    OrbitState s;
    s.radius_m = norm(p);
    s.polar_rad = std::atan2(std::hypot(p.x, p.y), p.z);
    s.azimuth_rad = std::hypot(p.x, p.y) > 0.0 ? std::atan2(p.y, p.x) : 0.0;
    s.angular_rate_rad_s = angular_rate;
    return s;
}

}  // namespace

LinkSelection adjacent_intra_link() {
    LinkSelection sel;
    sel.link_type = LinkType::intra_plane;
    sel.rx = SatIndex{0, 0};
    sel.tx = SatIndex{0, 1};
    return sel;
}

LinkSelection adjacent_inter_link() {
    LinkSelection sel;
    sel.link_type = LinkType::inter_plane;
    sel.rx = SatIndex{0, 0};
    sel.tx = SatIndex{1, 0};
    return sel;
}

Vec3 plane_normal(const ConstellationSpec& spec, int plane) {
    check_spec(spec);
    const double raan = plane_raan(spec, plane);
    const double si = std::sin(spec.inclination_rad);
    return Vec3{si * std::sin(raan), -si * std::cos(raan), std::cos(spec.inclination_rad)};
}

Vec3 eci_position(const ConstellationSpec& spec, int plane, int slot, const PhysicalConstants& k) {
    check_spec(spec);
    check_index(spec, SatIndex{plane, slot});
    const double r = orbit_radius_m(spec, k);
    const double raan = plane_raan(spec, plane);
    const double u = slot_anomaly(spec, plane, slot);
    const double cu = std::cos(u);
    const double su = std::sin(u);
    const double ci = std::cos(spec.inclination_rad);
    const double si = std::sin(spec.inclination_rad);
    return Vec3{r * (cu * std::cos(raan) - su * ci * std::sin(raan)),
                r * (cu * std::sin(raan) + su * ci * std::cos(raan)), r * su * si};
}

std::vector<OrbitState> generate_states(const ConstellationSpec& spec, const PhysicalConstants& k) {
    check_spec(spec);
    const double rate = circular_angular_rate(orbit_radius_m(spec, k), k);
    std::vector<OrbitState> states;
    states.reserve(static_cast<size_t>(spec.num_planes) * spec.sats_per_plane);
    for (int p = 0; p < spec.num_planes; ++p) {
        for (int q = 0; q < spec.sats_per_plane; ++q) {
            states.push_back(spherical_state(eci_position(spec, p, q, k), rate));
        }
    }
    return states;
}

LinkDistances link_distances(const ConstellationSpec& spec, const PhysicalConstants& k) {
    check_spec(spec);
    const double r = orbit_radius_m(spec, k);
    const double span = raan_span_rad(spec.pattern);
    LinkDistances d;
    d.intra_arc_m = r * 2.0 * M_PI / spec.sats_per_plane;
    d.intra_chord_m = 2.0 * r * std::sin(M_PI / spec.sats_per_plane);
    d.inter_arc_m = r * span / spec.num_planes;
    d.inter_chord_m = 2.0 * r * std::sin(span / (2.0 * spec.num_planes));
    return d;
}

LinkGeometry scenario_links(const ConstellationSpec& spec, const LinkSelection& selection,
                            const PhysicalConstants& k) {
    check_spec(spec);
    check_index(spec, selection.tx);
    check_index(spec, selection.rx);
    if (selection.tx.plane == selection.rx.plane && selection.tx.slot == selection.rx.slot) {
        throw std::invalid_argument("link endpoints must be distinct satellites");
    }
    if (selection.link_type == LinkType::intra_plane && selection.tx.plane != selection.rx.plane) {
        throw std::invalid_argument("intra-plane link endpoints must share a plane");
    }
    if (selection.link_type == LinkType::inter_plane && selection.tx.plane == selection.rx.plane) {
        throw std::invalid_argument("inter-plane link endpoints must lie on distinct planes");
    }
    const double rate = circular_angular_rate(orbit_radius_m(spec, k), k);
    const OrbitState tx_eci =
        spherical_state(eci_position(spec, selection.tx.plane, selection.tx.slot, k), rate);
    const OrbitState rx_eci =
        spherical_state(eci_position(spec, selection.rx.plane, selection.rx.slot, k), rate);
    const FramePair frame =
        to_receiver_centric(tx_eci, rx_eci, plane_normal(spec, selection.rx.plane));
    return link_displacement(frame.tx, frame.rx, k);
}

namespace {

double link_outage(const LinkGeometry& geometry, double distance_m,
                   const DesignSearchParams& params, const PhysicalConstants&) {
    const ApertureChannel channel =
        aperture_params(params.beam, distance_m, params.aperture_radius_m);
    const PointingModel model =
        make_pointing_model(channel, params.jitter_angle_rad, geometry.displacement_m);
    return outage_probability(model, params.transmit_power_w, params.transceiver,
                              params.truncation);
}

}  // namespace

DesignResult design_search(double outage_target, const DesignSearchParams& params,
                           const PhysicalConstants& k) {
    if (!(outage_target > 0.0) || outage_target > 1.0) {
        throw std::invalid_argument("outage target must lie in (0, 1]");
    }
    if (params.max_planes < 1 || params.min_sats_per_plane < 2 ||
        params.max_sats_per_plane < params.min_sats_per_plane) {
        throw std::invalid_argument("design grid bounds are invalid");
    }

    // Geometry depends on Q only (intra) or P only (inter); evaluate each
    // once and reuse across the grid.
    auto make_spec = [&](int planes, int slots) {
        ConstellationSpec spec;
        spec.altitude_m = params.altitude_m;
        spec.num_planes = planes;
        spec.sats_per_plane = slots;
        spec.inclination_rad = params.inclination_rad;
        spec.pattern = params.pattern;
        return spec;
    };
    std::vector<double> intra_outage(params.max_sats_per_plane + 1, 1.0);
    for (int q = params.min_sats_per_plane; q <= params.max_sats_per_plane; ++q) {
        const ConstellationSpec spec = make_spec(1, q);
        const LinkGeometry geom = scenario_links(spec, adjacent_intra_link(), k);
        const LinkDistances dist = link_distances(spec, k);
        const double ell = params.use_arc_distance ? dist.intra_arc_m : geom.chord_distance_m;
        intra_outage[q] = link_outage(geom, ell, params, k);
    }
    std::vector<double> inter_outage(params.max_planes + 1, 0.0);
    for (int p = 2; p <= params.max_planes; ++p) {
        const ConstellationSpec spec = make_spec(p, 2);
        const LinkGeometry geom = scenario_links(spec, adjacent_inter_link(), k);
        const LinkDistances dist = link_distances(spec, k);
        const double ell = params.use_arc_distance ? dist.inter_arc_m : geom.chord_distance_m;
        inter_outage[p] = link_outage(geom, ell, params, k);
    }

    // Scan in lexicographic (total, planes, slots) order so the first
    // feasible cell is the minimum with the documented tie-breaking.
    struct Cell {
        int total;
        int planes;
        int slots;
    };
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(params.max_planes) *
                  (params.max_sats_per_plane - params.min_sats_per_plane + 1));
    for (int p = 1; p <= params.max_planes; ++p) {
        for (int q = params.min_sats_per_plane; q <= params.max_sats_per_plane; ++q) {
            cells.push_back(Cell{p * q, p, q});
        }
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.total != b.total) return a.total < b.total;
        if (a.planes != b.planes) return a.planes < b.planes;
        return a.slots < b.slots;
    });
    for (const Cell& cell : cells) {
        const double intra = intra_outage[cell.slots];
        const double inter = cell.planes >= 2 ? inter_outage[cell.planes] : 0.0;
        if (intra <= outage_target && (cell.planes < 2 || inter <= outage_target)) {
            DesignResult r;
            r.feasible = true;
            r.num_planes = cell.planes;
            r.sats_per_plane = cell.slots;
            r.total_satellites = cell.total;
            r.intra_outage = intra;
            r.inter_outage = inter;
            return r;
        }
    }
    return DesignResult{};
}

}  // namespace fsolink
