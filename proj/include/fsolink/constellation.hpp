#pragma once

#include <vector>

#include "fsolink/beam_optics.hpp"
#include "fsolink/link_budget.hpp"
#include "fsolink/orbital_geometry.hpp"

namespace fsolink {

enum class Pattern { star, delta };

// Walker-style constellation: planes spread uniformly over a RAAN span of
// pi (star) or 2*pi (delta), slots spread uniformly in each plane.
struct ConstellationSpec {
    double altitude_m = 0.0;
    int num_planes = 1;
    int sats_per_plane = 1;
    double inclination_rad = 0.0;
    Pattern pattern = Pattern::delta;
    double phasing_offset = 0.0;  // inter-plane phase shift, fraction of in-plane spacing
};

ConstellationSpec iridium_spec();
ConstellationSpec starlink_spec();

double raan_span_rad(Pattern pattern);
double orbit_radius_m(const ConstellationSpec& spec, const PhysicalConstants& k = {});

enum class LinkType { intra_plane, inter_plane };

struct SatIndex {
    int plane = 0;
    int slot = 0;
};

struct LinkSelection {
    LinkType link_type = LinkType::intra_plane;
    SatIndex tx;
    SatIndex rx;
};

// Receiver trailing its in-plane neighbor: rx = (0, 0), tx = (0, 1).
LinkSelection adjacent_intra_link();
// Co-phased satellites on adjacent planes, receiver on the lower-RAAN plane:
// rx = (0, 0), tx = (1, 0).
LinkSelection adjacent_inter_link();

// Orbit normal (angular-momentum direction) of a plane.
Vec3 plane_normal(const ConstellationSpec& spec, int plane);

// Inertial Cartesian position of a slot at its initial argument of latitude.
Vec3 eci_position(const ConstellationSpec& spec, int plane, int slot,
                  const PhysicalConstants& k = {});

// All P*Q satellites as inertial spherical states (deterministic order:
// plane-major, slot-minor).
std::vector<OrbitState> generate_states(const ConstellationSpec& spec,
                                        const PhysicalConstants& k = {});

struct LinkDistances {
    double intra_arc_m = 0.0;
    double intra_chord_m = 0.0;
    double inter_arc_m = 0.0;
    double inter_chord_m = 0.0;
};

// In-plane spacing (arc r*2pi/Q, chord 2r*sin(pi/Q)) and adjacent-plane
// spacing at the equator crossing (arc r*span/P, chord 2r*sin(span/(2P))).
LinkDistances link_distances(const ConstellationSpec& spec, const PhysicalConstants& k = {});

// Builds the selected pair, rotates into the receiver-centric frame, and
// runs the displacement pipeline.
LinkGeometry scenario_links(const ConstellationSpec& spec, const LinkSelection& selection,
                            const PhysicalConstants& k = {});

// Grid search for the smallest constellation meeting an outage target on
// both the intra-plane and (when more than one plane exists) inter-plane
// link, with the displacement computed from the constellation's own motion.
struct DesignSearchParams {
    double altitude_m = 550e3;
    double inclination_rad = 53.0 * M_PI / 180.0;
    Pattern pattern = Pattern::delta;
    BeamParams beam;
    double aperture_radius_m = 0.2;
    double jitter_angle_rad = 8e-6;
    double transmit_power_w = 0.63095734448019325;  // 28 dBm
    TransceiverParams transceiver;
    TruncationPolicy truncation;
    int max_planes = 100;
    int min_sats_per_plane = 2;  // an intra-plane link needs a neighbor
    int max_sats_per_plane = 40;
    bool use_arc_distance = false;
};

struct DesignResult {
    bool feasible = false;
    int num_planes = 0;
    int sats_per_plane = 0;
    int total_satellites = 0;
    double intra_outage = 0.0;
    double inter_outage = 0.0;
};

// Minimizes P*Q over the grid; ties broken by fewer planes, then fewer
// slots per plane. Infeasible grids return feasible = false.
DesignResult design_search(double outage_target, const DesignSearchParams& params,
                           const PhysicalConstants& k = {});

}  // namespace fsolink
