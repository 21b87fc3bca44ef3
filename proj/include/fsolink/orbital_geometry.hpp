#pragma once

#include "fsolink/constants.hpp"
#include "fsolink/vec3.hpp"

namespace fsolink {

// Spherical satellite state: radius, polar angle from +z, azimuth from +x,
// and the (circular-orbit) angular rate. In the receiver-centric frame the
// receiver advances purely in the polar angle at fixed azimuth.
struct OrbitState {
    double radius_m = 0.0;
    double polar_rad = 0.0;
    double azimuth_rad = 0.0;
    double angular_rate_rad_s = 0.0;
};

struct FramePair {
    OrbitState tx;
    OrbitState rx;
};

// Geometry of one link at emission time: frozen transmitter, receiver
// propagated until the wavefront catches it.
struct LinkGeometry {
    OrbitState tx_state;
    OrbitState rx_state;
    double chord_distance_m = 0.0;
    double arrival_time_s = 0.0;
    double displacement_m = 0.0;
};

struct DisplacementResult {
    Vec3 vector;
    double magnitude_m = 0.0;
};

// sqrt(GM_E / r^3) for a circular orbit.
double circular_angular_rate(double radius_m, const PhysicalConstants& k = {});

// Position at polar angle advanced by angular_rate * dt_s, fixed azimuth.
// The polar angle is evaluated with raw trigonometry, so advancing past the
// pole continues the great circle (equivalent to azimuth + pi, polar
// reflected).
Vec3 spherical_to_cartesian(const OrbitState& state, double dt_s = 0.0);

// Rotate both states into the frame whose y-axis is the receiver's orbit
// normal and whose x-z plane contains the receiver (azimuth 0, x-component
// non-negative). The normal must point along the receiver's orbital angular
// momentum so that the receiver's polar angle increases with time. The
// rotation is orthonormal, so all distances are preserved.
FramePair to_receiver_centric(const OrbitState& tx_eci, const OrbitState& rx_eci,
                              const Vec3& rx_orbit_normal);

// || rx(tau) - tx0 ||^2 - (c tau)^2: positive while the spherical wavefront
// emitted from tx0 has not yet reached the receiver, zero at arrival.
double wavefront_residual(const Vec3& tx0, const OrbitState& rx, double tau_s,
                          const PhysicalConstants& k = {});

// Bisection for the arrival time on [0, tau_minus] with
// tau_minus = sqrt(r_rx^2 + r_tx^2 + 4 r_rx r_tx) / c, which always brackets
// a root for sub-luminal receiver motion. Returns the midpoint once the
// interval is below tol_s.
double solve_arrival_time(const Vec3& tx0, const OrbitState& rx, const PhysicalConstants& k = {},
                          double tol_s = 1e-12);

// Component of b = rx_tau - tx0 perpendicular to the boresight a = rx0 - tx0,
// negated: s = (b.a / |a|^2) a - b. Its magnitude is the beam-center offset
// at the receiver caused by receiver motion during the flight time.
DisplacementResult displacement(const Vec3& tx0, const Vec3& rx0, const Vec3& rx_tau);

// Full pipeline for one link given receiver-centric states: positions at
// emission, arrival-time solve, receiver propagation, displacement.
LinkGeometry link_displacement(const OrbitState& tx, const OrbitState& rx,
                               const PhysicalConstants& k = {}, double tol_s = 1e-12);

}  // namespace fsolink
