#include "fsolink/orbital_geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "fsolink/errors.hpp"

namespace fsolink {

double circular_angular_rate(double radius_m, const PhysicalConstants& k) {
    if (radius_m <= 0.0) {
        throw std::invalid_argument("orbit radius must be positive");
    }
    return std::sqrt(k.mu_earth_m3_s2 / (radius_m * radius_m * radius_m));
}

Vec3 spherical_to_cartesian(const OrbitState& state, double dt_s) {
    const double theta = state.polar_rad + state.angular_rate_rad_s * dt_s;
    const double sin_theta = std::sin(theta);
    return Vec3{state.radius_m * sin_theta * std::cos(state.azimuth_rad),
                state.radius_m * sin_theta * std::sin(state.azimuth_rad),
                state.radius_m * std::cos(theta)};
}

namespace {

OrbitState to_frame(const OrbitState& state, const Vec3& x_axis, const Vec3& y_axis,
                    const Vec3& z_axis) {
    const Vec3 p = spherical_to_cartesian(state);
    const double px = dot(p, x_axis);
    const double py = dot(p, y_axis);
    const double pz = dot(p, z_axis);
    const double rho = std::hypot(px, py);
    OrbitState out = state;
    out.polar_rad = std::atan2(rho, pz);
    out.azimuth_rad = rho > 0.0 ? std::atan2(py, px) : 0.0;
    return out;
}

}  // namespace

FramePair to_receiver_centric(const OrbitState& tx_eci, const OrbitState& rx_eci,
                              const Vec3& rx_orbit_normal) {
    const double n_norm = norm(rx_orbit_normal);
    if (!(n_norm > 0.0) || !std::isfinite(n_norm)) {
        throw std::invalid_argument("receiver orbit normal must be a nonzero finite vector");
    }
    const Vec3 y_axis = rx_orbit_normal * (1.0 / n_norm);
    // Pick the frame z-axis as the inertial z projected off the normal; when
    // the normal is (anti)parallel to z, fall back to inertial x.
    Vec3 z_candidate = Vec3{0.0, 0.0, 1.0} - y_axis * dot(Vec3{0.0, 0.0, 1.0}, y_axis);
    if (norm(z_candidate) < 1e-12) {
        z_candidate = Vec3{1.0, 0.0, 0.0} - y_axis * dot(Vec3{1.0, 0.0, 0.0}, y_axis);
    }
    Vec3 z_axis = normalized(z_candidate);
    Vec3 x_axis = cross(y_axis, z_axis);
    // Rotate by pi about the normal if needed so the receiver sits at
    // azimuth 0 (x-component non-negative) rather than azimuth pi.
    if (dot(spherical_to_cartesian(rx_eci), x_axis) < 0.0) {
        x_axis = -x_axis;
        z_axis = -z_axis;
    }
    return FramePair{to_frame(tx_eci, x_axis, y_axis, z_axis),
                     to_frame(rx_eci, x_axis, y_axis, z_axis)};
}

double wavefront_residual(const Vec3& tx0, const OrbitState& rx, double tau_s,
                          const PhysicalConstants& k) {
    const Vec3 d = spherical_to_cartesian(rx, tau_s) - tx0;
    const double ct = k.light_speed_m_s * tau_s;
    return norm_squared(d) - ct * ct;
}

double solve_arrival_time(const Vec3& tx0, const OrbitState& rx, const PhysicalConstants& k,
                          double tol_s) {
    if (tol_s <= 0.0) {
        throw std::invalid_argument("arrival-time tolerance must be positive");
    }
    const double receiver_speed = std::abs(rx.angular_rate_rad_s) * rx.radius_m;
    if (receiver_speed >= k.light_speed_m_s) {
        throw std::invalid_argument("receiver tangential speed must be sub-luminal");
    }
    const double r_rx = rx.radius_m;
    const double r_tx = norm(tx0);
    const double tau_minus =
        std::sqrt(r_rx * r_rx + r_tx * r_tx + 4.0 * r_rx * r_tx) / k.light_speed_m_s;
    double lo = 0.0;
    double hi = tau_minus;
    const double f_lo = wavefront_residual(tx0, rx, lo, k);
    if (f_lo == 0.0) {
        return 0.0;  // coincident positions
    }
    if (f_lo < 0.0 || wavefront_residual(tx0, rx, hi, k) >= 0.0) {
        throw ConvergenceError("arrival-time bracket violated");
    }
    while (hi - lo > tol_s) {
        const double mid = 0.5 * (lo + hi);
        if (wavefront_residual(tx0, rx, mid, k) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

DisplacementResult displacement(const Vec3& tx0, const Vec3& rx0, const Vec3& rx_tau) {
    const Vec3 a = rx0 - tx0;
    const double a_sq = norm_squared(a);
    if (a_sq == 0.0) {
        throw std::invalid_argument("boresight direction undefined for coincident satellites");
    }
    const Vec3 b = rx_tau - tx0;
    const Vec3 s = a * (dot(b, a) / a_sq) - b;
    return DisplacementResult{s, norm(s)};
}

LinkGeometry link_displacement(const OrbitState& tx, const OrbitState& rx,
                               const PhysicalConstants& k, double tol_s) {
    const Vec3 tx0 = spherical_to_cartesian(tx);
    const Vec3 rx0 = spherical_to_cartesian(rx);
    const double tau = solve_arrival_time(tx0, rx, k, tol_s);
    const Vec3 rx_tau = spherical_to_cartesian(rx, tau);
    const DisplacementResult s = displacement(tx0, rx0, rx_tau);
    LinkGeometry g;
    g.tx_state = tx;
    g.rx_state = rx;
    g.chord_distance_m = norm(rx0 - tx0);
    g.arrival_time_s = tau;
    g.displacement_m = s.magnitude_m;
    return g;
}

}  // namespace fsolink
