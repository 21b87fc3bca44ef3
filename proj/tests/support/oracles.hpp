#pragma once

// Small independent re-implementations used as test oracles. Each one takes
// a deliberately different algorithmic route from the library code it
// checks.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "fsolink/beam_optics.hpp"
#include "fsolink/constellation.hpp"
#include "fsolink/link_budget.hpp"
#include "fsolink/orbital_geometry.hpp"
#include "fsolink/pointing_stats.hpp"
#include "fsolink/vec3.hpp"

namespace oracles {

// Smallest N >= 1 with nu^N / N! < eps, by direct log-factorial scan.
inline int brute_force_truncation(double nu, double eps) {
    if (nu == 0.0) {
        return 1;
    }
    const double log_eps = std::log(eps);
    for (int n = 1; n < 100000000; ++n) {
        const double log_term = n * std::log(nu) - std::lgamma(n + 1.0);
        if (log_term < log_eps) {
            return n;
        }
    }
    return -1;
}

// Light-time iteration tau <- ||rx(tau) - tx0|| / c. A contraction for
// sub-luminal receivers; converges to the same arrival time the bisection
// finds, without using the residual bracket.
inline double light_time_fixed_point(const fsolink::Vec3& tx0, const fsolink::OrbitState& rx,
                                     const fsolink::PhysicalConstants& k = {}) {
    double tau = fsolink::norm(fsolink::spherical_to_cartesian(rx) - tx0) / k.light_speed_m_s;
    for (int i = 0; i < 200; ++i) {
        const double next =
            fsolink::norm(fsolink::spherical_to_cartesian(rx, tau) - tx0) / k.light_speed_m_s;
        if (std::abs(next - tau) < 1e-16 * (1.0 + tau)) {
            return next;
        }
        tau = next;
    }
    return tau;
}

// Perpendicular component via the vector triple product:
// a x (b x a) / |a|^2 = b - (a.b/|a|^2) a, so the displacement is its
// negation.
inline fsolink::Vec3 displacement_cross_oracle(const fsolink::Vec3& a, const fsolink::Vec3& b) {
    const fsolink::Vec3 triple = fsolink::cross(a, fsolink::cross(b, a));
    return -1.0 / fsolink::norm_squared(a) * triple;
}

// sup_x |ECDF(x) - F(x)| over the sample points; samples are sorted here.
inline double ecdf_sup_distance(std::vector<double> samples,
                                const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        sup = std::max(sup, std::abs(static_cast<double>(i) / n - f));
        sup = std::max(sup, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return sup;
}

// Exhaustive grid scan for the design search: evaluates every (P, Q) cell
// from scratch through the public pipeline, no caching or ordering tricks.
inline fsolink::DesignResult exhaustive_design_search(double target,
                                                      const fsolink::DesignSearchParams& p,
                                                      const fsolink::PhysicalConstants& k = {}) {
    namespace fl = fsolink;
    fl::DesignResult best;
    long best_total = std::numeric_limits<long>::max();
    for (int planes = 1; planes <= p.max_planes; ++planes) {
        for (int q = p.min_sats_per_plane; q <= p.max_sats_per_plane; ++q) {
            fl::ConstellationSpec spec;
            spec.altitude_m = p.altitude_m;
            spec.num_planes = planes;
            spec.sats_per_plane = q;
            spec.inclination_rad = p.inclination_rad;
            spec.pattern = p.pattern;
            const auto outage_for = [&](const fl::LinkSelection& sel) {
                const fl::LinkGeometry g = fl::scenario_links(spec, sel, k);
                const double dist = p.use_arc_distance
                                        ? fl::orbit_radius_m(spec, k) *
                                              std::acos(std::clamp(
                                                  fl::dot(fl::spherical_to_cartesian(g.tx_state),
                                                          fl::spherical_to_cartesian(g.rx_state)) /
                                                      (g.tx_state.radius_m * g.rx_state.radius_m),
                                                  -1.0, 1.0))
                                        : g.chord_distance_m;
                const fl::ApertureChannel ch =
                    fl::aperture_params(p.beam, dist, p.aperture_radius_m);
                const fl::PointingModel model =
                    fl::make_pointing_model(ch, p.jitter_angle_rad, g.displacement_m);
                return fl::outage_probability(model, p.transmit_power_w, p.transceiver,
                                              p.truncation);
            };
            const double intra = outage_for(fl::adjacent_intra_link());
            const double inter = planes >= 2 ? outage_for(fl::adjacent_inter_link()) : 0.0;
            if (intra > target || (planes >= 2 && inter > target)) {
                continue;
            }
            const long total = static_cast<long>(planes) * q;
            if (total < best_total || (total == best_total && planes < best.num_planes) ||
                (total == best_total && planes == best.num_planes && q < best.sats_per_plane)) {
                best.feasible = true;
                best.num_planes = planes;
                best.sats_per_plane = q;
                best.total_satellites = static_cast<int>(total);
                best.intra_outage = intra;
                best.inter_outage = inter;
                best_total = total;
            }
        }
    }
    return best;
}

}  // namespace oracles
