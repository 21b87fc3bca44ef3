#pragma once

#include "fsolink/beam_optics.hpp"

namespace fsolink {

// Statistical model of the received gain under two pointing error sources:
// zero-mean per-axis angular jitter (jitter_angle_rad, radians) and a fixed
// misalignment of the beam center (displacement_m, meters at the receiver
// plane). The radial offset is then Rician; the gain law through the
// aperture channel makes the gain distribution the one evaluated below.
struct PointingModel {
    double distance_m = 0.0;
    double jitter_angle_rad = 0.0;
    double displacement_m = 0.0;
    double equiv_beam_radius_m = 0.0;
    double peak_gain = 0.0;
    double width_jitter_ratio = 0.0;  // equiv beam radius / (2 * distance * jitter)
    double noncentrality = 0.0;       // displacement^2 / (2 * (distance * jitter)^2)

    // With zero jitter the gain degenerates to a point mass at the
    // misaligned gain; density/series calls reject this state explicitly.
    bool deterministic() const { return jitter_angle_rad == 0.0; }
};

PointingModel make_pointing_model(const ApertureChannel& ch, double jitter_angle_rad,
                                  double displacement_m);

// Standard deviation of the per-axis offset at the receiver plane.
double jitter_sigma_at_receiver(double distance_m, double jitter_angle_rad);

// Controls truncation of the gain CDF series.
struct TruncationPolicy {
    double term_tolerance = 1e-12;  // bound on the first omitted term
    int initial_terms = 64;         // starting upper bracket, doubled as needed
    int max_terms = 1000000;        // hard cap, exceeding it is a convergence error
};

// Number of series terms N such that the Stirling estimate of
// nu^N / N! first drops below term_tolerance, located by bisection over
// [1, bound] with the bound doubled until it brackets. Returns 1 for nu=0.
int truncation_index(double noncentrality, const TruncationPolicy& policy = {});

// Density of the radial offset at the receiver plane (Rician).
double rician_radial_pdf(const PointingModel& model, double radius_m);

// Density of the gain on (0, peak_gain].
double gain_pdf(const PointingModel& model, double gain);

struct SeriesEvaluation {
    double value = 0.0;
    int terms_used = 0;
};

// CDF of the gain at h via the truncated series
//   exp(-nu) * sum_n nu^n / (n!)^2 * Gamma(n+1, zeta),  zeta = gamma^2 ln(A0/h),
// evaluated as sum_n Pois(n; nu) * Q(n+1, zeta) so every factor stays in
// [0, 1]; Q is accumulated by the Poisson-CDF recurrence in log space.
// Exact (single term, closed form) when displacement is zero.
SeriesEvaluation gain_cdf_series_detail(const PointingModel& model, double gain,
                                        const TruncationPolicy& policy = {});
double gain_cdf_series(const PointingModel& model, double gain, const TruncationPolicy& policy = {});

// Closed-form CDF of the zero-displacement special case, (h/A0)^(gamma^2).
// Ignores the model's displacement by construction.
double rayleigh_gain_cdf(const PointingModel& model, double gain);

}  // namespace fsolink
