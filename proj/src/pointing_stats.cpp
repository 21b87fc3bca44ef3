#include "fsolink/pointing_stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fsolink/errors.hpp"
#include "fsolink/math/special.hpp"

namespace fsolink {

PointingModel make_pointing_model(const ApertureChannel& ch, double jitter_angle_rad,
                                  double displacement_m) {
    if (jitter_angle_rad < 0.0) {
        throw std::invalid_argument("jitter angle must be non-negative");
    }
    if (displacement_m < 0.0) {
        throw std::invalid_argument("displacement must be non-negative");
    }
    if (ch.distance_m <= 0.0) {
        throw std::invalid_argument("pointing model requires a positive link distance");
    }
    PointingModel m;
    m.distance_m = ch.distance_m;
    m.jitter_angle_rad = jitter_angle_rad;
    m.displacement_m = displacement_m;
    m.equiv_beam_radius_m = ch.equiv_beam_radius_m;
    m.peak_gain = ch.peak_gain;
    const double sigma_m = jitter_sigma_at_receiver(ch.distance_m, jitter_angle_rad);
    if (sigma_m > 0.0) {
        m.width_jitter_ratio = ch.equiv_beam_radius_m / (2.0 * sigma_m);
        m.noncentrality = displacement_m * displacement_m / (2.0 * sigma_m * sigma_m);
    } else {
        m.width_jitter_ratio = std::numeric_limits<double>::infinity();
        m.noncentrality = displacement_m > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return m;
}

double jitter_sigma_at_receiver(double distance_m, double jitter_angle_rad) {
    return distance_m * jitter_angle_rad;
}

namespace {

// ln(nu^n / n!) via Stirling; monotonically decreasing once n > nu, which is
// the regime the bracket search below operates in.
double log_term_stirling(double noncentrality, double n) {
    return n * (1.0 + std::log(noncentrality) - std::log(n)) - 0.5 * std::log(2.0 * M_PI * n);
}

}  // namespace

int truncation_index(double noncentrality, const TruncationPolicy& policy) {
    if (noncentrality < 0.0 || !std::isfinite(noncentrality)) {
        throw std::invalid_argument("noncentrality must be finite and non-negative");
    }
    if (policy.term_tolerance <= 0.0 || policy.term_tolerance >= 1.0) {
        throw std::invalid_argument("term tolerance must lie in (0, 1)");
    }
    if (noncentrality == 0.0) {
        return 1;
    }
    const double log_tol = std::log(policy.term_tolerance);
    if (log_term_stirling(noncentrality, 1.0) < log_tol) {
        return 1;
    }
    double hi = std::max(policy.initial_terms, 2);
    while (log_term_stirling(noncentrality, hi) >= log_tol) {
        hi *= 2.0;
        if (hi > static_cast<double>(policy.max_terms)) {
            throw ConvergenceError("truncation index exceeds cap of " +
                                   std::to_string(policy.max_terms) + " terms");
        }
    }
    // The estimate is below tolerance at hi and at or above it at lo = 1;
    // bisection is safe because every n on the increasing flank of the term
    // sequence sits far above the (sub-unity) tolerance.
    double lo = 1.0;
    while (hi - lo > 1.0) {
        const double mid = std::floor((lo + hi) / 2.0);
        if (log_term_stirling(noncentrality, mid) < log_tol) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return static_cast<int>(hi);
}

double rician_radial_pdf(const PointingModel& model, double radius_m) {
    if (model.deterministic()) {
        throw std::domain_error("radial density undefined for zero jitter");
    }
    if (radius_m < 0.0) {
        return 0.0;
    }
    if (radius_m == 0.0) {
        // r * I0(...) -> 0 linearly; the density vanishes at the origin.
        return 0.0;
    }
    const double sigma_m = jitter_sigma_at_receiver(model.distance_m, model.jitter_angle_rad);
    const double sigma_sq = sigma_m * sigma_m;
    const double s = model.displacement_m;
    const double log_pdf = std::log(radius_m / sigma_sq) -
                           (radius_m * radius_m + s * s) / (2.0 * sigma_sq) +
                           log_bessel_i0(radius_m * s / sigma_sq);
    return std::exp(log_pdf);
}

double gain_pdf(const PointingModel& model, double gain) {
    if (model.deterministic()) {
        throw std::domain_error("gain density undefined for zero jitter");
    }
    if (gain <= 0.0 || gain >= model.peak_gain) {
        return 0.0;
    }
    const double g2 = model.width_jitter_ratio * model.width_jitter_ratio;
    const double sigma_m = jitter_sigma_at_receiver(model.distance_m, model.jitter_angle_rad);
    const double sigma_sq = sigma_m * sigma_m;
    const double log_ratio = std::log(model.peak_gain / gain);  // ln(A0/h) > 0
    // Radius giving this gain: r = sqrt(w_eq^2/2 * ln(A0/h)).
    const double r = std::sqrt(0.5 * model.equiv_beam_radius_m * model.equiv_beam_radius_m * log_ratio);
    const double log_pdf = std::log(g2) - std::log(gain) - g2 * log_ratio -
                           model.noncentrality +
                           log_bessel_i0(model.displacement_m * r / sigma_sq);
    return std::exp(log_pdf);
}

SeriesEvaluation gain_cdf_series_detail(const PointingModel& model, double gain,
                                        const TruncationPolicy& policy) {
    SeriesEvaluation out;
    if (gain <= 0.0) {
        out.value = 0.0;
        return out;
    }
    if (gain >= model.peak_gain) {
        out.value = 1.0;
        return out;
    }
    if (model.deterministic()) {
        // Point mass at the misaligned gain.
        const double r = model.displacement_m;
        const double w = model.equiv_beam_radius_m;
        const double h0 = model.peak_gain * std::exp(-2.0 * r * r / (w * w));
        out.value = gain >= h0 ? 1.0 : 0.0;
        return out;
    }
    const double g2 = model.width_jitter_ratio * model.width_jitter_ratio;
    const double zeta = g2 * std::log(model.peak_gain / gain);
    const double nu = model.noncentrality;
    const int n_terms = truncation_index(nu, policy);

    // Q(n+1, zeta) = P(Poisson(zeta) <= n), accumulated one Poisson mass at a
    // time while the outer Poisson(nu) weight advances in lockstep. Both
    // factors live in [0, 1] so the partial sums can never overflow.
    double q = 0.0;
    double sum = 0.0;
    for (int n = 0; n < n_terms; ++n) {
        q += std::exp(log_poisson_pmf(n, zeta));
        sum += std::exp(log_poisson_pmf(n, nu)) * q;
    }
    out.value = std::min(sum, 1.0);
    out.terms_used = n_terms;
    return out;
}

double gain_cdf_series(const PointingModel& model, double gain, const TruncationPolicy& policy) {
    return gain_cdf_series_detail(model, gain, policy).value;
}

double rayleigh_gain_cdf(const PointingModel& model, double gain) {
    if (gain <= 0.0) {
        return 0.0;
    }
    if (gain >= model.peak_gain) {
        return 1.0;
    }
    const double g2 = model.width_jitter_ratio * model.width_jitter_ratio;
    return std::pow(gain / model.peak_gain, g2);
}

}  // namespace fsolink
