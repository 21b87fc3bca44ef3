#include "fsolink/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fsolink/math/rng.hpp"
#include "fsolink/math/special.hpp"

namespace fsolink {

namespace {

constexpr double kWilsonZ99 = 2.5758293035489004;  // Phi^-1(0.995)

void check_count(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("sample count must be at least 1");
    }
}

double radial_sample(Pcg32& rng, double displacement_m, double sigma_m) {
    const NormalPair z = normal_pair(rng);
    const double along = displacement_m + sigma_m * z.z0;
    const double across = sigma_m * z.z1;
    return std::sqrt(along * along + across * across);
}

double gain_from_radius(const PointingModel& model, double radius_m) {
    const double w = model.equiv_beam_radius_m;
    return model.peak_gain * std::exp(-2.0 * radius_m * radius_m / (w * w));
}

// Log of the gain density as a function of x = sqrt(ln(A0/h)), dropping the
// constant ln(2 g2 / A0) - nu: phi(x) = (1 - g2) x^2 + ln I0(beta x).
struct LogDensityShape {
    double g2;
    double beta;
    double operator()(double x) const { return (1.0 - g2) * x * x + log_bessel_i0(beta * x); }
};

// Maximum of the log density over gains, located by a coarse scan plus
// golden-section refinement; used to build the rejection envelope.
double log_density_max(const PointingModel& model) {
    const double g2 = model.width_jitter_ratio * model.width_jitter_ratio;
    const double sigma_m = jitter_sigma_at_receiver(model.distance_m, model.jitter_angle_rad);
    const double beta = model.displacement_m * model.equiv_beam_radius_m /
                        (M_SQRT2 * sigma_m * sigma_m);
    const LogDensityShape phi{g2, beta};
    // Asymptotically the maximum sits near x* = beta / (2 (g2 - 1)); pad the
    // scan range well past it.
    const double x_star = beta / (2.0 * (g2 - 1.0));
    const double x_hi = std::max(4.0 * x_star, 2.0);
    const int grid = 512;
    int best = 0;
    double best_val = phi(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double val = phi(x_hi * i / grid);
        if (val > best_val) {
            best_val = val;
            best = i;
        }
    }
    double lo = x_hi * std::max(best - 1, 0) / grid;
    double hi = x_hi * std::min(best + 1, grid) / grid;
    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_golden * (hi - lo);
    double b = lo + inv_golden * (hi - lo);
    double fa = phi(a);
    double fb = phi(b);
    for (int iter = 0; iter < 120 && hi - lo > 1e-12 * (1.0 + hi); ++iter) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_golden * (hi - lo);
            fb = phi(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_golden * (hi - lo);
            fa = phi(a);
        }
    }
    const double log_const = std::log(g2 / model.peak_gain) - model.noncentrality;
    return log_const + std::max(best_val, phi(0.5 * (lo + hi)));
}

double log_gain_density(const PointingModel& model, double gain) {
    const double g2 = model.width_jitter_ratio * model.width_jitter_ratio;
    const double sigma_m = jitter_sigma_at_receiver(model.distance_m, model.jitter_angle_rad);
    const double beta = model.displacement_m * model.equiv_beam_radius_m /
                        (M_SQRT2 * sigma_m * sigma_m);
    const double u = std::log(model.peak_gain / gain);
    return std::log(g2 / model.peak_gain) - model.noncentrality + (1.0 - g2) * u +
           log_bessel_i0(beta * std::sqrt(u));
}

}  // namespace

std::vector<double> sample_radial(const PointingModel& model, const RngStream& stream,
                                  std::int64_t n) {
    check_count(n);
    Pcg32 rng(stream.seed, stream.stream_id);
    const double sigma_m = jitter_sigma_at_receiver(model.distance_m, model.jitter_angle_rad);
    std::vector<double> out(static_cast<size_t>(n));
    for (auto& r : out) {
        r = radial_sample(rng, model.displacement_m, sigma_m);
    }
    return out;
}

std::vector<double> sample_gain_rejection(const PointingModel& model, const RngStream& stream,
                                          std::int64_t n) {
    check_count(n);
    const double g2 = model.width_jitter_ratio * model.width_jitter_ratio;
    if (model.deterministic() || g2 <= 1.0) {
        // Density unavailable or unbounded near zero gain: transform the
        // radial draws instead of rejecting.
        Pcg32 rng(stream.seed, stream.stream_id);
        const double sigma_m = jitter_sigma_at_receiver(model.distance_m, model.jitter_angle_rad);
        std::vector<double> out(static_cast<size_t>(n));
        for (auto& h : out) {
            h = gain_from_radius(model, radial_sample(rng, model.displacement_m, sigma_m));
        }
        return out;
    }
    const double log_envelope = log_density_max(model) + std::log1p(1e-6);
    Pcg32 rng(stream.seed, stream.stream_id);
    std::vector<double> out(static_cast<size_t>(n));
    for (auto& h : out) {
        for (;;) {
            const double candidate = model.peak_gain * rng.uniform01();
            const double accept_log = std::log(rng.uniform01());
            if (accept_log <= log_gain_density(model, candidate) - log_envelope) {
                h = candidate;
                break;
            }
        }
    }
    return out;
}

namespace {

OutageEstimate wilson_estimate(std::int64_t failures, std::int64_t n) {
    const double p_hat = static_cast<double>(failures) / static_cast<double>(n);
    const double z = kWilsonZ99;
    const double z2_n = z * z / static_cast<double>(n);
    const double denom = 1.0 + z2_n;
    const double center = (p_hat + 0.5 * z2_n) / denom;
    const double half =
        z / denom *
        std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n) + 0.25 * z2_n / n);
    OutageEstimate e;
    e.point_estimate = p_hat;
    e.sample_count = n;
    e.ci_low = std::max(0.0, std::min(center - half, p_hat));
    e.ci_high = std::min(1.0, std::max(center + half, p_hat));
    return e;
}

}  // namespace

OutageEstimate estimate_outage_at_threshold(const PointingModel& model, double threshold_gain,
                                            const RngStream& stream, std::int64_t n) {
    check_count(n);
    // Certain outcomes carry no sampling uncertainty: degenerate interval.
    if (threshold_gain >= model.peak_gain) {
        return OutageEstimate{1.0, n, 1.0, 1.0};
    }
    if (threshold_gain <= 0.0) {
        return OutageEstimate{0.0, n, 0.0, 0.0};
    }
    // Gain below threshold iff radius beyond the threshold radius.
    const double w = model.equiv_beam_radius_m;
    const double r_th_sq = 0.5 * w * w * std::log(model.peak_gain / threshold_gain);
    const double sigma_m = jitter_sigma_at_receiver(model.distance_m, model.jitter_angle_rad);
    Pcg32 rng(stream.seed, stream.stream_id);
    std::int64_t failures = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        const NormalPair z = normal_pair(rng);
        const double along = model.displacement_m + sigma_m * z.z0;
        const double across = sigma_m * z.z1;
        if (along * along + across * across > r_th_sq) {
            ++failures;
        }
    }
    return wilson_estimate(failures, n);
}

OutageEstimate estimate_outage(const PointingModel& model, double transmit_power_w,
                               const TransceiverParams& t, const RngStream& stream,
                               std::int64_t n) {
    return estimate_outage_at_threshold(model, threshold_gain(transmit_power_w, t), stream, n);
}

}  // namespace fsolink
