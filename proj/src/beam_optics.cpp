#include "fsolink/beam_optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fsolink/math/quadrature.hpp"
#include "fsolink/math/special.hpp"

namespace fsolink {

namespace {

void check_beam(const BeamParams& beam) {
    if (!(beam.waist_radius_m > 0.0) || !std::isfinite(beam.waist_radius_m))
        throw std::invalid_argument("beam waist must be positive");
    if (!(beam.wavelength_m > 0.0) || !std::isfinite(beam.wavelength_m))
        throw std::invalid_argument("wavelength must be positive");
}

void check_distance(double distance_m) {
    if (!(distance_m >= 0.0) || !std::isfinite(distance_m))
        throw std::invalid_argument("distance must be nonnegative");
}

}  // namespace

double beam_radius(const BeamParams& beam, double distance_m) {
    check_beam(beam);
    check_distance(distance_m);
    const double w0 = beam.waist_radius_m;
    const double divergence = beam.wavelength_m * distance_m / (std::numbers::pi * w0 * w0);
    return w0 * std::sqrt(1.0 + divergence * divergence);
}

ApertureChannel aperture_params(const BeamParams& beam, double distance_m, double aperture_radius_m) {
    if (!(aperture_radius_m > 0.0) || !std::isfinite(aperture_radius_m))
        throw std::invalid_argument("aperture radius must be positive");
    ApertureChannel ch;
    ch.distance_m = distance_m;
    ch.aperture_radius_m = aperture_radius_m;
    ch.beam_radius_m = beam_radius(beam, distance_m);
    const double v =
        std::sqrt(std::numbers::pi) * aperture_radius_m / (std::sqrt(2.0) * ch.beam_radius_m);
    ch.aperture_ratio = v;
    const double erf_v = std::erf(v);
    ch.peak_gain = erf_v * erf_v;
    ch.equiv_beam_radius_m =
        ch.beam_radius_m *
        std::sqrt(std::sqrt(std::numbers::pi) * erf_v / (2.0 * v * std::exp(-v * v)));
    return ch;
}

double gaussian_intensity(const BeamParams& beam, double radial_offset_m, double distance_m) {
    if (!(radial_offset_m >= 0.0)) throw std::invalid_argument("radial offset must be nonnegative");
    const double w = beam_radius(beam, distance_m);
    const double w2 = w * w;
    return 2.0 / (std::numbers::pi * w2) * std::exp(-2.0 * radial_offset_m * radial_offset_m / w2);
}

double channel_gain(const ApertureChannel& ch, double pointing_offset_m) {
    if (!(pointing_offset_m >= 0.0)) throw std::invalid_argument("pointing offset must be nonnegative");
    const double weq2 = ch.equiv_beam_radius_m * ch.equiv_beam_radius_m;
    return ch.peak_gain * std::exp(-2.0 * pointing_offset_m * pointing_offset_m / weq2);
}

double collected_power_exact(const BeamParams& beam, double distance_m, double aperture_radius_m,
                             double pointing_offset_m, double abs_tol) {
    if (!(aperture_radius_m >= 0.0)) throw std::invalid_argument("aperture radius must be nonnegative");
    if (!(pointing_offset_m >= 0.0)) throw std::invalid_argument("pointing offset must be nonnegative");
    if (aperture_radius_m == 0.0) return 0.0;

    const double w = beam_radius(beam, distance_m);
    const double w2 = w * w;
    const double r = pointing_offset_m;

    // Angular integral of exp(-4 r rho cos(phi) / w^2) over the full circle
    // equals 2 pi I0(4 r rho / w^2); the radial integrand below folds the
    // 2/(pi w^2) normalization and the rho Jacobian in. Evaluated in log
    // space so large Bessel arguments cannot overflow.
    auto radial_integrand = [&](double rho) {
        if (rho <= 0.0) return 0.0;
        const double log_bessel = log_bessel_i0(4.0 * r * rho / w2);
        const double exponent = -2.0 * (r * r + rho * rho) / w2 + log_bessel;
        return 4.0 * rho / w2 * std::exp(exponent);
    };

    const QuadratureResult q =
        integrate_adaptive(radial_integrand, 0.0, aperture_radius_m, abs_tol, 1e-13);
    return q.value;
}

}  // namespace fsolink
