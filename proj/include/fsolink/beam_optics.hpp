#pragma once

namespace fsolink {

// Transmit Gaussian beam, fundamental mode.
struct BeamParams {
    double waist_radius_m = 1.25e-2;
    double wavelength_m = 1.55e-6;
};

// Receive-aperture channel at a fixed propagation distance.
// peak_gain is the fraction of transmitted power collected when the
// aperture center sits on the beam axis; the collected fraction at radial
// offset r is approximated by peak_gain * exp(-2 r^2 / equiv_beam_radius^2).
struct ApertureChannel {
    double distance_m = 0.0;
    double aperture_radius_m = 0.0;
    double beam_radius_m = 0.0;       // spot radius at the receiver plane
    double aperture_ratio = 0.0;      // sqrt(pi) * a / (sqrt(2) * spot radius)
    double peak_gain = 0.0;
    double equiv_beam_radius_m = 0.0;
};

// Spot radius after free-space propagation over distance_m.
double beam_radius(const BeamParams& beam, double distance_m);

// Derived aperture quantities at the given distance. The Gaussian
// approximation behind peak_gain/equiv_beam_radius assumes the aperture is
// small against the spot; there is no internal guard for the near-field
// case, use collected_power_exact as the reference there.
ApertureChannel aperture_params(const BeamParams& beam, double distance_m, double aperture_radius_m);

// Normalized intensity [1/m^2] at radial offset from the beam axis.
double gaussian_intensity(const BeamParams& beam, double radial_offset_m, double distance_m);

// Approximate collected fraction at a radial pointing offset of the
// aperture center, in (0, peak_gain].
double channel_gain(const ApertureChannel& ch, double pointing_offset_m);

// Collected fraction by adaptive quadrature of the intensity over the
// aperture disk, in polar coordinates about the aperture center (the
// angular part has a closed form in I0, the radial part is adaptive).
// Reference oracle for channel_gain; valid at any aperture/spot ratio.
double collected_power_exact(const BeamParams& beam, double distance_m, double aperture_radius_m,
                             double pointing_offset_m, double abs_tol = 1e-12);

}  // namespace fsolink
