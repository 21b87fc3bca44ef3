#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "fsolink/beam_optics.hpp"
#include "fsolink/link_budget.hpp"
#include "support/reference_values.hpp"

using namespace fsolink;

namespace {

PointingModel starlink_chord_model(double displacement_m) {
    const BeamParams beam{refvals::kWaistRadiusM, refvals::kWavelengthM};
    const ApertureChannel ch =
        aperture_params(beam, refvals::kStarlinkIntraChordM, refvals::kApertureRadiusM);
    return make_pointing_model(ch, refvals::kJitterRad, displacement_m);
}

}  // namespace

TEST_CASE("dBm conversions round-trip on integer levels") {
    for (int dbm = -60; dbm <= 60; ++dbm) {
        // exp10/log10 round-trip wobbles by an ulp on some levels
        CHECK(watts_to_dbm(dbm_to_watts(dbm)) ==
              doctest::Approx(static_cast<double>(dbm)).epsilon(1e-14));
    }
    CHECK(dbm_to_watts(30.0) == 1.0);
    CHECK(dbm_to_watts(0.0) == 1e-3);
    CHECK(dbm_to_watts(28.0) == doctest::Approx(refvals::kPowerAt28DbmW).epsilon(1e-15));
    CHECK_THROWS_AS(watts_to_dbm(0.0), std::invalid_argument);
    CHECK_THROWS_AS(watts_to_dbm(-1.0), std::invalid_argument);
}

TEST_CASE("threshold gain and SNR at the reference operating point") {
    const TransceiverParams t;
    const double p28 = dbm_to_watts(28.0);
    CHECK(threshold_gain(p28, t) ==
          doctest::Approx(refvals::kThresholdGainAt28Dbm).epsilon(1e-14));
    CHECK(snr(3.08e-6, p28, t) == doctest::Approx(refvals::kSnrAtGain3p08em6).epsilon(1e-13));
    // R0 = B makes 2^(R/B) - 1 = 1 and the threshold collapses to
    // sqrt(noise) / (responsivity * power)
    const double expected = std::sqrt(t.noise_variance_a2) / (t.responsivity_a_w * p28);
    CHECK(threshold_gain(p28, t) == doctest::Approx(expected).epsilon(1e-15));
    CHECK_THROWS_AS(threshold_gain(0.0, t), std::invalid_argument);
    CHECK_THROWS_AS(snr(-1.0, p28, t), std::invalid_argument);
}

TEST_CASE("outage probability is the CDF at the threshold gain") {
    const TransceiverParams t;
    const PointingModel m = starlink_chord_model(100.0);
    const double p_w = dbm_to_watts(24.0);
    CHECK(outage_probability(m, p_w, t) ==
          doctest::Approx(gain_cdf_series(m, threshold_gain(p_w, t))).epsilon(1e-15));
}

TEST_CASE("unreachable threshold saturates the outage at one") {
    const TransceiverParams t;
    const PointingModel m = starlink_chord_model(0.0);
    // at -20 dBm the threshold exceeds the peak gain by orders of magnitude
    CHECK(threshold_gain(dbm_to_watts(-20.0), t) > m.peak_gain);
    CHECK(outage_probability(m, dbm_to_watts(-20.0), t) == 1.0);
}

TEST_CASE("analytic outage at 22 dBm matches the frozen reference") {
    const TransceiverParams t;
    const PointingModel m = starlink_chord_model(0.0);
    CHECK(outage_probability(m, dbm_to_watts(22.0), t) ==
          doctest::Approx(refvals::kStarlinkChordOutageAt22Dbm).epsilon(1e-9));
    // outage crosses 1e-8 at the frozen transmit power
    CHECK(outage_probability(m, dbm_to_watts(refvals::kStarlinkChordCrossingDbm), t) ==
          doctest::Approx(1e-8).epsilon(1e-8));
}

TEST_CASE("zero-displacement outage decays one gamma^2 decade per 10 dB") {
    const TransceiverParams t;
    const PointingModel m = starlink_chord_model(0.0);
    const double g2 = m.width_jitter_ratio * m.width_jitter_ratio;
    const double f24 = outage_probability(m, dbm_to_watts(24.0), t);
    const double f26 = outage_probability(m, dbm_to_watts(26.0), t);
    const double slope = (std::log10(f26) - std::log10(f24)) / 2.0;
    CHECK(slope == doctest::Approx(-g2 / 10.0).epsilon(1e-10));
}

TEST_CASE("outage is monotone in transmit power and displacement") {
    const TransceiverParams t;
    const PointingModel aligned = starlink_chord_model(0.0);
    double prev = 1.0;
    for (double dbm = 18.0; dbm <= 30.0; dbm += 2.0) {
        const double f = outage_probability(aligned, dbm_to_watts(dbm), t);
        CHECK(f <= prev);
        prev = f;
    }
    const double p_w = dbm_to_watts(24.0);
    CHECK(outage_probability(starlink_chord_model(50.0), p_w, t) >
          outage_probability(aligned, p_w, t));
}
