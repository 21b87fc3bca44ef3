#pragma once

#include "fsolink/pointing_stats.hpp"

namespace fsolink {

double dbm_to_watts(double power_dbm);
double watts_to_dbm(double power_w);

// Receiver chain and rate target for the outage computation.
struct TransceiverParams {
    double responsivity_a_w = 0.87;
    double noise_variance_a2 = 1.6e-14;
    double bandwidth_hz = 1e9;
    double target_rate_bps = 1e9;
};

// Electrical SNR for an instantaneous channel gain.
double snr(double gain, double transmit_power_w, const TransceiverParams& t);

// Smallest gain sustaining target_rate_bps over bandwidth_hz:
//   h_th = sqrt(noise * (2^(R/B) - 1)) / (responsivity * P_t).
double threshold_gain(double transmit_power_w, const TransceiverParams& t);

// P(rate < target) = F(h_th); exactly 1 when the threshold is out of reach.
double outage_probability(const PointingModel& model, double transmit_power_w,
                          const TransceiverParams& t, const TruncationPolicy& policy = {});

}  // namespace fsolink
