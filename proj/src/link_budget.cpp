#include "fsolink/link_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace fsolink {

double dbm_to_watts(double power_dbm) { return 1e-3 * std::pow(10.0, power_dbm / 10.0); }

double watts_to_dbm(double power_w) {
    if (power_w <= 0.0) {
        throw std::invalid_argument("power must be positive to convert to dBm");
    }
    return 10.0 * std::log10(power_w / 1e-3);
}

namespace {

void check_params(double transmit_power_w, const TransceiverParams& t) {
    if (transmit_power_w <= 0.0) {
        throw std::invalid_argument("transmit power must be positive");
    }
    if (t.responsivity_a_w <= 0.0 || t.noise_variance_a2 <= 0.0 || t.bandwidth_hz <= 0.0 ||
        t.target_rate_bps <= 0.0) {
        throw std::invalid_argument("transceiver parameters must be positive");
    }
}

}  // namespace

double snr(double gain, double transmit_power_w, const TransceiverParams& t) {
    check_params(transmit_power_w, t);
    if (gain < 0.0) {
        throw std::invalid_argument("gain must be non-negative");
    }
    const double current = gain * t.responsivity_a_w * transmit_power_w;
    return current * current / t.noise_variance_a2;
}

double threshold_gain(double transmit_power_w, const TransceiverParams& t) {
    check_params(transmit_power_w, t);
    const double snr_th = std::exp2(t.target_rate_bps / t.bandwidth_hz) - 1.0;
    return std::sqrt(t.noise_variance_a2 * snr_th) / (t.responsivity_a_w * transmit_power_w);
}

double outage_probability(const PointingModel& model, double transmit_power_w,
                          const TransceiverParams& t, const TruncationPolicy& policy) {
    const double h_th = threshold_gain(transmit_power_w, t);
    if (h_th >= model.peak_gain) {
        return 1.0;
    }
    return gain_cdf_series(model, h_th, policy);
}

}  // namespace fsolink
