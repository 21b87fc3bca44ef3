#include "fsolink/math/special.hpp"

#include <cmath>
#include <numbers>

namespace fsolink {

namespace {
constexpr double kSeriesAsymptoticCrossover = 19.0;
}

double bessel_i0_scaled(double x) {
    x = std::fabs(x);
    if (x < kSeriesAsymptoticCrossover) {
        // I0(x) = sum_k (x^2/4)^k / (k!)^2, all terms positive
        const double q = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * static_cast<double>(k));
            sum += term;
            if (term < sum * 1e-17) break;
        }
        return sum * std::exp(-x);
    }
    // I0(x) ~ e^x / sqrt(2 pi x) * (1 + 1/(8x) + 9/(2!(8x)^2) + ...)
    // term ratio (2k-1)^2 / (8 k x); truncate at the smallest term
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 64; ++k) {
        const double m = 2.0 * k - 1.0;
        const double next = term * m * m / (8.0 * k * x);
        if (next >= term) break;  // past the optimal truncation point
        term = next;
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

double log_bessel_i0(double x) {
    x = std::fabs(x);
    return x + std::log(bessel_i0_scaled(x));
}

double log_poisson_pmf(int k, double lambda) {
    if (k == 0) return -lambda;
    return -lambda + k * std::log(lambda) - std::lgamma(k + 1.0);
}

}  // namespace fsolink
