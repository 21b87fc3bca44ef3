#pragma once

namespace fsolink {

// Exponentially scaled modified Bessel function exp(-|x|) * I0(x).
// Power series below the crossover, asymptotic expansion above; relative
// error is at machine-epsilon level across the range.
double bessel_i0_scaled(double x);

// log(I0(x)), overflow-free for large arguments.
double log_bessel_i0(double x);

// log of the Poisson probability mass exp(-lambda) lambda^k / k!.
// Valid for lambda >= 0 (k = 0 handled without evaluating log(0)).
double log_poisson_pmf(int k, double lambda);

}  // namespace fsolink
