#pragma once

#include <functional>
#include <vector>

namespace fsolink {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by
// Newton iteration on the Legendre recurrence (no coefficient tables).
const std::vector<std::pair<double, double>>& gauss_legendre_rule(int order);

// Globally adaptive integration of f over [a, b]: segments are split until
// the summed |GL(2n) - GL(n)| error estimate meets abs_tol + rel_tol*|I|.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-12, double rel_tol = 1e-12,
                                    int max_segments = 4000);

// Same, seeded with the consecutive intervals of a sorted breakpoint list.
// Use when the integrand has known narrow features: a single wide initial
// segment can hide them from the error estimator entirely.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    const std::vector<double>& breakpoints,
                                    double abs_tol = 1e-12, double rel_tol = 1e-12,
                                    int max_segments = 4000);

}  // namespace fsolink
