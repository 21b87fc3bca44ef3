#include "fsolink/math/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace fsolink {

const std::vector<std::pair<double, double>>& gauss_legendre_rule(int order) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    if (order < 2) throw std::invalid_argument("gauss_legendre_rule: order must be >= 2");

    std::vector<std::pair<double, double>> rule(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Chebyshev-based initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p_cur = 1.0;
            double p_prev = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p_old = p_prev;
                p_prev = p_cur;
                p_cur = ((2.0 * j + 1.0) * x * p_prev - j * p_old) / (j + 1.0);
            }
            deriv = order * (x * p_cur - p_prev) / (x * x - 1.0);
            const double dx = p_cur / deriv;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        rule[i] = {-x, w};
        rule[order - 1 - i] = {x, w};
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

namespace {

struct Segment {
    double a, b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate_segment(const std::function<double(double)>& f, double a, double b, long& evals) {
    const auto& coarse = gauss_legendre_rule(10);
    const auto& fine = gauss_legendre_rule(20);
    const double mid = 0.5 * (a + b);
    const double halfw = 0.5 * (b - a);
    double coarse_sum = 0.0;
    for (const auto& [x, w] : coarse) coarse_sum += w * f(mid + halfw * x);
    double fine_sum = 0.0;
    for (const auto& [x, w] : fine) fine_sum += w * f(mid + halfw * x);
    evals += 30;
    const double value = fine_sum * halfw;
    return {a, b, value, std::fabs(value - coarse_sum * halfw)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_segments) {
    return integrate_adaptive(f, std::vector<double>{a, b}, abs_tol, rel_tol, max_segments);
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    const std::vector<double>& breakpoints, double abs_tol,
                                    double rel_tol, int max_segments) {
    if (breakpoints.size() < 2) {
        throw std::invalid_argument("integrate_adaptive: need at least two breakpoints");
    }
    QuadratureResult res;
    std::priority_queue<Segment> queue;
    double total = 0.0;
    double total_err = 0.0;
    int segments = 0;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] < breakpoints[i]) {
            throw std::invalid_argument("integrate_adaptive: breakpoints must be sorted");
        }
        if (breakpoints[i + 1] == breakpoints[i]) {
            continue;
        }
        const Segment s = evaluate_segment(f, breakpoints[i], breakpoints[i + 1], res.evaluations);
        total += s.value;
        total_err += s.error;
        queue.push(s);
        ++segments;
    }
    if (segments == 0) {
        res.converged = true;
        return res;
    }

    while (total_err > std::max(abs_tol, rel_tol * std::fabs(total)) && segments < max_segments) {
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval exhausted at double precision, keep its estimate
            total += 0.0;
            queue.push({worst.a, worst.b, worst.value, 0.0});
            total_err -= worst.error;
            continue;
        }
        total -= worst.value;
        total_err -= worst.error;
        const Segment left = evaluate_segment(f, worst.a, mid, res.evaluations);
        const Segment right = evaluate_segment(f, mid, worst.b, res.evaluations);
        total += left.value + right.value;
        total_err += left.error + right.error;
        queue.push(left);
        queue.push(right);
        ++segments;
    }

    res.value = total;
    res.error_estimate = total_err;
    res.converged = total_err <= std::max(abs_tol, rel_tol * std::fabs(total));
    return res;
}

}  // namespace fsolink
