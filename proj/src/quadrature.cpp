#include "jacobi_periods/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "jacobi_periods/errors.hpp"

namespace jacobi::numeric {

GaussLegendre gauss_legendre(int n)
{
    if (n < 1) throw DomainError("quadrature needs at least one node");
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

std::complex<double> integrate_panels(const std::function<std::complex<double>(double)>& f, double a, double b,
                                      const GaussLegendre& rule, int panels)
{
    std::vector<std::complex<double>> parts;
    parts.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double mid = lo + h / 2, half = h / 2;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            parts.push_back(rule.weights[i] * half * f(mid + half * rule.nodes[i]));
    }
    return pairwise_sum(parts);
}

AdaptiveResult integrate_adaptive(const std::function<std::complex<double>(double)>& f, double a, double b,
                                  const GaussLegendre& rule, double tol, int max_panels)
{
    int panels = 1;
    std::complex<double> prev = integrate_panels(f, a, b, rule, panels);
    while (panels < max_panels) {
        panels *= 2;
        std::complex<double> cur = integrate_panels(f, a, b, rule, panels);
        double diff = std::abs(cur - prev);
        if (diff < tol) return {cur, diff, panels};
        prev = cur;
    }
    throw PrecisionError("quadrature did not converge with " + std::to_string(max_panels) + " panels");
}

std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& values)
{
    if (values.empty()) return 0.0;
    std::vector<std::complex<double>> level = values;
    while (level.size() > 1) {
        std::vector<std::complex<double>> next((level.size() + 1) / 2);
        for (std::size_t i = 0; i < next.size(); ++i)
            next[i] = 2 * i + 1 < level.size() ? level[2 * i] + level[2 * i + 1] : level[2 * i];
        level.swap(next);
    }
    return level[0];
}

}  // namespace jacobi::numeric
