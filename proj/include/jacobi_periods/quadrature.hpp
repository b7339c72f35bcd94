#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace jacobi::numeric {

struct GaussLegendre {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Nodes by Newton iteration on P_n from the Chebyshev initial guesses.
GaussLegendre gauss_legendre(int n);

// Composite Gauss-Legendre on [a, b] with `panels` equal panels.
std::complex<double> integrate_panels(const std::function<std::complex<double>(double)>& f, double a, double b,
                                      const GaussLegendre& rule, int panels);

struct AdaptiveResult {
    std::complex<double> value;
    double error_estimate;
    int panels;
};

// Doubles the panel count until two successive results differ by less than
// tol; throws PrecisionError after max_panels.
AdaptiveResult integrate_adaptive(const std::function<std::complex<double>(double)>& f, double a, double b,
                                  const GaussLegendre& rule, double tol, int max_panels = 1024);

// Sum in a fixed pairwise tree, independent of evaluation order.
std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& values);

}  // namespace jacobi::numeric
