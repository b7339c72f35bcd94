#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "jacobi_periods/arith.hpp"
#include "jacobi_periods/fourier.hpp"
#include "jacobi_periods/jacobi_group.hpp"
#include "jacobi_periods/quadrature.hpp"

namespace jacobi::numeric {

using cplx = std::complex<double>;

class EvalPoint {
public:
    EvalPoint(cplx tau, cplx z);
    const cplx& tau() const { return tau_; }
    const cplx& z() const { return z_; }

private:
    cplx tau_, z_;
};

struct NumericConfig {
    // Largest class number index available to series evaluation.
    long qmax = 20000;
    int quad_nodes = 48;
    double tol = 1e-6;
    // Decimal digits; series are truncated at 10^-precision (at most 15).
    int precision = 15;

    double epsilon() const;
    void validate() const;
    // Defaults, with precision taken from JACOBI_PERIODS_PRECISION if set.
    static NumericConfig from_env();
};

using Evaluable = std::function<cplx(const EvalPoint&)>;

struct EvalResult {
    cplx value;
    double error_bound;
};

// Partial sum over the stored coefficients. The tail beyond qbound is
// bounded assuming |c(n, r)| <= M (n + 1) with M fitted to the stored
// coefficients and the observed r-support |r| <= rho sqrt(n) + rho0.
// Throws PrecisionError when that bound exceeds cfg.tol.
EvalResult eval_expansion(const fourier::JacobiExpansion& f, const EvalPoint& p, const NumericConfig& cfg);
EvalResult eval_expansion(const fourier::QSeries& f, cplx tau, const NumericConfig& cfg);

enum class SlashConvention {
    // Exponent m(-c (z + lambda tau + mu)^2 / (c tau + d) + lambda^2 tau + 2 lambda z + lambda mu).
    Standard,
    // Exponent m(-c z^2 / (c tau + d) + lambda^2 tau + 2 lambda z + lambda mu); not a cocycle.
    Printed,
};

// g acting on a point, with the matrix divided by sqrt(det).
EvalPoint act(const group::JacobiGroupElement& g, const EvalPoint& p);
cplx automorphy_factor(const group::JacobiGroupElement& g, double k, double m, const EvalPoint& p,
                       SlashConvention conv = SlashConvention::Standard);
Evaluable slash(Evaluable f, const group::JacobiGroupElement& g, double k, double m,
                SlashConvention conv = SlashConvention::Standard);

// (1/16 pi) int_1^inf u^{-3/2} e^{-xu} du in closed form.
double beta_fn(double x);
// The same integral by adaptive quadrature, after u = 1/s^2.
double beta_quadrature(double x, const NumericConfig& cfg);

// theta_{1,mu}(tau, z) = sum_{r = mu mod 2} q^{r^2/4} zeta^r.
cplx theta_value(int mu, cplx tau, cplx z, const NumericConfig& cfg);
// ((1+i) / 16 pi) int_{-conj(tau)}^{i inf} (t + tau)^{-3/2} theta_{1,mu}(t, 0) dt by quadrature.
cplx eichler_theta_integral(int mu, cplx tau, const NumericConfig& cfg);
// v^{-1/2} sum_{l = mu mod 2} beta(pi l^2 v) q^{-l^2/4}.
cplx eichler_theta_series(int mu, cplx tau, const NumericConfig& cfg);

// H_mu(tau) = sum_{N = -mu^2 mod 4} H(N) q^{N/4} and E_{2,1} through its
// theta decomposition.
class E21Evaluator {
public:
    explicit E21Evaluator(const NumericConfig& cfg);
    cplx h_mu(int mu, cplx tau) const;
    cplx operator()(const EvalPoint& p) const;
    const NumericConfig& config() const { return cfg_; }

private:
    NumericConfig cfg_;
    std::vector<double> hurwitz_;
};

enum class PeriodNormalization {
    // -3(1+i)/(2 pi): the constant for which E|T - E equals the period.
    Standard,
    // (1+i)/16
    Literal,
};

class PeriodEvaluator {
public:
    explicit PeriodEvaluator(const NumericConfig& cfg, PeriodNormalization norm = PeriodNormalization::Standard);
    // int_0^{i inf} (tau + w)^{-3/2} theta_{1,mu}(w, 0) dw for mu = 0, 1.
    std::array<cplx, 2> components(cplx tau) const;
    cplx operator()(const EvalPoint& p) const;
    cplx constant() const;

private:
    NumericConfig cfg_;
    PeriodNormalization norm_;
    GaussLegendre rule_;
};

enum class CompletionFactor {
    // F_mu = H_mu + 2 v^{-1/2} sum beta(pi l^2 v) q^{-l^2/4}
    Standard,
    // factor 1 in place of 2
    Literal,
    // holomorphic part only
    None,
};

// phi = F_0 theta_{1,0} + F_1 theta_{1,1}.
class PhiEvaluator {
public:
    PhiEvaluator(const NumericConfig& cfg, CompletionFactor factor = CompletionFactor::Standard);
    cplx f_mu(int mu, cplx tau) const;
    cplx operator()(const EvalPoint& p) const;

private:
    E21Evaluator e21_;
    CompletionFactor factor_;
};

// (f | V_n)(tau, z) = n^{k-1} sum_{ad = n, b mod d} d^{-k} f((a tau + b)/d, a z).
Evaluable hecke_V_sum(Evaluable f, std::int64_t n, int k);
// n^{k-4} sum over the level-n Hecke representatives of f | [A/n, (X, Y)].
Evaluable hecke_T_sum(Evaluable f, std::int64_t n, int k, double m);

struct CheckReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    std::vector<EvalPoint> points;
    std::vector<double> errors;
    double max_abs_error = 0;
    double tol = 0;
    bool relative = false;
    bool pass() const { return max_abs_error < tol; }
};

nlohmann::json to_json(const CheckReport& r);

std::vector<EvalPoint> transformation_points();
CheckReport check_transformation_law(const NumericConfig& cfg, PeriodNormalization norm = PeriodNormalization::Standard);
CheckReport check_period_relations(const NumericConfig& cfg, const Evaluable* period = nullptr);
CheckReport check_tildeT_action(std::int64_t p, const NumericConfig& cfg);
CheckReport check_theorem1(std::int64_t n, const NumericConfig& cfg);
CheckReport check_phi_invariance(const NumericConfig& cfg, CompletionFactor factor = CompletionFactor::Standard);
CheckReport check_beta(const NumericConfig& cfg);
CheckReport check_eichler_identity(const NumericConfig& cfg);
CheckReport check_T_jacobi_oracle(std::int64_t p, const NumericConfig& cfg);

}  // namespace jacobi::numeric
