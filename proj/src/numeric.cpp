#include "jacobi_periods/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "jacobi_periods/errors.hpp"
#include "jacobi_periods/group_ring.hpp"

namespace jacobi::numeric {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

cplx e(cplx x) { return std::exp(2.0 * pi * I * x); }

double quad_tol(const NumericConfig& cfg) { return std::max(cfg.epsilon(), 1e-15) * 100.0; }

cplx int_power_inverse(cplx w, double k)
{
    double rk = std::round(k);
    if (rk == k && std::abs(rk) <= 64) {
        int ik = static_cast<int>(rk);
        cplx p = 1.0;
        for (int i = 0; i < std::abs(ik); ++i) p *= w;
        return ik >= 0 ? 1.0 / p : p;
    }
    return std::pow(w, -k);
}

struct NormalizedMatrix {
    double a, b, c, d;
    double lambda, mu, phase;
};

NormalizedMatrix normalize(const group::JacobiGroupElement& g)
{
    const auto& m = g.mat();
    double s = std::sqrt(to_double(m.det()));
    return {to_double(m.a) / s, to_double(m.b) / s, to_double(m.c) / s, to_double(m.d) / s,
            to_double(g.lambda()), to_double(g.mu()), to_double(g.phase())};
}

// sum_{N >= N0} (N + 1) y^N for 0 <= y < 1.
double linear_geometric_tail(long N0, double y)
{
    if (y >= 1.0) return INFINITY;
    double yN = std::pow(y, static_cast<double>(N0));
    return yN * ((N0 + 1.0) / (1.0 - y) + y / ((1.0 - y) * (1.0 - y)));
}

nlohmann::json point_json(const EvalPoint& p)
{
    return {p.tau().real(), p.tau().imag(), p.z().real(), p.z().imag()};
}

CheckReport finish(CheckReport r)
{
    r.max_abs_error = 0;
    for (double e : r.errors) r.max_abs_error = std::max(r.max_abs_error, std::isfinite(e) ? e : INFINITY);
    return r;
}

struct SeriesShape {
    double M = 0, rho = 0, rho0 = 0;
};

}  // namespace

EvalPoint::EvalPoint(cplx tau, cplx z) : tau_(tau), z_(z)
{
    if (!(tau.imag() > 0)) throw DomainError("evaluation point needs Im(tau) > 0");
}

double NumericConfig::epsilon() const { return std::pow(10.0, -std::min(precision, 15)); }

void NumericConfig::validate() const
{
    if (qmax < 1 || quad_nodes < 1 || !(tol > 0) || precision < 1)
        throw DomainError("numeric configuration values must be positive");
}

NumericConfig NumericConfig::from_env()
{
    NumericConfig cfg;
    if (const char* env = std::getenv("JACOBI_PERIODS_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) throw UsageError("JACOBI_PERIODS_PRECISION must be a positive integer");
        cfg.precision = static_cast<int>(v);
    }
    return cfg;
}

// ------------------------------------------------------------ evaluation

EvalResult eval_expansion(const fourier::JacobiExpansion& f, const EvalPoint& p, const NumericConfig& cfg)
{
    const double s = static_cast<double>(f.scale());
    const double v = p.tau().imag(), y = std::abs(p.z().imag());
    cplx sum = 0;
    SeriesShape shape;
    for (const auto& [key, c] : f.coeffs()) {
        double n = key.first / s;
        double r = static_cast<double>(key.second);
        double cv = to_double(c);
        sum += cv * e(n * p.tau() + r * p.z());
        shape.M = std::max(shape.M, std::abs(cv) / (n + 1.0));
        if (n == 0)
            shape.rho0 = std::max(shape.rho0, std::abs(r));
        else
            shape.rho = std::max(shape.rho, std::abs(r) / std::sqrt(n));
    }
    auto term = [&](long j) {
        double n = j / s;
        double rmax = shape.rho * std::sqrt(n) + shape.rho0;
        return shape.M * (n + 1.0) * (2.0 * rmax + 1.0) * std::exp(-2.0 * pi * v * n + 2.0 * pi * y * rmax);
    };
    auto tail_from = [&](long j0) {
        double t = 0, prev = INFINITY;
        for (long j = j0;; ++j) {
            double tj = term(j);
            t += tj;
            if (tj < 1e-300 || (tj < prev && tj < 1e-3 * cfg.epsilon() * std::max(t, 1e-300))) break;
            prev = tj;
            if (j - j0 > 10'000'000) return static_cast<double>(INFINITY);
        }
        return t;
    };
    Rational qs = f.qbound() * f.scale();
    long j0 = static_cast<long>(to_int64(floor(qs)));
    if (!is_integer(qs)) ++j0;
    double tail = shape.M == 0 ? 0.0 : tail_from(j0);
    if (tail > cfg.tol) {
        long j = j0;
        while (tail_from(j) > cfg.tol && j < j0 + 10'000'000) j += std::max<long>(1, f.scale());
        throw PrecisionError("series tail bound " + std::to_string(tail) + " exceeds tol; need qbound " +
                                 std::to_string(j / f.scale()),
                             j / f.scale());
    }
    return {sum, tail};
}

EvalResult eval_expansion(const fourier::QSeries& f, cplx tau, const NumericConfig& cfg)
{
    fourier::JacobiExpansion g(f.weight(), 1, f.scale(), f.qbound());
    for (const auto& [k, c] : f.coeffs()) g.set_scaled(k, 0, c);
    return eval_expansion(g, EvalPoint(tau, 0.0), cfg);
}

// ----------------------------------------------------------------- slash

EvalPoint act(const group::JacobiGroupElement& g, const EvalPoint& p)
{
    auto m = normalize(g);
    cplx j = m.c * p.tau() + m.d;
    return EvalPoint((m.a * p.tau() + m.b) / j, (p.z() + m.lambda * p.tau() + m.mu) / j);
}

cplx automorphy_factor(const group::JacobiGroupElement& g, double k, double m, const EvalPoint& p,
                       SlashConvention conv)
{
    auto M = normalize(g);
    const cplx tau = p.tau(), z = p.z();
    cplx j = M.c * tau + M.d;
    cplx shifted = conv == SlashConvention::Standard ? z + M.lambda * tau + M.mu : z;
    cplx expo = -M.c * shifted * shifted / j + M.lambda * M.lambda * tau + 2.0 * M.lambda * z + M.lambda * M.mu;
    return e(m * M.phase) * int_power_inverse(j, k) * e(m * expo);
}

Evaluable slash(Evaluable f, const group::JacobiGroupElement& g, double k, double m, SlashConvention conv)
{
    return [f = std::move(f), g, k, m, conv](const EvalPoint& p) {
        return automorphy_factor(g, k, m, p, conv) * f(act(g, p));
    };
}

// ------------------------------------------------------------ beta, theta

double beta_fn(double x)
{
    if (x < 0 || std::isnan(x)) throw DomainError("beta needs x >= 0");
    if (x > 700) return 0.0;
    double sx = std::sqrt(x);
    return (2.0 * std::exp(-x) - 2.0 * std::sqrt(pi * x) * std::erfc(sx)) / (16.0 * pi);
}

double beta_quadrature(double x, const NumericConfig& cfg)
{
    if (x < 0 || std::isnan(x)) throw DomainError("beta needs x >= 0");
    auto rule = gauss_legendre(cfg.quad_nodes);
    auto f = [x](double s) -> cplx { return s <= 0 ? 0.0 : 2.0 * std::exp(-x / (s * s)); };
    auto res = integrate_adaptive(f, 0.0, 1.0, rule, quad_tol(cfg) * 1e-2);
    return res.value.real() / (16.0 * pi);
}

cplx theta_value(int mu, cplx tau, cplx z, const NumericConfig& cfg)
{
    if (mu != 0 && mu != 1) throw DomainError("theta needs mu in {0, 1}");
    const double v = tau.imag();
    if (!(v > 0)) throw DomainError("theta needs Im(tau) > 0");
    auto term = [&](long r) {
        double rr = static_cast<double>(r);
        return std::exp(pi * I * rr * rr * tau / 2.0 + 2.0 * pi * I * rr * z);
    };
    long center = std::lround(-2.0 * z.imag() / v);
    if (((center % 2) + 2) % 2 != mu) ++center;
    cplx sum = term(center);
    double floor_eps = cfg.epsilon() * 1e-3;
    for (long j = 1;; ++j) {
        cplx tp = term(center + 2 * j), tm = term(center - 2 * j);
        sum += tp + tm;
        if (std::max(std::abs(tp), std::abs(tm)) < floor_eps * std::max(1.0, std::abs(sum))) break;
        if (j > 10'000'000) throw PrecisionError("theta series did not converge");
    }
    return sum;
}

cplx eichler_theta_integral(int mu, cplx tau, const NumericConfig& cfg)
{
    if (!(tau.imag() > 0)) throw DomainError("Eichler integral needs Im(tau) > 0");
    const double v = tau.imag();
    auto rule = gauss_legendre(cfg.quad_nodes);
    // t = -conj(tau) + i s with s = 2v (1/y^2 - 1), y in (0, 1].
    auto f = [&](double y) -> cplx {
        if (y <= 0) return 0.0;
        double s = 2.0 * v * (1.0 / (y * y) - 1.0);
        cplx t = -std::conj(tau) + I * s;
        double ds = 4.0 * v / (y * y * y);
        return std::pow(t + tau, -1.5) * theta_value(mu, t, 0.0, cfg) * I * ds;
    };
    auto res = integrate_adaptive(f, 0.0, 1.0, rule, quad_tol(cfg));
    return (1.0 + I) / (16.0 * pi) * res.value;
}

cplx eichler_theta_series(int mu, cplx tau, const NumericConfig& cfg)
{
    if (mu != 0 && mu != 1) throw DomainError("mu must be 0 or 1");
    const double v = tau.imag();
    if (!(v > 0)) throw DomainError("Eichler series needs Im(tau) > 0");
    cplx sum = 0;
    for (long l = mu; l < 100000; l += 2) {
        double x = pi * l * l * v;
        double b = beta_fn(x);
        // q^{-l^2/4}; the +-l terms coincide.
        cplx t = b * std::exp(-pi * I * tau * static_cast<double>(l * l) / 2.0);
        sum += (l == 0 ? 1.0 : 2.0) * t;
        if (l > 0 && std::abs(t) < cfg.epsilon() * 1e-3) break;
    }
    return sum / std::sqrt(v);
}

// ------------------------------------------------------------------ E21

E21Evaluator::E21Evaluator(const NumericConfig& cfg) : cfg_(cfg)
{
    cfg_.validate();
    arith::ClassNumberTable table(cfg_.qmax);
    hurwitz_.resize(static_cast<std::size_t>(cfg_.qmax) + 1);
    for (long N = 0; N <= cfg_.qmax; ++N) hurwitz_[static_cast<std::size_t>(N)] = to_double(table(N));
}

cplx E21Evaluator::h_mu(int mu, cplx tau) const
{
    if (mu != 0 && mu != 1) throw DomainError("mu must be 0 or 1");
    const double v = tau.imag();
    if (!(v > 0)) throw DomainError("H_mu needs Im(tau) > 0");
    // |H(N)| <= N + 1, so the tail from N0 is at most sum (N+1) y^N.
    double y = std::exp(-2.0 * pi * v / 4.0);
    long N0 = 0;
    while (linear_geometric_tail(N0, y) > cfg_.epsilon() * 1e-2) {
        N0 += 4;
        if (N0 > cfg_.qmax) throw PrecisionError("class number table too small for Im(tau) = " + std::to_string(v), N0);
    }
    cplx sum = 0;
    for (long N = 0; N < N0; ++N)
        if ((N + mu * mu) % 4 == 0 && hurwitz_[static_cast<std::size_t>(N)] != 0)
            sum += hurwitz_[static_cast<std::size_t>(N)] * std::exp(2.0 * pi * I * tau * (N / 4.0));
    return sum;
}

cplx E21Evaluator::operator()(const EvalPoint& p) const
{
    return -12.0 * (h_mu(0, p.tau()) * theta_value(0, p.tau(), p.z(), cfg_) +
                    h_mu(1, p.tau()) * theta_value(1, p.tau(), p.z(), cfg_));
}

// ---------------------------------------------------------------- period

PeriodEvaluator::PeriodEvaluator(const NumericConfig& cfg, PeriodNormalization norm)
    : cfg_(cfg), norm_(norm), rule_(gauss_legendre(cfg.quad_nodes))
{
    cfg_.validate();
}

cplx PeriodEvaluator::constant() const
{
    return norm_ == PeriodNormalization::Standard ? -3.0 * (1.0 + I) / (2.0 * pi) : (1.0 + I) / 16.0;
}

std::array<cplx, 2> PeriodEvaluator::components(cplx tau) const
{
    if (!(tau.imag() > 0)) throw DomainError("period needs Im(tau) > 0");
    std::array<cplx, 2> out;
    const double tol = quad_tol(cfg_);
    for (int mu = 0; mu < 2; ++mu) {
        // (0, i]: w = i s^2 with theta_mu(i t) = (2t)^{-1/2} sum_k (-1)^{k mu} e^{-pi k^2 / 2t}.
        auto near = [&](double s) -> cplx {
            if (s <= 0) return 0.0;
            double dual = 1.0;
            for (long k = 1;; ++k) {
                double t = std::exp(-pi * k * k / (2.0 * s * s));
                dual += 2.0 * ((mu == 1 && k % 2 == 1) ? -t : t);
                if (t < 1e-20) break;
            }
            return I * std::sqrt(2.0) * std::pow(tau + I * s * s, -1.5) * dual;
        };
        // [i, i inf): w = i / y^2.
        auto far = [&](double y) -> cplx {
            if (y <= 0) return mu == 0 ? 2.0 * I * std::pow(I, -1.5) : 0.0;
            return 2.0 * I * std::pow(tau * y * y + I, -1.5) * theta_value(mu, I / (y * y), 0.0, cfg_);
        };
        out[static_cast<std::size_t>(mu)] =
            integrate_adaptive(near, 0.0, 1.0, rule_, tol).value + integrate_adaptive(far, 0.0, 1.0, rule_, tol).value;
    }
    return out;
}

cplx PeriodEvaluator::operator()(const EvalPoint& p) const
{
    auto c = components(p.tau());
    return constant() * (c[0] * theta_value(0, p.tau(), p.z(), cfg_) + c[1] * theta_value(1, p.tau(), p.z(), cfg_));
}

// ------------------------------------------------------------------- phi

PhiEvaluator::PhiEvaluator(const NumericConfig& cfg, CompletionFactor factor) : e21_(cfg), factor_(factor) {}

cplx PhiEvaluator::f_mu(int mu, cplx tau) const
{
    double c = factor_ == CompletionFactor::Standard ? 2.0 : factor_ == CompletionFactor::Literal ? 1.0 : 0.0;
    cplx h = e21_.h_mu(mu, tau);
    if (c == 0.0) return h;
    return h + c * eichler_theta_series(mu, tau, e21_.config());
}

cplx PhiEvaluator::operator()(const EvalPoint& p) const
{
    const auto& cfg = e21_.config();
    return f_mu(0, p.tau()) * theta_value(0, p.tau(), p.z(), cfg) +
           f_mu(1, p.tau()) * theta_value(1, p.tau(), p.z(), cfg);
}

// --------------------------------------------------------- Hecke sums

Evaluable hecke_V_sum(Evaluable f, std::int64_t n, int k)
{
    if (n < 1) throw DomainError("V_n needs n >= 1");
    return [f = std::move(f), n, k](const EvalPoint& p) {
        std::vector<cplx> parts;
        for (std::int64_t a : arith::divisors(n)) {
            std::int64_t d = n / a;
            for (std::int64_t b = 0; b < d; ++b) {
                EvalPoint q((static_cast<double>(a) * p.tau() + static_cast<double>(b)) / static_cast<double>(d),
                            static_cast<double>(a) * p.z());
                parts.push_back(std::pow(static_cast<double>(d), -k) * f(q));
            }
        }
        return std::pow(static_cast<double>(n), k - 1) * pairwise_sum(parts);
    };
}

Evaluable hecke_T_sum(Evaluable f, std::int64_t n, int k, double m)
{
    auto hat = ring::hecke_hat(n);
    std::vector<std::pair<Evaluable, double>> terms;
    for (const auto& [e, c] : hat.terms()) terms.push_back({slash(f, e.to_group(), k, m), static_cast<double>(c)});
    return [terms, n, k](const EvalPoint& p) {
        std::vector<cplx> parts;
        for (const auto& [g, c] : terms) parts.push_back(c * g(p));
        return std::pow(static_cast<double>(n), k - 4) * pairwise_sum(parts);
    };
}

// ---------------------------------------------------------------- checks

nlohmann::json to_json(const CheckReport& r)
{
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : r.points) pts.push_back(point_json(p));
    return {{"check", r.check},
            {"params", r.params},
            {"points", pts},
            {"errors", r.errors},
            {"max_abs_error", r.max_abs_error},
            {"relative", r.relative},
            {"tol", r.tol},
            {"status", r.pass() ? "pass" : "fail"}};
}

std::vector<EvalPoint> transformation_points()
{
    return {EvalPoint(I, cplx(0.1, 0.2)), EvalPoint(cplx(0.3, 1.1), 0.0), EvalPoint(2.0 * I, 0.25)};
}

CheckReport check_transformation_law(const NumericConfig& cfg, PeriodNormalization norm)
{
    CheckReport r;
    r.check = "transformation_law";
    r.tol = 1e-6;
    r.params = {{"k", 2}, {"m", 1}, {"normalization", norm == PeriodNormalization::Standard ? "standard" : "literal"}};
    E21Evaluator E(cfg);
    PeriodEvaluator P(cfg, norm);
    Evaluable ev = [&E](const EvalPoint& p) { return E(p); };
    Evaluable ET = slash(ev, group::generator("T"), 2, 1);
    r.points = transformation_points();
    for (const auto& p : r.points) r.errors.push_back(std::abs(ET(p) - E(p) - P(p)));
    return finish(r);
}

CheckReport check_period_relations(const NumericConfig& cfg, const Evaluable* period)
{
    CheckReport r;
    r.check = "period_relations";
    r.tol = 1e-6;
    r.params = {{"k", 2}, {"m", 1}, {"function", period ? "custom" : "period_P"}};
    PeriodEvaluator P(cfg);
    Evaluable f = period ? *period : Evaluable([&P](const EvalPoint& p) { return P(p); });
    const auto T = group::generator("T"), U = group::generator("U");
    r.points = {EvalPoint(I, 0.1), EvalPoint(cplx(0.5, 1.2), cplx(0.2, -0.1)),
                EvalPoint(cplx(-0.3, 0.9), cplx(0.15, 0.05))};
    for (const auto& p : r.points) {
        std::vector<cplx> tsum, usum;
        for (int j = 0; j < 4; ++j) tsum.push_back(slash(f, group::power(T, j), 2, 1)(p));
        for (int j = 0; j < 6; ++j) usum.push_back(slash(f, group::power(U, j), 2, 1)(p));
        r.errors.push_back(std::abs(pairwise_sum(tsum)));
        r.errors.push_back(std::abs(pairwise_sum(usum)));
    }
    return finish(r);
}

CheckReport check_tildeT_action(std::int64_t p, const NumericConfig& cfg)
{
    CheckReport r;
    r.check = "tildeT_action";
    r.tol = 1e-4;
    r.relative = true;
    r.params = {{"p", p}, {"k", 2}, {"m", 1}};
    PeriodEvaluator P(cfg);
    Evaluable f = [&P](const EvalPoint& q) { return P(q); };
    auto tt = ring::tilde_T(p);
    r.params["terms"] = tt.size();
    r.points = {EvalPoint(I, cplx(0.1, 0.1)), EvalPoint(1.5 * I, 0.0)};
    for (const auto& pt : r.points) {
        std::vector<cplx> parts;
        for (const auto& [e, c] : tt.terms()) parts.push_back(static_cast<double>(c) * slash(f, e.to_group(), 2, 1)(pt));
        cplx lhs = pairwise_sum(parts) / static_cast<double>(p * p);
        cplx base = P(pt);
        r.errors.push_back(std::abs(lhs - static_cast<double>(p + 1) * base) / std::abs(base));
    }
    return finish(r);
}

CheckReport check_theorem1(std::int64_t n, const NumericConfig& cfg)
{
    CheckReport r;
    r.check = "theorem1";
    r.tol = 1e-5;
    r.params = {{"n", n}, {"k", 2}, {"m", 1}};
    const int k = 2;
    E21Evaluator E(cfg);
    PeriodEvaluator P(cfg);
    Evaluable ev = [&E](const EvalPoint& p) { return E(p); };
    Evaluable g = hecke_V_sum(ev, n, k);
    Evaluable gT = slash(g, group::generator("T"), k, static_cast<double>(n));
    Evaluable pv = [&P](const EvalPoint& p) { return P(p); };
    auto tv = ring::tilde_V(n);
    std::vector<std::pair<Evaluable, double>> terms;
    for (const auto& [e, c] : tv.terms()) terms.push_back({slash(pv, e.to_group(), k, 1), static_cast<double>(c)});
    const double rn = std::sqrt(static_cast<double>(n));
    r.points = {EvalPoint(I, 0.1), EvalPoint(1.2 * I, 0.05)};
    for (const auto& pt : r.points) {
        cplx lhs = gT(pt) - g(pt);
        // The scalar element acts as the dilation z -> sqrt(n) z.
        EvalPoint dil(pt.tau(), rn * pt.z());
        std::vector<cplx> parts;
        for (const auto& [t, c] : terms) parts.push_back(c * t(dil));
        cplx rhs = std::pow(static_cast<double>(n), k / 2.0 - 1.0) * pairwise_sum(parts);
        r.errors.push_back(std::abs(lhs - rhs));
    }
    return finish(r);
}

CheckReport check_phi_invariance(const NumericConfig& cfg, CompletionFactor factor)
{
    CheckReport r;
    r.check = "phi_invariance";
    r.tol = 1e-6;
    r.params = {{"k", 2},
                {"m", 1},
                {"completion", factor == CompletionFactor::Standard  ? "standard"
                               : factor == CompletionFactor::Literal ? "literal"
                                                                     : "none"},
                {"errors_per_point", {"T", "S", "I1"}}};
    PhiEvaluator phi(cfg, factor);
    Evaluable f = [&phi](const EvalPoint& p) { return phi(p); };
    Evaluable fT = slash(f, group::generator("T"), 2, 1);
    Evaluable fS = slash(f, group::generator("S"), 2, 1);
    Evaluable fI = slash(f, group::generator("I1"), 2, 1);
    r.points = {EvalPoint(I, 0.2), EvalPoint(cplx(0.2, 1.1), cplx(0.1, 0.05)), EvalPoint(cplx(-0.4, 0.9), 0.3)};
    for (const auto& p : r.points) {
        cplx base = f(p);
        r.errors.push_back(std::abs(fT(p) - base));
        r.errors.push_back(std::abs(fS(p) - base));
        r.errors.push_back(std::abs(fI(p) - base));
    }
    return finish(r);
}

CheckReport check_beta(const NumericConfig& cfg)
{
    CheckReport r;
    r.check = "beta_closed_form";
    r.tol = 1e-10;
    std::vector<double> xs;
    for (int i = 0; i <= 10; ++i) xs.push_back(0.5 * i);
    xs.push_back(1e-3);
    xs.push_back(10.0);
    xs.push_back(20.0);
    r.params = {{"x", xs}};
    for (double x : xs) r.errors.push_back(std::abs(beta_fn(x) - beta_quadrature(x, cfg)));
    return finish(r);
}

CheckReport check_eichler_identity(const NumericConfig& cfg)
{
    CheckReport r;
    r.check = "eichler_identity";
    r.tol = 1e-8;
    r.params = {{"mu", {0, 1}}};
    for (cplx tau : {cplx(0, 1), cplx(0, 2), cplx(0.3, 0.8)}) {
        r.points.emplace_back(tau, 0.0);
        for (int mu = 0; mu < 2; ++mu)
            r.errors.push_back(std::abs(eichler_theta_integral(mu, tau, cfg) - eichler_theta_series(mu, tau, cfg)));
    }
    return finish(r);
}

CheckReport check_T_jacobi_oracle(std::int64_t p, const NumericConfig& cfg)
{
    CheckReport r;
    r.check = "T_jacobi_oracle";
    r.tol = 1e-6;
    const Rational Q = 12;
    r.params = {{"p", p}, {"qbound", 12}};
    auto exact = fourier::apply_T_jacobi(fourier::e21_expansion(fourier::required_input_qbound_T(p, Q)), p, Q);
    E21Evaluator E(cfg);
    Evaluable ev = [&E](const EvalPoint& q) { return E(q); };
    Evaluable direct = hecke_T_sum(ev, p, 2, 1);
    r.points = {EvalPoint(I, 0.1), EvalPoint(cplx(0.2, 1.1), cplx(0.05, 0.03))};
    for (const auto& pt : r.points) r.errors.push_back(std::abs(eval_expansion(exact, pt, cfg).value - direct(pt)));
    return finish(r);
}

}  // namespace jacobi::numeric
