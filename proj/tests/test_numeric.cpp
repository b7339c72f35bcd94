#include <cmath>
#include <numbers>

#include "doctest.h"

#include "jacobi_periods/errors.hpp"
#include "jacobi_periods/fourier.hpp"
#include "jacobi_periods/group_ring.hpp"
#include "jacobi_periods/numeric.hpp"
#include "support/generators.hpp"

using namespace jacobi;
using namespace jacobi::numeric;

namespace {

const cplx I(0, 1);

const std::vector<EvalPoint>& sample_points()
{
    static const std::vector<EvalPoint> pts{EvalPoint(I, cplx(0.1, 0.2)), EvalPoint(cplx(0.3, 1.1), 0.0),
                                            EvalPoint(cplx(-0.2, 0.8), cplx(0.35, -0.1))};
    return pts;
}

double cocycle_defect(const group::JacobiGroupElement& g1, const group::JacobiGroupElement& g2, const EvalPoint& p)
{
    auto lhs = automorphy_factor(group::compose(g1, g2), 2, 1, p);
    auto rhs = automorphy_factor(g1, 2, 1, act(g2, p)) * automorphy_factor(g2, 2, 1, p);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

}  // namespace

TEST_SUITE("numeric")
{
    TEST_CASE("evaluation points and configuration")
    {
        CHECK_THROWS_AS(EvalPoint(1.0, 0.0), DomainError);
        CHECK_THROWS_AS(EvalPoint(cplx(0, -1), 0.0), DomainError);
        NumericConfig cfg;
        CHECK(cfg.epsilon() == doctest::Approx(1e-15));
        cfg.precision = 30;
        CHECK(cfg.epsilon() == doctest::Approx(1e-15));
        cfg.precision = 6;
        CHECK(cfg.epsilon() == doctest::Approx(1e-6));
        cfg.quad_nodes = 0;
        CHECK_THROWS_AS(cfg.validate(), DomainError);
    }

    TEST_CASE("series evaluation")
    {
        NumericConfig cfg;
        fourier::JacobiExpansion one(0, 1, 1, 50);
        one.set_scaled(0, 0, 1);
        CHECK(eval_expansion(one, EvalPoint(I, 0.3), cfg).value == cplx(1, 0));
        auto e = fourier::e21_expansion(8);
        auto r = eval_expansion(e, EvalPoint(10.0 * I, 0.0), cfg);
        CHECK(std::abs(r.value - 1.0) < 1e-6);
        CHECK(r.error_bound < cfg.tol);
        auto th = fourier::theta(0, 30);
        cplx tau(0.1, 0.9), z(0.2, 0.1);
        CHECK(std::abs(eval_expansion(th, EvalPoint(tau, z), cfg).value - theta_value(0, tau, z, cfg)) < 1e-12);
        // Too short a series for a point near the real axis.
        CHECK_THROWS_AS(eval_expansion(fourier::e21_expansion(3), EvalPoint(0.05 * I, 0.0), cfg), PrecisionError);
    }

    TEST_CASE("series evaluation agrees with the theta decomposition evaluator")
    {
        NumericConfig cfg;
        E21Evaluator E(cfg);
        auto e = fourier::e21_expansion(20);
        for (const auto& p : sample_points()) CHECK(std::abs(eval_expansion(e, p, cfg).value - E(p)) < 1e-9);
    }

    TEST_CASE("theta at two truncations")
    {
        NumericConfig cfg;
        for (const auto& p : sample_points())
            for (int mu = 0; mu < 2; ++mu) {
                auto a = eval_expansion(fourier::theta(mu, 20), p, cfg).value;
                auto b = eval_expansion(fourier::theta(mu, 40), p, cfg).value;
                CHECK(std::abs(a - b) < 1e-12);
                CHECK(std::abs(a - theta_value(mu, p.tau(), p.z(), cfg)) < 1e-12);
            }
    }

    TEST_CASE("slash basics")
    {
        NumericConfig cfg;
        E21Evaluator E(cfg);
        Evaluable f = [&E](const EvalPoint& p) { return E(p); };
        for (const auto& p : sample_points()) {
            CHECK(slash(f, group::identity(), 2, 1)(p) == f(p));
            CHECK(std::abs(slash(f, group::generator("I1"), 2, 1)(p) - f(p)) < 1e-10);
            CHECK(std::abs(slash(f, group::generator("S"), 2, 1)(p) - f(p)) < 1e-10);
        }
    }

    TEST_CASE("cocycle identity on integral elements")
    {
        for (int i = 0; i < 100; ++i) {
            auto g1 = testgen::phased_element(), g2 = testgen::phased_element();
            for (const auto& p : sample_points()) CHECK(cocycle_defect(g1, g2, p) < 1e-10);
        }
    }

    TEST_CASE("cocycle identity on normalized Hecke elements")
    {
        std::vector<group::JacobiGroupElement> hecke;
        std::vector<ring::FormalSum> sums{ring::hecke_hat(2), ring::hecke_hat(3), ring::tilde_V(3)};
        for (const auto& f : sums)
            for (const auto& [e, c] : f.terms()) hecke.push_back(e.to_group());
        // compose() multiplies unnormalized matrices, so it agrees with the
        // normalized law only when the right factor has det 1. Put h on the
        // left, or rescale h exactly when its det is a square.
        std::size_t reversed = 0;
        for (std::size_t i = 0; i < hecke.size(); i += 7) {
            const auto& h = hecke[i];
            auto g = testgen::phased_element(4);
            Rational det = h.mat().det();
            std::int64_t s = static_cast<std::int64_t>(std::llround(std::sqrt(det.get_d())));
            for (const auto& p : sample_points()) {
                CHECK(cocycle_defect(h, g, p) < 1e-10);
                if (Rational(s * s) != det) continue;
                group::Matrix2 m{h.mat().a / s, h.mat().b / s, h.mat().c / s, h.mat().d / s};
                group::JacobiGroupElement hn(m, h.lambda(), h.mu(), h.phase());
                CHECK(cocycle_defect(g, hn, p) < 1e-10);
                ++reversed;
            }
        }
        CHECK(reversed > 0);
    }

    TEST_CASE("printed slash exponent breaks the cocycle")
    {
        double worst = 0;
        for (const char* a : {"T", "S", "I1", "I2", "U"})
            for (const char* b : {"T", "S", "I1", "I2", "U"}) {
                auto g1 = group::generator(a), g2 = group::generator(b);
                for (const auto& p : sample_points()) {
                    auto lhs = automorphy_factor(group::compose(g1, g2), 2, 1, p, SlashConvention::Printed);
                    auto rhs = automorphy_factor(g1, 2, 1, act(g2, p), SlashConvention::Printed) *
                               automorphy_factor(g2, 2, 1, p, SlashConvention::Printed);
                    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
                }
            }
        CHECK(worst > 1e-3);
    }

    TEST_CASE("beta")
    {
        NumericConfig cfg;
        CHECK(beta_fn(0) == doctest::Approx(1.0 / (8.0 * std::numbers::pi)).epsilon(1e-14));
        CHECK(std::abs(beta_fn(1) - beta_quadrature(1, cfg)) < 1e-10);
        for (int i = 0; i < 10; ++i) CHECK(beta_fn(0.5 * (i + 1)) < beta_fn(0.5 * i));
        CHECK_THROWS_AS(beta_fn(-1), DomainError);
        CHECK(check_beta(cfg).pass());
    }

    TEST_CASE("Eichler integral identity")
    {
        NumericConfig cfg;
        CHECK(std::abs(eichler_theta_integral(0, I, cfg) - eichler_theta_series(0, I, cfg)) < 1e-8);
        CHECK(std::abs(eichler_theta_integral(1, 2.0 * I, cfg) - eichler_theta_series(1, 2.0 * I, cfg)) < 1e-8);
        // The l = 0 term alone: v^{-1/2} beta(0) for mu = 0, nothing for mu = 1.
        cplx tau = 40.0 * I;
        CHECK(std::abs(eichler_theta_series(0, tau, cfg) - beta_fn(0) / std::sqrt(40.0)) < 1e-12);
        CHECK(std::abs(eichler_theta_series(1, tau, cfg)) < 1e-12);
        CHECK(check_eichler_identity(cfg).pass());
    }

    TEST_CASE("quadrature self-consistency")
    {
        NumericConfig cfg, doubled;
        doubled.quad_nodes = 2 * cfg.quad_nodes;
        PeriodEvaluator P(cfg), P2(doubled);
        for (cplx tau : {I, cplx(0.3, 1.1), cplx(-0.4, 0.8)}) {
            auto a = P.components(tau), b = P2.components(tau);
            CHECK(std::abs(a[0] - b[0]) < 1e-9);
            CHECK(std::abs(a[1] - b[1]) < 1e-9);
            CHECK(std::abs(eichler_theta_integral(0, tau, cfg) - eichler_theta_integral(0, tau, doubled)) <
                  cfg.tol / 10);
        }
        CHECK(std::abs(beta_quadrature(2, cfg) - beta_quadrature(2, doubled)) < cfg.tol / 10);
    }

    TEST_CASE("period function")
    {
        NumericConfig cfg;
        PeriodEvaluator P(cfg);
        cplx v = P(EvalPoint(I, 0.0));
        CHECK(std::isfinite(v.real()));
        CHECK(std::isfinite(v.imag()));
        for (const auto& p : sample_points()) {
            EvalPoint shifted(p.tau(), p.z() + 1.0);
            CHECK(std::abs(P(shifted) - P(p)) < 1e-12);
        }
        CHECK(P.constant() == -3.0 * (1.0 + I) / (2.0 * std::numbers::pi));
    }

    TEST_CASE("transformation law")
    {
        NumericConfig cfg;
        auto r = check_transformation_law(cfg);
        CHECK(r.pass());
        CHECK(r.errors.size() == 3);
        CHECK_FALSE(check_transformation_law(cfg, PeriodNormalization::Literal).pass());
    }

    TEST_CASE("period relations and negative control")
    {
        NumericConfig cfg;
        CHECK(check_period_relations(cfg).pass());
        Evaluable one = [](const EvalPoint&) { return cplx(1, 0); };
        CHECK_FALSE(check_period_relations(cfg, &one).pass());
    }

    TEST_CASE("elliptic invariance of the period function")
    {
        // Both readings of the extra elliptic condition: [I, (1, 0)] and [-I, (1, 0)].
        NumericConfig cfg;
        PeriodEvaluator P(cfg);
        Evaluable f = [&P](const EvalPoint& p) { return P(p); };
        group::JacobiGroupElement minus(group::Matrix2{-1, 0, 0, -1}, 1, 0);
        for (const auto& p : sample_points()) {
            double d1 = std::abs(f(p) - slash(f, group::generator("I2"), 2, 1)(p));
            double d2 = std::abs(f(p) - slash(f, minus, 2, 1)(p));
            MESSAGE("P - P|I2 = ", d1, ", P - P|[-I,(1,0)] = ", d2);
            CHECK(d1 < 1e-10);
            CHECK(d2 < 1e-10);
        }
    }

    TEST_CASE("transfer action on the period")
    {
        NumericConfig cfg;
        CHECK(check_tildeT_action(2, cfg).pass());
        CHECK(check_tildeT_action(3, cfg).pass());
    }

    TEST_CASE("index-raising identity")
    {
        NumericConfig cfg;
        CHECK(check_theorem1(2, cfg).pass());
        CHECK(check_theorem1(3, cfg).pass());
    }

    TEST_CASE("completed phi is invariant")
    {
        NumericConfig cfg;
        CHECK(check_phi_invariance(cfg).pass());
        CHECK_FALSE(check_phi_invariance(cfg, CompletionFactor::Literal).pass());
        CHECK_FALSE(check_phi_invariance(cfg, CompletionFactor::None).pass());
    }

    TEST_CASE("exact Hecke operator against the slash sum")
    {
        NumericConfig cfg;
        CHECK(check_T_jacobi_oracle(2, cfg).pass());
        CHECK(check_T_jacobi_oracle(3, cfg).pass());
    }

    TEST_CASE("V sum against the closed form")
    {
        NumericConfig cfg;
        E21Evaluator E(cfg);
        Evaluable f = [&E](const EvalPoint& p) { return E(p); };
        for (std::int64_t ell : {2, 3}) {
            auto exact = fourier::apply_V(fourier::e21_expansion(20 * ell), ell);
            auto direct = hecke_V_sum(f, ell, 2);
            for (const auto& p : sample_points()) CHECK(std::abs(eval_expansion(exact, p, cfg).value - direct(p)) < 1e-8);
        }
    }

    TEST_CASE("class number table limit is reported")
    {
        NumericConfig cfg;
        cfg.qmax = 40;
        E21Evaluator E(cfg);
        CHECK_THROWS_AS(E.h_mu(0, 0.05 * I), PrecisionError);
    }

    TEST_CASE("report serialization")
    {
        NumericConfig cfg;
        auto j = to_json(check_beta(cfg));
        CHECK(j.at("check") == "beta_closed_form");
        CHECK(j.at("status") == "pass");
        CHECK(j.contains("max_abs_error"));
        CHECK(j.contains("tol"));
        CHECK(j.contains("params"));
        CHECK(j.contains("points"));
    }
}
