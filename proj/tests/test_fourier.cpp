#include <map>
#include <vector>

#include "doctest.h"

#include "jacobi_periods/arith.hpp"
#include "jacobi_periods/errors.hpp"
#include "jacobi_periods/fourier.hpp"
#include "support/generators.hpp"
#include "support/v_oracle.hpp"

using namespace jacobi;
using namespace jacobi::fourier;

namespace {

JacobiExpansion random_expansion(const Rational& qbound, std::int64_t index)
{
    JacobiExpansion f(2, index, 1, qbound);
    std::int64_t Q = to_int64(floor(qbound));
    for (std::int64_t n = 0; n < Q; ++n)
        for (std::int64_t r = -2 * n - 1; r <= 2 * n + 1; ++r)
            if (testgen::uniform(0, 2) == 0) f.set_scaled(n, r, make_rational(testgen::uniform(-9, 9), testgen::uniform(1, 4)));
    return f;
}

}  // namespace

TEST_SUITE("fourier")
{
    TEST_CASE("theta coefficients")
    {
        auto t0 = theta(0, 3), t1 = theta(1, 3);
        CHECK(t0.coeff(0, 0) == 1);
        CHECK(t0.coeff(1, 2) == 1);
        CHECK(t0.coeff(1, -2) == 1);
        CHECK(t0.coeff(1, 0) == 0);
        CHECK(t1.coeff(make_rational(1, 4), 1) == 1);
        CHECK(t1.coeff(make_rational(1, 4), -1) == 1);
        for (const auto& [key, c] : t1.coeffs()) CHECK(Rational(key.first) / t1.scale() >= make_rational(1, 4));
        CHECK_THROWS_AS(t0.coeff(3, 0), DomainError);
    }

    TEST_CASE("weight 3/2 and weight 2 series")
    {
        CHECK(h_mu_series(0, 4).coeff(0) == make_rational(-1, 12));
        CHECK(h_mu_series(1, 4).coeff(make_rational(3, 4)) == make_rational(1, 3));
        auto e2 = e2_series(10);
        CHECK(e2.coeff(0) == 1);
        CHECK(e2.coeff(1) == -24);
        CHECK(e2.coeff(2) == -72);
        CHECK(e2.coeff(3) == -96);
        auto h32 = h32_series(40);
        auto h0 = h_mu_series(0, 10), h1 = h_mu_series(1, 10);
        for (std::int64_t N = 0; N < 40; ++N) {
            Rational expect = N % 4 == 0 ? h0.coeff(make_rational(N, 4)) : h1.coeff(make_rational(N, 4));
            CHECK(h32.coeff(N) == expect);
        }
    }

    TEST_CASE("E21 coefficients")
    {
        auto e = e21_expansion(12);
        CHECK(e.coeff(0, 0) == 1);
        CHECK(e.coeff(1, 1) == -4);
        CHECK(e.coeff(1, 0) == -6);
        arith::ClassNumberTable H(48);
        for (std::int64_t n = 0; n < 12; ++n)
            for (std::int64_t r = -8; r <= 8; ++r) {
                if (r * r > 4 * n) CHECK(e.coeff(n, r) == 0);
                CHECK(e.coeff(n, r) == H(4 * n - r * r) * -12);
            }
    }

    TEST_CASE("theta decomposition")
    {
        CHECK(theta_decomposition_check(20));
        auto h0 = h_mu_series(0, 20), h1 = h_mu_series(1, 20);
        CHECK(agree_below(theta_decomposition(h0, h1), e21_expansion(20), 20));
        h1.set_scaled(11 * h1.scale() / 4, Rational(7));
        CHECK_FALSE(agree_below(theta_decomposition(h0, h1), e21_expansion(20), 20));
        CHECK(theta_decomposition(h0, h1).coeff(0, 0) == 1);
    }

    TEST_CASE("truncation bookkeeping")
    {
        auto a = e21_expansion(10), b = e21_expansion(6);
        CHECK((a + b).qbound() == 6);
        auto m = multiply(h_mu_series(0, 5), theta(0, 8), make_rational(2));
        CHECK(m.qbound() == 5);
        for (const auto& [key, c] : a.coeffs()) CHECK(Rational(key.first) / a.scale() < a.qbound());
        CHECK_FALSE(agree_below(a, b, 8));
    }

    TEST_CASE("coefficients depend only on the discriminant")
    {
        auto e = e21_expansion(15);
        std::map<std::int64_t, Rational> seen;
        for (const auto& [key, c] : e.coeffs()) {
            std::int64_t D = 4 * key.first - key.second * key.second;
            auto [it, fresh] = seen.emplace(D, c);
            if (!fresh) CHECK(it->second == c);
        }
    }

    TEST_CASE("apply_V closed form")
    {
        auto e = e21_expansion(20);
        CHECK(apply_V(e, 1) == e);
        auto v2 = apply_V(e, 2);
        CHECK(v2.coeff(1, 0) == -12);
        CHECK(v2.index() == 2);
        CHECK(v2.qbound() == 10);
        for (std::int64_t ell : {2, 3, 4, 5}) CHECK(apply_V(e, ell).coeff(0, 0) == Rational(arith::sigma(ell, 1)));
        CHECK_THROWS_AS(apply_V(e, 0), DomainError);
    }

    TEST_CASE("apply_V against cyclotomic substitution")
    {
        for (std::int64_t ell : {2, 3, 4, 6}) {
            CAPTURE(ell);
            auto e = e21_expansion(10 * ell);
            CHECK(apply_V(e, ell) == testgen::apply_V_oracle(e, ell));
            for (int i = 0; i < 5; ++i) {
                auto f = random_expansion(12, 1);
                CHECK(apply_V(f, ell) == testgen::apply_V_oracle(f, ell));
            }
        }
    }

    TEST_CASE("apply_V commutes with integral translations")
    {
        // Shifting tau by 1 multiplies c(n, r) by e(n) = 1 and z -> z + 1 by
        // e(r) = 1 on both sides; a half shift is the nontrivial check.
        auto f = random_expansion(10, 1);
        auto twist = [](const JacobiExpansion& g) {
            JacobiExpansion t(g.weight(), g.index(), g.scale(), g.qbound());
            for (const auto& [key, c] : g.coeffs()) t.set_scaled(key.first, key.second, key.second % 2 ? -c : c);
            return t;
        };
        CHECK(apply_V(twist(f), 3) == twist(apply_V(f, 3)));
    }

    TEST_CASE("Jacobi Hecke eigenvalue")
    {
        for (std::int64_t p : {2, 3, 5}) {
            CAPTURE(p);
            Rational qin = required_input_qbound_T(p, 15);
            arith::ClassNumberTable H(to_int64(floor(qin * 4)) + 8);
            auto e = e21_expansion(qin, &H);
            auto t = apply_T_jacobi(e, p, 15);
            CHECK(t.qbound() == 15);
            CHECK(agree_below(t, e.truncated(15) * Rational(p + 1), 15));
        }
        auto t2 = apply_T_jacobi(e21_expansion(required_input_qbound_T(2, 4)), 2, 4);
        CHECK(t2.coeff(1, 1) == -12);
        JacobiExpansion zero(2, 1, 1, 40);
        CHECK(apply_T_jacobi(zero, 2).coeffs().empty());
        CHECK(apply_T_jacobi(e21_expansion(8), 1) == e21_expansion(8));
    }

    TEST_CASE("half-integral Hecke operator")
    {
        auto h = h32_series(200 * 9 + 1);
        for (std::int64_t p : {2, 3}) {
            auto t = apply_T_half(h, p);
            CHECK(agree_below(t, h.truncated(t.qbound()) * Rational(p + 1), t.qbound()));
        }
        auto t2 = apply_T_half(h, 2);
        CHECK(t2.coeff(3) == 1);
        CHECK(t2.coeff(0) == make_rational(-1, 4));
        CHECK_THROWS_AS(apply_T_half(h, 4), DomainError);
    }

    TEST_CASE("weight 2 Hecke operator")
    {
        for (std::int64_t p : {2, 3}) {
            auto e2 = e2_series(20 * p);
            auto t = apply_T_weight2(e2, p);
            CHECK(t.coeff(0) == p + 1);
            CHECK(agree_below(t, e2.truncated(20) * Rational(p + 1), 20));
            auto lit = apply_T_weight2(e2, p, Weight2Exponent::Literal);
            CHECK(lit.coeff(0) == Rational(p) + Rational(1) / Rational(p * p));
            CHECK_FALSE(agree_below(lit, e2.truncated(20) * Rational(p + 1), 20));
        }
        QSeries zero(1, 10, 2);
        CHECK(apply_T_weight2(zero, 2).coeffs().empty());
    }

    TEST_CASE("lifts")
    {
        for (std::int64_t D : {-3, -4}) {
            auto h = h32_series(19 * 19 * -D + 1);
            auto phi = phi_lift(h, D);
            CHECK(agree_below(phi, e2_series(20), 20));
        }
        auto phi4 = phi_lift(h32_series(5), -4);
        CHECK(phi4.coeff(1) == -24);
        CHECK(psi_lift(h32_series(60)) == e21_expansion(15));
        QSeries delta(1, 20, make_rational(3, 2));
        delta.set_scaled(0, 1);
        auto pd = psi_lift(delta);
        CHECK(pd.coeff(0, 0) == -12);
        CHECK(pd.coeff(1, 2) == -12);
        CHECK(pd.coeff(1, 0) == 0);
        CHECK(pd.coeff(4, -4) == -12);
        QSeries bad(1, 10, make_rational(3, 2));
        bad.set_scaled(1, 1);
        CHECK_THROWS_AS(psi_lift(bad), DomainError);
        CHECK_THROWS_AS(phi_lift(h32_series(10), -12), DomainError);
    }

    TEST_CASE("commutative diagram")
    {
        for (std::int64_t p : {2, 3})
            for (std::int64_t D : {-3, -4}) {
                auto r = diagram_check(p, D, 12);
                CAPTURE(p);
                CAPTURE(D);
                CHECK(r.phi_square);
                CHECK(r.psi_square);
            }
        CHECK_FALSE(diagram_check(2, -4, 12, PhiConstant::Linear, Weight2Exponent::Literal).holds());
    }

    TEST_CASE("diagram controls")
    {
        auto h = h32_series(2000);
        // psi is linear: doubling the input doubles both sides.
        auto h2 = h * Rational(2);
        auto left = psi_lift(apply_T_half(h2.truncated(4 * 5 * 4), 2));
        auto right = apply_T_jacobi(psi_lift(h2.truncated(required_input_qbound_T(2, 5) * 4)), 2, 5);
        CHECK(agree_below(left, right, 5));
        // A perturbed half-integral operator breaks the square.
        auto bad = apply_T_half(h.truncated(4 * 5 * 4), 2);
        bad.set_scaled(7, bad.coeff_scaled(7) + 1);
        auto right1 = apply_T_jacobi(psi_lift(h.truncated(required_input_qbound_T(2, 5) * 4)), 2, 5);
        CHECK_FALSE(agree_below(psi_lift(bad), right1, 5));
    }

    TEST_CASE("series helpers")
    {
        auto e = e21_expansion(6);
        CHECK(e.with_scale(4).normalized() == e);
        CHECK(e.truncated(3).qbound() == 3);
        CHECK((e - e).coeffs().empty());
        CHECK_THROWS_AS(QSeries(0, 5), DomainError);
    }
}
