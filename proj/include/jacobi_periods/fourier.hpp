#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "jacobi_periods/arith.hpp"
#include "jacobi_periods/rational.hpp"

namespace jacobi::fourier {

// Truncated sum of c(n) q^n with n in (1/scale)Z, complete for n < qbound.
class QSeries {
public:
    QSeries(std::int64_t scale, Rational qbound, Rational weight = 0);

    std::int64_t scale() const { return scale_; }
    const Rational& qbound() const { return qbound_; }
    const Rational& weight() const { return weight_; }
    // Keyed by n·scale; zero coefficients are never stored.
    const std::map<std::int64_t, Rational>& coeffs() const { return coeffs_; }

    // Coefficient at exponent n; 0 off the support. Throws DomainError for
    // n >= qbound.
    Rational coeff(const Rational& n) const;
    Rational coeff_scaled(std::int64_t n_scaled) const;
    // Ignored at or beyond qbound.
    void set_scaled(std::int64_t n_scaled, const Rational& value);

    QSeries truncated(const Rational& qbound) const;
    QSeries with_scale(std::int64_t scale) const;
    // Smallest scale that still represents every stored exponent.
    QSeries normalized() const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const Rational& s) const;
    bool operator==(const QSeries& o) const = default;

private:
    std::int64_t scale_;
    Rational qbound_;
    Rational weight_;
    std::map<std::int64_t, Rational> coeffs_;
};

// Truncated sum of c(n, r) q^n zeta^r with n in (1/scale)Z.
class JacobiExpansion {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;  // (n·scale, r)

    JacobiExpansion(Rational weight, Rational index, std::int64_t scale, Rational qbound);

    const Rational& weight() const { return weight_; }
    const Rational& index() const { return index_; }
    std::int64_t scale() const { return scale_; }
    const Rational& qbound() const { return qbound_; }
    const std::map<Key, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(const Rational& n, std::int64_t r) const;
    Rational coeff_scaled(std::int64_t n_scaled, std::int64_t r) const;
    void set_scaled(std::int64_t n_scaled, std::int64_t r, const Rational& value);
    void add_scaled(std::int64_t n_scaled, std::int64_t r, const Rational& value);

    JacobiExpansion truncated(const Rational& qbound) const;
    JacobiExpansion with_scale(std::int64_t scale) const;
    JacobiExpansion normalized() const;

    JacobiExpansion operator+(const JacobiExpansion& o) const;
    JacobiExpansion operator-(const JacobiExpansion& o) const;
    JacobiExpansion operator*(const Rational& s) const;
    bool operator==(const JacobiExpansion& o) const = default;

private:
    Rational weight_, index_;
    std::int64_t scale_;
    Rational qbound_;
    std::map<Key, Rational> coeffs_;
};

// Coefficient-wise equality for exponents below qbound; false if either
// operand is not complete that far.
bool agree_below(const QSeries& f, const QSeries& g, const Rational& qbound);
bool agree_below(const JacobiExpansion& f, const JacobiExpansion& g, const Rational& qbound);

// Product h(tau)·f(tau, z); both have nonnegative exponents so the result is
// complete below min(qbound).
JacobiExpansion multiply(const QSeries& h, const JacobiExpansion& f, const Rational& weight);

JacobiExpansion theta(int mu, const Rational& qbound);
QSeries h_mu_series(int mu, const Rational& qbound, const arith::ClassNumberTable* table = nullptr);
QSeries h32_series(const Rational& qbound, const arith::ClassNumberTable* table = nullptr);
QSeries e2_series(const Rational& qbound);
JacobiExpansion e21_expansion(const Rational& qbound, const arith::ClassNumberTable* table = nullptr);

// -12 (h0 theta_0 + h1 theta_1), at scale 1 when possible.
JacobiExpansion theta_decomposition(const QSeries& h0, const QSeries& h1);
bool theta_decomposition_check(const Rational& qbound);

// Index-raising operator with closed-form coefficients.
JacobiExpansion apply_V(const JacobiExpansion& f, std::int64_t ell);

// Index-1 Hecke operator, evaluated exactly: the sums over b mod d and over
// the lattice part collapse to divisibility conditions. The output is
// complete below the largest bound the input supports, capped at max_qbound.
JacobiExpansion apply_T_jacobi(const JacobiExpansion& f, std::int64_t n,
                               std::optional<Rational> max_qbound = std::nullopt);
// Input qbound needed for apply_T_jacobi output to reach qbound.
Rational required_input_qbound_T(std::int64_t n, const Rational& qbound);

// c'(N) = c(N p^2) + (-N/p) c(N) + p c(N/p^2) on N = 0, 3 mod 4; the
// other coefficients are dropped (plus-space projection, which matters
// only for p = 2).
QSeries apply_T_half(const QSeries& h, std::int64_t p);

enum class Weight2Exponent {
    // p sum d^{-2} E((a tau + b)/d): c'(m) = c(pm) + p c(m/p)
    Standard,
    // d^{-4} in place of d^{-2}: c'(m) = p^{-2} c(pm) + p c(m/p)
    Literal,
};
QSeries apply_T_weight2(const QSeries& e, std::int64_t p, Weight2Exponent exponent = Weight2Exponent::Standard);

enum class PhiConstant {
    // Constant term -12 c(0), so the lift is linear.
    Linear,
    // Constant term 1 regardless of c.
    Literal,
};
QSeries phi_lift(const QSeries& c, std::int64_t D, PhiConstant constant = PhiConstant::Linear);
JacobiExpansion psi_lift(const QSeries& c);

struct DiagramReport {
    std::int64_t p, D;
    Rational qbound;
    bool phi_square = false;
    bool psi_square = false;
    bool holds() const { return phi_square && psi_square; }
};

DiagramReport diagram_check(std::int64_t p, std::int64_t D, const Rational& qbound,
                            PhiConstant constant = PhiConstant::Linear,
                            Weight2Exponent exponent = Weight2Exponent::Standard);

}  // namespace jacobi::fourier
