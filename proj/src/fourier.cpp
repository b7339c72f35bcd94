#include "jacobi_periods/fourier.hpp"

#include <algorithm>
#include <numeric>

#include "jacobi_periods/errors.hpp"

namespace jacobi::fourier {

using arith::isqrt;

namespace {

// Largest integer strictly below q.
std::int64_t last_below(const Rational& q)
{
    Integer f = floor(q);
    if (is_integer(q)) f -= 1;
    return to_int64(f);
}

// Smallest integer k with k / scale >= q, i.e. the first excluded key.
std::int64_t key_bound(const Rational& q, std::int64_t scale) { return last_below(q * scale) + 1; }

Rational rpow(std::int64_t base, std::int64_t e)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    Rational r(Integer(1), p);
    r.canonicalize();
    return r;
}

std::int64_t integer_weight(const Rational& w, const char* op)
{
    if (!is_integer(w)) throw DomainError(std::string(op) + " needs an integral weight");
    return to_int64(w);
}

const arith::ClassNumberTable& ensure_table(const arith::ClassNumberTable* table, std::int64_t max,
                                            std::optional<arith::ClassNumberTable>& local)
{
    if (table != nullptr && table->max() >= max) return *table;
    local.emplace(max);
    return *local;
}

// Sum over b mod d with gcd(a, b, d) a square of e(N b / d), which is an
// integer: inclusion-exclusion over square divisors e^2 of gcd(a, d) with
// Ramanujan-type sums sum_{t | b} e(N b / d) = (d/t) [d/t | N].
Integer restricted_b_sum(std::int64_t a, std::int64_t d, std::int64_t N)
{
    std::int64_t g = arith::gcd(a, d);
    Integer total = 0;
    for (std::int64_t e = 1; e * e <= g; ++e) {
        std::int64_t e2 = e * e;
        if (g % e2 != 0) continue;
        for (std::int64_t t : arith::divisors(g)) {
            if (t % e2 != 0) continue;
            int mu = arith::mobius(t / e2);
            if (mu == 0) continue;
            std::int64_t dt = d / t;
            if (N % dt == 0) total += mu * dt;
        }
    }
    return total;
}

struct TTerm {
    std::int64_t N, r;
    Rational weight;
};

// Contributions to output (Np, rp) of the index-1 operator at n:
// for ad = n^2 and lambda mod n, the input (N, r) with
// r = (rp - 2 lambda) d / n and N = (Np - r n lambda / d - lambda^2) d / a.
std::vector<TTerm> t_jacobi_terms(std::int64_t n, std::int64_t k, std::int64_t Np, std::int64_t rp)
{
    std::vector<TTerm> out;
    const std::int64_t n2 = n * n;
    for (std::int64_t a : arith::divisors(n2)) {
        std::int64_t d = n2 / a;
        for (std::int64_t lam = 0; lam < n; ++lam) {
            std::int64_t num = (rp - 2 * lam) * d;
            if (num % n != 0) continue;
            std::int64_t r = num / n;
            if ((r * n) % d != 0) continue;
            // N a / d = Np - r n lam / d - lam^2
            std::int64_t rest_num = Np * d - r * n * lam - lam * lam * d;  // times 1/d
            if (rest_num % a != 0) continue;
            std::int64_t N = rest_num / a;
            Integer bs = restricted_b_sum(a, d, N);
            if (bs == 0) continue;
            Rational w = rpow(n, k - 4) * rpow(n, k) / rpow(d, k) * Rational(bs) * n;
            out.push_back({N, r, w});
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(std::int64_t scale, Rational qbound, Rational weight)
    : scale_(scale), qbound_(std::move(qbound)), weight_(std::move(weight))
{
    if (scale_ < 1) throw DomainError("series scale must be positive");
}

Rational QSeries::coeff(const Rational& n) const
{
    if (n >= qbound_) throw DomainError("coefficient at " + n.get_str() + " is beyond qbound " + qbound_.get_str());
    Rational ns = n * scale_;
    if (!is_integer(ns)) return 0;
    return coeff_scaled(to_int64(ns));
}

Rational QSeries::coeff_scaled(std::int64_t n_scaled) const
{
    auto it = coeffs_.find(n_scaled);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void QSeries::set_scaled(std::int64_t n_scaled, const Rational& value)
{
    if (make_rational(n_scaled, scale_) >= qbound_) return;
    if (value == 0)
        coeffs_.erase(n_scaled);
    else
        coeffs_[n_scaled] = value;
}

QSeries QSeries::truncated(const Rational& qbound) const
{
    QSeries out(scale_, std::min(qbound, qbound_), weight_);
    for (const auto& [k, v] : coeffs_) out.set_scaled(k, v);
    return out;
}

QSeries QSeries::with_scale(std::int64_t scale) const
{
    QSeries out(scale, qbound_, weight_);
    for (const auto& [k, v] : coeffs_) {
        if ((k * scale) % scale_ != 0) throw DomainError("exponent not representable at the requested scale");
        out.set_scaled(k * scale / scale_, v);
    }
    return out;
}

QSeries QSeries::normalized() const
{
    std::int64_t g = scale_;
    for (const auto& [k, v] : coeffs_) g = std::gcd(g, k);
    return with_scale(scale_ / g);
}

QSeries QSeries::operator+(const QSeries& o) const
{
    std::int64_t s = std::lcm(scale_, o.scale_);
    QSeries a = with_scale(s), b = o.with_scale(s);
    QSeries out(s, std::min(qbound_, o.qbound_), weight_);
    for (const auto& [k, v] : a.coeffs_) out.set_scaled(k, v + b.coeff_scaled(k));
    for (const auto& [k, v] : b.coeffs_)
        if (!a.coeffs_.count(k)) out.set_scaled(k, v);
    return out;
}

QSeries QSeries::operator*(const Rational& s) const
{
    QSeries out(scale_, qbound_, weight_);
    for (const auto& [k, v] : coeffs_) out.set_scaled(k, v * s);
    return out;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o * Rational(-1); }

// ------------------------------------------------------- JacobiExpansion

JacobiExpansion::JacobiExpansion(Rational weight, Rational index, std::int64_t scale, Rational qbound)
    : weight_(std::move(weight)), index_(std::move(index)), scale_(scale), qbound_(std::move(qbound))
{
    if (scale_ < 1) throw DomainError("expansion scale must be positive");
    if (index_ <= 0) throw DomainError("index must be positive");
}

Rational JacobiExpansion::coeff(const Rational& n, std::int64_t r) const
{
    if (n >= qbound_) throw DomainError("coefficient at " + n.get_str() + " is beyond qbound " + qbound_.get_str());
    Rational ns = n * scale_;
    if (!is_integer(ns)) return 0;
    return coeff_scaled(to_int64(ns), r);
}

Rational JacobiExpansion::coeff_scaled(std::int64_t n_scaled, std::int64_t r) const
{
    auto it = coeffs_.find({n_scaled, r});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void JacobiExpansion::set_scaled(std::int64_t n_scaled, std::int64_t r, const Rational& value)
{
    if (make_rational(n_scaled, scale_) >= qbound_) return;
    if (value == 0)
        coeffs_.erase({n_scaled, r});
    else
        coeffs_[{n_scaled, r}] = value;
}

void JacobiExpansion::add_scaled(std::int64_t n_scaled, std::int64_t r, const Rational& value)
{
    set_scaled(n_scaled, r, coeff_scaled(n_scaled, r) + value);
}

JacobiExpansion JacobiExpansion::truncated(const Rational& qbound) const
{
    JacobiExpansion out(weight_, index_, scale_, std::min(qbound, qbound_));
    for (const auto& [k, v] : coeffs_) out.set_scaled(k.first, k.second, v);
    return out;
}

JacobiExpansion JacobiExpansion::with_scale(std::int64_t scale) const
{
    JacobiExpansion out(weight_, index_, scale, qbound_);
    for (const auto& [k, v] : coeffs_) {
        if ((k.first * scale) % scale_ != 0) throw DomainError("exponent not representable at the requested scale");
        out.set_scaled(k.first * scale / scale_, k.second, v);
    }
    return out;
}

JacobiExpansion JacobiExpansion::normalized() const
{
    std::int64_t g = scale_;
    for (const auto& [k, v] : coeffs_) g = std::gcd(g, k.first);
    return with_scale(scale_ / g);
}

JacobiExpansion JacobiExpansion::operator+(const JacobiExpansion& o) const
{
    std::int64_t s = std::lcm(scale_, o.scale_);
    JacobiExpansion a = with_scale(s), b = o.with_scale(s);
    JacobiExpansion out(weight_, index_, s, std::min(qbound_, o.qbound_));
    for (const auto& [k, v] : a.coeffs_) out.set_scaled(k.first, k.second, v + b.coeff_scaled(k.first, k.second));
    for (const auto& [k, v] : b.coeffs_)
        if (!a.coeffs_.count(k)) out.set_scaled(k.first, k.second, v);
    return out;
}

JacobiExpansion JacobiExpansion::operator*(const Rational& s) const
{
    JacobiExpansion out(weight_, index_, scale_, qbound_);
    for (const auto& [k, v] : coeffs_) out.set_scaled(k.first, k.second, v * s);
    return out;
}

JacobiExpansion JacobiExpansion::operator-(const JacobiExpansion& o) const { return *this + o * Rational(-1); }

bool agree_below(const QSeries& f, const QSeries& g, const Rational& qbound)
{
    if (f.qbound() < qbound || g.qbound() < qbound) return false;
    QSeries d = (f - g).truncated(qbound);
    return d.coeffs().empty();
}

bool agree_below(const JacobiExpansion& f, const JacobiExpansion& g, const Rational& qbound)
{
    if (f.qbound() < qbound || g.qbound() < qbound) return false;
    JacobiExpansion d = (f - g).truncated(qbound);
    return d.coeffs().empty();
}

JacobiExpansion multiply(const QSeries& h, const JacobiExpansion& f, const Rational& weight)
{
    std::int64_t s = std::lcm(h.scale(), f.scale());
    QSeries hs = h.with_scale(s);
    JacobiExpansion fs = f.with_scale(s);
    JacobiExpansion out(weight, f.index(), s, std::min(h.qbound(), f.qbound()));
    std::int64_t limit = key_bound(out.qbound(), s);
    for (const auto& [kh, vh] : hs.coeffs())
        for (const auto& [kf, vf] : fs.coeffs())
            if (kh + kf.first < limit) out.add_scaled(kh + kf.first, kf.second, vh * vf);
    return out;
}

// ---------------------------------------------------------------- series

JacobiExpansion theta(int mu, const Rational& qbound)
{
    if (mu != 0 && mu != 1) throw DomainError("theta needs mu in {0, 1}");
    if (qbound <= 0) throw DomainError("qbound must be positive");
    JacobiExpansion out(make_rational(1, 2), 1, 4, qbound);
    std::int64_t limit = key_bound(qbound, 4);
    std::int64_t R = isqrt(limit);
    for (std::int64_t r = -R; r <= R; ++r)
        if (r * r < limit && arith::mod(r, 2) == mu) out.set_scaled(r * r, r, 1);
    return out;
}

QSeries h_mu_series(int mu, const Rational& qbound, const arith::ClassNumberTable* table)
{
    if (mu != 0 && mu != 1) throw DomainError("h_mu needs mu in {0, 1}");
    if (qbound <= 0) throw DomainError("qbound must be positive");
    std::int64_t limit = key_bound(qbound, 4);
    std::optional<arith::ClassNumberTable> local;
    const auto& H = ensure_table(table, limit, local);
    QSeries out(4, qbound, make_rational(3, 2));
    for (std::int64_t N = 0; N < limit; ++N)
        if (arith::mod(N + mu * mu, 4) == 0) out.set_scaled(N, H(N));
    return out;
}

QSeries h32_series(const Rational& qbound, const arith::ClassNumberTable* table)
{
    if (qbound <= 0) throw DomainError("qbound must be positive");
    std::int64_t limit = key_bound(qbound, 1);
    std::optional<arith::ClassNumberTable> local;
    const auto& H = ensure_table(table, limit, local);
    QSeries out(1, qbound, make_rational(3, 2));
    for (std::int64_t N = 0; N < limit; ++N) out.set_scaled(N, H(N));
    return out;
}

QSeries e2_series(const Rational& qbound)
{
    if (qbound <= 0) throw DomainError("qbound must be positive");
    QSeries out(1, qbound, 2);
    out.set_scaled(0, 1);
    std::int64_t limit = key_bound(qbound, 1);
    for (std::int64_t n = 1; n < limit; ++n) out.set_scaled(n, Rational(arith::sigma(n, 1) * -24));
    return out;
}

JacobiExpansion e21_expansion(const Rational& qbound, const arith::ClassNumberTable* table)
{
    if (qbound <= 0) throw DomainError("qbound must be positive");
    std::int64_t limit = key_bound(qbound, 1);
    std::optional<arith::ClassNumberTable> local;
    const auto& H = ensure_table(table, 4 * limit, local);
    JacobiExpansion out(2, 1, 1, qbound);
    for (std::int64_t n = 0; n < limit; ++n) {
        std::int64_t R = isqrt(4 * n);
        for (std::int64_t r = -R; r <= R; ++r) out.set_scaled(n, r, H(4 * n - r * r) * -12);
    }
    return out;
}

JacobiExpansion theta_decomposition(const QSeries& h0, const QSeries& h1)
{
    Rational q = std::min(h0.qbound(), h1.qbound());
    JacobiExpansion sum = multiply(h0, theta(0, q), 2) + multiply(h1, theta(1, q), 2);
    return (sum * Rational(-12)).normalized();
}

bool theta_decomposition_check(const Rational& qbound)
{
    arith::ClassNumberTable H(4 * key_bound(qbound, 1));
    JacobiExpansion lhs = e21_expansion(qbound, &H);
    JacobiExpansion rhs = theta_decomposition(h_mu_series(0, qbound, &H), h_mu_series(1, qbound, &H));
    return agree_below(lhs, rhs, qbound);
}

// ------------------------------------------------------ Hecke operators

JacobiExpansion apply_V(const JacobiExpansion& f0, std::int64_t ell)
{
    if (ell < 1) throw DomainError("apply_V needs ell >= 1");
    if (!is_integer(f0.index())) throw DomainError("apply_V needs an integral index");
    JacobiExpansion f = f0.normalized();
    if (f.scale() != 1) throw DomainError("apply_V needs integral exponents");
    std::int64_t k = integer_weight(f.weight(), "apply_V");
    JacobiExpansion out(f.weight(), f.index() * ell, 1, f.qbound() / ell);
    // c'(n, r) = sum_{a | (n, r, ell)} a^{k-1} c(n ell / a^2, r / a)
    for (const auto& [key, v] : f.coeffs()) {
        auto [N, R] = key;
        for (std::int64_t a : arith::divisors(ell)) {
            std::int64_t num = N * a * a;
            if (num % ell != 0) continue;
            std::int64_t n = num / ell;
            if (n % a != 0) continue;
            out.add_scaled(n, R * a, rpow(a, k - 1) * v);
        }
    }
    return out;
}

Rational required_input_qbound_T(std::int64_t n, const Rational& qbound)
{
    if (n < 1) throw DomainError("Hecke operator needs n >= 1");
    std::int64_t need = 0;
    for (std::int64_t Np = 0; Np < key_bound(qbound, 1); ++Np) {
        std::int64_t R = isqrt(4 * Np);
        for (std::int64_t rp = -R; rp <= R; ++rp)
            for (const auto& t : t_jacobi_terms(n, 2, Np, rp)) need = std::max(need, t.N + 1);
    }
    return need;
}

JacobiExpansion apply_T_jacobi(const JacobiExpansion& f0, std::int64_t n, std::optional<Rational> max_qbound)
{
    if (n < 1) throw DomainError("Hecke operator needs n >= 1");
    if (f0.index() != 1) throw DomainError("apply_T_jacobi supports index 1 only");
    JacobiExpansion f = f0.normalized();
    if (f.scale() != 1) throw DomainError("apply_T_jacobi needs integral exponents");
    std::int64_t k = integer_weight(f.weight(), "apply_T_jacobi");
    for (const auto& [key, v] : f.coeffs())
        if (4 * key.first < key.second * key.second)
            throw DomainError("apply_T_jacobi needs coefficients supported on 4n >= r^2");

    std::vector<std::pair<JacobiExpansion::Key, Rational>> values;
    std::int64_t Np = 0;
    for (;; ++Np) {
        if (max_qbound && Rational(Np) >= *max_qbound) break;
        std::int64_t R = isqrt(4 * Np);
        std::vector<std::pair<JacobiExpansion::Key, Rational>> row;
        bool complete = true;
        for (std::int64_t rp = -R; rp <= R && complete; ++rp) {
            Rational s = 0;
            for (const auto& t : t_jacobi_terms(n, k, Np, rp)) {
                if (Rational(t.N) >= f.qbound()) {
                    complete = false;
                    break;
                }
                s += t.weight * f.coeff_scaled(t.N, t.r);
            }
            if (s != 0) row.push_back({{Np, rp}, s});
        }
        if (!complete) break;
        values.insert(values.end(), row.begin(), row.end());
    }
    JacobiExpansion out(f.weight(), 1, 1, Np);
    for (const auto& [key, v] : values) out.set_scaled(key.first, key.second, v);
    return out;
}

QSeries apply_T_half(const QSeries& h0, std::int64_t p)
{
    if (!arith::is_prime(p)) throw DomainError("apply_T_half needs a prime");
    QSeries h = h0.normalized();
    if (h.scale() != 1) throw DomainError("apply_T_half needs integral exponents");
    QSeries out(1, h.qbound() / (p * p), h.weight());
    std::int64_t limit = key_bound(out.qbound(), 1);
    for (std::int64_t N = 0; N < limit; ++N) {
        if (N % 4 == 1 || N % 4 == 2) continue;
        Rational v = h.coeff_scaled(N * p * p) + h.coeff_scaled(N) * arith::kronecker(-N, p);
        if (N % (p * p) == 0) v += h.coeff_scaled(N / (p * p)) * p;
        out.set_scaled(N, v);
    }
    return out;
}

QSeries apply_T_weight2(const QSeries& e0, std::int64_t p, Weight2Exponent exponent)
{
    if (!arith::is_prime(p)) throw DomainError("apply_T_weight2 needs a prime");
    QSeries e = e0.normalized();
    if (e.scale() != 1) throw DomainError("apply_T_weight2 needs integral exponents");
    // p sum_{ad = p, b mod d} d^{-j} e((a tau + b)/d):
    // a = p: p c(m/p); a = 1: p · p^{-j} · p · c(pm).
    std::int64_t j = exponent == Weight2Exponent::Standard ? 2 : 4;
    Rational up = rpow(p, 2 - j);
    QSeries out(1, e.qbound() / p, e.weight());
    std::int64_t limit = key_bound(out.qbound(), 1);
    for (std::int64_t m = 0; m < limit; ++m) {
        Rational v = e.coeff_scaled(p * m) * up;
        if (m % p == 0) v += e.coeff_scaled(m / p) * p;
        out.set_scaled(m, v);
    }
    return out;
}

QSeries phi_lift(const QSeries& c0, std::int64_t D, PhiConstant constant)
{
    Rational L = arith::l_zero_chi(D);
    QSeries c = c0.normalized();
    if (c.scale() != 1) throw DomainError("phi_lift needs integral exponents");
    const std::int64_t absD = -D;
    std::int64_t q = 1;
    while (Rational(q * q * absD) < c.qbound()) ++q;
    QSeries out(1, q, 2);
    out.set_scaled(0, constant == PhiConstant::Linear ? c.coeff_scaled(0) * -12 : Rational(1));
    Rational factor = Rational(-24) / L;
    for (std::int64_t n = 1; n < q; ++n) {
        Rational s = 0;
        for (std::int64_t d : arith::divisors(n)) {
            int chi = arith::kronecker(D, d);
            if (chi != 0) s += c.coeff_scaled(n * n * absD / (d * d)) * chi;
        }
        out.set_scaled(n, factor * s);
    }
    return out;
}

JacobiExpansion psi_lift(const QSeries& c0)
{
    QSeries c = c0.normalized();
    if (c.scale() != 1) throw DomainError("psi_lift needs integral exponents");
    for (const auto& [N, v] : c.coeffs()) {
        std::int64_t r = arith::mod(N, 4);
        if (r == 1 || r == 2) throw DomainError("psi_lift needs support on N = 0, 3 mod 4");
    }
    JacobiExpansion out(2, 1, 1, c.qbound() / 4);
    std::int64_t limit = key_bound(out.qbound(), 1);
    for (std::int64_t n = 0; n < limit; ++n) {
        std::int64_t R = isqrt(4 * n);
        for (std::int64_t r = -R; r <= R; ++r) out.set_scaled(n, r, c.coeff_scaled(4 * n - r * r) * -12);
    }
    return out;
}

DiagramReport diagram_check(std::int64_t p, std::int64_t D, const Rational& qbound, PhiConstant constant,
                            Weight2Exponent exponent)
{
    DiagramReport rep{p, D, qbound};
    const std::int64_t absD = -D;
    const std::int64_t Q = key_bound(qbound, 1);
    Rational t_in = required_input_qbound_T(p, qbound);
    std::int64_t need = std::max({p * p * ((Q - 1) * (Q - 1) * absD + 1), (p * Q - 1) * (p * Q - 1) * absD + 1,
                                  4 * Q * p * p, to_int64(floor(t_in * 4)) + 4});
    arith::ClassNumberTable H(need);
    QSeries h = h32_series(need, &H);

    QSeries phi_left = phi_lift(apply_T_half(h, p), D, constant);
    QSeries phi_right = apply_T_weight2(phi_lift(h, D, constant), p, exponent);
    rep.phi_square = agree_below(phi_left, phi_right, qbound);

    JacobiExpansion psi_left = psi_lift(apply_T_half(h.truncated(4 * Q * p * p), p));
    JacobiExpansion psi_right = apply_T_jacobi(psi_lift(h.truncated(t_in * 4)), p, qbound);
    rep.psi_square = agree_below(psi_left, psi_right, qbound);
    return rep;
}

}  // namespace jacobi::fourier
