#include "jacobi_periods/group_ring.hpp"

#include <cstdlib>
#include <sstream>

#include "jacobi_periods/arith.hpp"
#include "jacobi_periods/errors.hpp"

namespace jacobi::ring {

using arith::gcd;
using arith::is_square;

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

IntMatrix sign_canonical(const IntMatrix& A)
{
    for (std::int64_t v : {A.c, A.d, A.a, A.b})
        if (v != 0) return v > 0 ? A : -A;
    return A;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v)
{
    if (b == 0) {
        u = a >= 0 ? 1 : -1;
        v = 0;
        return std::abs(a);
    }
    std::int64_t u1, v1;
    std::int64_t g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

// Row Hermite normal form [[h11, h12], [0, h22]] of the lattice spanned by
// the rows of a nonsingular A.
struct Hnf {
    std::int64_t h11, h12, h22;
};

Hnf row_hnf(const IntMatrix& A)
{
    std::int64_t u, v;
    std::int64_t g = ext_gcd(A.a, A.c, u, v);
    std::int64_t D = std::abs(A.det());
    std::int64_t h22 = D / g;
    std::int64_t h12 = arith::mod(u * A.b + v * A.d, h22);
    return {g, h12, h22};
}

IntMatrix shift_canonical(const IntMatrix& A)
{
    IntMatrix out = A;
    if (A.c != 0) {
        std::int64_t m = std::abs(A.c);
        std::int64_t k = (arith::mod(A.a, m) - A.a) / A.c;
        out.a += k * A.c;
        out.b += k * A.d;
    } else {
        std::int64_t m = std::abs(A.d);
        std::int64_t k = (arith::mod(A.b, m) - A.b) / A.d;
        out.b += k * A.d;
    }
    return out;
}

void check_positive(std::int64_t n, const char* what)
{
    if (n < 1) throw DomainError(std::string(what) + " needs a positive integer");
}

bool square_gcd(std::initializer_list<std::int64_t> vals)
{
    std::int64_t g = 0;
    for (auto v : vals) g = gcd(g, v);
    return is_square(g);
}

// Shared enumeration of the transfer-element matrices of determinant D.
// lattice_n > 0 adds every (X, Y) in (Z/lattice_n)^2, scaled by lattice_n.
FormalSum transfer_sum(std::int64_t D, std::int64_t lattice_n, bool square_filter)
{
    FormalSum out(D);
    auto add = [&](const IntMatrix& A) {
        if (lattice_n == 0) {
            out.add(RingBasisElement::canonicalize(A, 0, 0), 1);
            return;
        }
        for (std::int64_t X = 0; X < lattice_n; ++X)
            for (std::int64_t Y = 0; Y < lattice_n; ++Y)
                out.add(RingBasisElement::canonicalize(A, lattice_n * X, lattice_n * Y), 1);
    };
    // a > c > 0, d > -b > 0, ad - bc = D, paired with [a, -b; -c, d].
    for (std::int64_t a = 2; a <= D; ++a) {
        for (std::int64_t c = 1; c < a; ++c) {
            for (std::int64_t nb = 1; nb * c < D; ++nb) {
                std::int64_t rest = D - nb * c;
                if (rest % a != 0) continue;
                std::int64_t d = rest / a;
                if (d <= nb) continue;
                if (square_filter && !square_gcd({a, nb, c, d})) continue;
                add({a, -nb, c, d});
                add({a, nb, -c, d});
            }
        }
    }
    for (std::int64_t a : arith::divisors(D)) {
        std::int64_t d = D / a;
        for (std::int64_t b = -d; b <= d; ++b) {
            if (2 * b <= -d || 2 * b > d) continue;
            if (square_filter && !square_gcd({a, b, d})) continue;
            add({a, b, 0, d});
        }
        for (std::int64_t c = -a; c <= a; ++c) {
            if (c == 0 || 2 * c <= -a || 2 * c > a) continue;
            if (square_filter && !square_gcd({a, c, d})) continue;
            add({a, 0, c, d});
        }
    }
    return out;
}

}  // namespace

RingBasisElement RingBasisElement::canonicalize(const IntMatrix& A, std::int64_t x2, std::int64_t y2)
{
    std::int64_t D = A.det();
    if (D <= 0) throw InvalidElementError("basis element needs det A > 0");
    if (!is_square(D) && (x2 != 0 || y2 != 0))
        throw InvalidElementError("non-square determinant with a nonzero lattice part");
    return RingBasisElement(sign_canonical(A), x2, y2);
}

RingBasisElement RingBasisElement::from_level(std::int64_t n, const IntMatrix& A, const Rational& X,
                                              const Rational& Y)
{
    check_positive(n, "level");
    if (A.det() != n * n)
        throw InvalidElementError("level " + std::to_string(n) + " needs det A = " + std::to_string(n * n));
    Rational sx = X * n, sy = Y * n;
    if (!is_integer(sx) || !is_integer(sy)) throw InvalidElementError("lattice part not in (1/n)Z");
    return canonicalize(A, to_int64(sx), to_int64(sy));
}

RingBasisElement RingBasisElement::from_group(const group::JacobiGroupElement& g)
{
    if (!g.in_integral_group()) throw InvalidElementError("not an element of the integral Jacobi group");
    const auto& m = g.mat();
    return canonicalize({to_int64(m.a), to_int64(m.b), to_int64(m.c), to_int64(m.d)}, to_int64(g.lambda()),
                        to_int64(g.mu()));
}

std::optional<std::int64_t> RingBasisElement::level() const
{
    if (!is_square(det())) return std::nullopt;
    return arith::isqrt(det());
}

RingBasisElement RingBasisElement::reduced() const
{
    return RingBasisElement(A_, arith::mod(x2_, det()), arith::mod(y2_, det()));
}

group::JacobiGroupElement RingBasisElement::to_group() const
{
    group::Matrix2 m{A_.a, A_.b, A_.c, A_.d};
    if (x2_ == 0 && y2_ == 0) return group::JacobiGroupElement(m, 0, 0);
    std::int64_t s = *level();
    return group::JacobiGroupElement(m, make_rational(x2_, s), make_rational(y2_, s));
}

std::string RingBasisElement::to_string() const
{
    std::ostringstream os;
    os << "[[" << A_.a << "," << A_.b << "],[" << A_.c << "," << A_.d << "]],(" << x2_ << "," << y2_ << ")]";
    return os.str();
}

RingBasisElement multiply(const RingBasisElement& e1, const RingBasisElement& e2)
{
    const IntMatrix& B = e2.A();
    std::int64_t s1 = 0;
    if (e2.x2() != 0 || e2.y2() != 0) {
        auto l = e1.level();
        if (!l) throw InvalidElementError("product with an irrational lattice part");
        s1 = *l;
    }
    std::int64_t x = e1.x2() * B.a + e1.y2() * B.c + s1 * e2.x2();
    std::int64_t y = e1.x2() * B.b + e1.y2() * B.d + s1 * e2.y2();
    return RingBasisElement::canonicalize(e1.A() * B, x, y);
}

FormalSum::FormalSum(const RingBasisElement& e, std::int64_t coef) : det_(e.det()) { add(e, coef); }

std::optional<std::int64_t> FormalSum::level() const
{
    if (!is_square(det_)) return std::nullopt;
    return arith::isqrt(det_);
}

std::int64_t FormalSum::coefficient(const RingBasisElement& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void FormalSum::add(const RingBasisElement& e, std::int64_t coef)
{
    if (e.det() != det_) throw InvalidElementError("formal sum terms must share one determinant");
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(e, coef);
    if (inserted) return;
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
}

FormalSum& FormalSum::operator+=(const FormalSum& o)
{
    if (o.empty()) return *this;
    if (empty()) det_ = o.det_;
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o)
{
    if (o.empty()) return *this;
    if (empty()) det_ = o.det_;
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

FormalSum FormalSum::operator+(const FormalSum& o) const
{
    FormalSum r = *this;
    r += o;
    return r;
}

FormalSum FormalSum::operator-(const FormalSum& o) const
{
    FormalSum r = *this;
    r -= o;
    return r;
}

FormalSum FormalSum::operator*(std::int64_t s) const
{
    FormalSum r(det_);
    for (const auto& [e, c] : terms_) r.add(e, c * s);
    return r;
}

FormalSum ring_multiply(const FormalSum& f, const FormalSum& g, std::size_t max_terms)
{
    if (f.size() * g.size() > max_terms)
        throw ResourceLimitError("ring product would expand to " + std::to_string(f.size() * g.size()) + " terms");
    FormalSum out(f.det() * g.det());
    for (const auto& [e1, c1] : f.terms())
        for (const auto& [e2, c2] : g.terms()) out.add(multiply(e1, e2), c1 * c2);
    return out;
}

FormalSum generator_term(const std::string& name)
{
    return FormalSum(RingBasisElement::from_group(group::generator(name)));
}

FormalSum generator_minus_identity(const std::string& name)
{
    return generator_term(name) - FormalSum(RingBasisElement::identity());
}

FormalSum hecke_hat(std::int64_t n)
{
    check_positive(n, "hecke_hat");
    std::int64_t D = n * n;
    FormalSum out(D);
    for (std::int64_t a : arith::divisors(D)) {
        std::int64_t d = D / a;
        for (std::int64_t b = 0; b < d; ++b) {
            if (!square_gcd({a, b, d})) continue;
            for (std::int64_t X = 0; X < n; ++X)
                for (std::int64_t Y = 0; Y < n; ++Y)
                    out.add(RingBasisElement::canonicalize({a, b, 0, d}, n * X, n * Y), 1);
        }
    }
    return out;
}

FormalSum tilde_T(std::int64_t n)
{
    check_positive(n, "tilde_T");
    return transfer_sum(n * n, n, true);
}

FormalSum tilde_V(std::int64_t n)
{
    check_positive(n, "tilde_V");
    return transfer_sum(n, 0, false);
}

OrbitKey orbit_canonical(const RingBasisElement& e)
{
    const IntMatrix& A = e.A();
    Hnf h = row_hnf(A);
    // Lexicographically smallest point of (x, y) + rowspace(A).
    std::int64_t x = e.x2(), y = e.y2();
    std::int64_t k = floor_div(x, h.h11);
    x -= k * h.h11;
    y = arith::mod(y - k * h.h12, h.h22);

    IntMatrix best = shift_canonical(A);
    IntMatrix other = shift_canonical(-A);
    if (other < best) best = other;
    return {e.det(), best, x, y};
}

OrbitVector reduce_mod_ideal(const FormalSum& f)
{
    OrbitVector out;
    for (const auto& [e, c] : f.terms()) {
        auto key = orbit_canonical(e);
        auto [it, inserted] = out.emplace(key, c);
        if (inserted) continue;
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
    return out;
}

namespace {

// target += coef * (sum_{j} g^j y) so that (g - E) target picks up
// coef * (g^k y - y); k may be negative.
void add_telescope(FormalSum& target, const RingBasisElement& g, const RingBasisElement& g_inv, std::int64_t k,
                   const RingBasisElement& y, std::int64_t coef)
{
    if (k >= 0) {
        RingBasisElement cur = y;
        for (std::int64_t j = 0; j < k; ++j) {
            target.add(cur, coef);
            cur = multiply(g, cur);
        }
    } else {
        RingBasisElement cur = y;
        for (std::int64_t j = 0; j < -k; ++j) {
            cur = multiply(g_inv, cur);
            target.add(cur, -coef);
        }
    }
}

RingBasisElement power_apply(const RingBasisElement& g, const RingBasisElement& g_inv, std::int64_t k,
                             RingBasisElement y)
{
    for (std::int64_t j = 0; j < (k < 0 ? -k : k); ++j) y = multiply(k < 0 ? g_inv : g, y);
    return y;
}

}  // namespace

IdealDecomposition decompose_in_ideal(const FormalSum& f)
{
    const std::int64_t D = f.det();
    IdealDecomposition dec{FormalSum(D), FormalSum(D), FormalSum(D)};
    const auto S = RingBasisElement::from_group(group::generator("S"));
    const auto Si = RingBasisElement::from_group(group::inverse(group::generator("S")));
    const auto I1 = RingBasisElement::from_group(group::generator("I1"));
    const auto I1i = RingBasisElement::from_group(group::inverse(group::generator("I1")));
    const auto I2 = RingBasisElement::from_group(group::generator("I2"));
    const auto I2i = RingBasisElement::from_group(group::inverse(group::generator("I2")));

    std::map<OrbitKey, RingBasisElement> base;
    std::map<OrbitKey, std::int64_t> totals;
    for (const auto& [e, c] : f.terms()) {
        auto key = orbit_canonical(e);
        base.emplace(key, e);
        totals[key] += c;
    }
    for (const auto& [key, total] : totals)
        if (total != 0) throw DomainError("formal sum is not in the ideal");

    for (const auto& [e, c] : f.terms()) {
        const RingBasisElement& e0 = base.at(orbit_canonical(e));
        if (e == e0) continue;
        // e = S^k [I, (w1, w2)] e0, possibly up to the sign of the matrix.
        const IntMatrix& A0 = e0.A();
        IntMatrix adj{A0.d, -A0.b, -A0.c, A0.a};
        IntMatrix M = e.A() * adj;
        if (M.a < 0 || (M.a == 0 && M.d < 0)) M = -M;
        if (M.a != D || M.c != 0 || M.d != D || M.b % D != 0) throw DomainError("orbit witness failed (matrix)");
        std::int64_t k = M.b / D;
        std::int64_t dx = e.x2() - e0.x2(), dy = e.y2() - e0.y2();
        std::int64_t w1n = dx * adj.a + dy * adj.c, w2n = dx * adj.b + dy * adj.d;
        if (w1n % D != 0 || w2n % D != 0) throw DomainError("orbit witness failed (lattice)");
        std::int64_t w1 = w1n / D, w2 = w2n / D;
        // [I,(w1,w2)] = I2^w1 I1^w2; telescope e - e0 through the word.
        RingBasisElement t1 = power_apply(I1, I1i, w2, e0);
        RingBasisElement t2 = power_apply(I2, I2i, w1, t1);
        add_telescope(dec.x, S, Si, k, t2, c);
        add_telescope(dec.z, I2, I2i, w1, t1, c);
        add_telescope(dec.y, I1, I1i, w2, e0, c);
    }
    return dec;
}

FormalSum expand(const IdealDecomposition& dec)
{
    FormalSum out = ring_multiply(generator_minus_identity("S"), dec.x);
    out += ring_multiply(generator_minus_identity("I1"), dec.y);
    out += ring_multiply(generator_minus_identity("I2"), dec.z);
    return out;
}

FormalSum scale_embed(const FormalSum& f, std::int64_t s)
{
    check_positive(s, "scale_embed");
    FormalSum out(f.det() * s * s);
    for (const auto& [e, c] : f.terms()) {
        const IntMatrix& A = e.A();
        out.add(RingBasisElement::canonicalize({s * A.a, s * A.b, s * A.c, s * A.d}, s * e.x2(), s * e.y2()), c);
    }
    return out;
}

CongruenceReport check_theorem_congruence(std::int64_t n, std::size_t max_terms)
{
    FormalSum th = hecke_hat(n);
    FormalSum tt = tilde_T(n);
    CongruenceReport r{n, 0, 0, 0, 0};
    r.residue_S = reduce_mod_ideal(ring_multiply(th, generator_minus_identity("S"), max_terms)).size();
    r.residue_I1 = reduce_mod_ideal(ring_multiply(th, generator_minus_identity("I1"), max_terms)).size();
    r.residue_I2 = reduce_mod_ideal(ring_multiply(th, generator_minus_identity("I2"), max_terms)).size();
    FormalSum TmE = generator_minus_identity("T");
    FormalSum diff = ring_multiply(th, TmE, max_terms) - ring_multiply(TmE, tt, max_terms);
    r.residue_T = reduce_mod_ideal(diff).size();
    return r;
}

ProductReport check_product_formula(std::int64_t n, std::int64_t n2, std::int64_t k, std::size_t max_terms)
{
    check_positive(n, "product formula");
    check_positive(n2, "product formula");
    FormalSum diff = ring_multiply(tilde_T(n), tilde_T(n2), max_terms);
    std::int64_t g = gcd(n, n2);
    for (std::int64_t d : arith::divisors(g)) {
        std::int64_t e = 2 * k - 3;
        if (d > 1 && e < 0) throw DomainError("product formula coefficient d^(2k-3) is not an integer");
        std::int64_t coef = 1;
        for (std::int64_t i = 0; i < e && d > 1; ++i) coef *= d;
        diff -= scale_embed(tilde_T(n * n2 / (d * d)), d * d) * coef;
    }
    ProductReport r{n, n2, k, 0, 0, 0};
    auto residue = reduce_mod_ideal(diff);
    r.residue = residue.size();
    for (const auto& [key, c] : residue) r.residue_l1 += std::abs(c);
    r.transfer_residue = reduce_mod_ideal(ring_multiply(generator_minus_identity("T"), diff, max_terms)).size();
    return r;
}

}  // namespace jacobi::ring
