#include "jacobi_periods/arith.hpp"

#include <cmath>

#include "jacobi_periods/errors.hpp"

namespace jacobi::arith {

namespace {

// Weight of the reduced form (a,b,c) in the Hurwitz count.
Rational form_weight(std::int64_t a, std::int64_t b, std::int64_t c)
{
    if (a == b && b == c) return make_rational(1, 3);
    if (b == 0 && a == c) return make_rational(1, 2);
    return Rational(1);
}

bool is_reduced(std::int64_t a, std::int64_t b, std::int64_t c)
{
    if (std::abs(b) > a || a > c) return false;
    if ((std::abs(b) == a || a == c) && b < 0) return false;
    return true;
}

int jacobi_symbol(std::int64_t a, std::int64_t n)
{
    // n odd and positive
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_squarefree(std::int64_t n)
{
    n = std::abs(n);
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        if (n % p == 0) n /= p;
    }
    return true;
}

}  // namespace

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + (m < 0 ? -m : m) : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    a = std::abs(a);
    b = std::abs(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0) throw DomainError("isqrt of negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(std::int64_t n)
{
    if (n < 0) return false;
    std::int64_t r = isqrt(n);
    return r * r == n;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1) throw DomainError("divisors of a non-positive integer");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Integer sigma(std::int64_t n, int k)
{
    Integer s = 0;
    for (auto d : divisors(n)) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        s += p;
    }
    return s;
}

int mobius(std::int64_t n)
{
    if (n < 1) throw DomainError("mobius of a non-positive integer");
    int result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

Rational hurwitz(std::int64_t N)
{
    if (N < 0) throw DomainError("hurwitz of a negative integer");
    if (N == 0) return make_rational(-1, 12);
    if (N % 4 == 1 || N % 4 == 2) return 0;
    Rational h = 0;
    for (std::int64_t a = 1; 3 * a * a <= N; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = b * b + N;
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (is_reduced(a, b, c)) h += form_weight(a, b, c);
        }
    }
    return h;
}

ClassNumberTable::ClassNumberTable(std::int64_t max) : max_(max)
{
    if (max < 0) throw DomainError("class number table bound must be nonnegative");
    values_.assign(static_cast<std::size_t>(max + 1), Rational(0));
    values_[0] = make_rational(-1, 12);
    // Sweep reduced forms: 4ac - b^2 >= 3a^2.
    for (std::int64_t a = 1; 3 * a * a <= max; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            for (std::int64_t c = a;; ++c) {
                std::int64_t N = 4 * a * c - b * b;
                if (N > max) break;
                if (is_reduced(a, b, c)) values_[static_cast<std::size_t>(N)] += form_weight(a, b, c);
            }
        }
    }
}

const Rational& ClassNumberTable::operator()(std::int64_t N) const
{
    static const Rational zero(0);
    if (N < 0) return zero;
    if (N > max_) throw DomainError("class number table exceeded: N = " + std::to_string(N));
    return values_[static_cast<std::size_t>(N)];
}

Rational ClassNumberTable::at(const Rational& N) const
{
    if (!is_integer(N) || N < 0) return 0;
    return (*this)(to_int64(N));
}

int kronecker(std::int64_t D, std::int64_t n)
{
    if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (D < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (D % 2 == 0) return 0;
        std::int64_t r = mod(D, 8);
        if (r == 3 || r == 5) result = -result;
    }
    if (n == 1) return result;
    return result * jacobi_symbol(D, n);
}

bool is_fundamental_discriminant(std::int64_t D)
{
    if (D == 0 || D == 1) return false;
    std::int64_t r = mod(D, 4);
    if (r == 1) return is_squarefree(D);
    if (r != 0) return false;
    std::int64_t m = D / 4;
    std::int64_t rm = mod(m, 4);
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

Rational l_zero_chi(std::int64_t D)
{
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw DomainError("L(0, chi_D) needs a negative fundamental discriminant, got " + std::to_string(D));
    std::int64_t absD = -D;
    std::int64_t s = 0;
    for (std::int64_t a = 1; a <= absD; ++a) s += kronecker(D, a) * a;
    return make_rational(-s, absD);
}

}  // namespace jacobi::arith
