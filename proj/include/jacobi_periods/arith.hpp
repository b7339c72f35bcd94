#pragma once

#include <cstdint>
#include <vector>

#include "jacobi_periods/rational.hpp"

namespace jacobi::arith {

// Hurwitz class number of discriminant -N: reduced positive definite forms,
// a(x^2+y^2) counted 1/2 and a(x^2+xy+y^2) counted 1/3.
// H(0) = -1/12, H(N) = 0 for N = 1, 2 mod 4.
Rational hurwitz(std::int64_t N);

// H(N) for 0 <= N <= max, all computed in one sweep over reduced forms.
class ClassNumberTable {
public:
    explicit ClassNumberTable(std::int64_t max);

    std::int64_t max() const { return max_; }
    // 0 for N < 0; throws DomainError above max.
    const Rational& operator()(std::int64_t N) const;
    // Value at a rational argument; 0 unless it is a nonnegative integer.
    Rational at(const Rational& N) const;

private:
    std::int64_t max_;
    std::vector<Rational> values_;
};

int kronecker(std::int64_t D, std::int64_t n);
bool is_fundamental_discriminant(std::int64_t D);
// L(0, (D/.)) for a negative fundamental discriminant D.
Rational l_zero_chi(std::int64_t D);

bool is_square(std::int64_t n);
std::int64_t isqrt(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
Integer sigma(std::int64_t n, int k);
int mobius(std::int64_t n);
bool is_prime(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);
// Nonnegative residue.
std::int64_t mod(std::int64_t a, std::int64_t m);

}  // namespace jacobi::arith
