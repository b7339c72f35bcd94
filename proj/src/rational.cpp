#include "jacobi_periods/rational.hpp"

#include "jacobi_periods/errors.hpp"

namespace jacobi {

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw DomainError("zero denominator");
    Rational q(Integer(std::to_string(num)), Integer(std::to_string(den)));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) throw UsageError("not a rational number: " + text);
    if (q.get_den() == 0) throw UsageError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

Integer floor(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p()) throw ResourceLimitError("integer overflows 64 bits: " + z.get_str());
    return z.get_si();
}

std::int64_t to_int64(const Rational& q)
{
    if (!is_integer(q)) throw DomainError("not an integer: " + q.get_str());
    return to_int64(q.get_num());
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace jacobi
