#include "jacobi_periods/jacobi_group.hpp"

#include <sstream>

#include "jacobi_periods/errors.hpp"

namespace jacobi::group {

Matrix2 Matrix2::operator*(const Matrix2& o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::array<Rational, 2> row_times(const Rational& lambda, const Rational& mu, const Matrix2& m)
{
    return {lambda * m.a + mu * m.c, lambda * m.b + mu * m.d};
}

JacobiGroupElement::JacobiGroupElement(Matrix2 mat, Rational lambda, Rational mu, Rational phase)
    : mat_(std::move(mat)), lambda_(std::move(lambda)), mu_(std::move(mu)), phase_(frac(phase))
{
    if (mat_.det() <= 0) throw InvalidElementError("Jacobi group element needs det > 0");
}

bool JacobiGroupElement::in_integral_group() const
{
    return is_integer(mat_.a) && is_integer(mat_.b) && is_integer(mat_.c) && is_integer(mat_.d) &&
           mat_.det() == 1 && is_integer(lambda_) && is_integer(mu_) && phase_ == 0;
}

std::string JacobiGroupElement::to_string() const
{
    std::ostringstream os;
    os << "[[" << mat_.a << "," << mat_.b << "],[" << mat_.c << "," << mat_.d << "]],(" << lambda_ << "," << mu_
       << ")," << phase_ << "]";
    return os.str();
}

JacobiGroupElement compose(const JacobiGroupElement& g1, const JacobiGroupElement& g2, GroupLaw law)
{
    const Matrix2& m2 = g2.mat();
    auto moved = law == GroupLaw::Standard ? row_times(g1.lambda(), g1.mu(), m2)
                                           : row_times(g2.lambda(), g2.mu(), m2);
    // det of the 2x2 matrix with rows (lambda1, mu1) M2 and (lambda2, mu2)
    Rational cocycle = moved[0] * g2.mu() - moved[1] * g2.lambda();
    return JacobiGroupElement(g1.mat() * m2, moved[0] + g2.lambda(), moved[1] + g2.mu(),
                              g1.phase() + g2.phase() + cocycle);
}

JacobiGroupElement inverse(const JacobiGroupElement& g)
{
    const Matrix2& m = g.mat();
    Rational det = m.det();
    Matrix2 inv{m.d / det, -m.b / det, -m.c / det, m.a / det};
    auto x = row_times(g.lambda(), g.mu(), inv);
    // det((X M^-1) ; (-X M^-1)) vanishes, so only the phase needs negating.
    return JacobiGroupElement(inv, -x[0], -x[1], -g.phase());
}

JacobiGroupElement identity() { return JacobiGroupElement(Matrix2::identity(), 0, 0); }

JacobiGroupElement translation(const Rational& lambda, const Rational& mu)
{
    return JacobiGroupElement(Matrix2::identity(), lambda, mu);
}

JacobiGroupElement power(const JacobiGroupElement& g, int k, GroupLaw law)
{
    JacobiGroupElement base = k < 0 ? inverse(g) : g;
    JacobiGroupElement out = identity();
    for (int i = 0; i < (k < 0 ? -k : k); ++i) out = compose(out, base, law);
    return out;
}

JacobiGroupElement product(const std::vector<JacobiGroupElement>& word, GroupLaw law)
{
    JacobiGroupElement out = identity();
    for (const auto& g : word) out = compose(out, g, law);
    return out;
}

JacobiGroupElement generator(const std::string& name)
{
    if (name == "S") return JacobiGroupElement({1, 1, 0, 1}, 0, 0);
    if (name == "T") return JacobiGroupElement({0, -1, 1, 0}, 1, 0);
    if (name == "T0") return JacobiGroupElement({0, -1, 1, 0}, 0, 0);
    if (name == "U") return JacobiGroupElement({1, -1, 1, 0}, 1, 0);
    if (name == "I1") return translation(0, 1);
    if (name == "I2") return translation(1, 0);
    if (name == "E") return identity();
    throw UsageError("unknown generator: " + name);
}

bool pm_equal(const JacobiGroupElement& g, const JacobiGroupElement& h)
{
    if (g.lambda() != h.lambda() || g.mu() != h.mu() || g.phase() != h.phase()) return false;
    return g.mat() == h.mat() || g.mat() == -h.mat();
}

std::vector<RelationResult> check_relations(GroupLaw law)
{
    const auto S = generator("S"), T = generator("T"), U = generator("U"), E = generator("E");
    const auto T2 = power(T, 2, law);
    const auto left = translation(-1, 0), mid = translation(0, -1), right = translation(0, 1);

    const auto r1 = product({U, T2}, law);
    const auto r2 = product({T2, U, left}, law);
    const auto r3 = product({T2, mid, U}, law);
    const auto r4 = product({right, T2, U}, law);

    return {
        {"T^4 = E", pm_equal(power(T, 4, law), E)},
        {"U^6 = E", pm_equal(power(U, 6, law), E)},
        {"ST = U", pm_equal(compose(S, T, law), U)},
        {"UT^2 = T^2U[I,(-1,0)]", pm_equal(r1, r2)},
        {"T^2U[I,(-1,0)] = T^2[I,(0,-1)]U", pm_equal(r2, r3)},
        {"T^2[I,(0,-1)]U = [I,(0,1)]T^2U", pm_equal(r3, r4)},
    };
}

}  // namespace jacobi::group
