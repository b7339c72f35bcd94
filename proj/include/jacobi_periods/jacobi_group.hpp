#pragma once

#include <array>
#include <string>
#include <vector>

#include "jacobi_periods/rational.hpp"

namespace jacobi::group {

struct Matrix2 {
    Rational a, b, c, d;

    Rational det() const { return a * d - b * c; }
    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const Matrix2& o) const = default;
    static Matrix2 identity() { return {1, 0, 0, 1}; }
};

// Row vector (lambda, mu) times a matrix.
std::array<Rational, 2> row_times(const Rational& lambda, const Rational& mu, const Matrix2& m);

// [M, (lambda, mu), e(theta)] with det M > 0 and theta kept in [0, 1).
class JacobiGroupElement {
public:
    JacobiGroupElement(Matrix2 mat, Rational lambda, Rational mu, Rational phase = 0);

    const Matrix2& mat() const { return mat_; }
    const Rational& lambda() const { return lambda_; }
    const Rational& mu() const { return mu_; }
    const Rational& phase() const { return phase_; }

    // Integral entries, det 1, phase 0.
    bool in_integral_group() const;

    bool operator==(const JacobiGroupElement& o) const = default;
    std::string to_string() const;

private:
    Matrix2 mat_;
    Rational lambda_, mu_, phase_;
};

enum class GroupLaw {
    Standard,
    // Lattice part (lambda2, mu2) M2 + (lambda2, mu2): the subscript-free
    // law taken literally. Not associative; kept for comparison only.
    LiteralSubscriptFree,
};

JacobiGroupElement compose(const JacobiGroupElement& g1, const JacobiGroupElement& g2,
                           GroupLaw law = GroupLaw::Standard);
JacobiGroupElement inverse(const JacobiGroupElement& g);
JacobiGroupElement power(const JacobiGroupElement& g, int k, GroupLaw law = GroupLaw::Standard);
// Left-to-right product of a word.
JacobiGroupElement product(const std::vector<JacobiGroupElement>& word, GroupLaw law = GroupLaw::Standard);

// One of S, T, T0, U, I1, I2, E; throws UsageError otherwise.
JacobiGroupElement generator(const std::string& name);
JacobiGroupElement identity();
// [I, (lambda, mu), 0]
JacobiGroupElement translation(const Rational& lambda, const Rational& mu);

// Equal up to the sign of the matrix, lattice part and phase exactly.
bool pm_equal(const JacobiGroupElement& g, const JacobiGroupElement& h);

struct RelationResult {
    std::string name;
    bool holds;
};

std::vector<RelationResult> check_relations(GroupLaw law = GroupLaw::Standard);

}  // namespace jacobi::group
