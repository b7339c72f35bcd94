#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacobi_periods/jacobi_group.hpp"
#include "jacobi_periods/rational.hpp"

namespace jacobi::ring {

struct IntMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    IntMatrix operator*(const IntMatrix& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    IntMatrix operator-() const { return {-a, -b, -c, -d}; }
    auto operator<=>(const IntMatrix&) const = default;
};

// The element [A / sqrt(det A), (X, Y)] of the Hecke monoid, stored with
// the lattice part scaled by sqrt(det A): x2 = sqrt(det)·X, y2 = sqrt(det)·Y.
// For a level-n element det A = n^2, so x2 = n·X. The lattice part is kept
// exactly; reducing it mod det A is a left translation, which is harmless
// modulo the ideal but not for right factors (at level 1 it would identify
// I1 and I2 with E). Non-square determinants occur only for the
// index-changing elements and always carry a zero lattice part.
class RingBasisElement {
public:
    // Sign-canonical form of raw data.
    static RingBasisElement canonicalize(const IntMatrix& A, std::int64_t x2, std::int64_t y2);
    // Level-n element A / n with rational lattice part X, Y in (1/n)Z.
    static RingBasisElement from_level(std::int64_t n, const IntMatrix& A, const Rational& X, const Rational& Y);
    static RingBasisElement identity() { return canonicalize({}, 0, 0); }
    // Integral Jacobi group element (det 1); the phase is dropped.
    static RingBasisElement from_group(const group::JacobiGroupElement& g);

    const IntMatrix& A() const { return A_; }
    std::int64_t x2() const { return x2_; }
    std::int64_t y2() const { return y2_; }
    std::int64_t det() const { return A_.det(); }
    // sqrt(det A) when it is an integer.
    std::optional<std::int64_t> level() const;
    // Lattice part reduced to [0, det A): the representative differing by a
    // left translation [I, w], w integral.
    RingBasisElement reduced() const;
    // The same element as a Jacobi group element with unnormalized matrix A
    // and lattice part (x2, y2) / sqrt(det A). Needs a square determinant
    // unless the lattice part is zero.
    group::JacobiGroupElement to_group() const;

    auto operator<=>(const RingBasisElement&) const = default;
    std::string to_string() const;

private:
    RingBasisElement(const IntMatrix& A, std::int64_t x2, std::int64_t y2) : A_(A), x2_(x2), y2_(y2) {}
    IntMatrix A_;
    std::int64_t x2_ = 0, y2_ = 0;
};

// Monoid law without the phase: [A1, x1][A2, x2] = [A1 A2, x1 A2 + sqrt(det A1) x2].
RingBasisElement multiply(const RingBasisElement& e1, const RingBasisElement& e2);

// Integer combination of basis elements sharing one determinant.
class FormalSum {
public:
    explicit FormalSum(std::int64_t det) : det_(det) {}
    FormalSum(const RingBasisElement& e, std::int64_t coef = 1);

    std::int64_t det() const { return det_; }
    std::optional<std::int64_t> level() const;
    const std::map<RingBasisElement, std::int64_t>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    std::int64_t coefficient(const RingBasisElement& e) const;

    void add(const RingBasisElement& e, std::int64_t coef);
    FormalSum& operator+=(const FormalSum& o);
    FormalSum& operator-=(const FormalSum& o);
    FormalSum operator+(const FormalSum& o) const;
    FormalSum operator-(const FormalSum& o) const;
    FormalSum operator*(std::int64_t s) const;
    bool operator==(const FormalSum& o) const = default;

private:
    std::int64_t det_;
    std::map<RingBasisElement, std::int64_t> terms_;
};

// Throws ResourceLimitError when the expanded product would exceed max_terms.
FormalSum ring_multiply(const FormalSum& f, const FormalSum& g, std::size_t max_terms = 50'000'000);
inline FormalSum operator*(const FormalSum& f, const FormalSum& g) { return ring_multiply(f, g); }

// h - E for a generator name (S, T, T0, U, I1, I2).
FormalSum generator_minus_identity(const std::string& name);
FormalSum generator_term(const std::string& name);

FormalSum hecke_hat(std::int64_t n);
FormalSum tilde_T(std::int64_t n);
FormalSum tilde_V(std::int64_t n);

// Left orbit of a basis element under H = <S, I1, I2> (signs included).
struct OrbitKey {
    std::int64_t det;
    IntMatrix matrix;
    std::int64_t x, y;
    auto operator<=>(const OrbitKey&) const = default;
};

OrbitKey orbit_canonical(const RingBasisElement& e);

using OrbitVector = std::map<OrbitKey, std::int64_t>;
// Empty iff f lies in (S-1)R + (I1-1)R + (I2-1)R.
OrbitVector reduce_mod_ideal(const FormalSum& f);

// f = (S-E)x + (I1-E)y + (I2-E)z for f with empty orbit vector.
struct IdealDecomposition {
    FormalSum x, y, z;
};
// Throws DomainError if f is not in the ideal.
IdealDecomposition decompose_in_ideal(const FormalSum& f);
FormalSum expand(const IdealDecomposition& dec);

// Embed a formal sum into a higher determinant by the scalar matrix s·I.
FormalSum scale_embed(const FormalSum& f, std::int64_t s);

struct CongruenceReport {
    std::int64_t n;
    std::size_t residue_S, residue_I1, residue_I2;
    // Orbits left by hecke_hat(n)(T-E) - (T-E)tilde_T(n).
    std::size_t residue_T;
    bool holds() const { return residue_S == 0 && residue_I1 == 0 && residue_I2 == 0 && residue_T == 0; }
};

CongruenceReport check_theorem_congruence(std::int64_t n, std::size_t max_terms = 50'000'000);

struct ProductReport {
    std::int64_t n, n2, k;
    // Orbits left by tilde_T(n)tilde_T(n2) - sum_d d^(2k-3) tilde_T(n n2 / d^2).
    std::size_t residue;
    std::int64_t residue_l1;
    // Orbits left after multiplying the same difference by (T-E) on the left.
    std::size_t transfer_residue;
    bool holds() const { return residue == 0; }
};

ProductReport check_product_formula(std::int64_t n, std::int64_t n2, std::int64_t k,
                                    std::size_t max_terms = 50'000'000);

}  // namespace jacobi::ring
