#pragma once

/**
 * @file exact_algebra.hpp
 * @brief Arbitrary-precision integers and dense integer polynomials.
 *
 * IntPoly stores coefficients in ascending order (index i holds the
 * coefficient of x^i) with no trailing zeros; the zero polynomial is the
 * empty list and reports degree kZeroDegree.
 *
 * Characteristic polynomials are kept in the constant-term-1 form
 * g(x) = 1 - r_1 x - ... - r_k x^k.  The monic form with the roots psi_i is
 * obtained only through reverse_poly().
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace recurseq {

using BigInt = mpz_class;

class IntPoly {
public:
    static constexpr int kZeroDegree = -1;

    IntPoly() = default;
    IntPoly(std::initializer_list<BigInt> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(const BigInt& c);
    static IntPoly monomial(const BigInt& c, std::size_t exponent);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    std::size_t size() const { return coeffs_.size(); }

    // Coefficient of x^i; zero past the degree.
    BigInt coeff(std::size_t i) const;
    const BigInt& leading() const;
    std::span<const BigInt> coeffs() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;
    IntPoly derivative() const;
    // Non-negative gcd of the coefficients; 0 for the zero polynomial.
    BigInt content() const;
    // p / content(p), sign fixed so the leading coefficient is positive.
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& c);

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(IntPoly lhs, const BigInt& c) { return lhs *= c; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    // Comma-separated ascending coefficients, "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

// Parses the CLI polynomial syntax "c0,c1,...,cn" (ascending, whitespace
// tolerated).  Throws DomainError on malformed input.
IntPoly parse_poly(std::string_view text);

IntPoly poly_product(const IntPoly& p, const IntPoly& q);

// lc(q)^(deg p - deg q + 1) * p mod q.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q);

// Exact quotient p / q over Z.  Throws DomainError if q is zero or q does not
// divide p with integral quotient.
IntPoly divide_exact(const IntPoly& p, const IntPoly& q);

// True when q divides p over Q (primitive q: equivalently over Z).
bool divides(const IntPoly& q, const IntPoly& p);

// Primitive gcd over Q with positive leading coefficient.  gcd(p, 0) is the
// primitive part of p.  Throws DomainError when both inputs are zero.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

// Res_x(p, q) via the subresultant PRS.  Throws DomainError on a zero input.
BigInt resultant(const IntPoly& p, const IntPoly& q);

// x^k p(1/x).  Throws DomainError when k < deg p.
IntPoly reverse_poly(const IntPoly& p, std::size_t k);

// n-th cyclotomic polynomial.  Throws DomainError for n == 0.
IntPoly cyclotomic(std::size_t n);

// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

// Largest e with p^e | n.  Throws DomainError for n == 0 or p < 2.
std::size_t p_adic_valuation(const BigInt& p, const BigInt& n);

// Euler's totient, by trial division.
std::size_t euler_phi(std::size_t n);

// Newton interpolation through (x_i, y_i), distinct x_i.  The interpolant must
// have integer coefficients; DomainError otherwise.
IntPoly interpolate(std::span<const BigInt> xs, std::span<const BigInt> ys);

}  // namespace recurseq
