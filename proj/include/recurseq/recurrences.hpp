#pragma once

/**
 * @file recurrences.hpp
 * @brief Integer sequences defined by recurrences, and their generating
 * functions.
 *
 * All sequences are indexed from 0.  A LinearRecurrence of order k satisfies
 *
 *     a_{n+k} = r_1 a_{n+k-1} + ... + r_k a_n,      r_k != 0,
 *
 * and its characteristic polynomial is g(x) = 1 - r_1 x - ... - r_k x^k.
 * The generating function sum a_n x^n equals f(x)/g(x) with deg f < k.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "recurseq/exact_algebra.hpp"

namespace recurseq {

class LinearRecurrence {
public:
    // Throws DomainError unless coeffs and initial have the same nonzero
    // length and coeffs.back() != 0.
    LinearRecurrence(std::vector<BigInt> coeffs, std::vector<BigInt> initial);

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const std::vector<BigInt>& initial() const { return initial_; }

    // 1 - r_1 x - ... - r_k x^k
    IntPoly characteristic() const;
    // gcd(r_1, ..., r_k), non-negative.
    BigInt coeff_gcd() const;

    friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;

private:
    std::vector<BigInt> coeffs_;
    std::vector<BigInt> initial_;
};

// Builds the recurrence whose characteristic polynomial is g (g(0) == 1).
LinearRecurrence recurrence_from_characteristic(const IntPoly& g, std::vector<BigInt> initial);

struct RationalGF {
    IntPoly numerator;    // f, deg f < deg g
    IntPoly denominator;  // g, g(0) == 1

    // First `count` coefficients of f/g as a power series.
    std::vector<BigInt> expand(std::size_t count) const;

    friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

// A single term c * x_1^e_1 * ... * x_k^e_k of a k-variate polynomial.
struct Monomial {
    std::vector<unsigned> exps;
    BigInt coeff;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// a_{n+k+1} = sign * a_n + f(a_{n+1}, ..., a_{n+k}) with k+1 initial terms.
class NonlinearRecurrence {
public:
    NonlinearRecurrence(std::size_t k, int sign, std::vector<Monomial> poly, std::vector<BigInt> initial);

    std::size_t k() const { return k_; }
    int sign() const { return sign_; }
    const std::vector<Monomial>& poly() const { return poly_; }
    const std::vector<BigInt>& initial() const { return initial_; }

    // f evaluated at args (size k).
    BigInt apply(const std::vector<BigInt>& args) const;

    friend bool operator==(const NonlinearRecurrence&, const NonlinearRecurrence&) = default;

private:
    std::size_t k_;
    int sign_;
    std::vector<Monomial> poly_;
    std::vector<BigInt> initial_;
};

// a_n = f(n).
struct PolynomialSequence {
    IntPoly f;

    friend bool operator==(const PolynomialSequence&, const PolynomialSequence&) = default;
};

using SequenceSource = std::variant<LinearRecurrence, NonlinearRecurrence, PolynomialSequence>;

/// Exact term stream a_0, a_1, ...; one consumer per stream.
class TermStream {
public:
    explicit TermStream(SequenceSource src);

    std::size_t index() const { return index_; }
    const BigInt& current() const { return window_.front(); }
    void advance();

private:
    SequenceSource src_;
    std::size_t index_ = 0;
    std::vector<BigInt> window_;
};

// Exact terms a_0 .. a_{n_max}.
std::vector<BigInt> evaluate(const SequenceSource& src, std::size_t n_max);

RationalGF generating_function(const LinearRecurrence& rec);

// Cancels gcd(f, g) from the generating function.  Throws DomainError for the
// identically zero sequence.
LinearRecurrence minimal_order(const LinearRecurrence& rec);

// Order deg(f)+1 recurrence a_{n+k+1} = sum_i (-1)^i C(k+1, i+1) a_{n+k-i}
// with initial terms f(0..k).
LinearRecurrence from_polynomial(const IntPoly& f);

struct DegeneracyVerdict {
    bool degenerate = false;
    // Smallest n such that Phi_n shares a root with the root-ratio polynomial.
    std::optional<std::size_t> witness;
    // Root-ratio polynomial with the trivial (x-1)^d factor removed.
    IntPoly ratio_poly;
};

// Exact root-of-unity test on the ratios of distinct characteristic roots.
// Expects a minimal-order recurrence.
DegeneracyVerdict is_degenerate(const LinearRecurrence& rec);

// Res_y(s(y), s(x y)) divided by (x-1)^deg s, for squarefree s with s(0) != 0.
IntPoly root_ratio_polynomial(const IntPoly& s);

// Human-readable one-line description.
std::string describe(const SequenceSource& src);

}  // namespace recurseq
