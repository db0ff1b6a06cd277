#pragma once

// Independent reference computations for the test suites.  Nothing here calls
// into the library under test except for the BigInt alias.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using BigInt = mpz_class;
using Coeffs = std::vector<BigInt>;  // ascending

Coeffs schoolbook_mul(const Coeffs& a, const Coeffs& b);
BigInt horner(const Coeffs& f, const BigInt& x);

// Determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m);

// Res(p, q) as the determinant of the Sylvester matrix.
BigInt sylvester_resultant(const Coeffs& p, const Coeffs& q);

// a_{n+k} = c_1 a_{n+k-1} + ... + c_k a_n, plain iteration.
std::vector<BigInt> iterate_linear(const Coeffs& c, const Coeffs& initial, std::size_t count);

// Smallest-order relation a_{n+d} = sum q_i a_{n+d-i} consistent with every
// window of `terms`, by exact Gaussian elimination over Q.  Returns the
// polynomial 1 - sum q_i x^i (with rational coefficients).
std::vector<mpq_class> minimal_relation(const std::vector<BigInt>& terms, std::size_t max_order);

// First n with p | a_n, by walking residue states until one repeats.
std::optional<std::uint64_t> brute_first_divisible(const Coeffs& c, const Coeffs& initial, std::uint64_t p);

// First n in [0, p) with p | f(n).
std::optional<std::uint64_t> brute_poly_divisible(const Coeffs& f, std::uint64_t p);

// Pisano period of Fibonacci mod m by waiting for (0, 1) to recur.
std::uint64_t pisano(std::uint64_t m);

bool is_prime_small(std::uint64_t n);
std::vector<std::uint64_t> primes_below(std::uint64_t n);

// Floating-point degeneracy: roots of the monic reversal of g = 1 - sum r_i x^i
// via companion-matrix eigenvalues, clustered, and tested for a root-of-unity
// ratio |z^n - 1| <= tol with n <= max_order.
bool float_degenerate(const Coeffs& r, double tol = 1e-8, int max_order = 1000);

// Random integer in [lo, hi].
inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace oracle
