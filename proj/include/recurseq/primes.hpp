#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "recurseq/exact_algebra.hpp"

namespace recurseq {

// Sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

// Deterministic below 2^64; BPSW (GMP) above.
bool is_prime(const BigInt& n);

// Prime factorization of |n| as (prime, exponent) pairs, ascending.
// Trial division to 10^6, then Pollard rho.  Throws DomainError for n == 0.
std::vector<std::pair<BigInt, std::size_t>> factorize(const BigInt& n);

}  // namespace recurseq
