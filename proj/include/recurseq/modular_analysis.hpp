#pragma once

/**
 * @file modular_analysis.hpp
 * @brief Residue scans of sequences modulo m: eventual periodicity, null
 * divisors, prime indices, and per-class growth.
 *
 * Every scan walks the state vector (a_n, ..., a_{n+w-1}) mod m, where w is
 * the order for linear recurrences and k+1 for the generalized rule.
 * Polynomial sequences are scanned through their from_polynomial()
 * recurrence.  Moduli below 2^62 use machine words; larger moduli fall back
 * to GMP residues.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recurseq/exact_algebra.hpp"
#include "recurseq/recurrences.hpp"

namespace recurseq {

struct ScanLimits {
    // Maximum number of state transitions a single scan may perform.
    std::uint64_t state_cap = 100'000'000;
};

struct PeriodCertificate {
    BigInt modulus;
    std::uint64_t preperiod = 0;  // sigma
    std::uint64_t period = 1;     // pi
    std::uint64_t cycle_residue_states = 1;  // distinct states visited, sigma + pi

    friend bool operator==(const PeriodCertificate&, const PeriodCertificate&) = default;
};

// Minimal (sigma, pi) with a_n == a_{n+pi} mod m for all n >= sigma.
// Throws BoundExceeded past limits.state_cap, DomainError for m < 1.
PeriodCertificate period_mod(const SequenceSource& src, const BigInt& m, const ScanLimits& limits = {});

// True iff m divides a_n for all sufficiently large n.
bool is_null_divisor(const SequenceSource& src, const BigInt& m, const ScanLimits& limits = {});

struct PrimeIndexResult {
    std::size_t index = 0;       // largest j <= j_cap with p^j a null divisor
    bool cap_exceeded = false;   // p^j_cap is still a null divisor
    // gcd(r_1, ..., r_k) for linear sources; the finiteness hypothesis is
    // gcd == 1.
    std::optional<BigInt> coeff_gcd;
    std::string note;
};

PrimeIndexResult prime_index(const SequenceSource& src, const BigInt& p, std::size_t j_cap = 64,
                             const ScanLimits& limits = {});

struct ClassMaxima {
    std::size_t modulus = 1;
    std::size_t n_max = 0;
    std::vector<BigInt> maxima;  // maxima[c] = max |a_n|, n <= n_max, n == c mod b
    // Non-degenerate with minimal order >= 2.
    bool corollary_applicable = false;
    // floor(n_max / (2b)); grows linearly with n_max.
    BigInt threshold;
    bool exceeds_threshold = false;
};

ClassMaxima unbounded_on_classes(const LinearRecurrence& rec, std::size_t b, std::size_t n_max);

// a_0 .. a_{count-1} reduced into [0, m).
std::vector<BigInt> residues(const SequenceSource& src, const BigInt& m, std::size_t count);

// Smallest n with m | a_n, skipping the indices in `skip` (ascending).  The
// scan covers preperiod + period + (max skip + 1) terms.  nullopt when no
// such n exists.
std::optional<std::uint64_t> first_divisible_index(const SequenceSource& src, const BigInt& m,
                                                   std::span<const std::uint64_t> skip = {},
                                                   const ScanLimits& limits = {});

// Smallest n with gcd(a_n, m) != 1, or nullopt if every term is prime to m.
std::optional<std::uint64_t> first_noncoprime_index(const SequenceSource& src, const BigInt& m,
                                                    const ScanLimits& limits = {});

}  // namespace recurseq
