#pragma once

/**
 * @file prime_divisors.hpp
 * @brief Exact prime-divisor decisions and the desk-scale verifiers built on
 * them.
 *
 * A prime p is a prime divisor of (a_n) when p | a_n for some n.  Each
 * decision is a residue scan modulo p through preperiod plus one period, so
 * terms are never factored.  Zero terms are divisible by every prime; the
 * report flags them (has_zero_term) and ZeroTermPolicy::skip makes the scan
 * look past them instead.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recurseq/modular_analysis.hpp"
#include "recurseq/recurrences.hpp"

namespace recurseq {

enum class ZeroTermPolicy {
    count_as_divisible,  // a_n = 0 is divisible by every prime
    skip,                // exact zeros among the first zero_scan terms are ignored
};

enum class ReportStatus {
    ok,
    finite,                    // constant polynomial: finitely many divisors expected
    growth_not_strict,         // checkpoint counts failed to increase strictly
    precondition_degenerate,
    precondition_order,
    growth_unconfirmed,
    hypothesis_failed,
};

std::string to_string(ReportStatus status);
ReportStatus report_status_from_string(const std::string& text);

struct DivisorHit {
    std::uint64_t p = 0;
    std::uint64_t first_n = 0;
    friend bool operator==(const DivisorHit&, const DivisorHit&) = default;
};

struct PrimeError {
    std::uint64_t p = 0;
    std::string reason;
    friend bool operator==(const PrimeError&, const PrimeError&) = default;
};

struct Checkpoint {
    std::uint64_t bound = 0;
    std::uint64_t count = 0;
    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct DivisorReport {
    std::string source;
    std::uint64_t bound = 0;
    std::vector<DivisorHit> divisors;         // ascending by p
    std::vector<std::uint64_t> non_divisors;  // ascending
    std::vector<PrimeError> errors;           // scans that hit the state cap
    std::vector<std::uint64_t> excluded;      // primes dividing m (coprime variant)
    std::vector<Checkpoint> checkpoints;
    bool has_zero_term = false;
    ReportStatus status = ReportStatus::ok;
    std::string witness;
    std::vector<std::string> trace;

    friend bool operator==(const DivisorReport&, const DivisorReport&) = default;
};

struct DivisorOptions {
    ScanLimits limits{};
    ZeroTermPolicy zero_policy = ZeroTermPolicy::count_as_divisible;
    std::size_t zero_scan = 64;  // exact terms inspected for zeros
    unsigned jobs = 1;
};

struct PrimeVerdict {
    bool divides = false;
    std::optional<std::uint64_t> first_index;
};

// Exact indices n < count with a_n == 0.
std::vector<std::uint64_t> zero_term_indices(const SequenceSource& src, std::size_t count);

PrimeVerdict is_prime_divisor(const SequenceSource& src, std::uint64_t p, const DivisorOptions& options = {});

// Every prime <= prime_bound.  checkpoints (ascending, each <= prime_bound)
// receive the running divisor count.
DivisorReport enumerate_prime_divisors(const SequenceSource& src, std::uint64_t prime_bound,
                                       const std::vector<std::uint64_t>& checkpoints = {},
                                       const DivisorOptions& options = {});

// Desk check of Schur's theorem on n -> f(n).
DivisorReport schur_profile(const IntPoly& f, std::uint64_t prime_bound, const std::vector<std::uint64_t>& checkpoints,
                            const DivisorOptions& options = {});

struct InfinitudeOptions {
    DivisorOptions divisors{};
    bool trace = false;
    std::size_t max_s = 6;            // scaling search range
    std::size_t scaling_terms = 30;   // verify_scaling n_max
};

// Desk check of the non-degenerate linear recurrence theorem.  Rejects
// degenerate inputs and minimal order <= 1 via the status field.
DivisorReport verify_infinitude(const LinearRecurrence& rec, std::uint64_t prime_bound,
                                const std::vector<std::uint64_t>& checkpoints, const InfinitudeOptions& options = {});

struct GrowthWindow {
    std::size_t start = 0;  // first index compared; 0 means k+1
    std::size_t length = 10;
};

DivisorReport verify_generalized(const NonlinearRecurrence& rec, std::uint64_t prime_bound,
                                 const std::vector<std::uint64_t>& checkpoints, const GrowthWindow& window = {},
                                 const DivisorOptions& options = {});

// Divisor enumeration restricted to primes not dividing m, after checking
// gcd(a_n, m) = 1 for every n.
DivisorReport coprime_prime_divisors(const SequenceSource& src, const BigInt& m, std::uint64_t prime_bound,
                                     const std::vector<std::uint64_t>& checkpoints = {},
                                     const DivisorOptions& options = {});

}  // namespace recurseq
