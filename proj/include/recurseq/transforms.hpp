#pragma once

/**
 * @file transforms.hpp
 * @brief Arithmetic-progression subsequences and the coefficient-scaling and
 * prime-stripping reductions.
 *
 * phi_b maps g(x) = prod (1 - psi_i x) to prod (1 - psi_i^b x).  It is
 * computed as the reversal of Res_y(G(y), x - y^b) for the monic reversal G
 * of g; the roots psi_i are never formed.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recurseq/exact_algebra.hpp"
#include "recurseq/modular_analysis.hpp"
#include "recurseq/recurrences.hpp"

namespace recurseq {

/// The sequence n -> a_{offset + step n} / (divisor * geometric^n).
struct SubsequenceSpec {
    LinearRecurrence base;
    std::uint64_t offset = 0;
    std::uint64_t step = 1;
    BigInt divisor_extracted = 1;
    BigInt geometric_divisor = 1;

    // Exact terms n = 0 .. count-1 of the represented sequence.  Throws
    // DomainError if a division is inexact.
    std::vector<BigInt> terms(std::size_t count) const;
};

struct ScalingWitness {
    std::size_t n = 0;
    BigInt term;            // a_{s n}
    BigInt required_power;  // t^n

    friend bool operator==(const ScalingWitness&, const ScalingWitness&) = default;
};

struct ScalingReport {
    std::size_t s = 1;
    BigInt t = 1;
    std::vector<BigInt> m_coeffs;       // phi_s g = 1 - sum m_i x^i
    std::vector<BigInt> scaled_coeffs;  // m_i / t^i; empty if some t^i does not divide m_i
    bool coprime = false;               // gcd(scaled_coeffs) == 1
    bool has_zero_coeff = false;        // t determined from the nonzero m_i only
    std::optional<bool> base_case_ok;   // set by verify_scaling
    std::optional<ScalingWitness> failure_witness;
    // b_n = a_{s n} / t^n, emitted when verify_scaling succeeds.
    std::optional<SubsequenceSpec> quotient;
    // Recurrence of b_n with coefficients m_i / t^i, when those are integral.
    std::optional<LinearRecurrence> quotient_recurrence;
};

IntPoly phi_b(const IntPoly& g, std::size_t b);

struct SubsequenceRecurrence {
    LinearRecurrence recurrence;
    // Minimal order of the subsequence (0 for the all-zero subsequence).
    std::size_t minimal_order = 0;
    // The subsequence has lower order than the characteristic phi_b g.
    bool minimality_lost = false;
};

// a_{c + b n} satisfies the recurrence with characteristic phi_b(g, b).
SubsequenceRecurrence subsequence_recurrence(const LinearRecurrence& rec, std::size_t c, std::size_t b);

// Largest t with t^i | m_i for every nonzero m_i.
BigInt max_scaling_factor(const std::vector<BigInt>& m_coeffs);

ScalingReport scaling_candidate(const LinearRecurrence& rec, std::size_t s);

// Checks t^n | a_{s n} for n <= n_max.
ScalingReport verify_scaling(const LinearRecurrence& rec, std::size_t s, const BigInt& t, std::size_t n_max);

struct StripOptions {
    std::size_t l_margin = 1;
    std::size_t j_cap = 64;
    ScanLimits limits{};
};

struct StripResult {
    SubsequenceSpec spec;
    std::size_t index = 0;       // prime index of p in rec
    std::size_t l = 0;           // modulus exponent used, index + l_margin
    PeriodCertificate certificate;
    bool identity = false;       // p divides no term
};

// Chooses a residue class n == t mod j on which every a_n is nonzero and
// constant modulo p^l, then divides out p^{v_p(a_t)}.  The smallest
// qualifying offset is taken.  Throws PreconditionViolated when p^l is a
// null divisor (prime index not finite below j_cap), BoundExceeded when a
// scan runs past the cap.
StripResult strip_prime(const LinearRecurrence& rec, const BigInt& p, const StripOptions& options = {});

struct StrippedSequence {
    std::uint64_t offset = 0;
    std::uint64_t step = 1;
    BigInt divisor = 1;
    LinearRecurrence recurrence;  // recurrence of a_{offset + step n} / divisor
    std::vector<std::string> trace;
};

// Applies strip_prime for each prime in turn, composing the progressions.
StrippedSequence strip_primes(const LinearRecurrence& rec, const std::vector<BigInt>& primes,
                              const StripOptions& options = {});

}  // namespace recurseq
