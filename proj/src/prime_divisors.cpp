#include "recurseq/prime_divisors.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <variant>

#include "recurseq/errors.hpp"
#include "recurseq/primes.hpp"
#include "recurseq/transforms.hpp"

namespace recurseq {

namespace {

// Exact zero detection stops once terms exceed this many bits.
constexpr std::size_t kZeroScanBitLimit = 1u << 20;

struct Outcome {
    std::optional<std::uint64_t> first;
    std::optional<std::string> error;
};

std::vector<Outcome> scan_primes(const SequenceSource& src, const std::vector<std::uint64_t>& primes,
                                 std::span<const std::uint64_t> skip, const DivisorOptions& options) {
    std::vector<Outcome> results(primes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
            try {
                results[i].first =
                    first_divisible_index(src, BigInt(static_cast<unsigned long>(primes[i])), skip, options.limits);
            } catch (const BoundExceeded& e) {
                results[i].error = std::string("BOUND_EXCEEDED: ") + e.what();
            }
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return results;
}

void fill_checkpoints(DivisorReport& report, const std::vector<std::uint64_t>& checkpoints) {
    report.checkpoints.clear();
    for (std::uint64_t cp : checkpoints) {
        const auto count = std::count_if(report.divisors.begin(), report.divisors.end(),
                                         [cp](const DivisorHit& h) { return h.p <= cp; });
        report.checkpoints.push_back({cp, static_cast<std::uint64_t>(count)});
    }
}

bool strictly_growing(const std::vector<Checkpoint>& cps) {
    for (std::size_t i = 1; i < cps.size(); ++i)
        if (cps[i].count <= cps[i - 1].count) return false;
    return true;
}

void check_checkpoints(const std::vector<std::uint64_t>& checkpoints, std::uint64_t bound) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] > bound) {
            throw DomainError("checkpoint " + std::to_string(checkpoints[i]) + " exceeds the prime bound " +
                              std::to_string(bound));
        }
        if (i && checkpoints[i] <= checkpoints[i - 1]) throw DomainError("checkpoints must be strictly ascending");
    }
}

DivisorReport enumerate_excluding(const SequenceSource& src, std::uint64_t prime_bound,
                                  const std::vector<std::uint64_t>& checkpoints, const DivisorOptions& options,
                                  const BigInt& excluded_modulus) {
    if (prime_bound < 2) throw DomainError("prime bound must be at least 2");
    check_checkpoints(checkpoints, prime_bound);
    DivisorReport report;
    report.source = describe(src);
    report.bound = prime_bound;

    const std::vector<std::uint64_t> zeros = zero_term_indices(src, options.zero_scan);
    report.has_zero_term = !zeros.empty();
    std::span<const std::uint64_t> skip;
    if (options.zero_policy == ZeroTermPolicy::skip) skip = zeros;

    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        if (mpz_divisible_ui_p(excluded_modulus.get_mpz_t(), p)) report.excluded.push_back(p);
        else primes.push_back(p);
    }
    std::vector<Outcome> results = scan_primes(src, primes, skip, options);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (results[i].error) report.errors.push_back({primes[i], *results[i].error});
        else if (results[i].first) report.divisors.push_back({primes[i], *results[i].first});
        else report.non_divisors.push_back(primes[i]);
    }
    fill_checkpoints(report, checkpoints);
    return report;
}

void apply_growth(DivisorReport& report) {
    if (report.status == ReportStatus::ok && !strictly_growing(report.checkpoints)) {
        report.status = ReportStatus::growth_not_strict;
        std::ostringstream os;
        os << "checkpoint counts:";
        for (const auto& cp : report.checkpoints) os << ' ' << cp.bound << ':' << cp.count;
        report.witness = os.str();
    }
}

std::string join(const std::vector<BigInt>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ']';
    return os.str();
}

// The reduction pipeline for a non-degenerate minimal recurrence: scaling
// search, then stripping the primes of r_k.
void infinitude_trace(const LinearRecurrence& minimal, const InfinitudeOptions& options,
                      std::vector<std::string>& trace) {
    trace.push_back("minimal order " + std::to_string(minimal.order()) + ", g = " +
                    minimal.characteristic().to_string());
    LinearRecurrence reduced = minimal;
    bool scaled = false;
    for (std::size_t s = 1; s <= options.max_s && !scaled; ++s) {
        ScalingReport cand = scaling_candidate(minimal, s);
        trace.push_back("scaling s=" + std::to_string(s) + ": m=" + join(cand.m_coeffs) + " t=" + cand.t.get_str() +
                        " scaled=" + join(cand.scaled_coeffs) + " coprime=" + (cand.coprime ? "yes" : "no"));
        if (!cand.coprime) continue;
        ScalingReport check = verify_scaling(minimal, s, cand.t, options.scaling_terms);
        if (check.base_case_ok.value_or(false) && check.quotient_recurrence) {
            trace.push_back("verify_scaling s=" + std::to_string(s) + " t=" + cand.t.get_str() + ": t^n | a_{sn} for n <= " +
                            std::to_string(options.scaling_terms));
            reduced = *check.quotient_recurrence;
        } else if (check.failure_witness) {
            trace.push_back("verify_scaling s=" + std::to_string(s) + " t=" + cand.t.get_str() + ": fails at n=" +
                            std::to_string(check.failure_witness->n) + " (a_{sn}=" + check.failure_witness->term.get_str() +
                            ", t^n=" + check.failure_witness->required_power.get_str() + ")");
        }
        scaled = true;
    }
    if (reduced.coeff_gcd() != 1) {
        trace.push_back("GCD(r) = " + reduced.coeff_gcd().get_str() + " != 1; prime stripping skipped");
        return;
    }
    std::vector<BigInt> primes;
    for (const auto& [p, e] : factorize(reduced.coeffs().back())) primes.push_back(p);
    if (primes.empty()) {
        trace.push_back("r_k = " + reduced.coeffs().back().get_str() + " has no prime divisors; nothing to strip");
        return;
    }
    try {
        StripOptions strip;
        strip.limits = options.divisors.limits;
        StrippedSequence st = strip_primes(reduced, primes, strip);
        trace.insert(trace.end(), st.trace.begin(), st.trace.end());
        std::vector<BigInt> head = evaluate(st.recurrence, 19);
        bool coprime = true;
        for (const auto& a : head)
            for (const auto& p : primes)
                if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) coprime = false;
        trace.push_back("reduced progression offset=" + std::to_string(st.offset) + " step=" +
                        std::to_string(st.step) + " divisor=" + st.divisor.get_str() +
                        "; first 20 terms prime to r_k: " + (coprime ? "yes" : "no"));
    } catch (const std::exception& e) {
        trace.push_back(std::string("prime stripping stopped: ") + e.what());
    }
}

}  // namespace

std::string to_string(ReportStatus status) {
    switch (status) {
        case ReportStatus::ok: return "OK";
        case ReportStatus::finite: return "FINITE";
        case ReportStatus::growth_not_strict: return "GROWTH_NOT_STRICT";
        case ReportStatus::precondition_degenerate: return "PRECONDITION_DEGENERATE";
        case ReportStatus::precondition_order: return "PRECONDITION_ORDER";
        case ReportStatus::growth_unconfirmed: return "GROWTH_UNCONFIRMED";
        case ReportStatus::hypothesis_failed: return "HYPOTHESIS_FAILED";
    }
    return "OK";
}

ReportStatus report_status_from_string(const std::string& text) {
    for (auto s : {ReportStatus::ok, ReportStatus::finite, ReportStatus::growth_not_strict,
                   ReportStatus::precondition_degenerate, ReportStatus::precondition_order,
                   ReportStatus::growth_unconfirmed, ReportStatus::hypothesis_failed}) {
        if (to_string(s) == text) return s;
    }
    throw DomainError("unknown report status '" + text + "'");
}

std::vector<std::uint64_t> zero_term_indices(const SequenceSource& src, std::size_t count) {
    std::vector<std::uint64_t> zeros;
    TermStream ts(src);
    for (std::size_t n = 0; n < count; ++n) {
        if (ts.current() == 0) zeros.push_back(n);
        if (mpz_sizeinbase(ts.current().get_mpz_t(), 2) > kZeroScanBitLimit) break;
        ts.advance();
    }
    return zeros;
}

PrimeVerdict is_prime_divisor(const SequenceSource& src, std::uint64_t p, const DivisorOptions& options) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    std::vector<std::uint64_t> zeros;
    if (options.zero_policy == ZeroTermPolicy::skip) zeros = zero_term_indices(src, options.zero_scan);
    auto first = first_divisible_index(src, BigInt(static_cast<unsigned long>(p)), zeros, options.limits);
    return {first.has_value(), first};
}

DivisorReport enumerate_prime_divisors(const SequenceSource& src, std::uint64_t prime_bound,
                                       const std::vector<std::uint64_t>& checkpoints, const DivisorOptions& options) {
    return enumerate_excluding(src, prime_bound, checkpoints, options, BigInt(1));
}

DivisorReport schur_profile(const IntPoly& f, std::uint64_t prime_bound, const std::vector<std::uint64_t>& checkpoints,
                            const DivisorOptions& options) {
    DivisorReport report = enumerate_prime_divisors(PolynomialSequence{f}, prime_bound, checkpoints, options);
    if (f.degree() <= 0) {
        report.status = ReportStatus::finite;
        report.witness = "constant polynomial " + f.coeff(0).get_str();
        return report;
    }
    apply_growth(report);
    return report;
}

DivisorReport verify_infinitude(const LinearRecurrence& rec, std::uint64_t prime_bound,
                                const std::vector<std::uint64_t>& checkpoints, const InfinitudeOptions& options) {
    DivisorReport report = enumerate_prime_divisors(rec, prime_bound, checkpoints, options.divisors);
    std::optional<LinearRecurrence> minimal;
    try {
        minimal = minimal_order(rec);
    } catch (const DomainError&) {
        report.status = ReportStatus::precondition_order;
        report.witness = "identically zero sequence";
        return report;
    }
    if (minimal->order() <= 1) {
        report.status = ReportStatus::precondition_order;
        report.witness = "minimal order " + std::to_string(minimal->order()) + " (theorem needs order > 1)";
        return report;
    }
    DegeneracyVerdict deg = is_degenerate(*minimal);
    if (deg.degenerate) {
        report.status = ReportStatus::precondition_degenerate;
        report.witness = "Phi_" + std::to_string(*deg.witness);
        return report;
    }
    apply_growth(report);
    if (options.trace) infinitude_trace(*minimal, options, report.trace);
    return report;
}

DivisorReport verify_generalized(const NonlinearRecurrence& rec, std::uint64_t prime_bound,
                                 const std::vector<std::uint64_t>& checkpoints, const GrowthWindow& window,
                                 const DivisorOptions& options) {
    DivisorReport report = enumerate_prime_divisors(rec, prime_bound, checkpoints, options);
    const std::size_t start = window.start ? window.start : rec.k() + 1;
    std::vector<BigInt> terms = evaluate(rec, start + window.length);
    for (std::size_t n = start; n < start + window.length; ++n) {
        if (abs(terms[n + 1]) <= abs(terms[n])) {
            report.status = ReportStatus::growth_unconfirmed;
            report.witness = "|a_" + std::to_string(n + 1) + "| <= |a_" + std::to_string(n) + "| (" +
                             terms[n + 1].get_str() + " vs " + terms[n].get_str() + ")";
            return report;
        }
    }
    apply_growth(report);
    return report;
}

DivisorReport coprime_prime_divisors(const SequenceSource& src, const BigInt& m, std::uint64_t prime_bound,
                                     const std::vector<std::uint64_t>& checkpoints, const DivisorOptions& options) {
    if (m < 1) throw DomainError("coprimality modulus must be positive");
    DivisorReport report = enumerate_excluding(src, prime_bound, checkpoints, options, m);
    if (auto n = first_noncoprime_index(src, m, options.limits)) {
        report.status = ReportStatus::hypothesis_failed;
        report.witness = "n=" + std::to_string(*n) + ": gcd(a_n, " + m.get_str() + ") != 1";
        return report;
    }
    apply_growth(report);
    return report;
}

}  // namespace recurseq
