#include "recurseq/transforms.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "recurseq/errors.hpp"
#include "recurseq/primes.hpp"

namespace recurseq {

namespace {

BigInt pow(const BigInt& base, std::size_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool divisible(const BigInt& a, const BigInt& d) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }

std::vector<BigInt> coefficients_of(const IntPoly& h) {
    std::vector<BigInt> m;
    for (int i = 1; i <= h.degree(); ++i) m.push_back(-h.coeff(static_cast<std::size_t>(i)));
    return m;
}

BigInt gcd_of(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

// Fills m_coeffs, scaled_coeffs and coprime for the given t.
void fill_scaled(ScalingReport& report) {
    report.scaled_coeffs.clear();
    report.has_zero_coeff =
        std::any_of(report.m_coeffs.begin(), report.m_coeffs.end(), [](const BigInt& x) { return x == 0; });
    std::vector<BigInt> scaled;
    for (std::size_t i = 0; i < report.m_coeffs.size(); ++i) {
        BigInt ti = pow(report.t, i + 1);
        if (!divisible(report.m_coeffs[i], ti)) {
            report.coprime = false;
            return;
        }
        scaled.push_back(report.m_coeffs[i] / ti);
    }
    report.scaled_coeffs = std::move(scaled);
    report.coprime = gcd_of(report.scaled_coeffs) == 1;
}

}  // namespace

std::vector<BigInt> SubsequenceSpec::terms(std::size_t count) const {
    std::vector<BigInt> out;
    if (count == 0) return out;
    std::vector<BigInt> all = evaluate(base, offset + step * (count - 1));
    BigInt scale = divisor_extracted;
    for (std::size_t n = 0; n < count; ++n) {
        const BigInt& a = all[offset + step * n];
        if (!divisible(a, scale)) {
            throw DomainError("subsequence term " + std::to_string(n) + " is not divisible by " + scale.get_str());
        }
        out.push_back(a / scale);
        scale *= geometric_divisor;
    }
    return out;
}

IntPoly phi_b(const IntPoly& g, std::size_t b) {
    if (g.coeff(0) != 1) throw DomainError("phi_b needs g(0) = 1");
    if (b == 0) throw DomainError("phi_b needs b >= 1");
    const int k = g.degree();
    if (b == 1 || k == 0) return g;
    const IntPoly monic = reverse_poly(g, static_cast<std::size_t>(k));
    // H(x) = Res_y(G(y), x - y^b) = prod (x - psi_i^b), monic of degree k.
    std::vector<BigInt> xs, ys;
    for (int j = 0; j <= k; ++j) {
        BigInt x0 = j;
        IntPoly shifted = IntPoly::monomial(BigInt(-1), b) + IntPoly::constant(x0);
        xs.push_back(x0);
        ys.push_back(resultant(monic, shifted));
    }
    IntPoly h = interpolate(xs, ys);
    return reverse_poly(h, static_cast<std::size_t>(k));
}

SubsequenceRecurrence subsequence_recurrence(const LinearRecurrence& rec, std::size_t c, std::size_t b) {
    if (b == 0) throw DomainError("subsequence step must be positive");
    if (c >= b) {
        throw DomainError("subsequence offset c = " + std::to_string(c) + " must be below step b = " +
                          std::to_string(b));
    }
    const std::size_t k = rec.order();
    IntPoly gb = phi_b(rec.characteristic(), b);
    std::vector<BigInt> terms = evaluate(rec, c + (k - 1) * b);
    std::vector<BigInt> initial;
    for (std::size_t i = 0; i < k; ++i) initial.push_back(terms[c + i * b]);
    SubsequenceRecurrence out{recurrence_from_characteristic(gb, std::move(initial)), 0, false};
    const auto& init = out.recurrence.initial();
    if (std::all_of(init.begin(), init.end(), [](const BigInt& x) { return x == 0; })) {
        out.minimal_order = 0;
    } else {
        out.minimal_order = minimal_order(out.recurrence).order();
    }
    out.minimality_lost = out.minimal_order < k;
    return out;
}

BigInt max_scaling_factor(const std::vector<BigInt>& m_coeffs) {
    BigInt g = gcd_of(m_coeffs);
    if (g == 0 || g == 1) return 1;
    BigInt t = 1;
    for (const auto& [p, unused] : factorize(g)) {
        std::size_t e = SIZE_MAX;
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            if (m_coeffs[i] == 0) continue;
            e = std::min(e, p_adic_valuation(p, m_coeffs[i]) / (i + 1));
        }
        if (e != SIZE_MAX) t *= pow(p, e);
    }
    return t;
}

ScalingReport scaling_candidate(const LinearRecurrence& rec, std::size_t s) {
    if (s == 0) throw DomainError("scaling exponent s must be positive");
    ScalingReport report;
    report.s = s;
    report.m_coeffs = coefficients_of(phi_b(rec.characteristic(), s));
    report.t = max_scaling_factor(report.m_coeffs);
    fill_scaled(report);
    return report;
}

ScalingReport verify_scaling(const LinearRecurrence& rec, std::size_t s, const BigInt& t, std::size_t n_max) {
    if (s == 0) throw DomainError("scaling exponent s must be positive");
    if (t < 1) throw DomainError("scaling factor t must be positive");
    ScalingReport report;
    report.s = s;
    report.t = t;
    report.m_coeffs = coefficients_of(phi_b(rec.characteristic(), s));
    fill_scaled(report);

    std::vector<BigInt> terms = evaluate(rec, s * n_max);
    BigInt power = 1;
    std::vector<BigInt> quotients;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const BigInt& a = terms[s * n];
        if (!divisible(a, power)) {
            report.base_case_ok = false;
            report.failure_witness = ScalingWitness{n, a, power};
            return report;
        }
        quotients.push_back(a / power);
        power *= t;
    }
    report.base_case_ok = true;
    report.quotient = SubsequenceSpec{rec, 0, s, 1, t};
    const std::size_t k = rec.order();
    if (!report.scaled_coeffs.empty() && quotients.size() >= k) {
        report.quotient_recurrence =
            LinearRecurrence(report.scaled_coeffs, std::vector<BigInt>(quotients.begin(), quotients.begin() + k));
    }
    return report;
}

StripResult strip_prime(const LinearRecurrence& rec, const BigInt& p, const StripOptions& options) {
    if (!is_prime(p)) throw DomainError("strip_prime needs a prime, got " + p.get_str());
    if (options.l_margin == 0) throw DomainError("l_margin must be positive");

    StripResult out{SubsequenceSpec{rec, 0, 1, 1, 1}, 0, 0, PeriodCertificate{}, false};
    if (!first_divisible_index(rec, p, {}, options.limits)) {
        out.identity = true;
        out.l = options.l_margin;
        out.certificate = period_mod(rec, p, options.limits);
        return out;
    }

    PrimeIndexResult idx = prime_index(rec, p, options.j_cap, options.limits);
    if (idx.cap_exceeded) {
        throw PreconditionViolated(p.get_str() + "^" + std::to_string(options.j_cap) +
                                   " is still a null divisor; " + idx.note);
    }
    out.index = idx.index;
    out.l = idx.index + options.l_margin;
    const BigInt modulus = pow(p, out.l);
    out.certificate = period_mod(rec, modulus, options.limits);
    const std::uint64_t sigma = out.certificate.preperiod;
    const std::uint64_t pi = out.certificate.period;

    std::vector<BigInt> r = residues(rec, modulus, sigma + pi);
    std::uint64_t t = sigma;
    while (t < sigma + pi && r[t] == 0) ++t;
    if (t == sigma + pi) {
        throw PreconditionViolated(modulus.get_str() + " is a null divisor");
    }
    // Smallest multiple of the period exceeding t keeps 0 <= t < step.
    const std::uint64_t step = pi * (t / pi + 1);
    out.spec.offset = t;
    out.spec.step = step;
    out.spec.divisor_extracted = pow(p, p_adic_valuation(p, r[t]));
    return out;
}

StrippedSequence strip_primes(const LinearRecurrence& rec, const std::vector<BigInt>& primes,
                              const StripOptions& options) {
    StrippedSequence out{0, 1, 1, rec, {}};
    for (const auto& p : primes) {
        StripResult res = strip_prime(out.recurrence, p, options);
        std::ostringstream line;
        line << "strip p=" << p.get_str() << ": index=" << res.index << " l=" << res.l
             << " period=" << res.certificate.period << " preperiod=" << res.certificate.preperiod
             << " -> offset=" << res.spec.offset << " step=" << res.spec.step
             << " divisor=" << res.spec.divisor_extracted.get_str() << (res.identity ? " (identity)" : "");
        out.trace.push_back(line.str());
        if (res.identity) continue;

        SubsequenceRecurrence sub = subsequence_recurrence(out.recurrence, res.spec.offset, res.spec.step);
        std::vector<BigInt> initial = sub.recurrence.initial();
        for (auto& a : initial) {
            if (!divisible(a, res.spec.divisor_extracted)) throw DomainError("strip_primes: inexact division");
            a /= res.spec.divisor_extracted;
        }
        out.recurrence = LinearRecurrence(sub.recurrence.coeffs(), std::move(initial));
        out.offset += out.step * res.spec.offset;
        out.step *= res.spec.step;
        out.divisor *= res.spec.divisor_extracted;
    }
    return out;
}

}  // namespace recurseq
