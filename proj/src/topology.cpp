#include "recurseq/topology.hpp"

#include "recurseq/errors.hpp"
#include "recurseq/primes.hpp"

namespace recurseq {

namespace {

BigInt mod(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

CongruenceClass::CongruenceClass(const BigInt& a, const BigInt& b) : b_(b) {
    if (b < 1) throw DomainError("congruence class modulus must be positive, got " + b.get_str());
    a_ = mod(a, b);
}

bool member(const BigInt& x, const CongruenceClass& c) { return mod(x, c.modulus()) == c.residue(); }

std::optional<CongruenceClass> intersect(const CongruenceClass& c1, const CongruenceClass& c2) {
    const BigInt& b1 = c1.modulus();
    const BigInt& b2 = c2.modulus();
    BigInt g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), b1.get_mpz_t(), b2.get_mpz_t());
    const BigInt diff = c2.residue() - c1.residue();
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    // x = a1 + b1 * u * (a2 - a1) / g, with u b1 == g mod b2.
    const BigInt lcm = b1 / g * b2;
    BigInt x = c1.residue() + b1 * mod(BigInt(u * (diff / g)), BigInt(b2 / g));
    return CongruenceClass(x, lcm);
}

bool fm_basis_valid(const CongruenceClass& c, const BigInt& m) {
    if (m == 0) throw DomainError("the 𝓕_m topology needs m != 0");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), c.modulus().get_mpz_t(), m.get_mpz_t());
    return g == 1;
}

PeriodCertificate continuity_certificate(const SequenceSource& src, const BigInt& b, const ScanLimits& limits) {
    if (b < 1) throw DomainError("continuity modulus must be positive");
    return period_mod(src, b, limits);
}

BigInt euclid_witness(const std::vector<BigInt>& primes) {
    if (primes.empty()) return 2;
    BigInt product = 1;
    for (const auto& p : primes) {
        if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
        product *= p;
    }
    return product + 1;
}

}  // namespace recurseq
