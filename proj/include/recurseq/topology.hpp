#pragma once

// Congruence classes Con(a, b) = {x in Z : x == a mod b}, the open basis of
// Furstenberg's topology on Z, and the 𝓕_m variant whose basis moduli are
// prime to m.

#include <optional>
#include <vector>

#include "recurseq/exact_algebra.hpp"
#include "recurseq/modular_analysis.hpp"
#include "recurseq/recurrences.hpp"

namespace recurseq {

class CongruenceClass {
public:
    // Canonicalizes a into [0, b).  Throws DomainError for b < 1.
    CongruenceClass(const BigInt& a, const BigInt& b);

    const BigInt& residue() const { return a_; }
    const BigInt& modulus() const { return b_; }

    friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;

private:
    BigInt a_;
    BigInt b_;
};

bool member(const BigInt& x, const CongruenceClass& c);

// Con(a1,b1) ∩ Con(a2,b2) via CRT; nullopt when empty.
std::optional<CongruenceClass> intersect(const CongruenceClass& c1, const CongruenceClass& c2);

// gcd(b, |m|) == 1.  Throws DomainError for m == 0.
bool fm_basis_valid(const CongruenceClass& c, const BigInt& m);

// Period certificate mod b: on the periodic tail n -> a_n pulls every
// Con(r, b) back to a union of classes mod period.
PeriodCertificate continuity_certificate(const SequenceSource& src, const BigInt& b, const ScanLimits& limits = {});

// prod(primes) + 1, or 2 for the empty set.  Lies outside {1, -1} and outside
// every Con(0, p).  Throws DomainError if an element is not prime.
BigInt euclid_witness(const std::vector<BigInt>& primes);

}  // namespace recurseq
