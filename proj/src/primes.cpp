#include "recurseq/primes.hpp"

#include <algorithm>
#include <map>

#include "recurseq/errors.hpp"

namespace recurseq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool fits_u64(const BigInt& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const BigInt& n) {
    u64 v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
    return v;
}

// Brent's variant of Pollard rho; n odd composite.
BigInt rho_factor(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, g = 1, q = 1, ys;
        std::size_t r = 1;
        const std::size_t m = 64;
        auto f = [&](const BigInt& v) {
            BigInt t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        while (g == 1) {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = f(y);
            std::size_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    BigInt d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                BigInt d = abs(BigInt(x - ys));
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const BigInt& n, std::map<BigInt, std::size_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = rho_factor(n);
    split(d, out);
    split(BigInt(n / d), out);
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic witness set for all n < 2^64.
    for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<BigInt, std::size_t>> factorize(const BigInt& n) {
    if (n == 0) throw DomainError("factorize(0)");
    BigInt rest = abs(n);
    std::map<BigInt, std::size_t> found;
    for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            BigInt prime = p;
            found[prime] = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
        }
    }
    if (rest > 1) split(rest, found);
    return {found.begin(), found.end()};
}

}  // namespace recurseq
