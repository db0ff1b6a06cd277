#include "recurseq/modular_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "recurseq/errors.hpp"
#include "recurseq/primes.hpp"

namespace recurseq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt reduce(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

u64 to_u64(const BigInt& n) {
    u64 v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
    return v;
}

struct Mod64 {
    using Word = u64;
    u64 m;
    BigInt big_m;

    explicit Mod64(const BigInt& modulus) : m(to_u64(modulus)), big_m(modulus) {}
    Word from(const BigInt& x) const { return to_u64(reduce(x, big_m)); }
    Word add(Word a, Word b) const {
        Word s = a + b;
        return s >= m ? s - m : s;
    }
    Word neg(Word a) const { return a == 0 ? 0 : m - a; }
    Word mul(Word a, Word b) const { return static_cast<u64>(static_cast<u128>(a) * b % m); }
    Word pow(Word b, unsigned e) const {
        Word r = 1 % m;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    static bool is_zero(Word a) { return a == 0; }
    bool coprime(Word a) const { return std::gcd(a, m) == 1; }
    static BigInt to_big(Word a) { return BigInt(static_cast<unsigned long>(a)); }
};

struct ModBig {
    using Word = BigInt;
    BigInt m;

    explicit ModBig(const BigInt& modulus) : m(modulus) {}
    Word from(const BigInt& x) const { return reduce(x, m); }
    Word add(const Word& a, const Word& b) const {
        Word s = a + b;
        if (s >= m) s -= m;
        return s;
    }
    Word neg(const Word& a) const { return a == 0 ? Word(0) : Word(m - a); }
    Word mul(const Word& a, const Word& b) const { return reduce(Word(a * b), m); }
    Word pow(const Word& b, unsigned e) const {
        Word r;
        mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), e, m.get_mpz_t());
        return r;
    }
    static bool is_zero(const Word& a) { return a == 0; }
    bool coprime(const Word& a) const {
        Word g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        return g == 1;
    }
    static BigInt to_big(const Word& a) { return a; }
};

// Deterministic state machine on (a_n, ..., a_{n+w-1}) mod m.
template <class Mod>
class Stepper {
public:
    using Word = typename Mod::Word;

    Stepper(const SequenceSource& src, const BigInt& m) : mod_(m) {
        if (const auto* poly = std::get_if<PolynomialSequence>(&src)) {
            init_linear(from_polynomial(poly->f));
        } else if (const auto* lin = std::get_if<LinearRecurrence>(&src)) {
            init_linear(*lin);
        } else {
            const auto& nl = std::get<NonlinearRecurrence>(src);
            linear_ = false;
            sign_ = nl.sign();
            for (const auto& mono : nl.poly()) terms_.push_back({mono.exps, mod_.from(mono.coeff)});
            for (const auto& a : nl.initial()) state_.push_back(mod_.from(a));
            pure_ = true;
        }
    }

    static bool is_zero_word(const Word& w) { return Mod::is_zero(w); }
    static BigInt to_big_word(const Word& w) { return Mod::to_big(w); }

    const Word& head() const { return state_.front(); }
    bool purely_periodic() const { return pure_; }
    const Mod& mod() const { return mod_; }

    bool same_state(const Stepper& other) const { return state_ == other.state_; }

    bool state_is_zero() const {
        return std::all_of(state_.begin(), state_.end(), [](const Word& w) { return Mod::is_zero(w); });
    }

    void step() {
        Word next{};
        const std::size_t w = state_.size();
        if (linear_) {
            next = Word(0);
            for (std::size_t i = 1; i <= w; ++i) next = mod_.add(next, mod_.mul(coeffs_[i - 1], state_[w - i]));
        } else {
            next = Word(0);
            for (const auto& t : terms_) {
                Word v = t.coeff;
                for (std::size_t j = 0; j < t.exps.size(); ++j)
                    if (t.exps[j]) v = mod_.mul(v, mod_.pow(state_[j + 1], t.exps[j]));
                next = mod_.add(next, v);
            }
            next = mod_.add(next, sign_ > 0 ? state_.front() : mod_.neg(state_.front()));
        }
        std::move(state_.begin() + 1, state_.end(), state_.begin());
        state_.back() = std::move(next);
    }

private:
    struct Term {
        std::vector<unsigned> exps;
        Word coeff;
    };

    void init_linear(const LinearRecurrence& rec) {
        linear_ = true;
        for (const auto& c : rec.coeffs()) coeffs_.push_back(mod_.from(c));
        for (const auto& a : rec.initial()) state_.push_back(mod_.from(a));
        pure_ = mod_.coprime(coeffs_.back());
    }

    Mod mod_;
    bool linear_ = true;
    bool pure_ = false;
    int sign_ = 1;
    std::vector<Word> coeffs_;
    std::vector<Term> terms_;
    std::vector<Word> state_;
};

constexpr unsigned kWordBits = 62;

template <class F>
decltype(auto) with_stepper(const SequenceSource& src, const BigInt& m, F&& f) {
    if (m < 1) throw DomainError("modulus must be positive, got " + m.get_str());
    if (mpz_sizeinbase(m.get_mpz_t(), 2) <= kWordBits) return f(Stepper<Mod64>(src, m));
    return f(Stepper<ModBig>(src, m));
}

void check_cap(u64 steps, const ScanLimits& limits, const BigInt& m) {
    if (steps > limits.state_cap) {
        throw BoundExceeded("period scan modulo " + m.get_str() + " exceeded the state cap of " +
                            std::to_string(limits.state_cap) + " transitions");
    }
}

// Smallest mu with x_mu == x_{mu+lambda}, given the cycle length lambda.
template <class S>
u64 find_preperiod(const S& start, u64 lambda) {
    S tort = start;
    S hare = start;
    for (u64 i = 0; i < lambda; ++i) hare.step();
    u64 mu = 0;
    while (!tort.same_state(hare)) {
        tort.step();
        hare.step();
        ++mu;
    }
    return mu;
}

template <class S>
PeriodCertificate find_period(const S& start, const BigInt& m, const ScanLimits& limits) {
    PeriodCertificate cert;
    cert.modulus = m;
    if (start.purely_periodic()) {
        S cur = start;
        u64 n = 0;
        do {
            cur.step();
            check_cap(++n, limits, m);
        } while (!cur.same_state(start));
        cert.preperiod = 0;
        cert.period = n;
    } else {
        // Brent's cycle detection.
        u64 power = 1, lambda = 1, steps = 1;
        S tort = start;
        S hare = start;
        hare.step();
        while (!tort.same_state(hare)) {
            if (power == lambda) {
                tort = hare;
                power *= 2;
                lambda = 0;
            }
            hare.step();
            ++lambda;
            check_cap(++steps, limits, m);
        }
        cert.period = lambda;
        cert.preperiod = find_preperiod(start, lambda);
    }
    cert.cycle_residue_states = cert.preperiod + cert.period;
    return cert;
}

// Ascending scan for the first index whose residue satisfies `hit` and is
// not listed in `skip`.  Covers at least preperiod + period + extra indices.
template <class S, class Hit>
std::optional<u64> first_hit(const S& start, Hit hit, std::span<const u64> skip, const BigInt& m,
                             const ScanLimits& limits) {
    const u64 extra = skip.empty() ? 0 : skip.back() + 1;
    auto accept = [&](const S& s, u64 n) {
        return hit(s.head()) && !std::binary_search(skip.begin(), skip.end(), n);
    };
    if (accept(start, 0)) return 0;

    S hare = start;
    u64 n = 0;
    auto advance = [&]() -> bool {
        hare.step();
        check_cap(++n, limits, m);
        return accept(hare, n);
    };

    u64 cycle_end = 0;  // preperiod + period once known
    if (start.purely_periodic()) {
        do {
            if (advance()) return n;
        } while (!hare.same_state(start));
        cycle_end = n;
    } else {
        u64 power = 1, lambda = 1;
        S tort = start;
        if (advance()) return n;
        while (!tort.same_state(hare)) {
            if (power == lambda) {
                tort = hare;
                power *= 2;
                lambda = 0;
            }
            if (advance()) return n;
            ++lambda;
        }
        if (extra == 0) return std::nullopt;
        cycle_end = find_preperiod(start, lambda) + lambda;
    }
    while (n + 1 < cycle_end + extra) {
        if (advance()) return n;
    }
    return std::nullopt;
}

}  // namespace

PeriodCertificate period_mod(const SequenceSource& src, const BigInt& m, const ScanLimits& limits) {
    return with_stepper(src, m, [&](auto start) { return find_period(start, m, limits); });
}

bool is_null_divisor(const SequenceSource& src, const BigInt& m, const ScanLimits& limits) {
    return with_stepper(src, m, [&](auto start) {
        PeriodCertificate cert = find_period(start, m, limits);
        auto cur = start;
        for (u64 i = 0; i < cert.preperiod; ++i) cur.step();
        for (u64 i = 0; i < cert.period; ++i) {
            if (!decltype(start)::is_zero_word(cur.head())) return false;
            cur.step();
        }
        return true;
    });
}

PrimeIndexResult prime_index(const SequenceSource& src, const BigInt& p, std::size_t j_cap, const ScanLimits& limits) {
    if (!is_prime(p)) throw DomainError("prime_index needs a prime, got " + p.get_str());
    PrimeIndexResult out;
    if (const auto* lin = std::get_if<LinearRecurrence>(&src)) {
        out.coeff_gcd = lin->coeff_gcd();
    } else if (const auto* poly = std::get_if<PolynomialSequence>(&src)) {
        out.coeff_gcd = from_polynomial(poly->f).coeff_gcd();
    }
    BigInt m = 1;
    for (std::size_t j = 1; j <= j_cap; ++j) {
        m *= p;
        if (!is_null_divisor(src, m, limits)) {
            out.index = j - 1;
            return out;
        }
    }
    out.index = j_cap;
    out.cap_exceeded = true;
    if (out.coeff_gcd) {
        if (*out.coeff_gcd != 1) {
            out.note = "finiteness hypothesis GCD(r_1..r_k)=1 fails: GCD(r)=" + out.coeff_gcd->get_str();
        } else {
            out.note = "GCD(r_1..r_k)=1 holds; j_cap=" + std::to_string(j_cap) + " too small";
        }
    } else {
        out.note = "no coefficient-GCD hypothesis for this source type; j_cap=" + std::to_string(j_cap) + " reached";
    }
    return out;
}

ClassMaxima unbounded_on_classes(const LinearRecurrence& rec, std::size_t b, std::size_t n_max) {
    if (b == 0) throw DomainError("class modulus must be positive");
    ClassMaxima out;
    out.modulus = b;
    out.n_max = n_max;
    out.maxima.assign(b, BigInt(0));
    std::vector<BigInt> terms = evaluate(rec, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        BigInt a = abs(terms[n]);
        if (a > out.maxima[n % b]) out.maxima[n % b] = a;
    }
    try {
        LinearRecurrence minimal = minimal_order(rec);
        out.corollary_applicable = minimal.order() >= 2 && !is_degenerate(minimal).degenerate;
    } catch (const DomainError&) {
        out.corollary_applicable = false;
    }
    out.threshold = static_cast<unsigned long>(n_max / (2 * b));
    out.exceeds_threshold =
        std::all_of(out.maxima.begin(), out.maxima.end(), [&](const BigInt& v) { return v > out.threshold; });
    return out;
}

std::vector<BigInt> residues(const SequenceSource& src, const BigInt& m, std::size_t count) {
    return with_stepper(src, m, [&](auto cur) {
        std::vector<BigInt> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(decltype(cur)::to_big_word(cur.head()));
            if (i + 1 < count) cur.step();
        }
        return out;
    });
}

std::optional<std::uint64_t> first_divisible_index(const SequenceSource& src, const BigInt& m,
                                                   std::span<const std::uint64_t> skip, const ScanLimits& limits) {
    if (!std::is_sorted(skip.begin(), skip.end())) throw DomainError("skip indices must be ascending");
    return with_stepper(src, m, [&](auto start) {
        using S = decltype(start);
        return first_hit(start, [](const auto& w) { return S::is_zero_word(w); }, skip, m, limits);
    });
}

std::optional<std::uint64_t> first_noncoprime_index(const SequenceSource& src, const BigInt& m,
                                                    const ScanLimits& limits) {
    return with_stepper(src, m, [&](auto start) {
        const auto& mod = start.mod();
        return first_hit(start, [&mod](const auto& w) { return !mod.coprime(w); }, {}, m, limits);
    });
}

}  // namespace recurseq
