#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "recurseq/errors.hpp"
#include "recurseq/prime_divisors.hpp"

using namespace recurseq;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

const LinearRecurrence kFib(ints({1, 1}), ints({0, 1}));
const PolynomialSequence kSquarePlusOne{IntPoly{1, 0, 1}};

std::vector<std::uint64_t> primes_of(const DivisorReport& r) {
    std::vector<std::uint64_t> out;
    for (const auto& d : r.divisors) out.push_back(d.p);
    return out;
}

}  // namespace

TEST_CASE("single-prime decisions") {
    DivisorOptions skip;
    skip.zero_policy = ZeroTermPolicy::skip;
    PrimeVerdict eleven = is_prime_divisor(kFib, 11, skip);
    CHECK(eleven.divides);
    CHECK(eleven.first_index == 10);
    CHECK(is_prime_divisor(kFib, 11).first_index == 0);
    CHECK_FALSE(is_prime_divisor(kSquarePlusOne, 3).divides);
    LinearRecurrence one(ints({1}), ints({1}));
    for (std::uint64_t p : {2, 3, 5, 97}) CHECK_FALSE(is_prime_divisor(one, p).divides);
    CHECK_THROWS_AS(is_prime_divisor(kFib, 9), DomainError);
}

TEST_CASE("enumeration examples") {
    CHECK(primes_of(enumerate_prime_divisors(kSquarePlusOne, 30)) == std::vector<std::uint64_t>{2, 5, 13, 17, 29});
    DivisorReport two_n = enumerate_prime_divisors(PolynomialSequence{IntPoly{0, 2}}, 200);
    CHECK(primes_of(two_n) == oracle::primes_below(200));
    DivisorReport r = enumerate_prime_divisors(LinearRecurrence(ints({1, 2}), ints({1, 1})), 12);
    CHECK(primes_of(r) == std::vector<std::uint64_t>{3, 5, 7, 11});
    CHECK(r.non_divisors == std::vector<std::uint64_t>{2});
    CHECK_FALSE(r.has_zero_term);
    CHECK(enumerate_prime_divisors(kFib, 50).has_zero_term);
}

TEST_CASE("divisor entries are sound") {
    DivisorReport r = enumerate_prime_divisors(LinearRecurrence(ints({3, -5, 2}), ints({2, 7, 1})), 200);
    std::uint64_t last = 0;
    for (const auto& d : r.divisors) last = std::max(last, d.first_n);
    auto terms = oracle::iterate_linear(ints({3, -5, 2}), ints({2, 7, 1}), last + 1);
    for (const auto& d : r.divisors) {
        CHECK(mpz_divisible_ui_p(terms[d.first_n].get_mpz_t(), d.p));
        for (std::uint64_t n = 0; n < d.first_n; ++n) CHECK_FALSE(mpz_divisible_ui_p(terms[n].get_mpz_t(), d.p));
    }
}

TEST_CASE("decisions agree with brute force on small primes") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 120; ++trial) {
        long k = oracle::uniform(rng, 1, 2);
        std::vector<BigInt> c, init;
        for (long i = 0; i < k; ++i) {
            c.emplace_back(oracle::uniform(rng, -9, 9));
            init.emplace_back(oracle::uniform(rng, -9, 9));
        }
        if (c.back() == 0) c.back() = -1;
        LinearRecurrence rec(c, init);
        for (auto p : oracle::primes_below(50)) {
            PrimeVerdict v = is_prime_divisor(rec, p);
            auto brute = oracle::brute_first_divisible(c, init, p);
            CHECK(v.divides == brute.has_value());
            CHECK(v.first_index == brute);
        }
    }
}

TEST_CASE("polynomial decisions agree with a residue scan") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<BigInt> f;
        long deg = oracle::uniform(rng, 1, 4);
        for (long i = 0; i <= deg; ++i) f.emplace_back(oracle::uniform(rng, -10, 10));
        if (f.back() == 0) f.back() = 1;
        DivisorReport r = enumerate_prime_divisors(PolynomialSequence{IntPoly(f)}, 150);
        std::vector<std::uint64_t> expect;
        for (auto p : oracle::primes_below(150))
            if (oracle::brute_poly_divisible(f, p)) expect.push_back(p);
        CHECK(primes_of(r) == expect);
    }
}

TEST_CASE("n^2 + 1 odd divisors are 1 mod 4") {
    DivisorReport r = enumerate_prime_divisors(kSquarePlusOne, 3000);
    for (auto p : primes_of(r))
        if (p != 2) CHECK(p % 4 == 1);
}

TEST_CASE("checkpoints") {
    DivisorReport r = enumerate_prime_divisors(kSquarePlusOne, 1000, {10, 100, 500, 1000});
    REQUIRE(r.checkpoints.size() == 4);
    for (std::size_t i = 1; i < r.checkpoints.size(); ++i)
        CHECK(r.checkpoints[i].count >= r.checkpoints[i - 1].count);
    CHECK(r.checkpoints[1].count == 12);
    CHECK_THROWS_AS(enumerate_prime_divisors(kSquarePlusOne, 100, {50, 20}), DomainError);
    CHECK_THROWS_AS(enumerate_prime_divisors(kSquarePlusOne, 100, {200}), DomainError);
}

TEST_CASE("parallel enumeration matches sequential") {
    DivisorOptions par;
    par.jobs = 4;
    LinearRecurrence rec(ints({1, 2}), ints({1, 1}));
    CHECK(enumerate_prime_divisors(rec, 800, {100, 800}, par) == enumerate_prime_divisors(rec, 800, {100, 800}));
}

TEST_CASE("Schur profiles") {
    DivisorReport c = schur_profile(IntPoly{12}, 100, {100});
    CHECK(c.status == ReportStatus::finite);
    CHECK(primes_of(c) == std::vector<std::uint64_t>{2, 3});
    DivisorReport x = schur_profile(IntPoly{0, 1}, 1000, {100, 1000});
    CHECK(x.checkpoints[0].count == 25);
    CHECK(x.checkpoints[1].count == 168);
    DivisorReport sq = schur_profile(IntPoly{1, 0, 1}, 1000, {100, 1000});
    CHECK(sq.status == ReportStatus::ok);
    CHECK(sq.checkpoints[0].count < sq.checkpoints[1].count);
}

TEST_CASE("infinitude verifier") {
    DivisorReport fib = verify_infinitude(kFib, 1000, {100, 1000});
    CHECK(fib.status == ReportStatus::ok);
    CHECK(fib.checkpoints[0].count < fib.checkpoints[1].count);

    DivisorReport degen = verify_infinitude(LinearRecurrence(ints({0, 1}), ints({1, 2})), 100, {100});
    CHECK(degen.status == ReportStatus::precondition_degenerate);
    CHECK(degen.witness == "Phi_2");

    DivisorReport order1 = verify_infinitude(LinearRecurrence(ints({2}), ints({1})), 100, {100});
    CHECK(order1.status == ReportStatus::precondition_order);
    CHECK(primes_of(order1) == std::vector<std::uint64_t>{2});

    InfinitudeOptions traced;
    traced.trace = true;
    DivisorReport t = verify_infinitude(LinearRecurrence(ints({2, 4}), ints({1, 3})), 200, {50, 200}, traced);
    CHECK_FALSE(t.trace.empty());
}

TEST_CASE("generalized recurrences") {
    NonlinearRecurrence sq(1, 1, {Monomial{{2}, 1}}, ints({1, 1}));
    DivisorReport r = verify_generalized(sq, 30, {30});
    auto ps = primes_of(r);
    for (std::uint64_t p : {2, 3, 5}) CHECK(std::find(ps.begin(), ps.end(), p) != ps.end());

    NonlinearRecurrence shift(1, 1, {}, ints({3, 5}));
    CHECK(verify_generalized(shift, 50, {50}).status == ReportStatus::growth_unconfirmed);
    NonlinearRecurrence flip(1, -1, {}, ints({0, 1}));
    CHECK(verify_generalized(flip, 50, {50}).status == ReportStatus::growth_unconfirmed);
}

TEST_CASE("coprime variant") {
    LinearRecurrence odd(ints({1, 2}), ints({1, 1}));
    DivisorReport r = coprime_prime_divisors(odd, 2, 100, {100});
    CHECK(r.status == ReportStatus::ok);
    CHECK(r.excluded == std::vector<std::uint64_t>{2});
    for (auto p : primes_of(r)) CHECK(p % 2 == 1);

    DivisorReport plain = enumerate_prime_divisors(odd, 100, {100});
    DivisorReport m1 = coprime_prime_divisors(odd, 1, 100, {100});
    CHECK(primes_of(m1) == primes_of(plain));
    CHECK(m1.checkpoints == plain.checkpoints);

    DivisorReport fib = coprime_prime_divisors(kFib, 2, 100, {100});
    CHECK(fib.status == ReportStatus::hypothesis_failed);
    CHECK(fib.witness.find("n=0") != std::string::npos);
}

TEST_CASE("state cap errors are reported per prime") {
    DivisorOptions tight;
    tight.limits.state_cap = 50;
    DivisorReport r = enumerate_prime_divisors(PolynomialSequence{IntPoly{1, 0, 1}}, 200, {200}, tight);
    CHECK_FALSE(r.errors.empty());
    for (const auto& e : r.errors) CHECK(e.p > 50);
}

TEST_CASE("status strings round trip") {
    for (auto s : {ReportStatus::ok, ReportStatus::finite, ReportStatus::growth_not_strict,
                   ReportStatus::precondition_degenerate, ReportStatus::precondition_order,
                   ReportStatus::growth_unconfirmed, ReportStatus::hypothesis_failed})
        CHECK(report_status_from_string(to_string(s)) == s);
    CHECK(to_string(ReportStatus::precondition_degenerate) == "PRECONDITION_DEGENERATE");
}
