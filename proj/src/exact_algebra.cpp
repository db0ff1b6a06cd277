#include "recurseq/exact_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "recurseq/errors.hpp"

namespace recurseq {

namespace {

BigInt pow(const BigInt& base, std::size_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigInt exact_quotient(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

IntPoly x_power_minus_one(std::size_t n) {
    std::vector<BigInt> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

}  // namespace

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
    std::vector<BigInt> v(exponent + 1);
    v[exponent] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    BigInt c = content();
    if (leading() < 0) c = -c;
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x = exact_quotient(x, c);
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i].get_str();
    }
    return os.str();
}

IntPoly parse_poly(std::string_view text) {
    std::vector<BigInt> coeffs;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = text.find(',', pos);
        std::string_view item = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        std::string token(item);
        if (!token.empty() && token.front() == '+') token.erase(0, 1);
        bool ok = !token.empty();
        for (std::size_t i = 0; ok && i < token.size(); ++i) {
            char ch = token[i];
            ok = std::isdigit(static_cast<unsigned char>(ch)) || (i == 0 && ch == '-' && token.size() > 1);
        }
        if (!ok) {
            throw DomainError("malformed polynomial at character " + std::to_string(pos) + ": expected integer, got '" +
                              std::string(item) + "'");
        }
        coeffs.emplace_back(token, 10);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly poly_product(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
    if (p.degree() < q.degree()) return p;
    const int dq = q.degree();
    const BigInt& lc = q.leading();
    std::vector<BigInt> r(p.coeffs().begin(), p.coeffs().end());
    int e = p.degree() - dq + 1;
    int deg = static_cast<int>(r.size()) - 1;
    while (deg >= dq) {
        BigInt lead = r[deg];
        if (lead != 0) {
            const int shift = deg - dq;
            for (auto& c : r) c *= lc;
            for (int j = 0; j <= dq; ++j) r[shift + j] -= lead * q.coeffs()[j];
            --e;
        }
        r.pop_back();
        --deg;
    }
    IntPoly rem(std::move(r));
    if (e > 0) rem *= pow(lc, static_cast<std::size_t>(e));
    return rem;
}

IntPoly divide_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw DomainError("division by the zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree()) throw DomainError("inexact polynomial division");
    const int dq = q.degree();
    const BigInt& lc = q.leading();
    std::vector<BigInt> r(p.coeffs().begin(), p.coeffs().end());
    std::vector<BigInt> quot(p.degree() - dq + 1);
    for (int deg = p.degree(); deg >= dq; --deg) {
        if (r[deg] == 0) continue;
        if (!mpz_divisible_p(r[deg].get_mpz_t(), lc.get_mpz_t())) throw DomainError("inexact polynomial division");
        BigInt c = exact_quotient(r[deg], lc);
        const int shift = deg - dq;
        quot[shift] = c;
        for (int j = 0; j <= dq; ++j) r[shift + j] -= c * q.coeffs()[j];
    }
    if (!IntPoly(std::move(r)).is_zero()) throw DomainError("inexact polynomial division");
    return IntPoly(std::move(quot));
}

bool divides(const IntPoly& q, const IntPoly& p) {
    if (q.is_zero()) return p.is_zero();
    return pseudo_remainder(p, q).is_zero();
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();
    IntPoly a = p.primitive_part();
    IntPoly b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.primitive_part();
}

BigInt resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("resultant with the zero polynomial");
    if (p.degree() == 0) return pow(p.leading(), q.degree());
    if (q.degree() == 0) return pow(q.leading(), p.degree());

    IntPoly a = p;
    IntPoly b = q;
    BigInt sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
    }
    // Contents are pulled out so the PRS runs on primitive polynomials.
    const BigInt ca = a.content();
    const BigInt cb = b.content();
    const BigInt t = pow(ca, b.degree()) * pow(cb, a.degree());
    for (IntPoly* x : {&a, &b}) {
        const BigInt c = x->content();
        std::vector<BigInt> v(x->coeffs().begin(), x->coeffs().end());
        for (auto& y : v) y = exact_quotient(y, c);
        *x = IntPoly(std::move(v));
    }

    BigInt g = 1;
    BigInt h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) return 0;
        a = std::move(b);
        BigInt divisor = g * pow(h, delta);
        std::vector<BigInt> v(r.coeffs().begin(), r.coeffs().end());
        for (auto& y : v) y = exact_quotient(y, divisor);
        b = IntPoly(std::move(v));
        g = a.leading();
        // h <- h^(1 - delta) g^delta, delta >= 1
        h = exact_quotient(pow(g, delta), pow(h, delta - 1));
        if (b.degree() <= 0) break;
    }
    // b is a nonzero constant here.
    const int da = a.degree();
    h = exact_quotient(pow(b.leading(), da), pow(h, da - 1));
    return sign * t * h;
}

IntPoly reverse_poly(const IntPoly& p, std::size_t k) {
    if (p.degree() > static_cast<int>(k)) {
        throw DomainError("reverse_poly: k = " + std::to_string(k) + " is below deg p = " + std::to_string(p.degree()));
    }
    std::vector<BigInt> out(k + 1);
    for (std::size_t i = 0; i < p.size(); ++i) out[k - i] = p.coeffs()[i];
    return IntPoly(std::move(out));
}

IntPoly cyclotomic(std::size_t n) {
    if (n == 0) throw DomainError("cyclotomic index must be positive");
    std::vector<std::size_t> divisors;
    for (std::size_t d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::map<std::size_t, IntPoly> phi;
    for (std::size_t d : divisors) {
        IntPoly acc = x_power_minus_one(d);
        for (const auto& [e, pe] : phi)
            if (d % e == 0) acc = divide_exact(acc, pe);
        phi.emplace(d, std::move(acc));
    }
    return phi.at(n);
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    if (p.degree() == 0) return IntPoly{1};
    IntPoly pp = p.primitive_part();
    return divide_exact(pp, poly_gcd(pp, pp.derivative())).primitive_part();
}

std::size_t p_adic_valuation(const BigInt& p, const BigInt& n) {
    if (n == 0) throw DomainError("p-adic valuation of 0 is infinite");
    if (p < 2) throw DomainError("p-adic valuation needs p >= 2");
    BigInt rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::size_t euler_phi(std::size_t n) {
    std::size_t result = n;
    for (std::size_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly interpolate(std::span<const BigInt> xs, std::span<const BigInt> ys) {
    if (xs.size() != ys.size()) throw DomainError("interpolate: size mismatch");
    const std::size_t n = xs.size();
    std::vector<mpq_class> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            if (xs[i] == xs[i - level]) throw DomainError("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - level]);
        }
    }
    // Horner on the Newton form.
    std::vector<mpq_class> acc;
    for (std::size_t i = n; i-- > 0;) {
        std::vector<mpq_class> next(acc.size() + 1);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j];
            next[j] -= acc[j] * mpq_class(xs[i]);
        }
        next[0] += dd[i];
        acc = std::move(next);
    }
    std::vector<BigInt> out;
    out.reserve(acc.size());
    for (auto& c : acc) {
        c.canonicalize();
        if (c.get_den() != 1) throw DomainError("interpolate: non-integral interpolant");
        out.push_back(c.get_num());
    }
    return IntPoly(std::move(out));
}

}  // namespace recurseq
