#include "recurseq/recurrences.hpp"

#include <cassert>
#include <sstream>
#include <utility>

#include "recurseq/errors.hpp"

namespace recurseq {

namespace {

std::string join(const std::vector<BigInt>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ']';
    return os.str();
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

LinearRecurrence::LinearRecurrence(std::vector<BigInt> coeffs, std::vector<BigInt> initial)
    : coeffs_(std::move(coeffs)), initial_(std::move(initial)) {
    if (coeffs_.empty()) throw DomainError("linear recurrence needs order >= 1");
    if (coeffs_.size() != initial_.size()) {
        throw DomainError("linear recurrence: " + std::to_string(coeffs_.size()) + " coefficients but " +
                          std::to_string(initial_.size()) + " initial terms");
    }
    if (coeffs_.back() == 0) throw DomainError("linear recurrence: r_k must be nonzero");
}

IntPoly LinearRecurrence::characteristic() const {
    std::vector<BigInt> g(coeffs_.size() + 1);
    g[0] = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) g[i + 1] = -coeffs_[i];
    return IntPoly(std::move(g));
}

BigInt LinearRecurrence::coeff_gcd() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

LinearRecurrence recurrence_from_characteristic(const IntPoly& g, std::vector<BigInt> initial) {
    if (g.coeff(0) != 1) throw DomainError("characteristic polynomial must have constant term 1");
    std::vector<BigInt> coeffs;
    for (int i = 1; i <= g.degree(); ++i) coeffs.push_back(-g.coeff(i));
    return LinearRecurrence(std::move(coeffs), std::move(initial));
}

std::vector<BigInt> RationalGF::expand(std::size_t count) const {
    if (denominator.coeff(0) != 1) throw DomainError("generating function denominator must have g(0) = 1");
    std::vector<BigInt> a(count);
    const std::size_t dg = denominator.size();
    for (std::size_t n = 0; n < count; ++n) {
        BigInt v = numerator.coeff(n);
        for (std::size_t i = 1; i < dg && i <= n; ++i) v -= denominator.coeffs()[i] * a[n - i];
        a[n] = v;
    }
    return a;
}

NonlinearRecurrence::NonlinearRecurrence(std::size_t k, int sign, std::vector<Monomial> poly,
                                         std::vector<BigInt> initial)
    : k_(k), sign_(sign), poly_(std::move(poly)), initial_(std::move(initial)) {
    if (k_ == 0) throw DomainError("nonlinear recurrence needs k >= 1");
    if (sign_ != 1 && sign_ != -1) throw DomainError("nonlinear recurrence sign must be +1 or -1");
    if (initial_.size() != k_ + 1) {
        throw DomainError("nonlinear recurrence needs k+1 = " + std::to_string(k_ + 1) + " initial terms, got " +
                          std::to_string(initial_.size()));
    }
    for (const auto& m : poly_) {
        if (m.exps.size() != k_) {
            throw DomainError("monomial has " + std::to_string(m.exps.size()) + " exponents, expected " +
                              std::to_string(k_));
        }
    }
}

BigInt NonlinearRecurrence::apply(const std::vector<BigInt>& args) const {
    BigInt sum = 0;
    for (const auto& m : poly_) {
        BigInt term = m.coeff;
        for (std::size_t j = 0; j < k_; ++j) {
            if (m.exps[j] == 0) continue;
            BigInt p;
            mpz_pow_ui(p.get_mpz_t(), args[j].get_mpz_t(), m.exps[j]);
            term *= p;
        }
        sum += term;
    }
    return sum;
}

TermStream::TermStream(SequenceSource src) : src_(std::move(src)) {
    std::visit(
        [this](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PolynomialSequence>) {
                window_ = {s.f.evaluate(0)};
            } else {
                window_ = s.initial();
            }
        },
        src_);
}

void TermStream::advance() {
    std::visit(
        [this](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LinearRecurrence>) {
                const std::size_t k = s.order();
                BigInt next = 0;
                for (std::size_t i = 1; i <= k; ++i)
                    mpz_addmul(next.get_mpz_t(), s.coeffs()[i - 1].get_mpz_t(), window_[k - i].get_mpz_t());
                window_.erase(window_.begin());
                window_.push_back(std::move(next));
            } else if constexpr (std::is_same_v<T, NonlinearRecurrence>) {
                std::vector<BigInt> args(window_.begin() + 1, window_.end());
                BigInt next = s.apply(args);
                if (s.sign() > 0) next += window_.front();
                else next -= window_.front();
                window_.erase(window_.begin());
                window_.push_back(std::move(next));
            } else {
                window_.front() = s.f.evaluate(BigInt(static_cast<unsigned long>(index_ + 1)));
            }
        },
        src_);
    ++index_;
}

std::vector<BigInt> evaluate(const SequenceSource& src, std::size_t n_max) {
    std::vector<BigInt> out;
    out.reserve(n_max + 1);
    TermStream ts(src);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(ts.current());
        if (n < n_max) ts.advance();
    }
    return out;
}

RationalGF generating_function(const LinearRecurrence& rec) {
    const std::size_t k = rec.order();
    IntPoly g = rec.characteristic();
    IntPoly prod = g * IntPoly(rec.initial());
    std::vector<BigInt> f;
    for (std::size_t i = 0; i < k; ++i) f.push_back(prod.coeff(i));
    return {IntPoly(std::move(f)), std::move(g)};
}

LinearRecurrence minimal_order(const LinearRecurrence& rec) {
    RationalGF gf = generating_function(rec);
    if (gf.numerator.is_zero()) throw DomainError("identically zero sequence has no positive minimal order");
    IntPoly d = poly_gcd(gf.numerator, gf.denominator);
    if (d.degree() <= 0) return rec;
    IntPoly g = divide_exact(gf.denominator, d);
    if (g.coeff(0) == -1) g = -g;
    if (g.coeff(0) != 1) {
        // Not an integer recurrence of lower order; impossible for integer
        // sequences (d(0) divides g(0) = 1).
        assert(false && "non-integral minimal-order renormalization");
        return rec;
    }
    const std::size_t k = static_cast<std::size_t>(g.degree());
    std::vector<BigInt> initial(rec.initial().begin(), rec.initial().begin() + static_cast<std::ptrdiff_t>(k));
    return recurrence_from_characteristic(g, std::move(initial));
}

LinearRecurrence from_polynomial(const IntPoly& f) {
    const unsigned long k = f.degree() > 0 ? static_cast<unsigned long>(f.degree()) : 0;
    std::vector<BigInt> coeffs;
    std::vector<BigInt> initial;
    for (unsigned long i = 0; i <= k; ++i) {
        BigInt c = binomial(k + 1, i + 1);
        coeffs.push_back(i % 2 ? BigInt(-c) : c);
        initial.push_back(f.evaluate(BigInt(i)));
    }
    return LinearRecurrence(std::move(coeffs), std::move(initial));
}

IntPoly root_ratio_polynomial(const IntPoly& s) {
    const int d = s.degree();
    if (d < 1) throw DomainError("root ratio polynomial needs deg >= 1");
    if (s.coeff(0) == 0) throw DomainError("root ratio polynomial needs nonzero roots");
    // Res_y(s(y), s(xy)) has degree <= d^2 in x; sample at x = 1 .. d^2 + 1.
    // Away from x = 0 the y-degree of s(xy) never drops.
    const std::size_t samples = static_cast<std::size_t>(d) * d + 1;
    std::vector<BigInt> xs, ys;
    for (std::size_t j = 1; j <= samples; ++j) {
        BigInt x0 = static_cast<unsigned long>(j);
        std::vector<BigInt> scaled(s.size());
        BigInt power = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            scaled[i] = s.coeffs()[i] * power;
            power *= x0;
        }
        xs.push_back(x0);
        ys.push_back(resultant(s, IntPoly(std::move(scaled))));
    }
    IntPoly full = interpolate(xs, ys);
    IntPoly trivial{1};
    for (int i = 0; i < d; ++i) trivial = trivial * IntPoly{-1, 1};
    return divide_exact(full, trivial);
}

DegeneracyVerdict is_degenerate(const LinearRecurrence& rec) {
    const std::size_t k = rec.order();
    if (k == 0) throw DomainError("degeneracy test needs order >= 1");
    DegeneracyVerdict v;
    v.ratio_poly = IntPoly{1};
    if (k == 1) return v;
    IntPoly monic = reverse_poly(rec.characteristic(), k);
    IntPoly s = squarefree_part(monic);
    if (s.degree() <= 1) return v;
    v.ratio_poly = root_ratio_polynomial(s);
    const std::size_t bound = static_cast<std::size_t>(v.ratio_poly.degree());
    // phi(n) >= sqrt(n/2), so phi(n) <= bound forces n <= 2 bound^2.
    for (std::size_t n = 2; n <= 2 * bound * bound + 2; ++n) {
        if (euler_phi(n) > bound) continue;
        if (poly_gcd(v.ratio_poly, cyclotomic(n)).degree() > 0) {
            v.degenerate = true;
            v.witness = n;
            return v;
        }
    }
    return v;
}

std::string describe(const SequenceSource& src) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LinearRecurrence>) {
                return "linear coeffs=" + join(s.coeffs()) + " initial=" + join(s.initial());
            } else if constexpr (std::is_same_v<T, NonlinearRecurrence>) {
                std::ostringstream os;
                os << "nonlinear k=" << s.k() << " sign=" << (s.sign() > 0 ? "+" : "-") << " terms=" << s.poly().size()
                   << " initial=" << join(s.initial());
                return os.str();
            } else {
                return "polynomial f=" + s.f.to_string();
            }
        },
        src);
}

}  // namespace recurseq
