#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <set>

#include <Eigen/Eigenvalues>

namespace oracle {

Coeffs schoolbook_mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt horner(const Coeffs& f, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt sylvester_resultant(const Coeffs& p, const Coeffs& q) {
    const std::size_t dp = p.size() - 1, dq = q.size() - 1;
    const std::size_t n = dp + dq;
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> s(n, std::vector<BigInt>(n, 0));
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t i = 0; i <= dp; ++i) s[r][r + i] = p[dp - i];
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t i = 0; i <= dq; ++i) s[dq + r][r + i] = q[dq - i];
    return bareiss_det(s);
}

std::vector<BigInt> iterate_linear(const Coeffs& c, const Coeffs& initial, std::size_t count) {
    std::vector<BigInt> a(initial.begin(), initial.end());
    const std::size_t k = c.size();
    while (a.size() < count) {
        BigInt next = 0;
        for (std::size_t i = 0; i < k; ++i) next += c[i] * a[a.size() - 1 - i];
        a.push_back(next);
    }
    a.resize(count);
    return a;
}

namespace {

// Solves A x = b over Q; nullopt if inconsistent.  Free variables are set to 0.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b,
                                            std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<mpq_class> x(cols, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

}  // namespace

std::vector<mpq_class> minimal_relation(const std::vector<BigInt>& terms, std::size_t max_order) {
    for (std::size_t d = 0; d <= max_order && 2 * d < terms.size(); ++d) {
        if (d == 0) {
            bool zero = true;
            for (const auto& t : terms) zero = zero && t == 0;
            if (zero) return {1};
            continue;
        }
        std::vector<std::vector<mpq_class>> a;
        std::vector<mpq_class> b;
        for (std::size_t n = 0; n + d < terms.size(); ++n) {
            std::vector<mpq_class> row;
            for (std::size_t i = 1; i <= d; ++i) row.emplace_back(terms[n + d - i]);
            a.push_back(std::move(row));
            b.emplace_back(terms[n + d]);
        }
        if (auto q = solve(a, b, d)) {
            std::vector<mpq_class> g{1};
            for (const auto& v : *q) g.push_back(-v);
            return g;
        }
    }
    return {};
}

std::optional<std::uint64_t> brute_first_divisible(const Coeffs& c, const Coeffs& initial, std::uint64_t p) {
    const std::size_t k = c.size();
    std::vector<std::int64_t> cm(k), window(k);
    auto reduce = [p](const BigInt& v) {
        BigInt r = v % static_cast<unsigned long>(p);
        if (r < 0) r += static_cast<unsigned long>(p);
        return static_cast<std::int64_t>(r.get_ui());
    };
    for (std::size_t i = 0; i < k; ++i) {
        cm[i] = reduce(c[i]);
        window[i] = reduce(initial[i]);
    }
    std::set<std::vector<std::int64_t>> seen;
    for (std::uint64_t n = 0;; ++n) {
        if (window[0] == 0) return n;
        if (!seen.insert(window).second) return std::nullopt;
        __int128 next = 0;
        for (std::size_t i = 0; i < k; ++i) next += static_cast<__int128>(cm[i]) * window[k - 1 - i];
        window.erase(window.begin());
        window.push_back(static_cast<std::int64_t>(next % p));
    }
}

std::optional<std::uint64_t> brute_poly_divisible(const Coeffs& f, std::uint64_t p) {
    for (std::uint64_t n = 0; n < p; ++n) {
        BigInt v = horner(f, BigInt(static_cast<unsigned long>(n)));
        if (mpz_divisible_ui_p(v.get_mpz_t(), p)) return n;
    }
    return std::nullopt;
}

std::uint64_t pisano(std::uint64_t m) {
    if (m == 1) return 1;
    std::uint64_t a = 0, b = 1;
    for (std::uint64_t n = 1;; ++n) {
        std::uint64_t c = (a + b) % m;
        a = b;
        b = c;
        if (a == 0 && b == 1) return n;
    }
}

bool is_prime_small(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i)
        if (is_prime_small(i)) out.push_back(i);
    return out;
}

bool float_degenerate(const Coeffs& r, double tol, int max_order) {
    const int k = static_cast<int>(r.size());
    if (k < 2) return false;
    // Monic x^k - r_1 x^{k-1} - ... - r_k; companion matrix.
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) comp(0, i) = r[i].get_d();
    for (int i = 1; i < k; ++i) comp(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXd> solver(comp, false);
    std::vector<std::complex<double>> raw(solver.eigenvalues().data(), solver.eigenvalues().data() + k);

    // Multiple roots come back as a cluster of size ~ eps^(1/m); the cluster
    // mean is accurate to near machine precision.
    std::vector<std::complex<double>> roots;
    std::vector<bool> used(raw.size(), false);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        std::complex<double> sum = raw[i];
        int count = 1;
        for (std::size_t j = i + 1; j < raw.size(); ++j) {
            if (!used[j] && std::abs(raw[j] - raw[i]) < 1e-3 * std::max(1.0, std::abs(raw[i]))) {
                used[j] = true;
                sum += raw[j];
                ++count;
            }
        }
        roots.push_back(sum / static_cast<double>(count));
    }

    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (i == j) continue;
            std::complex<double> z = roots[i] / roots[j];
            std::complex<double> w = 1.0;
            for (int n = 1; n <= max_order; ++n) {
                w *= z;
                if (std::abs(w - 1.0) <= tol) return true;
            }
        }
    return false;
}

}  // namespace oracle
