#include "oracles.hpp"

#include <cmath>

namespace oracle {

std::int64_t inverse_mod(std::int64_t x, std::int64_t m)
{
    std::int64_t r0 = m, r1 = ((x % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    return ((t0 % m) + m) % m;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m)
{
    std::int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1)
            r = static_cast<std::int64_t>((__int128)r * b % m);
        b = static_cast<std::int64_t>((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

long legendre_ap(long s, long p)
{
    long sum = 0;
    for (long x = 0; x < p; ++x) {
        long v = x * ((x - 1 + p) % p) % p * ((x - s % p + p) % p) % p;
        if (v == 0)
            continue;
        sum += pow_mod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
    }
    return -sum;
}

std::vector<mpz_class> eta_direct(const std::vector<std::pair<int, int>>& factors, int N)
{
    std::vector<mpz_class> f(N + 1, 0);
    f[0] = 1;
    int shift = 0;
    for (auto [m, e] : factors) {
        shift += m * e;
        for (int rep = 0; rep < e; ++rep)
            for (int n = 1; n * m <= N; ++n)
                for (int k = N; k >= n * m; --k)
                    f[k] -= f[k - n * m];
    }
    shift /= 24;
    std::vector<mpz_class> out(N + 1, 0);
    for (int k = 0; k + shift <= N; ++k)
        out[k + shift] = f[k];
    return out;
}

bool weil_by_quadratic(long a, long b, long p)
{
    // U^4 + cU^3 + dU^2 + cU + 1 = U^2 (V^2 + cV + d - 2), V = U + 1/U; |U| = 1 iff V real in [-2, 2].
    const double c = a / std::pow(p, 1.5);
    const double d = static_cast<double>(b) / (p * p);
    const double disc = c * c - 4 * (d - 2);
    if (disc < -1e-12)
        return false;
    const double r = std::sqrt(std::max(0.0, disc));
    for (double v : {(-c + r) / 2, (-c - r) / 2})
        if (std::fabs(v) > 2 + 1e-9)
            return false;
    return true;
}

mpz_class binom(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    mpz_class r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

mpz_class franel(unsigned long n)
{
    mpz_class s = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        mpz_class b = binom(n, k);
        s += b * b * b;
    }
    return s;
}

}  // namespace oracle

namespace oracle {

mpq_class gbinom(const mpq_class& a, unsigned long k)
{
    mpq_class r = 1;
    for (unsigned long i = 0; i < k; ++i)
        r *= (a - i) / mpq_class(i + 1);
    return r;
}

mpz_class factorial(unsigned long n)
{
    mpz_class r = 1;
    for (unsigned long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

namespace {

mpz_class mobius_type(unsigned long base, const mpq_class& u, const mpq_class& v, unsigned long n)
{
    mpq_class s = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        mpq_class b = gbinom(-v, n - k);
        mpq_class t = gbinom(-u, k) * b * b;
        s += k % 2 ? -t : t;
    }
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, n);
    s *= p;
    return s.get_num();  // denominator is 1 when the closed form is integral
}

}  // namespace

mpz_class sequence(char name, unsigned long n)
{
    auto F = factorial;
    switch (name) {
    case 'A': return F(2 * n) * F(2 * n) / (F(n) * F(n) * F(n) * F(n));
    case 'B': return F(3 * n) / (F(n) * F(n) * F(n));
    case 'C': return F(4 * n) / (F(2 * n) * F(n) * F(n));
    case 'D': return F(6 * n) / (F(3 * n) * F(2 * n) * F(n));
    case 'e': return mobius_type(16, mpq_class(1, 2), mpq_class(1, 2), n);
    case 'h': return mobius_type(27, mpq_class(2, 3), mpq_class(1, 3), n);
    case 'i': return mobius_type(64, mpq_class(3, 4), mpq_class(1, 4), n);
    case 'j': return mobius_type(432, mpq_class(5, 6), mpq_class(1, 6), n);
    default: break;
    }
    mpz_class s = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        mpz_class b = binom(n, k);
        switch (name) {
        case 'a': s += b * b * b; break;
        case 'b': s += b * b * binom(n + k, n); break;
        case 'c': s += b * b * binom(2 * k, k); break;
        case 'd': s += b * binom(2 * k, k) * binom(2 * n - 2 * k, n - k); break;
        case 'f':
            if (3 * k <= n) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), 3, n - 3 * k);
                mpz_class t = p * binom(n, 3 * k) * F(3 * k) / (F(k) * F(k) * F(k));
                s += k % 2 ? -t : t;
            }
            break;
        case 'g':
            for (unsigned long j = 0; j <= k; ++j) {
                mpz_class p, c = binom(k, j);
                mpz_ui_pow_ui(p.get_mpz_t(), 8, n - k);
                mpz_class t = p * b * c * c * c;
                s += k % 2 ? -t : t;
            }
            break;
        default: return -1;
        }
    }
    return s;
}

mpq_class quintic_A(unsigned long n)
{
    auto H = [](unsigned long k) {
        mpq_class h = 0;
        for (unsigned long j = 1; j <= k; ++j)
            h += mpq_class(1, j);
        return h;
    };
    auto hyp = [](unsigned long k) {
        mpz_class f = factorial(k);
        mpq_class q(factorial(5 * k), f * f * f * f * f);
        q.canonicalize();
        return q;
    };
    mpq_class s = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        unsigned long m = n - k;
        mpq_class bracket = 1 + mpq_class(k) * (-5 * H(k) + 5 * H(m) + 5 * H(5 * k) - 5 * H(5 * m));
        s += hyp(k) * hyp(m) * bracket;
    }
    return s;
}

}  // namespace oracle
