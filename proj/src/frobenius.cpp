#include "frobcy/frobenius.hpp"

#include "frobcy/errors.hpp"

#include <array>
#include <cmath>
#include <complex>

namespace frobcy {

const char* status_name(Status s)
{
    switch (s) {
    case Status::Smooth:
        return "smooth";
    case Status::Reducible:
        return "reducible";
    case Status::Singular:
        return "singular";
    case Status::Undefined:
        return "undefined";
    case Status::Inconsistent:
        return "inconsistent";
    }
    return "?";
}

unsigned required_precision(unsigned long p, bool want_singular)
{
    const double pd = static_cast<double>(p);
    double bound = std::max(4 * std::pow(pd, 1.5), 6 * pd * pd);
    if (want_singular)
        bound = std::max(bound, 2 * pd * pd + 2 * (1 + pd) * std::pow(pd, 1.5));
    // exact comparison p^s > 2*bound with the bound rounded up generously
    unsigned s = 1;
    for (double ps = pd; ps <= 2 * bound; ps *= pd)
        ++s;
    return s;
}

std::optional<UnitRoots> unit_roots(const std::vector<mpz_class>& f0, const std::vector<mpz_class>& F0,
                                    unsigned long p, unsigned long z0, unsigned s)
{
    if (z0 % p == 0)
        throw BadInput("unit roots need z0 != 0 in F_p");
    PadicNumber alpha = teichmueller(z0, p, s);
    try {
        return UnitRoots{dwork_ratio_terms(f0, alpha, s), dwork_ratio_terms(F0, alpha, s)};
    } catch (const OutsideUnitDisk&) {
        return std::nullopt;
    }
}

namespace {

bool within_sqrt_bound(const mpz_class& x, unsigned long p, unsigned long mult)
{
    // |x| <= mult * p^(3/2)  <=>  x^2 <= mult^2 p^3
    mpz_class lhs = x * x;
    mpz_class rhs = mpz_class(mult * mult) * ipow(p, 3);
    return lhs <= rhs;
}

}  // namespace

std::pair<PadicNumber, PadicNumber> frobenius_symmetric(const PadicNumber& r1, const PadicNumber& r1hat,
                                                        unsigned long p, unsigned s)
{
    if (!r1.is_unit() || !r1hat.is_unit())
        throw NotAUnit("unit roots must be p-adic units");
    PadicNumber x = r1.truncated(s);
    PadicNumber y = r1hat.truncated(s);
    const mpz_class pp = p;
    PadicNumber e1 = x + (y / x) * pp + (x / y) * (pp * pp) + padic_inv(x) * (pp * pp * pp);
    PadicNumber e2p = y + (x * x / y) * pp + PadicNumber(p, x.cap(), 2 * pp * pp) + (y / (x * x)) * (pp * pp * pp) +
                      padic_inv(y) * (pp * pp * pp * pp);
    return {e1, e2p};
}

std::pair<mpz_class, mpz_class> assemble_frobenius(const PadicNumber& r1, const PadicNumber& r1hat,
                                                   unsigned long p, unsigned s)
{
    auto [e1, e2p] = frobenius_symmetric(r1, r1hat, p, s);
    const mpz_class pp = p;
    mpz_class a = -balanced_lift(e1);
    mpz_class b = balanced_lift(e2p);
    // Largest admissible magnitudes over the smooth, reducible and singular branches.
    mpz_class two_p32;
    mpz_class four_p3 = 4 * ipow(p, 3);
    mpz_sqrt(two_p32.get_mpz_t(), four_p3.get_mpz_t());
    const bool a_ok = within_sqrt_bound(a, p, 4) || abs(a) <= pp + pp * pp + two_p32;
    const bool b_ok = abs(b) <= 6 * pp * pp || abs(b * pp) <= 2 * pp * pp * pp + (pp + pp * pp) * two_p32;
    if (!a_ok || !b_ok)
        throw LiftOutOfBound("(a, b) = (" + a.get_str() + ", " + b.get_str() + ") exceeds every branch bound");
    return {a, b};
}

bool weil_verify(const mpz_class& a, const mpz_class& b, unsigned long p)
{
    using C = std::complex<long double>;
    // With T = U p^(-3/2) the quartic becomes U^4 + c U^3 + d U^2 + c U + 1.
    const long double pd = static_cast<long double>(p);
    const long double c = a.get_d() / std::pow(pd, 1.5L);
    const long double d = b.get_d() / (pd * pd);
    const std::array<long double, 5> coef{1.0L, c, d, c, 1.0L};  // monic, highest first
    auto eval = [&](C u) {
        C r = 0;
        for (long double k : coef)
            r = r * u + k;
        return r;
    };
    std::array<C, 4> z;
    C seed(0.4L, 0.9L);
    for (int i = 0; i < 4; ++i)
        z[i] = std::pow(seed, i);
    for (int it = 0; it < 2000; ++it) {
        long double change = 0;
        for (int i = 0; i < 4; ++i) {
            C den = 1;
            for (int j = 0; j < 4; ++j)
                if (j != i)
                    den *= z[i] - z[j];
            C step = eval(z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-15L)
            break;
    }
    for (const auto& u : z)
        if (std::fabs(std::abs(u) - 1.0L) > 1e-6L)
            return false;
    return true;
}

unsigned legendre_precision(unsigned long p)
{
    unsigned s = 1;
    for (double ps = static_cast<double>(p); ps <= 4 * std::sqrt(static_cast<double>(p)); ps *= p)
        ++s;
    return s;
}

std::vector<mpz_class> legendre_series(unsigned long p, unsigned cap, std::size_t len)
{
    const mpz_class mod = ipow(p, cap);
    mpz_class inv16;
    mpz_class sixteen = 16;
    mpz_invert(inv16.get_mpz_t(), sixteen.get_mpz_t(), mod.get_mpz_t());
    std::vector<mpz_class> c(len);
    mpz_class bin = 1, scale = 1;
    for (std::size_t j = 0; j < len; ++j) {
        if (j > 0) {
            // C(2j,j) = C(2j-2,j-1) (2j)(2j-1)/j^2
            bin = bin * (2 * j) * (2 * j - 1) / (j * j);
            scale = scale * inv16 % mod;
        }
        c[j] = bin * bin % mod * scale % mod;
    }
    return c;
}

LegendreResult legendre_frobenius(unsigned long s0, unsigned long p, unsigned s)
{
    if (!is_prime(p) || p == 2)
        throw BadInput("Legendre family needs an odd prime");
    s0 %= p;
    if (s0 == 0 || s0 == 1)
        throw SingularFiber("Legendre fibre is singular at s0 = " + std::to_string(s0));
    if (s == 0)
        s = legendre_precision(p);
    const std::size_t half = (p - 1) / 2;
    std::vector<mpz_class> low = legendre_series(p, 1, half + 1);
    mpz_class v = 0;
    for (std::size_t j = half + 1; j-- > 0;)
        v = (v * s0 + low[j]) % p;
    if (v == 0)
        throw OutsideUnitDisk("truncated hypergeometric series vanishes at s0");
    const std::size_t len = mpz_get_ui(ipow(p, s).get_mpz_t());
    std::vector<mpz_class> f = legendre_series(p, s, len);
    PadicNumber ratio = dwork_ratio_terms(f, teichmueller(s0, p, s), s).ratio;
    const long eps = (p % 4 == 1) ? 1 : -1;
    PadicNumber pi = ratio * mpz_class(eps);
    mpz_class ap = balanced_lift(pi + padic_inv(pi) * mpz_class(p));
    return {pi, ap, {1, -ap, mpz_class(p)}};
}

}  // namespace frobcy
