#include "frobcy/congruence.hpp"

#include "frobcy/errors.hpp"

namespace frobcy {

CongruenceReport check_dwork_congruence(const std::vector<mpz_class>& c, unsigned long p, std::size_t n_max,
                                        unsigned s_max)
{
    CongruenceReport rep;
    rep.p = p;
    rep.n_max = n_max;
    rep.s_max = s_max;
    if (c.empty() || c[0] % ipow(p, s_max) != 1)
        throw BadInput("Dwork congruences need c(0) = 1");
    if (c.size() < n_max + 1)
        throw LengthMismatch("sequence shorter than n_max + 1");
    const mpz_class mod = ipow(p, s_max);
    // C(n) mod p^s_max; unset where the denominator is not a unit.
    std::vector<std::optional<mpz_class>> C(n_max + 1);
    mpz_class inv, d;
    for (std::size_t n = 0; n <= n_max; ++n) {
        d = c[n / p] % mod;
        if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0) {
            rep.skipped.push_back(n);
            continue;
        }
        mpz_class v = c[n] * inv;
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
        C[n] = v;
    }
    for (unsigned s = 1; s <= s_max && rep.pass; ++s) {
        const mpz_class ps = ipow(p, s);
        const unsigned long step = mpz_get_ui(ps.get_mpz_t());
        for (std::size_t n = 0; n <= n_max && rep.pass; ++n) {
            if (!C[n])
                continue;
            for (unsigned long m = 1; m < p; ++m) {
                std::size_t k = n + m * step;
                if (k > n_max)
                    break;
                if (!C[k])
                    continue;
                mpz_class diff = *C[n] - *C[k];
                if (!mpz_divisible_p(diff.get_mpz_t(), ps.get_mpz_t())) {
                    rep.pass = false;
                    rep.counterexample = Counterexample{n, m, s};
                    break;
                }
            }
        }
    }
    return rep;
}

namespace {

PadicNumber horner(const std::vector<mpz_class>& c, std::size_t len, const PadicNumber& x)
{
    const mpz_class& mod = x.modulus();
    mpz_class acc = 0;
    for (std::size_t i = len; i-- > 0;) {
        acc *= x.residue();
        acc += c[i];
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    }
    return {x.prime(), x.cap(), acc, x.guaranteed()};
}

}  // namespace

DworkTerms dwork_ratio_terms(const std::vector<mpz_class>& series, const PadicNumber& alpha, unsigned s)
{
    const unsigned long p = alpha.prime();
    const mpz_class ps = ipow(p, s);
    const std::size_t len = mpz_get_ui(ps.get_mpz_t());
    const std::size_t len_frob = len / p;
    if (series.size() < len)
        throw LengthMismatch("dwork_ratio needs " + std::to_string(len) + " coefficients");
    PadicNumber a(p, s, alpha.residue());
    // unit-disk condition on y^(p-1)(alpha mod p)
    PadicNumber a1(p, 1, alpha.residue());
    if (horner(series, p, a1).residue() == 0)
        throw OutsideUnitDisk("truncated series vanishes mod p at the point");
    PadicNumber num = horner(series, len, a);
    PadicNumber den = horner(series, len_frob, a.pow(p));
    return {num, den, num / den};
}

PadicNumber dwork_ratio(const std::vector<mpz_class>& series, const std::vector<mpz_class>& series_frob,
                        const PadicNumber& alpha, unsigned s)
{
    const unsigned long p = alpha.prime();
    const std::size_t len = mpz_get_ui(ipow(p, s).get_mpz_t());
    if (series.size() < len || series_frob.size() < len / p)
        throw LengthMismatch("dwork_ratio inputs too short");
    PadicNumber a(p, s, alpha.residue());
    PadicNumber a1(p, 1, alpha.residue());
    if (horner(series, p, a1).residue() == 0)
        throw OutsideUnitDisk("truncated series vanishes mod p at the point");
    PadicNumber num = horner(series, len, a);
    PadicNumber den = horner(series_frob, len / p, a.pow(p));
    return num / den;
}

PadicNumber dwork_ratio(const TruncatedSeries& series, const PadicNumber& alpha, unsigned s)
{
    if (!series.exact && (series.p != alpha.prime() || series.guaranteed < s))
        throw PrecisionExhausted("series residues do not certify " + std::to_string(s) + " digits");
    return dwork_ratio_terms(series.coeffs, alpha, s).ratio;
}

}  // namespace frobcy
