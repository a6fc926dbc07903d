#include "frobcy/padic.hpp"

#include "frobcy/errors.hpp"

#include <algorithm>

namespace frobcy {

mpz_class ipow(unsigned long p, unsigned long k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

unsigned long valuation(const mpz_class& n, unsigned long p)
{
    if (n == 0)
        throw DivisionByZero("valuation of zero");
    mpz_class m = abs(n);
    unsigned long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

bool is_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PadicNumber::PadicNumber(unsigned long p, unsigned cap, const mpz_class& value)
    : PadicNumber(p, cap, value, cap)
{
}

PadicNumber::PadicNumber(unsigned long p, unsigned cap, const mpz_class& value, unsigned guaranteed)
    : p_(p), cap_(cap), guaranteed_(guaranteed), modulus_(ipow(p, cap))
{
    if (p == 2 || !is_prime(p))
        throw BadInput("p-adic numbers need an odd prime, got " + std::to_string(p));
    if (cap < 1)
        throw BadInput("p-adic cap must be at least 1");
    if (guaranteed < 1 || guaranteed > cap)
        throw PrecisionExhausted("guaranteed precision out of range");
    mpz_fdiv_r(residue_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

void PadicNumber::check_compatible(const PadicNumber& o) const
{
    if (p_ != o.p_ || cap_ != o.cap_)
        throw DimensionMismatch("p-adic operands with different prime or cap");
}

PadicNumber PadicNumber::make(mpz_class r, unsigned g) const
{
    if (g < 1)
        throw PrecisionExhausted("no certified p-adic digits left");
    PadicNumber out = *this;
    mpz_fdiv_r(out.residue_.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
    out.guaranteed_ = g;
    return out;
}

bool PadicNumber::is_unit() const
{
    return !mpz_divisible_ui_p(residue_.get_mpz_t(), p_);
}

unsigned PadicNumber::valuation() const
{
    mpz_class certified = residue_ % ipow(p_, guaranteed_);
    if (certified == 0)
        return guaranteed_;
    return static_cast<unsigned>(frobcy::valuation(certified, p_));
}

PadicNumber PadicNumber::truncated(unsigned g) const
{
    return make(residue_, std::min(g, guaranteed_));
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const
{
    check_compatible(o);
    return make(residue_ + o.residue_, std::min(guaranteed_, o.guaranteed_));
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const
{
    check_compatible(o);
    return make(residue_ - o.residue_, std::min(guaranteed_, o.guaranteed_));
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const
{
    check_compatible(o);
    return make(residue_ * o.residue_, std::min(guaranteed_, o.guaranteed_));
}

PadicNumber PadicNumber::operator-() const
{
    return make(-residue_, guaranteed_);
}

PadicNumber PadicNumber::operator*(const mpz_class& k) const
{
    return make(residue_ * k, guaranteed_);
}

PadicNumber PadicNumber::operator+(const mpz_class& k) const
{
    return make(residue_ + k, guaranteed_);
}

PadicNumber PadicNumber::pow(unsigned long e) const
{
    PadicNumber out = *this;
    mpz_powm_ui(out.residue_.get_mpz_t(), residue_.get_mpz_t(), e, modulus_.get_mpz_t());
    return out;
}

PadicNumber PadicNumber::div_int(const mpz_class& d) const
{
    if (d == 0)
        throw DivisionByZero("p-adic division by the integer 0");
    unsigned long v = frobcy::valuation(d, p_);
    if (v >= guaranteed_)
        throw PrecisionExhausted("division by p^" + std::to_string(v) + " exhausts precision");
    mpz_class pv = ipow(p_, v);
    if (!mpz_divisible_p(residue_.get_mpz_t(), pv.get_mpz_t()))
        throw NonIntegral("p-adic quotient is not integral");
    mpz_class num = residue_ / pv;
    mpz_class unit = d / pv;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus_.get_mpz_t());
    return make(num * inv, guaranteed_ - static_cast<unsigned>(v));
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const
{
    check_compatible(o);
    unsigned v = o.valuation();
    if (v >= o.guaranteed_)
        throw DivisionByZero("p-adic division by a value indistinguishable from 0");
    if (v == 0) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), o.residue_.get_mpz_t(), modulus_.get_mpz_t());
        return make(residue_ * inv, std::min(guaranteed_, o.guaranteed_));
    }
    unsigned g = std::min(guaranteed_, o.guaranteed_);
    if (v >= g)
        throw PrecisionExhausted("division by p^" + std::to_string(v) + " exhausts precision");
    mpz_class pv = ipow(p_, v);
    if (!mpz_divisible_p(residue_.get_mpz_t(), pv.get_mpz_t()))
        throw NonIntegral("p-adic quotient is not integral");
    mpz_class unit = o.residue_ / pv;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus_.get_mpz_t());
    return make((residue_ / pv) * inv, g - v);
}

bool PadicNumber::operator==(const PadicNumber& o) const
{
    if (p_ != o.p_)
        return false;
    mpz_class m = ipow(p_, std::min(guaranteed_, o.guaranteed_));
    mpz_class d = residue_ - o.residue_;
    return mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t());
}

std::string PadicNumber::to_string() const
{
    return residue_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(guaranteed_);
}

PadicNumber padic_inv(const PadicNumber& x)
{
    if (!x.is_unit())
        throw NotAUnit(x.residue().get_str() + " is divisible by " + std::to_string(x.prime()));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), x.residue().get_mpz_t(), x.modulus().get_mpz_t());
    return {x.prime(), x.cap(), inv, x.guaranteed()};
}

PadicNumber teichmueller(const mpz_class& a0, unsigned long p, unsigned cap)
{
    PadicNumber x(p, cap, a0);
    for (unsigned i = 0; i <= cap; ++i) {
        PadicNumber next = x.pow(p);
        if (next.residue() == x.residue())
            break;
        x = next;
    }
    return x;
}

mpz_class balanced_lift(const PadicNumber& x)
{
    mpz_class m = ipow(x.prime(), x.guaranteed());
    mpz_class r = x.residue() % m;
    if (2 * r > m)
        r -= m;
    return r;
}

}  // namespace frobcy
