#pragma once

#include <gmpxx.h>

#include <string>

namespace frobcy {

// p^k as a big integer.
mpz_class ipow(unsigned long p, unsigned long k);

// Largest v with p^v | n; n must be nonzero.
unsigned long valuation(const mpz_class& n, unsigned long p);

bool is_prime(unsigned long n);

// Element of Z/p^K with a certified number of correct p-adic digits.
class PadicNumber {
public:
    PadicNumber(unsigned long p, unsigned cap, const mpz_class& value);
    PadicNumber(unsigned long p, unsigned cap, const mpz_class& value, unsigned guaranteed);

    static PadicNumber zero(unsigned long p, unsigned cap) { return {p, cap, 0}; }
    static PadicNumber one(unsigned long p, unsigned cap) { return {p, cap, 1}; }

    unsigned long prime() const { return p_; }
    unsigned cap() const { return cap_; }
    unsigned guaranteed() const { return guaranteed_; }
    const mpz_class& residue() const { return residue_; }
    const mpz_class& modulus() const { return modulus_; }

    bool is_unit() const;
    // Valuation of the certified part; returns guaranteed() when those digits are all zero.
    unsigned valuation() const;

    // Same value, certified only to the first g digits.
    PadicNumber truncated(unsigned g) const;

    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator-() const;
    PadicNumber operator/(const PadicNumber& o) const;
    PadicNumber pow(unsigned long e) const;

    PadicNumber operator*(const mpz_class& k) const;
    PadicNumber operator+(const mpz_class& k) const;
    // Division by a nonzero integer; loses v_p(d) digits.
    PadicNumber div_int(const mpz_class& d) const;

    // Equal on the digits both sides certify.
    bool operator==(const PadicNumber& o) const;

    std::string to_string() const;

private:
    void check_compatible(const PadicNumber& o) const;
    PadicNumber make(mpz_class r, unsigned g) const;

    unsigned long p_;
    unsigned cap_;
    unsigned guaranteed_;
    mpz_class modulus_;
    mpz_class residue_;
};

PadicNumber padic_inv(const PadicNumber& x);

PadicNumber teichmueller(const mpz_class& a0, unsigned long p, unsigned cap);

// The representative of the certified residue in [-p^G/2, p^G/2].
mpz_class balanced_lift(const PadicNumber& x);

}  // namespace frobcy
