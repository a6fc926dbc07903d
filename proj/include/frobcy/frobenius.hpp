#pragma once

#include "frobcy/congruence.hpp"
#include "frobcy/padic.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace frobcy {

enum class Status { Smooth, Reducible, Singular, Undefined, Inconsistent };

const char* status_name(Status s);

struct FrobeniusResult {
    std::string op;
    unsigned long p = 0;
    unsigned long z = 0;
    Status status = Status::Undefined;
    mpz_class a = 0;
    mpz_class b = 0;
    std::optional<mpz_class> alpha, beta;  // Reducible
    std::optional<int> chi;                // Singular
    std::optional<mpz_class> ap;           // Singular
    std::optional<PadicNumber> r1, r1hat;
    unsigned s = 0;
    bool symbol_root = false;
};

// Minimal s with p^s > 2 max(4p^(3/2), 6p^2[, 2p^2 + 2(1+p)p^(3/2)]).
unsigned required_precision(unsigned long p, bool want_singular);

struct UnitRoots {
    DworkTerms f0;  // r1 = f0.ratio
    DworkTerms F0;  // r1hat = F0.ratio
};

// nullopt when either truncated series vanishes mod p at z0 (table "-").
std::optional<UnitRoots> unit_roots(const std::vector<mpz_class>& f0, const std::vector<mpz_class>& F0,
                                    unsigned long p, unsigned long z0, unsigned s);

// e1 = sum of the reciprocal roots and e2/p, certified to s digits.
std::pair<PadicNumber, PadicNumber> frobenius_symmetric(const PadicNumber& r1, const PadicNumber& r1hat,
                                                        unsigned long p, unsigned s);
// (a, b) of 1 + aT + bpT^2 + ap^3T^3 + p^6T^4 from the two unit roots.
std::pair<mpz_class, mpz_class> assemble_frobenius(const PadicNumber& r1, const PadicNumber& r1hat,
                                                   unsigned long p, unsigned s);

bool weil_verify(const mpz_class& a, const mpz_class& b, unsigned long p);

struct LegendreResult {
    PadicNumber pi;
    mpz_class ap;
    std::vector<mpz_class> zeta_numerator;  // 1 - a_p T + p T^2
};

// Minimal s with p^s > 4 sqrt(p).
unsigned legendre_precision(unsigned long p);
// Coefficients of F(1/2,1/2;1;s) mod p^cap, terms 0..len-1.
std::vector<mpz_class> legendre_series(unsigned long p, unsigned cap, std::size_t len);
LegendreResult legendre_frobenius(unsigned long s0, unsigned long p, unsigned s = 0);

}  // namespace frobcy
