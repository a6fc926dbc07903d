#pragma once

#include "frobcy/diffop.hpp"
#include "frobcy/padic.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace frobcy {

struct Counterexample {
    std::size_t n = 0;
    unsigned long m = 0;
    unsigned s = 0;
};

struct CongruenceReport {
    unsigned long p = 0;
    std::size_t n_max = 0;
    unsigned s_max = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    std::vector<std::size_t> skipped;  // n with c(floor(n/p)) not a unit
};

// c holds exact integers or residues mod p^S with S >= s_max.
CongruenceReport check_dwork_congruence(const std::vector<mpz_class>& c, unsigned long p, std::size_t n_max,
                                        unsigned s_max);

// y^(p^s-1)(alpha) / y^(p^(s-1)-1)(alpha^p) mod p^s. `series` needs p^s terms, `series_frob` p^(s-1).
PadicNumber dwork_ratio(const std::vector<mpz_class>& series, const std::vector<mpz_class>& series_frob,
                        const PadicNumber& alpha, unsigned s);
PadicNumber dwork_ratio(const TruncatedSeries& series, const PadicNumber& alpha, unsigned s);

struct DworkTerms {
    PadicNumber numerator;
    PadicNumber denominator;
    PadicNumber ratio;
};
DworkTerms dwork_ratio_terms(const std::vector<mpz_class>& series, const PadicNumber& alpha, unsigned s);

}  // namespace frobcy
