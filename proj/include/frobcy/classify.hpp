#pragma once

#include "frobcy/catalog.hpp"
#include "frobcy/frobenius.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frobcy {

struct Classification {
    Status status = Status::Inconsistent;
    std::optional<mpz_class> alpha, beta;
    std::optional<int> chi;
    std::optional<mpz_class> ap;
};

// Reducible split first, then the conifold split (only when at_symbol_root), then Weil.
Classification classify_point(const mpz_class& a, const mpz_class& b, unsigned long p, bool at_symbol_root);

// prod eta(q^m)^e
struct EtaProduct {
    std::vector<std::pair<unsigned, int>> factors;  // (m, e)

    int weight2() const;        // twice the weight
    long leading_power() const; // sum m e / 24
};

// Fourier coefficients of q^0..q^N.
std::vector<mpz_class> eta_expand(const EtaProduct& e, std::size_t N);
std::optional<EtaProduct> builtin_eta(const std::string& label);

struct FormCoefficients {
    std::string label;
    int weight = 4;
    std::map<unsigned long, mpz_class> ap;
};

// Built-in eta products first, then JSON fixtures under FROBCY_FORMS_DIR (or forms_dir when given).
std::optional<FormCoefficients> find_form(const std::string& label, const std::string& forms_dir = {});

// z in F_p with z = point mod p; nullopt if p divides the denominator.
std::optional<unsigned long> reduce_point(const mpq_class& point, unsigned long p);

struct SingularMatch {
    unsigned long p = 0;
    unsigned long z = 0;
    mpz_class ap_computed;
    mpz_class ap_form;
    bool equal = false;
};

struct MatchReport {
    std::string entry;
    mpq_class point;
    std::string form;
    std::vector<SingularMatch> rows;
    bool all_equal = false;
};

MatchReport match_singular_ap(const CatalogEntry& entry, const mpq_class& point,
                              const std::vector<FrobeniusResult>& results, const std::string& forms_dir = {});

}  // namespace frobcy
