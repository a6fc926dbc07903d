#pragma once

#include "frobcy/diffop.hpp"
#include "frobcy/polyrat.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frobcy {

struct SequenceRule {
    std::string name;     // one of A B C D e h i j a b c d f g
    std::string formula;  // human-readable closed form
};

struct SecondOrderEntry {
    std::string name;
    ThetaOperator op;                         // as printed
    std::optional<ThetaOperator> corrected;   // set when the printed operator carries a misprint
    SequenceRule rule;
};

const std::vector<SecondOrderEntry>& second_order_catalog();
const SecondOrderEntry& second_order(const std::string& name);
const SequenceRule& sequence_rule(const std::string& name);

// Closed-form evaluation.
mpz_class sequence_term(const SequenceRule& rule, unsigned long n);
// Closed-form evaluation of terms 0..N with shared intermediate work.
std::vector<mpz_class> sequence_terms(const SequenceRule& rule, std::size_t N);
// Terms 0..N from the (corrected) operator recurrence.
std::vector<mpz_class> sequence_values(const std::string& name, std::size_t N);

std::vector<mpz_class> hadamard_product(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g,
                                        std::size_t N);

// Harmonic-number formula for the fifth-order solution attached to the quintic.
std::vector<mpz_class> quintic_wedge_coefficients(std::size_t N);

struct FormAnnotation {
    mpq_class point;
    std::string form;   // "" when no form is known
    std::string twist;  // "" for no twist
};

struct CatalogEntry {
    std::string name;  // e.g. "A*a"
    int aesz = 0;
    ThetaOperator op;
    std::string hypergeometric_factor;
    std::string zagier_factor;
    RatPoly singular_locus;  // leading symbol in z
    std::vector<FormAnnotation> forms;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

// Reference table cells keyed by prime; each row lists z = 1..p-1 as printed, e.g. "(32,62)*", "-".
const std::map<unsigned long, std::vector<std::string>>& reference_rows(const std::string& name);
bool has_reference_table(const std::string& name);

}  // namespace frobcy
