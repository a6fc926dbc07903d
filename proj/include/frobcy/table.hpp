#pragma once

#include "frobcy/cache.hpp"
#include "frobcy/classify.hpp"
#include "frobcy/diffop.hpp"
#include "frobcy/frobenius.hpp"

#include <functional>
#include <string>
#include <vector>

namespace frobcy {

// A fourth-order operator together with its exterior square.
struct OperatorPair {
    std::string name;
    ThetaOperator P;
    ThetaOperator Q;
    RatPoly symbol;
};

OperatorPair make_pair_for(const ThetaOperator& P);
// Catalog name or path to an operator JSON file.
ThetaOperator resolve_operator(const std::string& name_or_file);

struct TableOptions {
    unsigned jobs = 1;
    std::string cache_dir;  // empty disables caching
    unsigned precision = 0; // 0 selects required_precision per cell
};

bool is_symbol_root(const RatPoly& symbol, unsigned long p, unsigned long z);
// Working precision for all cells of a prime: the singular bound whenever a symbol root exists.
unsigned row_precision(const RatPoly& symbol, unsigned long p);

// One cell from precomputed residues of f0 and F0 (at least p^s terms each).
FrobeniusResult compute_point(const OperatorPair& ops, const std::vector<mpz_class>& f0,
                              const std::vector<mpz_class>& F0, unsigned long p, unsigned long z, unsigned s);

std::vector<FrobeniusResult> compute_row(const OperatorPair& ops, unsigned long p, const TableOptions& opts);

// Runs body(i) for i in [0, n) on up to `jobs` threads; exceptions are rethrown in index order.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

// "(a,b)" with ' for reducible cells, * at roots of the leading symbol, "-" when undefined.
std::string cell_text(const FrobeniusResult& r);

std::string render_markdown(const std::string& op, unsigned long p, const std::vector<std::string>& cells);
std::string csv_header();
std::string render_csv_row(const FrobeniusResult& r, const std::string& form = {});
std::string render_json(const std::vector<FrobeniusResult>& rows);

}  // namespace frobcy
