#pragma once

#include "frobcy/polyrat.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace frobcy {

// Sum_i z^i P_i(theta) with integer coefficients; rows[i][j] is the coefficient of z^i theta^j.
class ThetaOperator {
public:
    ThetaOperator() = default;
    ThetaOperator(std::vector<std::vector<mpz_class>> rows, std::string name = {},
                  std::optional<int> aesz = std::nullopt);
    // Rows given as polynomials in theta over Q; denominators are cleared.
    static ThetaOperator from_polys(const std::vector<RatPoly>& p, std::string name = {},
                                    std::optional<int> aesz = std::nullopt);

    unsigned order() const { return order_; }
    unsigned z_degree() const { return rows_.empty() ? 0 : static_cast<unsigned>(rows_.size() - 1); }
    const std::vector<std::vector<mpz_class>>& rows() const { return rows_; }
    mpz_class coeff(std::size_t i, std::size_t j) const;
    RatPoly P(std::size_t i) const;
    // P_i evaluated at an integer.
    void eval_P(std::size_t i, long n, mpz_class& out) const;
    // Coefficient of theta^j as a polynomial in z.
    RatPoly theta_coeff(std::size_t j) const;

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    std::optional<int> aesz() const { return aesz_; }

    mpz_class content() const;
    ThetaOperator primitive() const;

    bool operator==(const ThetaOperator& o) const { return rows_ == o.rows_; }

    std::string to_json() const;
    static ThetaOperator from_json(const std::string& text);

private:
    std::vector<std::vector<mpz_class>> rows_;
    unsigned order_ = 0;
    std::string name_;
    std::optional<int> aesz_;
};

// y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = 0 in the variable x = z.
struct MonicForm {
    unsigned order = 0;
    std::vector<RationalFunction> a;  // a[0..n-1]
};

struct TruncatedSeries {
    bool exact = true;
    unsigned long p = 0;
    unsigned cap = 0;
    unsigned guaranteed = 0;
    std::vector<mpz_class> coeffs;  // c_0..c_N
    std::string source;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

struct SeriesMode {
    bool exact = true;
    unsigned long p = 0;
    unsigned cap = 0;

    static SeriesMode exact_mode() { return {}; }
    static SeriesMode modular(unsigned long p, unsigned cap) { return {false, p, cap}; }
};

bool check_mum(const ThetaOperator& op);
RatPoly leading_symbol(const ThetaOperator& op);
MonicForm to_monic(const ThetaOperator& op);
// theta^n + sum_k q_k theta^k recovered from a monic form (q_k as rational functions of x).
std::vector<RationalFunction> theta_form_of(const MonicForm& m);
bool check_cy4(const MonicForm& m);
bool check_cy5(const MonicForm& m);

// Coefficients c_0..c_N of the holomorphic solution normalised by c_0 = 1.
TruncatedSeries solve_series(const ThetaOperator& op, std::size_t N, SeriesMode mode = SeriesMode::exact_mode());
// Pure p-adic recurrence with pessimistic precision tracking.
TruncatedSeries solve_series_padic(const ThetaOperator& op, std::size_t N, unsigned long p, unsigned cap);

}  // namespace frobcy
