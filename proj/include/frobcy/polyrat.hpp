#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace frobcy {

// Dense univariate polynomial over Q, index = degree.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(const mpq_class& c);
    RatPoly(long c) : RatPoly(mpq_class(c)) {}
    explicit RatPoly(std::vector<mpq_class> coeffs);

    static RatPoly monomial(unsigned k, const mpq_class& c = 1);
    static RatPoly x() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    mpq_class operator[](std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& lead() const { return c_.back(); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const mpq_class& k) const;
    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
    RatPoly& operator-=(const RatPoly& o) { return *this = *this - o; }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    RatPoly derivative() const;
    RatPoly monic() const;
    RatPoly shifted(const mpq_class& t) const;  // f(x + t)
    mpq_class operator()(const mpq_class& x) const;
    double eval(double x) const;

    // Integer coefficient vector of the primitive multiple with positive leading coefficient.
    std::vector<mpz_class> primitive_integer() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// Exact quotient; throws NonIntegral when the remainder is nonzero.
RatPoly div_exact(const RatPoly& a, const RatPoly& b);
// Monic gcd (0 only when both inputs are 0).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const RatPoly& num) : num_(num), den_(1) {}
    RationalFunction(const mpq_class& c) : num_(c), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const RatPoly& num, const RatPoly& den);

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative() const;
    mpq_class operator()(const mpq_class& x) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    RatPoly num_;
    RatPoly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };
RationalFunction ratfun_arith(const RationalFunction& lhs, const RationalFunction& rhs, ArithOp op);
RationalFunction ratfun_derivative(const RationalFunction& f);

struct LinearSolution {
    std::vector<RationalFunction> x;
    std::size_t kernel_dim = 0;
};

// Solves A x = b over Q(x); nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear_system(const std::vector<std::vector<RationalFunction>>& a,
                                                  const std::vector<RationalFunction>& b);

}  // namespace frobcy
