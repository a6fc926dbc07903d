#include "frobcy/polyrat.hpp"

#include "frobcy/errors.hpp"

#include <algorithm>
#include <sstream>

namespace frobcy {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

mpz_class content(const IntPoly& a)
{
    mpz_class g = 0;
    for (const auto& c : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void make_primitive(IntPoly& a)
{
    trim(a);
    if (a.empty())
        return;
    mpz_class g = content(a);
    if (a.back() < 0)
        g = -g;
    for (auto& c : a)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b)
{
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a)
            c *= lb;
        for (std::size_t i = 0; i <= db; ++i)
            a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

RatPoly::RatPoly(const mpq_class& c)
{
    if (c != 0)
        c_.push_back(c);
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs))
{
    for (auto& c : c_)
        c.canonicalize();
    trim();
}

RatPoly RatPoly::monomial(unsigned k, const mpq_class& c)
{
    std::vector<mpq_class> v(k + 1, mpq_class(0));
    v[k] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const
{
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        r[i] += o.c_[i];
    RatPoly out;
    out.c_ = std::move(r);
    out.trim();
    return out;
}

RatPoly RatPoly::operator-(const RatPoly& o) const
{
    return *this + (-o);
}

RatPoly RatPoly::operator-() const
{
    RatPoly out = *this;
    for (auto& c : out.c_)
        c = -c;
    return out;
}

RatPoly RatPoly::operator*(const RatPoly& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    mpq_class t;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            t = c_[i] * o.c_[j];
            r[i + j] += t;
        }
    }
    RatPoly out;
    out.c_ = std::move(r);
    out.trim();
    return out;
}

RatPoly RatPoly::operator*(const mpq_class& k) const
{
    if (k == 0)
        return {};
    RatPoly out = *this;
    for (auto& c : out.c_)
        c *= k;
    return out;
}

RatPoly RatPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<mpq_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const
{
    if (is_zero())
        return {};
    return *this * (mpq_class(1) / lead());
}

RatPoly RatPoly::shifted(const mpq_class& t) const
{
    RatPoly out;
    RatPoly lin(std::vector<mpq_class>{t, 1});
    for (std::size_t i = c_.size(); i-- > 0;)
        out = out * lin + RatPoly(c_[i]);
    return out;
}

mpq_class RatPoly::operator()(const mpq_class& x) const
{
    mpq_class xc = x;
    xc.canonicalize();
    mpq_class r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * xc + c_[i];
    return r;
}

double RatPoly::eval(double x) const
{
    double r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i].get_d();
    return r;
}

std::vector<mpz_class> RatPoly::primitive_integer() const
{
    mpz_class l = 1;
    for (const auto& c : c_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly a;
    a.reserve(c_.size());
    for (const auto& c : c_)
        a.push_back(c.get_num() * (l / c.get_den()));
    make_primitive(a);
    return a;
}

std::string RatPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        mpq_class c = c_[i];
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        c = abs(c);
        first = false;
        if (i == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1)
            os << c.get_str() << "*";
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    std::vector<mpq_class> r = a.coeffs();
    if (a.degree() < b.degree())
        return {RatPoly(), a};
    const int db = b.degree();
    std::vector<mpq_class> q(a.degree() - db + 1, mpq_class(0));
    mpq_class inv = mpq_class(1) / b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        mpq_class f = r[k + db] * inv;
        q[k] = f;
        if (f == 0)
            continue;
        for (int i = 0; i <= db; ++i)
            r[k + i] -= f * b.coeffs()[i];
    }
    r.resize(db);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly div_exact(const RatPoly& a, const RatPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw NonIntegral("polynomial division leaves a remainder");
    return q;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    IntPoly u = a.primitive_integer();
    IntPoly v = b.primitive_integer();
    if (u.size() < v.size())
        std::swap(u, v);
    while (!v.empty()) {
        if (v.size() == 1)
            return RatPoly(1);
        IntPoly r = pseudo_rem(u, v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<mpq_class> c(u.begin(), u.end());
    return RatPoly(std::move(c)).monic();
}

RationalFunction::RationalFunction(const RatPoly& num, const RatPoly& den) : num_(num), den_(den)
{
    normalize();
}

void RationalFunction::normalize()
{
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = RatPoly(1);
        return;
    }
    if (den_.degree() > 0) {
        RatPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
    }
    mpq_class l = den_.lead();
    if (l != 1) {
        mpq_class inv = mpq_class(1) / l;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const
{
    if (den_ == o.den_)
        return {num_ + o.num_, den_};
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const
{
    return *this + (-o);
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const
{
    if (o.is_zero())
        throw DivisionByZero("rational function division by zero");
    return {num_ * o.den_, den_ * o.num_};
}

RationalFunction RationalFunction::derivative() const
{
    if (den_.degree() == 0)
        return RationalFunction(num_.derivative() * (mpq_class(1) / den_.lead()));
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

mpq_class RationalFunction::operator()(const mpq_class& x) const
{
    mpq_class d = den_(x);
    if (d == 0)
        throw DivisionByZero("rational function evaluated at a pole");
    return num_(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const
{
    if (den_.degree() == 0)
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction ratfun_arith(const RationalFunction& lhs, const RationalFunction& rhs, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return lhs + rhs;
    case ArithOp::Sub:
        return lhs - rhs;
    case ArithOp::Mul:
        return lhs * rhs;
    case ArithOp::Div:
        return lhs / rhs;
    }
    return {};
}

RationalFunction ratfun_derivative(const RationalFunction& f)
{
    return f.derivative();
}

std::optional<LinearSolution> solve_linear_system(const std::vector<std::vector<RationalFunction>>& a,
                                                  const std::vector<RationalFunction>& b)
{
    const std::size_t rows = a.size();
    if (b.size() != rows)
        throw DimensionMismatch("right-hand side length differs from row count");
    const std::size_t cols = rows ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != cols)
            throw DimensionMismatch("matrix is not rectangular");

    // Clear denominators row by row; the augmented matrix then lives in Q[x].
    std::vector<std::vector<RatPoly>> m(rows, std::vector<RatPoly>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        RatPoly l(1);
        auto absorb = [&](const RationalFunction& f) {
            l = div_exact(l * f.den(), gcd(l, f.den()));
        };
        for (const auto& f : a[i])
            absorb(f);
        absorb(b[i]);
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = div_exact(a[i][j].num() * l, a[i][j].den());
        m[i][cols] = div_exact(b[i].num() * l, b[i].den());
    }

    // Bareiss elimination with column skipping.
    std::vector<std::size_t> pivot_cols;
    RatPoly prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero())
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j <= cols; ++j)
                m[i][j] = div_exact(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = RatPoly();
        }
        prev = m[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!m[i][cols].is_zero())
            return std::nullopt;

    LinearSolution sol;
    sol.x.assign(cols, RationalFunction());
    sol.kernel_dim = cols - r;
    for (std::size_t k = r; k-- > 0;) {
        std::size_t c = pivot_cols[k];
        RationalFunction acc(m[k][cols]);
        for (std::size_t j = c + 1; j < cols; ++j)
            if (!m[k][j].is_zero() && !sol.x[j].is_zero())
                acc -= RationalFunction(m[k][j]) * sol.x[j];
        sol.x[c] = acc / RationalFunction(m[k][c]);
    }
    return sol;
}

}  // namespace frobcy
