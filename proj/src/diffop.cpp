#include "frobcy/diffop.hpp"

#include "frobcy/errors.hpp"
#include "frobcy/padic.hpp"

#include <json.hpp>

#include <algorithm>

namespace frobcy {

namespace {

// S2[k][j]: theta^k = sum_j S2[k][j] x^j D^j.
std::vector<std::vector<mpz_class>> stirling2(unsigned n)
{
    std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(n + 1, 0));
    s[0][0] = 1;
    for (unsigned k = 0; k < n; ++k)
        for (unsigned j = 0; j <= k; ++j) {
            s[k + 1][j + 1] += s[k][j];
            s[k + 1][j] += s[k][j] * j;
        }
    return s;
}

// S1[j][k]: theta(theta-1)...(theta-j+1) = sum_k S1[j][k] theta^k.
std::vector<std::vector<mpz_class>> stirling1(unsigned n)
{
    std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(n + 1, 0));
    s[0][0] = 1;
    for (unsigned j = 0; j < n; ++j)
        for (unsigned k = 0; k <= j; ++k) {
            s[j + 1][k + 1] += s[j][k];
            s[j + 1][k] -= s[j][k] * j;
        }
    return s;
}

mpq_class q(long a, long b = 1)
{
    return mpq_class(a, b);
}

}  // namespace

ThetaOperator::ThetaOperator(std::vector<std::vector<mpz_class>> rows, std::string name, std::optional<int> aesz)
    : rows_(std::move(rows)), name_(std::move(name)), aesz_(aesz)
{
    for (auto& r : rows_)
        while (!r.empty() && r.back() == 0)
            r.pop_back();
    while (!rows_.empty() && rows_.back().empty())
        rows_.pop_back();
    order_ = 0;
    for (const auto& r : rows_)
        if (!r.empty())
            order_ = std::max<unsigned>(order_, static_cast<unsigned>(r.size() - 1));
}

ThetaOperator ThetaOperator::from_polys(const std::vector<RatPoly>& p, std::string name, std::optional<int> aesz)
{
    mpz_class l = 1;
    for (const auto& poly : p)
        for (const auto& c : poly.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& poly : p) {
        std::vector<mpz_class> r;
        for (const auto& c : poly.coeffs())
            r.push_back(c.get_num() * (l / c.get_den()));
        rows.push_back(std::move(r));
    }
    return {std::move(rows), std::move(name), aesz};
}

mpz_class ThetaOperator::coeff(std::size_t i, std::size_t j) const
{
    if (i >= rows_.size() || j >= rows_[i].size())
        return 0;
    return rows_[i][j];
}

RatPoly ThetaOperator::P(std::size_t i) const
{
    if (i >= rows_.size())
        return {};
    return RatPoly(std::vector<mpq_class>(rows_[i].begin(), rows_[i].end()));
}

void ThetaOperator::eval_P(std::size_t i, long n, mpz_class& out) const
{
    out = 0;
    if (i >= rows_.size())
        return;
    const auto& r = rows_[i];
    for (std::size_t j = r.size(); j-- > 0;) {
        out *= n;
        out += r[j];
    }
}

RatPoly ThetaOperator::theta_coeff(std::size_t j) const
{
    std::vector<mpq_class> c;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        c.push_back(coeff(i, j));
    return RatPoly(std::move(c));
}

mpz_class ThetaOperator::content() const
{
    mpz_class g = 0;
    for (const auto& r : rows_)
        for (const auto& c : r)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ThetaOperator ThetaOperator::primitive() const
{
    mpz_class g = content();
    if (g == 0)
        return *this;
    auto rows = rows_;
    for (auto& r : rows)
        for (auto& c : r)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return {std::move(rows), name_, aesz_};
}

std::string ThetaOperator::to_json() const
{
    nlohmann::ordered_json j;
    j["name"] = name_;
    if (aesz_)
        j["aesz"] = *aesz_;
    else
        j["aesz"] = nullptr;
    j["theta_order"] = order_;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : rows_) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (unsigned k = 0; k <= order_; ++k)
            row.push_back(k < r.size() ? r[k].get_str() : std::string("0"));
        rows.push_back(row);
    }
    j["coeffs"] = rows;
    return j.dump();
}

ThetaOperator ThetaOperator::from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("operator JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw BadInput("operator JSON needs a \"coeffs\" array");
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& row : j["coeffs"]) {
        if (!row.is_array())
            throw BadInput("operator JSON rows must be arrays");
        std::vector<mpz_class> r;
        for (const auto& c : row) {
            std::string s = c.is_string() ? c.get<std::string>() : c.dump();
            mpz_class v;
            if (v.set_str(s, 10) != 0)
                throw BadInput("operator coefficient is not an integer: " + s);
            r.push_back(v);
        }
        rows.push_back(std::move(r));
    }
    std::string name = j.value("name", std::string());
    std::optional<int> aesz;
    if (j.contains("aesz") && j["aesz"].is_number_integer())
        aesz = j["aesz"].get<int>();
    ThetaOperator op(std::move(rows), name, aesz);
    if (j.contains("theta_order") && j["theta_order"].get<unsigned>() != op.order())
        throw BadInput("theta_order does not match the coefficient table");
    return op;
}

bool check_mum(const ThetaOperator& op)
{
    unsigned n = op.order();
    if (n == 0 || op.coeff(0, n) == 0)
        return false;
    for (unsigned j = 0; j < n; ++j)
        if (op.coeff(0, j) != 0)
            return false;
    return true;
}

RatPoly leading_symbol(const ThetaOperator& op)
{
    return op.theta_coeff(op.order());
}

MonicForm to_monic(const ThetaOperator& op)
{
    const unsigned n = op.order();
    RatPoly cn = op.theta_coeff(n);
    if (cn.is_zero())
        throw ZeroSymbol("operator has vanishing leading symbol");
    auto s = stirling2(n);
    std::vector<RatPoly> big(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        RatPoly acc;
        for (unsigned k = j; k <= n; ++k)
            if (s[k][j] != 0)
                acc += op.theta_coeff(k) * mpq_class(s[k][j]);
        big[j] = acc * RatPoly::monomial(j);
    }
    MonicForm m;
    m.order = n;
    for (unsigned j = 0; j < n; ++j)
        m.a.emplace_back(big[j], big[n]);
    return m;
}

std::vector<RationalFunction> theta_form_of(const MonicForm& m)
{
    const unsigned n = m.order;
    auto s = stirling1(n);
    std::vector<RationalFunction> out(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        RationalFunction aj = j == n ? RationalFunction(1) : m.a[j];
        RationalFunction w = aj * RationalFunction(RatPoly::monomial(n - j));
        for (unsigned k = 0; k <= j; ++k)
            if (s[j][k] != 0)
                out[k] += w * RationalFunction(mpq_class(s[j][k]));
    }
    return out;
}

bool check_cy4(const MonicForm& m)
{
    if (m.order != 4)
        return false;
    const auto& a1 = m.a[1];
    const auto& a2 = m.a[2];
    const auto& a3 = m.a[3];
    auto d3 = a3.derivative();
    RationalFunction rhs = RationalFunction(q(1, 2)) * a2 * a3 - RationalFunction(q(1, 8)) * a3 * a3 * a3
                           + a2.derivative() - RationalFunction(q(3, 4)) * a3 * d3
                           - RationalFunction(q(1, 2)) * d3.derivative();
    return a1 == rhs;
}

bool check_cy5(const MonicForm& m)
{
    if (m.order != 5)
        return false;
    using R = RationalFunction;
    const R& b0 = m.a[0];
    const R& b1 = m.a[1];
    const R& b2 = m.a[2];
    const R& b3 = m.a[3];
    const R& b4 = m.a[4];
    R b4p = b4.derivative();
    R b4pp = b4p.derivative();
    R b4ppp = b4pp.derivative();
    R b4pppp = b4ppp.derivative();
    R b3p = b3.derivative();
    R b3pp = b3p.derivative();
    R b3ppp = b3pp.derivative();
    R b4sq = b4 * b4;
    R b4cu = b4sq * b4;

    R rel2 = R(q(3, 5)) * b3 * b4 - R(q(4, 25)) * b4cu + R(q(3, 2)) * b3p - R(q(6, 5)) * b4 * b4p - b4pp;
    if (b2 != rel2)
        return false;

    R rel0 = R(q(1, 2)) * b1.derivative() - R(q(2, 125)) * b3 * b4cu + R(q(1, 5)) * b1 * b4
             - R(q(1, 10)) * b3 * b4pp + R(q(2, 5)) * b4ppp * b4 + R(q(4, 5)) * b4pp * b4p
             + R(q(16, 125)) * b4p * b4cu + R(q(12, 25)) * b4p * b4p * b4 - R(q(3, 10)) * b3pp * b4
             + R(q(8, 25)) * b4sq * b4pp - R(q(3, 10)) * b3p * b4p - R(q(3, 25)) * b4sq * b3p
             - R(q(1, 4)) * b3ppp + R(q(16, 3125)) * b4cu * b4sq + R(q(1, 5)) * b4pppp
             - R(q(3, 25)) * b3 * b4p * b4;
    return b0 == rel0;
}

namespace {

void require_mum(const ThetaOperator& op)
{
    if (!check_mum(op))
        throw BadInput("series solution needs a MUM operator (P_0 = const * theta^n)");
}

// Exact recurrence; emit(n, c_n) is called for every finished coefficient.
template <class Emit>
void exact_recurrence(const ThetaOperator& op, std::size_t N, Emit emit)
{
    require_mum(op);
    const std::size_t d = op.z_degree();
    std::vector<mpz_class> window(d + 1);  // window[n % (d+1)] = c_n
    window[0] = 1;
    emit(0, window[0]);
    mpz_class acc, val, den;
    for (std::size_t n = 1; n <= N; ++n) {
        acc = 0;
        for (std::size_t i = 1; i <= d && i <= n; ++i) {
            op.eval_P(i, static_cast<long>(n - i), val);
            if (val != 0)
                mpz_addmul(acc.get_mpz_t(), val.get_mpz_t(), window[(n - i) % (d + 1)].get_mpz_t());
        }
        op.eval_P(0, static_cast<long>(n), den);
        mpz_class& c = window[n % (d + 1)];
        if (!mpz_divisible_p(acc.get_mpz_t(), den.get_mpz_t()))
            throw NonIntegralSolution("coefficient " + std::to_string(n) + " of " +
                                      (op.name().empty() ? std::string("operator") : op.name()) +
                                      " is not an integer");
        mpz_divexact(c.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
        mpz_neg(c.get_mpz_t(), c.get_mpz_t());
        emit(n, c);
    }
}

}  // namespace

TruncatedSeries solve_series_padic(const ThetaOperator& op, std::size_t N, unsigned long p, unsigned cap)
{
    require_mum(op);
    PadicNumber probe(p, cap, 0);
    const mpz_class& mod = probe.modulus();
    const std::size_t d = op.z_degree();
    TruncatedSeries s;
    s.exact = false;
    s.p = p;
    s.cap = cap;
    s.source = op.name();
    s.coeffs.assign(N + 1, 0);
    s.coeffs[0] = 1;
    long g = cap;
    mpz_class acc, val, den, inv;
    for (std::size_t n = 1; n <= N; ++n) {
        acc = 0;
        for (std::size_t i = 1; i <= d && i <= n; ++i) {
            op.eval_P(i, static_cast<long>(n - i), val);
            mpz_addmul(acc.get_mpz_t(), val.get_mpz_t(), s.coeffs[n - i].get_mpz_t());
        }
        op.eval_P(0, static_cast<long>(n), den);
        unsigned long v = valuation(den, p);
        g -= static_cast<long>(v);
        if (g < 1)
            throw PrecisionExhausted("p-adic recurrence lost all digits at n = " + std::to_string(n));
        mpz_class pv = ipow(p, v);
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
        if (!mpz_divisible_p(acc.get_mpz_t(), pv.get_mpz_t()))
            throw NonIntegralSolution("coefficient " + std::to_string(n) + " is not p-integral");
        acc /= pv;
        mpz_class unit = den / pv;
        mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
        acc = -acc * inv;
        mpz_fdiv_r(s.coeffs[n].get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    }
    s.guaranteed = static_cast<unsigned>(g);
    return s;
}

TruncatedSeries solve_series(const ThetaOperator& op, std::size_t N, SeriesMode mode)
{
    TruncatedSeries s;
    s.source = op.name();
    s.coeffs.resize(N + 1);
    if (mode.exact) {
        exact_recurrence(op, N, [&](std::size_t n, const mpz_class& c) { s.coeffs[n] = c; });
        return s;
    }
    PadicNumber probe(mode.p, mode.cap, 0);
    const mpz_class& mod = probe.modulus();
    s.exact = false;
    s.p = mode.p;
    s.cap = mode.cap;
    s.guaranteed = mode.cap;
    try {
        exact_recurrence(op, N, [&](std::size_t n, const mpz_class& c) {
            mpz_fdiv_r(s.coeffs[n].get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
        });
        return s;
    } catch (const NonIntegralSolution&) {
    }
    // Non-integral intermediate structure: guarded p-adic recurrence plus a sampled re-check.
    const unsigned guard = mode.cap + 32;
    TruncatedSeries a = solve_series_padic(op, N, mode.p, guard);
    if (a.guaranteed < mode.cap)
        throw PrecisionExhausted("modular fallback keeps only " + std::to_string(a.guaranteed) + " digits");
    TruncatedSeries b = solve_series_padic(op, N, mode.p, guard + 16);
    const std::size_t step = N + 1 >= 100 ? 100 : 1;
    for (std::size_t n = 0; n <= N; n += step) {
        mpz_class x = a.coeffs[n] - b.coeffs[n];
        if (!mpz_divisible_p(x.get_mpz_t(), mod.get_mpz_t()))
            throw PrecisionExhausted("modular fallback unstable at coefficient " + std::to_string(n));
    }
    for (std::size_t n = 0; n <= N; ++n)
        mpz_fdiv_r(s.coeffs[n].get_mpz_t(), a.coeffs[n].get_mpz_t(), mod.get_mpz_t());
    return s;
}

}  // namespace frobcy
