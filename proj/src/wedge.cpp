#include "frobcy/wedge.hpp"

#include "frobcy/errors.hpp"
#include "frobcy/series.hpp"

#include <map>

namespace frobcy {

namespace {

const RationalFunction kZ(RatPoly::x());

std::size_t pair_index(unsigned n, unsigned i, unsigned j)
{
    // position of (i, j), i < j, in lexicographic order
    std::size_t idx = 0;
    for (unsigned a = 0; a < i; ++a)
        idx += n - 1 - a;
    return idx + (j - i - 1);
}

}  // namespace

ModuleVector DifferentialModule::apply(const ModuleVector& v) const
{
    if (v.size() != dimension)
        throw DimensionMismatch("module vector has the wrong length");
    ModuleVector out(dimension);
    for (unsigned j = 0; j < dimension; ++j) {
        if (v[j].is_zero())
            continue;
        out[j] += kZ * v[j].derivative();
        for (unsigned k = 0; k < dimension; ++k)
            if (!theta[j][k].is_zero())
                out[k] += v[j] * theta[j][k];
    }
    return out;
}

DifferentialModule operator_module(const ThetaOperator& op)
{
    const unsigned n = op.order();
    RatPoly cn = op.theta_coeff(n);
    if (cn.is_zero())
        throw ZeroSymbol("operator has vanishing leading symbol");
    DifferentialModule m;
    m.dimension = n;
    m.theta.assign(n, ModuleVector(n));
    for (unsigned i = 0; i + 1 < n; ++i)
        m.theta[i][i + 1] = 1;
    for (unsigned k = 0; k < n; ++k)
        m.theta[n - 1][k] = -RationalFunction(op.theta_coeff(k), cn);
    return m;
}

DifferentialModule exterior_square(const DifferentialModule& m)
{
    const unsigned n = m.dimension;
    DifferentialModule w;
    w.dimension = n * (n - 1) / 2;
    w.theta.assign(w.dimension, ModuleVector(w.dimension));
    auto add_wedge = [&](ModuleVector& target, unsigned a, unsigned b, const RationalFunction& c) {
        if (a == b || c.is_zero())
            return;
        if (a < b)
            target[pair_index(n, a, b)] += c;
        else
            target[pair_index(n, b, a)] -= c;
    };
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            ModuleVector& row = w.theta[pair_index(n, i, j)];
            for (unsigned k = 0; k < n; ++k) {
                add_wedge(row, k, j, m.theta[i][k]);
                add_wedge(row, i, k, m.theta[j][k]);
            }
        }
    return w;
}

ThetaOperator minimal_relation(const DifferentialModule& m, const ModuleVector& v)
{
    std::vector<ModuleVector> powers{v};
    for (unsigned k = 1; k <= m.dimension; ++k) {
        powers.push_back(m.apply(powers.back()));
        std::vector<std::vector<RationalFunction>> a(m.dimension, std::vector<RationalFunction>(k));
        for (unsigned r = 0; r < m.dimension; ++r)
            for (unsigned c = 0; c < k; ++c)
                a[r][c] = powers[c][r];
        auto sol = solve_linear_system(a, powers[k]);
        if (!sol)
            continue;
        // theta^k v - sum_j x_j theta^j v = 0
        std::vector<RationalFunction> q(k + 1);
        q[k] = 1;
        for (unsigned j = 0; j < k; ++j)
            q[j] = -sol->x[j];
        RatPoly l(1);
        for (const auto& f : q)
            l = div_exact(l * f.den(), gcd(l, f.den()));
        std::vector<RatPoly> polys;
        for (const auto& f : q)
            polys.push_back(div_exact(f.num() * l, f.den()));
        RatPoly g;
        for (const auto& p : polys)
            g = gcd(g, p);
        std::size_t zdeg = 0;
        for (auto& p : polys) {
            p = div_exact(p, g);
            zdeg = std::max<std::size_t>(zdeg, p.coeffs().size());
        }
        // rows indexed by z-power, columns by theta-power
        std::vector<RatPoly> rows;
        for (std::size_t i = 0; i < zdeg; ++i) {
            std::vector<mpq_class> r;
            for (const auto& p : polys)
                r.push_back(p[i]);
            rows.emplace_back(std::move(r));
        }
        ThetaOperator op = ThetaOperator::from_polys(rows).primitive();
        if (op.coeff(0, k) < 0) {
            auto neg = op.rows();
            for (auto& r : neg)
                for (auto& c : r)
                    c = -c;
            op = ThetaOperator(std::move(neg));
        }
        return op;
    }
    throw UnexpectedOrder("no relation found within the module dimension");
}

ThetaOperator exterior_square_operator(const ThetaOperator& op)
{
    if (op.order() < 2)
        throw BadInput("exterior square needs order at least 2");
    DifferentialModule w = exterior_square(operator_module(op));
    ModuleVector eta(w.dimension);
    eta[0] = 1;  // e_0 ^ e_1
    return minimal_relation(w, eta);
}

ThetaOperator wedge_square(const ThetaOperator& p_op)
{
    if (p_op.order() != 4 || !check_mum(p_op))
        throw BadInput("wedge_square expects a fourth-order MUM operator");
    ThetaOperator q = exterior_square_operator(p_op);
    if (q.order() != 5)
        throw UnexpectedOrder("exterior square relation has order " + std::to_string(q.order()));
    return ThetaOperator(q.rows(), p_op.name().empty() ? std::string() : "Q(" + p_op.name() + ")");
}

std::vector<mpq_class> log_solution(const ThetaOperator& op, const std::vector<mpz_class>& f0)
{
    if (!check_mum(op))
        throw BadInput("log solution needs a MUM operator");
    const std::size_t N = f0.empty() ? 0 : f0.size() - 1;
    const std::size_t d = op.z_degree();
    std::vector<RatPoly> dp;
    for (std::size_t i = 0; i <= d; ++i)
        dp.push_back(op.P(i).derivative());
    std::vector<mpq_class> g(N + 1, mpq_class(0));
    mpz_class val;
    for (std::size_t n = 1; n <= N; ++n) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i <= d && i <= n; ++i) {
            long m = static_cast<long>(n - i);
            acc -= dp[i](mpq_class(m)) * f0[n - i];
            if (i >= 1) {
                op.eval_P(i, m, val);
                acc -= mpq_class(val) * g[n - i];
            }
        }
        op.eval_P(0, static_cast<long>(n), val);
        g[n] = acc / mpq_class(val);
    }
    return g;
}

TruncatedSeries f0_wedge_via_wronskian(const ThetaOperator& p_op, std::size_t N)
{
    TruncatedSeries f = solve_series(p_op, N);
    std::vector<mpq_class> g = log_solution(p_op, f.coeffs);
    TruncatedSeries w;
    w.source = p_op.name().empty() ? std::string() : "wronskian(" + p_op.name() + ")";
    w.coeffs.resize(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j <= n; ++j) {
            std::size_t k = n - j;
            acc += mpq_class(f.coeffs[j] * f.coeffs[k]);
            acc += mpq_class(f.coeffs[j] * static_cast<unsigned long>(k)) * g[k];
            acc -= g[j] * mpq_class(f.coeffs[k] * static_cast<unsigned long>(k));
        }
        if (acc.get_den() != 1)
            throw NonIntegralSolution("wronskian coefficient " + std::to_string(n) + " is not an integer");
        w.coeffs[n] = acc.get_num();
    }
    return w;
}

RationalFunction rational_exp_integral(const RationalFunction& r)
{
    if (r.is_zero())
        return 1;
    const RatPoly& num = r.num();
    const RatPoly& den = r.den();
    if (num.degree() >= den.degree())
        throw NotRationalY("logarithmic derivative has a polynomial part");
    RatPoly dd = den.derivative();
    if (gcd(den, dd).degree() > 0)
        throw NotRationalY("logarithmic derivative has a multiple pole");
    RatPoly top(1), bottom(1);
    int covered = 0;
    for (long e = 1; e <= 256 && covered < den.degree(); ++e)
        for (long s : {e, -e}) {
            RatPoly g = gcd(den, num - dd * mpq_class(s));
            if (g.degree() <= 0)
                continue;
            covered += g.degree();
            for (long k = 0; k < e; ++k)
                (s > 0 ? top : bottom) *= g;
        }
    if (covered != den.degree())
        throw NotRationalY("residues are not all integers");
    RationalFunction y(top, bottom);
    if (y.derivative() / y != r)
        throw NotRationalY("integer-residue candidate does not reproduce the logarithmic derivative");
    return y;
}

namespace {

std::vector<mpq_class> to_q(const std::vector<mpz_class>& c)
{
    return {c.begin(), c.end()};
}

// Checks sum_k (u_k' + u_{k-1} - u_{n-1} a_k) e_k = 0 below z^upto.
bool connection_kills(const std::vector<QSeries>& u, const std::vector<QSeries>& a, long upto)
{
    const std::size_t n = u.size();
    for (std::size_t k = 0; k < n; ++k) {
        QSeries r = u[k].derivative() - u[n - 1] * a[k];
        if (k > 0)
            r = r + u[k - 1];
        if (!r.vanishes_below(upto))
            return false;
    }
    return true;
}

}  // namespace

bool verify_horizontal_u4(const ThetaOperator& p_op, std::size_t N, HorizontalOptions opts)
{
    if (p_op.order() != 4)
        throw BadInput("u4 needs a fourth-order operator");
    using R = RationalFunction;
    MonicForm m = to_monic(p_op);
    const R& a2 = m.a[2];
    const R& a3 = m.a[3];
    R y = rational_exp_integral(R(mpq_class(1, 2)) * a3);
    R y1 = y.derivative();
    R y2 = y1.derivative();
    R cA = y * a3 - y1;
    R cB = y * a2 - (y * a3).derivative() + y2;

    const long prec = static_cast<long>(N) + 16;
    TruncatedSeries f0 = solve_series(p_op, N + 8);
    QSeries f = QSeries::from_power_series(to_q(f0.coeffs));
    QSeries f1 = f.derivative(), f2 = f1.derivative(), f3 = f2.derivative();
    QSeries Y = QSeries::from_rational(y, prec);
    QSeries A = QSeries::from_rational(cA, prec);
    QSeries B = QSeries::from_rational(cB, prec);

    std::vector<QSeries> u(4);
    u[3] = Y * f;
    u[2] = A * f - Y * f1;
    u[1] = Y * f2 + B * f;
    u[0] = -(Y * f3) - A * f2 - B * f1;
    if (opts.flip_sign)
        u[1] = Y * f2 - B * f;

    std::vector<QSeries> a;
    for (const auto& ak : m.a)
        a.push_back(QSeries::from_rational(ak, prec));
    return connection_kills(u, a, static_cast<long>(N) - 4);
}

bool verify_horizontal_u5(const ThetaOperator& q_op, std::size_t N, HorizontalOptions opts)
{
    if (q_op.order() != 5)
        throw BadInput("u5 needs a fifth-order operator");
    using R = RationalFunction;
    MonicForm m = to_monic(q_op);
    R b1 = opts.drop_b1 ? R() : m.a[1];
    const R& b3 = m.a[3];
    const R& b4 = m.a[4];
    R y = rational_exp_integral(R(mpq_class(2, 5)) * b4);
    R y1 = y.derivative(), y2 = y1.derivative(), y3 = y2.derivative(), y4 = y3.derivative();
    R yb3 = y * b3, yb4 = y * b4;
    R yb3d = yb3.derivative(), yb4d = yb4.derivative();
    R yb3dd = yb3d.derivative(), yb4dd = yb4d.derivative(), yb4ddd = yb4dd.derivative();
    const R third(mpq_class(1, 3)), four3(mpq_class(4, 3)), half(mpq_class(1, 2));

    R c4 = yb4 - y1;
    R c3 = yb3 - yb4d + y2;
    R c2 = four3 * (yb4d - y2) - yb3;
    R c1 = half * (yb3d - four3 * (yb4dd - y3));
    R c0 = y * b1 - half * (yb3dd - four3 * (yb4ddd - y4));
    if (opts.flip_sign)
        c2 = -c2;

    const long prec = static_cast<long>(N) + 16;
    TruncatedSeries F0 = solve_series(q_op, N + 10);
    QSeries F = QSeries::from_power_series(to_q(F0.coeffs));
    QSeries F1 = F.derivative(), F2 = F1.derivative(), F3 = F2.derivative(), F4 = F3.derivative();
    QSeries Y = QSeries::from_rational(y, prec);
    QSeries C4 = QSeries::from_rational(c4, prec);
    QSeries C3 = QSeries::from_rational(c3, prec);
    QSeries C2 = QSeries::from_rational(c2, prec);
    QSeries C1 = QSeries::from_rational(c1, prec);
    QSeries C0 = QSeries::from_rational(c0, prec);
    const mpq_class mthird(-1, 3);

    std::vector<QSeries> u(5);
    u[4] = Y * F;
    u[3] = C4 * F - Y * F1;
    u[2] = Y * F2 + C4 * F1 * mthird + C3 * F;
    u[1] = -(Y * F3) + C4 * F2 * mthird + C2 * F1 + C1 * F;
    u[0] = Y * F4 + C4 * F3 + C3 * F2 + C1 * F1 + C0 * F;

    std::vector<QSeries> b;
    for (const auto& bk : m.a)
        b.push_back(QSeries::from_rational(bk, prec));
    return connection_kills(u, b, static_cast<long>(N) - 4);
}

}  // namespace frobcy
