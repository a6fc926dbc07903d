#include "frobcy/catalog.hpp"
#include "frobcy/diffop.hpp"
#include "frobcy/errors.hpp"
#include "frobcy/wedge.hpp"

#include <doctest.h>

#include <random>

using namespace frobcy;

namespace {

RatPoly P(std::initializer_list<long> c)
{
    std::vector<mpq_class> v;
    for (long x : c)
        v.emplace_back(x);
    return RatPoly(v);
}

// theta^n - z (theta + 1)^n
ThetaOperator trivial(unsigned n)
{
    RatPoly t = RatPoly(1);
    for (unsigned i = 0; i < n; ++i)
        t *= P({1, 1});
    return ThetaOperator::from_polys({RatPoly::monomial(n), -t});
}

// Apply an operator sum_k a_k D^k (a_n = 1) to x^m and return the result divided by x^m as a function.
RationalFunction monic_on_monomial(const MonicForm& f, long m)
{
    RationalFunction acc;
    mpq_class falling = 1;
    RationalFunction xinv = RationalFunction(RatPoly(1), RatPoly::x());
    RationalFunction xpow = 1;
    for (unsigned k = 0; k <= f.order; ++k) {
        RationalFunction ak = k == f.order ? RationalFunction(1) : f.a[k];
        acc += ak * RationalFunction(falling) * xpow;
        falling *= m - static_cast<long>(k);
        xpow *= xinv;
    }
    return acc;
}

// Evaluate the CY(4) relation a_1 = a_2 a_3/2 - a_3^3/8 + a_2' - 3 a_3 a_3'/4 - a_3''/2 directly.
mpq_class cy4_defect(const MonicForm& m, const mpq_class& x)
{
    const auto& a = m.a;
    RationalFunction a2p = a[2].derivative(), a3p = a[3].derivative(), a3pp = a3p.derivative();
    return a[1](x) - (a[2](x) * a[3](x) / 2 - a[3](x) * a[3](x) * a[3](x) / 8 + a2p(x) -
                      mpq_class(3, 4) * a[3](x) * a3p(x) - a3pp(x) / 2);
}

// Defects of the two CY(5) relations for b2 and b0, evaluated at x.
std::pair<mpq_class, mpq_class> cy5_defect(const MonicForm& m, const mpq_class& x)
{
    std::vector<std::vector<mpq_class>> d(5);  // d[i][k] = b_i^(k)(x)
    for (int i = 0; i < 5; ++i) {
        RationalFunction f = m.a[i];
        for (int k = 0; k <= 4; ++k) {
            d[i].push_back(f(x));
            f = f.derivative();
        }
    }
    auto b = [&](int i, int k) { return d[i][k]; };
    using q = mpq_class;
    q b4 = b(4, 0), b3 = b(3, 0);
    q rel2 = q(3, 5) * b3 * b4 - q(4, 25) * b4 * b4 * b4 + q(3, 2) * b(3, 1) - q(6, 5) * b4 * b(4, 1) - b(4, 2);
    q rel0 = q(1, 2) * b(1, 1) - q(2, 125) * b3 * b4 * b4 * b4 + q(1, 5) * b(1, 0) * b4 - q(1, 10) * b3 * b(4, 2) +
             q(2, 5) * b(4, 3) * b4 + q(4, 5) * b(4, 2) * b(4, 1) + q(16, 125) * b(4, 1) * b4 * b4 * b4 +
             q(12, 25) * b(4, 1) * b(4, 1) * b4 - q(3, 10) * b(3, 2) * b4 + q(8, 25) * b4 * b4 * b(4, 2) -
             q(3, 10) * b(3, 1) * b(4, 1) - q(3, 25) * b4 * b4 * b(3, 1) - q(1, 4) * b(3, 3) +
             q(16, 3125) * b4 * b4 * b4 * b4 * b4 + q(1, 5) * b(4, 4) - q(3, 25) * b3 * b(4, 1) * b4;
    return {b(2, 0) - rel2, b(0, 0) - rel0};
}

}  // namespace

TEST_CASE("check_mum")
{
    CHECK(check_mum(catalog_entry("A*a").op));
    CHECK_FALSE(check_mum(ThetaOperator::from_polys({P({0, 0, 0, 1, 1}), P({1, 1})})));
    CHECK(check_mum(wedge_square(catalog_entry("A*a").op)));
}

TEST_CASE("to_monic")
{
    MonicForm t2 = to_monic(ThetaOperator::from_polys({RatPoly::monomial(2)}));
    REQUIRE(t2.order == 2);
    CHECK(t2.a[1] == RationalFunction(RatPoly(1), RatPoly::x()));
    CHECK(t2.a[0].is_zero());

    MonicForm t4 = to_monic(ThetaOperator::from_polys({RatPoly::monomial(4)}));
    // x^4 D^4 + 6x^3 D^3 + 7x^2 D^2 + x D, divided by x^4; on x^m this is m^4 x^(m-4).
    for (long m = 0; m < 9; ++m)
        CHECK(monic_on_monomial(t4, m) == RationalFunction(RatPoly(mpq_class(m * m * m * m)), RatPoly::monomial(4)));
    CHECK(t4.a[3] == RationalFunction(RatPoly(6), RatPoly::x()));
    CHECK(t4.a[2] == RationalFunction(RatPoly(7), RatPoly::monomial(2)));
    CHECK(t4.a[1] == RationalFunction(RatPoly(1), RatPoly::monomial(3)));
}

TEST_CASE("theta_form_of inverts to_monic")
{
    for (const char* name : {"A*a", "B*c", "D*g"}) {
        const ThetaOperator& op = catalog_entry(name).op;
        auto q = theta_form_of(to_monic(op));
        for (unsigned k = 0; k < op.order(); ++k)
            CHECK(q[k] == RationalFunction(op.theta_coeff(k), op.theta_coeff(op.order())));
    }
}

TEST_CASE("check_cy4")
{
    MonicForm m = to_monic(catalog_entry("A*a").op);
    CHECK(check_cy4(m));

    RatPoly t = P({0, 1}) * P({1, 1}) * P({1, 1}) * P({1, 1});
    MonicForm g = to_monic(ThetaOperator::from_polys({RatPoly::monomial(4), -t}));
    CHECK_FALSE(check_cy4(g));
    int nonzero = 0;
    for (long k : {3, 11, 29})
        nonzero += cy4_defect(g, mpq_class(k, 17)) != 0;
    CHECK(nonzero > 0);
    for (long k : {3, 11, 29})
        CHECK(cy4_defect(m, mpq_class(k, 17)) == 0);

    for (const auto& e : catalog())
        CHECK_MESSAGE(check_cy4(to_monic(e.op)), e.name);
}

TEST_CASE("check_cy5")
{
    MonicForm q = to_monic(wedge_square(catalog_entry("A*a").op));
    CHECK(check_cy5(q));
    for (long k : {3, 11, 29}) {
        auto [e2, e0] = cy5_defect(q, mpq_class(k, 17));
        CHECK(e2 == 0);
        CHECK(e0 == 0);
    }

    // theta^5 - x(theta+1)^5 = theta^5 (1 - x) is self-dual up to conjugation, so it satisfies both relations.
    MonicForm t = to_monic(trivial(5));
    CHECK(check_cy5(t));
    CHECK(cy5_defect(t, mpq_class(5, 17)) == std::make_pair(mpq_class(0), mpq_class(0)));

    RatPoly u = P({0, 1}) * P({1, 1}) * P({1, 1}) * P({1, 1}) * P({1, 1});
    MonicForm g = to_monic(ThetaOperator::from_polys({RatPoly::monomial(5), -u}));
    CHECK_FALSE(check_cy5(g));
    int nonzero = 0;
    for (long k : {3, 11, 29}) {
        auto [e2, e0] = cy5_defect(g, mpq_class(k, 17));
        nonzero += e2 != 0 || e0 != 0;
    }
    CHECK(nonzero > 0);
}

TEST_CASE("solve_series")
{
    const ThetaOperator& op = catalog_entry("A*a").op;
    auto s = solve_series(op, 5);
    CHECK(s.coeffs == std::vector<mpz_class>{1, 8, 360, 22400, 1695400, 143011008});
    auto q = solve_series(wedge_square(op), 5);
    CHECK(q.coeffs == std::vector<mpz_class>{1, 44, 3652, 337712, 33909700, 3567877424});
    auto g = solve_series(trivial(4), 30);
    for (const auto& c : g.coeffs)
        CHECK(c == 1);
    CHECK_THROWS_AS(solve_series(ThetaOperator::from_polys({P({0, 0, 0, 1, 1}), P({1, 1})}), 5), BadInput);
}

TEST_CASE("modular series versus exact")
{
    const ThetaOperator& op = catalog_entry("A*a").op;
    auto exact = solve_series(op, 500);
    auto big = solve_series(op, 500, SeriesMode::modular(7, 400));
    mpz_class m = 1;
    mpz_pow_ui(m.get_mpz_t(), mpz_class(7).get_mpz_t(), 400);
    for (std::size_t n = 0; n <= 500; ++n) {
        mpz_class r = exact.coeffs[n] % m;
        if (r < 0)
            r += m;
        CHECK(big.coeffs[n] == r);
    }
    auto small = solve_series(op, 2400, SeriesMode::modular(7, 4));
    auto ref = solve_series(op, 2400);
    bool same = true;
    for (std::size_t n = 0; n <= 2400; ++n) {
        mpz_class r = ref.coeffs[n] % 2401;
        if (r < 0)
            r += 2401;
        same = same && small.coeffs[n] == r;
    }
    CHECK(same);
    CHECK_THROWS_AS(solve_series_padic(op, 500, 7, 10), PrecisionExhausted);
}

TEST_CASE("leading_symbol")
{
    CHECK(leading_symbol(catalog_entry("A*a").op) == P({1, -112, -2048}));
    CHECK(leading_symbol(ThetaOperator::from_polys({RatPoly::monomial(4)})) == RatPoly(1));
    RatPoly s = leading_symbol(catalog_entry("A*a").op);
    std::vector<long> roots;
    for (long z = 0; z < 7; ++z) {
        mpz_class v = s(mpq_class(z)).get_num();
        if (v % 7 == 0)
            roots.push_back(z);
    }
    CHECK(roots == std::vector<long>{3, 4});
}

TEST_CASE("json round trip")
{
    const ThetaOperator& op = catalog_entry("C*c").op;
    ThetaOperator back = ThetaOperator::from_json(op.to_json());
    CHECK(back == op);
    CHECK(back.name() == op.name());
    CHECK_THROWS(ThetaOperator::from_json("{\"coeffs\": 3}"));
}
