#include "frobcy/catalog.hpp"
#include "frobcy/diffop.hpp"
#include "frobcy/errors.hpp"
#include "frobcy/wedge.hpp"

#include <doctest.h>

using namespace frobcy;

namespace {

RatPoly P(std::initializer_list<long> c)
{
    std::vector<mpq_class> v;
    for (long x : c)
        v.emplace_back(x);
    return RatPoly(v);
}

using Rows = std::vector<std::vector<mpz_class>>;

ThetaOperator quintic()
{
    RatPoly t = P({1, 5}) * P({2, 5}) * P({3, 5}) * P({4, 5}) * RatPoly(-5);
    return ThetaOperator::from_polys({RatPoly::monomial(4), t}, "quintic");
}

}  // namespace

TEST_CASE("wedge_square reproduces the printed Q")
{
    ThetaOperator q = wedge_square(catalog_entry("A*a").op);
    Rows want = {
        {0, 0, 0, 0, 0, 1},
        {-44, -260, -628, -792, -560, -224},
        {-6512, 400, 44160, 71040, 42240, 8448},
        {4177920, 13180928, 16588800, 10567680, 3440640, 458752},
        {100663296, 285212672, 310378496, 163577856, 41943040, 4194304},
    };
    CHECK(q.rows() == want);
    CHECK(q.order() == 5);
    CHECK(check_mum(q));
    CHECK(check_cy5(to_monic(q)));
}

TEST_CASE("wedge_square is invariant under scaling the operator")
{
    const ThetaOperator& op = catalog_entry("B*c").op;
    Rows scaled = op.rows();
    for (auto& r : scaled)
        for (auto& c : r)
            c *= -6;
    CHECK(wedge_square(ThetaOperator(scaled)) == wedge_square(op));
}

TEST_CASE("rank-2 analogue gives Abel's identity")
{
    for (const char* name : {"a", "b", "A", "g"}) {
        const ThetaOperator& op = second_order(name).op;
        ThetaOperator w = exterior_square_operator(op);
        REQUIRE(w.order() == 1);
        // theta W = -q1 W with q1 = (theta^1 coefficient) / (theta^2 coefficient)
        RatPoly lead = op.theta_coeff(2), sub = op.theta_coeff(1);
        RationalFunction lhs(w.theta_coeff(0), w.theta_coeff(1));
        CHECK(lhs == RationalFunction(sub, lead));
    }
}

TEST_CASE("order guard")
{
    CHECK_THROWS_AS(wedge_square(second_order("a").op), BadInput);
}

TEST_CASE("f0_wedge_via_wronskian")
{
    const ThetaOperator& op = catalog_entry("A*a").op;
    CHECK(f0_wedge_via_wronskian(op, 5).coeffs ==
          std::vector<mpz_class>{1, 44, 3652, 337712, 33909700, 3567877424});
    CHECK(f0_wedge_via_wronskian(op, 200).coeffs == solve_series(wedge_square(op), 200).coeffs);
    ThetaOperator triv = ThetaOperator::from_polys({RatPoly::monomial(4), -(P({1, 1}) * P({1, 1}) * P({1, 1}) * P({1, 1}))});
    CHECK(f0_wedge_via_wronskian(triv, 10).coeffs[0] == 1);
}

TEST_CASE("log solution satisfies the inhomogeneous recurrence")
{
    const ThetaOperator& op = catalog_entry("C*a").op;
    auto f = solve_series(op, 40).coeffs;
    auto g = log_solution(op, f);
    CHECK(g[0] == 0);
    // L(f log z + g) = sum_i z^i (P_i'(theta) f + P_i(theta) g)
    std::vector<RatPoly> Pd;
    for (std::size_t i = 0; i <= op.z_degree(); ++i)
        Pd.push_back(op.P(i).derivative());
    for (std::size_t n = 1; n <= 40; ++n) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i <= op.z_degree() && i <= n; ++i) {
            mpq_class m(static_cast<long>(n - i));
            acc += Pd[i](m) * f[n - i] + op.P(i)(m) * g[n - i];
        }
        CHECK(acc == 0);
    }
}

TEST_CASE("quintic wedge coefficients match the Wronskian construction")
{
    auto A = quintic_wedge_coefficients(30);
    CHECK(A[0] == 1);
    CHECK(A[1] == 1010);
    CHECK(A == f0_wedge_via_wronskian(quintic(), 30).coeffs);
}

TEST_CASE("rational_exp_integral")
{
    RationalFunction r(P({0, 2}), P({1, 0, 1}));
    RationalFunction y = rational_exp_integral(r);
    CHECK(y.derivative() / y == r);

    RationalFunction s = RationalFunction(P({-3, 7})) / RationalFunction(P({0, 1, -7}));
    RationalFunction y2 = rational_exp_integral(s);
    CHECK(y2.derivative() / y2 == s);
    CHECK((y2 / RationalFunction(P({1, -14, 49}), RatPoly::monomial(3))).derivative().is_zero());

    CHECK_THROWS_AS(rational_exp_integral(RationalFunction(RatPoly(1), P({0, 2}))), NotRationalY);
    CHECK_THROWS_AS(rational_exp_integral(RationalFunction(RatPoly(1))), NotRationalY);
}

TEST_CASE("horizontal sections")
{
    for (const char* name : {"A*a", "B*a", "C*a"}) {
        const ThetaOperator& op = catalog_entry(name).op;
        CHECK_MESSAGE(verify_horizontal_u4(op, 60), name);
        CHECK_MESSAGE(verify_horizontal_u5(wedge_square(op), 60), name);
    }
    const ThetaOperator& op = catalog_entry("A*a").op;
    CHECK_FALSE(verify_horizontal_u4(op, 60, {true, false}));
    CHECK_FALSE(verify_horizontal_u5(wedge_square(op), 60, {true, false}));
    CHECK_FALSE(verify_horizontal_u5(wedge_square(op), 60, {false, true}));
}
