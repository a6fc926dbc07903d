#include "frobcy/errors.hpp"
#include "frobcy/padic.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace frobcy;

TEST_CASE("padic_inv")
{
    CHECK(padic_inv(PadicNumber(7, 4, 1)).residue() == 1);
    PadicNumber y = padic_inv(PadicNumber(7, 4, 1814));
    CHECK(y.residue() == oracle::inverse_mod(1814, 2401));
    CHECK((y * PadicNumber(7, 4, 1814)).residue() == 1);
    CHECK_THROWS_AS(padic_inv(PadicNumber(7, 4, 49)), NotAUnit);
}

TEST_CASE("teichmueller lifts")
{
    CHECK(teichmueller(1, 7, 4).residue() == 1);
    CHECK(teichmueller(6, 7, 4).residue() == 2400);
    PadicNumber w = teichmueller(2, 7, 4);
    CHECK(w.residue() % 7 == 2);
    CHECK(oracle::pow_mod(w.residue().get_si(), 6, 2401) == 1);
    CHECK(teichmueller(0, 7, 4).residue() == 0);

    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul})
        for (unsigned K = 1; K <= 6; ++K) {
            std::int64_t m = mpz_get_si(ipow(p, K).get_mpz_t());
            for (unsigned long a = 1; a < p; ++a) {
                PadicNumber t = teichmueller(a, p, K);
                CHECK(t.residue() % p == a);
                CHECK(oracle::pow_mod(t.residue().get_si(), p - 1, m) == 1);
            }
        }
}

TEST_CASE("balanced_lift")
{
    CHECK(balanced_lift(PadicNumber(7, 4, 2)) == 2);
    CHECK(balanced_lift(PadicNumber(7, 4, 2396)) == -5);
    CHECK(balanced_lift(PadicNumber(7, 4, 2393)) == -8);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        unsigned K = 1 + rng() % 6;
        unsigned G = 1 + rng() % K;
        mpz_class r = static_cast<unsigned long>(rng() % 1000000007ul);
        PadicNumber x(11, K, r, G);
        mpz_class m = balanced_lift(x);
        mpz_class pg = ipow(11, G);
        mpz_class d = m - x.residue();
        CHECK(mpz_divisible_p(d.get_mpz_t(), pg.get_mpz_t()));
        CHECK(2 * abs(m) <= pg);
    }
}

TEST_CASE("ring axioms and inverse involution")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        auto rnd = [&] { return PadicNumber(13, 5, static_cast<unsigned long>(rng() % 371293)); };
        PadicNumber a = rnd(), b = rnd(), c = rnd();
        CHECK(((a + b) + c).residue() == (a + (b + c)).residue());
        CHECK(((a * b) * c).residue() == (a * (b * c)).residue());
        CHECK((a * (b + c)).residue() == (a * b + a * c).residue());
        if (a.is_unit())
            CHECK(padic_inv(padic_inv(a)).residue() == a.residue());
    }
}

TEST_CASE("precision tracking")
{
    PadicNumber x(7, 6, 49 * 3);
    CHECK(x.valuation() == 2);
    PadicNumber q = (x * PadicNumber(7, 6, 5)) / x;
    CHECK(q.guaranteed() == 4);
    CHECK(q.residue() % ipow(7, 4) == 5);
    CHECK(PadicNumber(7, 6, 14).div_int(7).guaranteed() == 5);
}

TEST_CASE("precision errors")
{
    CHECK_THROWS_AS(PadicNumber(7, 2, 1).div_int(49), PrecisionExhausted);
    CHECK_THROWS_AS(PadicNumber(7, 4, 1).div_int(7), NonIntegral);
    CHECK_THROWS_AS(PadicNumber(2, 4, 1), BadInput);
    CHECK_THROWS_AS(PadicNumber(9, 4, 1), BadInput);
}
