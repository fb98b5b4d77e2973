#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qb2/cyclotomic.hpp"

using namespace qb2;

namespace {

Cyc random_cyc(std::mt19937_64& rng, long level) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rat> c(static_cast<size_t>(euler_phi(level)));
    for (auto& x : c) x = make_rat(num(rng), den(rng));
    return Cyc::from_coeffs(std::move(c), level);
}

} // namespace

TEST_CASE("cyclotomic polynomials match known closed forms") {
    auto coeffs = [](const std::vector<Int>& v) {
        std::vector<long> out;
        for (const auto& x : v) out.push_back(x.get_si());
        return out;
    };
    CHECK(coeffs(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
    CHECK(coeffs(cyclotomic_polynomial(2)) == std::vector<long>{1, 1});
    CHECK(coeffs(cyclotomic_polynomial(3)) == std::vector<long>{1, 1, 1});
    CHECK(coeffs(cyclotomic_polynomial(4)) == std::vector<long>{1, 0, 1});
    CHECK(coeffs(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
    CHECK(coeffs(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(coeffs(cyclotomic_polynomial(15)) == std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
    // Repeated calls return the identical cached object.
    CHECK(&cyclotomic_polynomial(15) == &cyclotomic_polynomial(15));
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(132) == 40);
}

TEST_CASE("zeta powers reduce canonically") {
    // zeta_4^2 = -1
    Cyc z2 = Cyc::zeta_pow(4, 2);
    CHECK(z2 == Cyc::from_rational(make_rat(-1), 4));
    // zeta_3^2 = -1 - zeta_3
    Cyc w = Cyc::zeta_pow(3, 2);
    CHECK(w == Cyc::from_coeffs({make_rat(-1), make_rat(-1)}, 3));
    // negative exponents wrap
    CHECK(Cyc::zeta_pow(15, -1) == Cyc::zeta_pow(15, 14));
    // zeta_L^L = 1
    CHECK(Cyc::zeta_pow(15, 15).is_one());
}

TEST_CASE("inverse examples") {
    CHECK(Cyc::zeta_pow(4, 1).inv() == -Cyc::zeta_pow(4, 1));

    // (1 - zeta_15^2)^-1 * (1 - zeta_15^6) = 1 + zeta_15^2 + zeta_15^4
    Cyc one = Cyc::one(15);
    Cyc a = one - Cyc::zeta_pow(15, 2);
    Cyc b = one - Cyc::zeta_pow(15, 6);
    Cyc expected = one + Cyc::zeta_pow(15, 2) + Cyc::zeta_pow(15, 4);
    CHECK(a.inv() * b == expected);

    CHECK_THROWS_AS(Cyc::zero(12).inv(), DivisionByZero);
}

TEST_CASE("cross-level arithmetic is refused; explicit raising works") {
    Cyc a = Cyc::zeta_pow(3, 1);
    Cyc b = Cyc::zeta_pow(15, 5);
    CHECK_THROWS_AS(a + b, LevelMismatch);
    CHECK(a.raised_to_level(15) == b);
    CHECK_THROWS_AS(a.raised_to_level(4), LevelMismatch);
}

TEST_CASE("order computation") {
    CHECK(order_of_exponent(15, 3) == 5);
    CHECK(order_of_exponent(15, 0) == 1);
    CHECK(order_of_exponent(4, 2) == 2);
    CHECK(order_of(Cyc::zeta_pow(15, 3)) == 5);
    CHECK(order_of(Cyc::one(15)) == 1);
    // -1 in an odd-level field has order 2 (outside the zeta_15 powers).
    CHECK(order_of(Cyc::from_rational(make_rat(-1), 15)) == 2);
    CHECK_THROWS_AS(order_of(Cyc::from_rational(make_rat(2), 15)), NotRootOfUnity);
    CHECK_THROWS_AS(order_of(Cyc::one(15) + Cyc::zeta_pow(15, 1)), NotRootOfUnity);
}

TEST_CASE("root config derivation") {
    RootConfig c = make_root_config(3, 5, 1, 1);
    CHECK(c.ell == 15);
    CHECK(c.er == 5);
    CHECK(c.es == 3);
    CHECK(c.s1 == 5);
    CHECK(c.s2 == 3);
    CHECK(order_of(c.r()) == 3);
    CHECK(order_of(c.s()) == 5);
    CHECK(c.ord_r2s2 == 15);   // r^2 s^2 = zeta_15^16 = zeta_15
    CHECK(c.ord_rs_inv == 15); // rs^-1 = zeta_15^2
    CHECK(c.ord_rs == 15);
    CHECK(c.ord_r2 == 3);
    CHECK(c.ord_s2 == 5);

    RootConfig d = make_root_config(2, 4, 1, 1);
    CHECK(d.ell == 4);
    CHECK(d.er == 2);
    CHECK(d.es == 1);

    RootConfig e = make_root_config(3, 3, 1, 2);
    CHECK(e.ell == 3);
    CHECK(e.er == 1);
    CHECK(e.es == 2);

    CHECK_THROWS_AS(make_root_config(3, 3, 1, 1), DegenerateParameters); // r = s
    CHECK_THROWS_AS(make_root_config(2, 2, 1, 1), DegenerateParameters);
    CHECK_THROWS_AS(make_root_config(4, 6, 2, 1), NotCoprime);
    CHECK_THROWS_AS(make_root_config(4, 6, 1, 3), NotCoprime);

    // Level multiplier scales the ambient field, not the structure.
    RootConfig f = make_root_config(3, 5, 1, 1, 2);
    CHECK(f.level == 30);
    CHECK(f.ell == 15);
    CHECK(order_of(f.r()) == 3);
}

TEST_CASE("order of r-s combinations matches scalar route across configs") {
    for (auto [m, n] : std::vector<std::pair<long, long>>{{3, 5}, {2, 4}, {4, 6}, {6, 2}, {3, 3}}) {
        for (long a = 1; a < m; ++a) {
            if (gcd_ll(a, m) != 1) continue;
            for (long b = 1; b < n; ++b) {
                if (gcd_ll(b, n) != 1) continue;
                RootConfig c;
                try {
                    c = make_root_config(m, n, a, b);
                } catch (const DegenerateParameters&) {
                    continue;
                }
                CHECK(order_of(c.r() * c.r() * c.s() * c.s()) == c.ord_r2s2);
                CHECK(order_of(c.r() * c.s().inv()) == c.ord_rs_inv);
                CHECK(order_of(c.rs_pow(1)) == c.ord_rs);
                CHECK(order_of(c.q_pow(2 * (c.er - c.es))) == c.ord_r2s2inv);
            }
        }
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(20260814u);
    int inverted = 0;
    for (int iter = 0; iter < 1200; ++iter) {
        long level = (iter % 3 == 0) ? 12 : (iter % 3 == 1) ? 15 : 8;
        Cyc a = random_cyc(rng, level);
        Cyc b = random_cyc(rng, level);
        Cyc c = random_cyc(rng, level);
        Cyc one = Cyc::one(level);
        Cyc zero = Cyc::zero(level);

        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + zero == a);
        REQUIRE(a * one == a);
        REQUIRE((a - a).is_zero());
        // canonical representation: difference zero iff equal
        REQUIRE(((a - b).is_zero()) == (a == b));
        if (!a.is_zero()) {
            REQUIRE(a.inv() * a == one);
            ++inverted;
        }
    }
    CHECK(inverted > 1000);
}

TEST_CASE("level raising is a ring homomorphism") {
    std::mt19937_64 rng(99u);
    for (int iter = 0; iter < 300; ++iter) {
        Cyc a = random_cyc(rng, 6);
        Cyc b = random_cyc(rng, 6);
        CHECK((a * b).raised_to_level(12) == a.raised_to_level(12) * b.raised_to_level(12));
        CHECK((a + b).raised_to_level(12) == a.raised_to_level(12) + b.raised_to_level(12));
    }
    // zeta_6 = zeta_12^2
    CHECK(Cyc::zeta_pow(6, 1).raised_to_level(12) == Cyc::zeta_pow(12, 2));
}

TEST_CASE("exponent order identity over a sweep") {
    for (long L : {4L, 12L, 15L, 60L}) {
        for (long e = 0; e < L; ++e) {
            CHECK(order_of_exponent(L, e) * gcd_ll(e, L) == L);
            CHECK(Cyc::zeta_pow(L, e).pow(order_of_exponent(L, e)).is_one());
        }
    }
}

TEST_CASE("pow handles negative exponents") {
    Cyc z = Cyc::zeta_pow(15, 2);
    CHECK(z.pow(-1) == z.inv());
    CHECK(z.pow(-3) * z.pow(3) == Cyc::one(15));
    CHECK(z.pow(0).is_one());
}
