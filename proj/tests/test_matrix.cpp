#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qb2/matrix.hpp"

using namespace qb2;

namespace {

CycMatrix random_matrix(std::mt19937_64& rng, long n, long level) {
    std::uniform_int_distribution<long> num(-2, 2);
    CycMatrix m(n, n, level);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::vector<Rat> c(static_cast<size_t>(euler_phi(level)));
            for (auto& x : c) x = make_rat(num(rng));
            m.at(i, j) = Cyc::from_coeffs(std::move(c), level);
        }
    return m;
}

} // namespace

TEST_CASE("multiplication against hand-computed 2x2 over Q(zeta_4)") {
    const long L = 4;
    Cyc i4 = Cyc::zeta_pow(L, 1);
    CycMatrix a(2, 2, L), b(2, 2, L);
    // a = [[i, 1], [0, 2]], b = [[1, i], [i, 0]]
    a.at(0, 0) = i4;
    a.at(0, 1) = Cyc::one(L);
    a.at(1, 1) = Cyc::from_rational(make_rat(2), L);
    b.at(0, 0) = Cyc::one(L);
    b.at(0, 1) = i4;
    b.at(1, 0) = i4;
    CycMatrix c = matmul(a, b);
    // [[i + i, i*i], [2i, 0]] = [[2i, -1], [2i, 0]]
    CHECK(c.at(0, 0) == i4 * Cyc::from_rational(make_rat(2), L));
    CHECK(c.at(0, 1) == Cyc::from_rational(make_rat(-1), L));
    CHECK(c.at(1, 0) == i4 * Cyc::from_rational(make_rat(2), L));
    CHECK(c.at(1, 1).is_zero());
}

TEST_CASE("identity and powers") {
    std::mt19937_64 rng(7u);
    CycMatrix m = random_matrix(rng, 3, 4);
    CycMatrix id = CycMatrix::identity(3, 4);
    CHECK(matmul(m, id) == m);
    CHECK(matmul(id, m) == m);
    CHECK(matpow(m, 0) == id);
    CHECK(matpow(m, 3) == matmul(m, matmul(m, m)));
}

TEST_CASE("inverse round trip and singularity detection") {
    std::mt19937_64 rng(11u);
    int invertible = 0;
    for (int iter = 0; iter < 30; ++iter) {
        CycMatrix m = random_matrix(rng, 4, 4);
        auto inv = inverse(m);
        if (!inv) {
            CHECK(rank(m) < 4);
            continue;
        }
        ++invertible;
        CHECK(matmul(m, *inv) == CycMatrix::identity(4, 4));
        CHECK(matmul(*inv, m) == CycMatrix::identity(4, 4));
    }
    CHECK(invertible > 20);

    CycMatrix sing(2, 2, 4);
    sing.at(0, 0) = Cyc::one(4);
    sing.at(1, 0) = Cyc::one(4);
    CHECK(!inverse(sing).has_value());
    CHECK(rank(sing) == 1);
}

TEST_CASE("nullspace vectors solve the system") {
    std::mt19937_64 rng(13u);
    for (int iter = 0; iter < 20; ++iter) {
        CycMatrix m = random_matrix(rng, 4, 4);
        // 3x5 system with a forced column dependency
        CycMatrix wide(3, 5, 4);
        for (long i = 0; i < 3; ++i) {
            for (long j = 0; j < 4; ++j) wide.at(i, j) = m.at(i, j);
            wide.at(i, 4) = m.at(i, 0) + m.at(i, 2);
        }
        auto basis = nullspace(wide);
        CHECK(static_cast<long>(basis.size()) == 5 - rank(wide));
        REQUIRE(!basis.empty());
        for (const auto& v : basis) {
            for (long i = 0; i < 3; ++i) {
                Cyc acc = Cyc::zero(4);
                for (long j = 0; j < 5; ++j) acc += wide.at(i, j) * v[static_cast<size_t>(j)];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("echelon span accumulates dimensions") {
    const long L = 4;
    EchelonSpan span(3, L);
    auto vec = [&](long a, long b, long c) {
        return std::vector<Cyc>{Cyc::from_rational(make_rat(a), L), Cyc::from_rational(make_rat(b), L),
                                Cyc::from_rational(make_rat(c), L)};
    };
    CHECK(span.insert(vec(1, 2, 3)));
    CHECK(!span.insert(vec(2, 4, 6)));
    CHECK(span.insert(vec(0, 1, 1)));
    CHECK(span.dim() == 2);
    CHECK(!span.insert(vec(1, 3, 4)));
    CHECK(span.insert(vec(0, 0, 5)));
    CHECK(span.dim() == 3);
    CHECK(!span.insert(vec(7, -2, 9)));
}

TEST_CASE("rref is idempotent and rank is invariant under row shuffles") {
    std::mt19937_64 rng(17u);
    for (int iter = 0; iter < 20; ++iter) {
        CycMatrix m = random_matrix(rng, 4, 8);
        CycMatrix r1 = m;
        rref_in_place(r1);
        CycMatrix r2 = r1;
        rref_in_place(r2);
        CHECK(r1 == r2);

        CycMatrix shuffled(4, 4, 8);
        std::vector<long> perm{3, 1, 0, 2};
        for (long i = 0; i < 4; ++i)
            for (long j = 0; j < 4; ++j) shuffled.at(i, j) = m.at(perm[static_cast<size_t>(i)], j);
        CHECK(rank(m) == rank(shuffled));
    }
}
