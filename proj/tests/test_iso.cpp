#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qb2/iso.hpp"

using namespace qb2;

namespace {

Cyc rat(const RootConfig& cfg, long v) { return Cyc::from_rational(Rat(v), cfg.level); }

ParamTuple generic_params(FamilyTag t, const RootConfig& cfg) {
    switch (t) {
    case FamilyTag::U_M_LAMBDA: return {rat(cfg, 1), rat(cfg, 2), rat(cfg, 1), rat(cfg, 5)};
    case FamilyTag::U_M_MU: return {rat(cfg, 2), rat(cfg, 1), rat(cfg, 3)};
    case FamilyTag::U_M_EPSILON: return {rat(cfg, 1), rat(cfg, 2), rat(cfg, 3)};
    case FamilyTag::U_M_NU: return {rat(cfg, 2), rat(cfg, 1), rat(cfg, 3)};
    case FamilyTag::U_M_XI: return {rat(cfg, 2), rat(cfg, 1)};
    default: throw Error("no generic tuple for subalgebra tags");
    }
}

Cyc geom(const RootConfig& cfg, const Cyc& x, long k) {
    Cyc acc = cfg.zero();
    Cyc power = cfg.one();
    for (long i = 0; i < k; ++i) {
        acc += power;
        power *= x;
    }
    return acc;
}

// Forward substitution of each family's relabeling equations, no twists.
ParamTuple lambda_shifted(const RootConfig& cfg, const ParamTuple& p, long u, long v) {
    const Cyc s2d = cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2));
    ParamTuple q(4, cfg.zero());
    q[0] = cfg.s_pow(2 * v) * p[0];
    q[1] = cfg.s_pow(-2 * u) * p[1];
    q[2] = cfg.rs_pow(-2 * u) * cfg.rsinv_pow(-v) * p[2];
    q[3] = cfg.rs_pow(-2 * u) * p[3] + s2d * geom(cfg, cfg.rsinv_pow(1), v) * q[2];
    return q;
}

ParamTuple mu_shifted(const RootConfig& cfg, const ParamTuple& p, long u, long v) {
    const long cols = dims_for(FamilyTag::U_M_MU, cfg, p).cols;
    return {cfg.r_pow(2 * v) * p[0], cfg.rs_pow(-2 * u) * cfg.rsinv_pow(v) * p[1],
            cfg.r_pow(-2 * u * cols) * p[2]};
}

ParamTuple epsilon_shifted(const RootConfig& cfg, const ParamTuple& p, long u) {
    return {p[0], cfg.rs_pow(-u) * p[1], cfg.rsinv_pow(-u) * p[2]};
}

ParamTuple nu_shifted(const RootConfig& cfg, const ParamTuple& p, long u, long v) {
    const long cols = dims_for(FamilyTag::U_M_NU, cfg, p).cols;
    return {cfg.s_pow(2 * v) * p[0], cfg.rs_pow(-u) * p[1], cfg.s_pow(-2 * u * cols) * p[2]};
}

ParamTuple xi_shifted(const RootConfig& cfg, const ParamTuple& p, long j) {
    return {cfg.rs_pow(j * cfg.ord_rs_inv) * p[0], p[1]};
}

bool criteria(FamilyTag t, const RootConfig& cfg, const ParamTuple& p, const ParamTuple& q) {
    return iso_by_criteria(t, p, q, cfg).by_criteria;
}

bool intertwines(const Representation& a, const CycMatrix& t, const Representation& b) {
    for (size_t g = 0; g < a.action.size(); ++g)
        if (matmul(a.action[g], t) != matmul(t, b.action[g])) return false;
    return true;
}

} // namespace

TEST_CASE("identical tuples are accepted with the identity shift") {
    for (const RootConfig& cfg : {make_root_config(3, 3, 1, 2), make_root_config(2, 4, 1, 1)}) {
        for (FamilyTag t : {FamilyTag::U_M_LAMBDA, FamilyTag::U_M_MU, FamilyTag::U_M_EPSILON,
                            FamilyTag::U_M_NU, FamilyTag::U_M_XI}) {
            INFO("family ", to_string(t), " at ", cfg.m, " ", cfg.n, " ", cfg.k1, " ", cfg.k2);
            ParamTuple p = generic_params(t, cfg);
            IsoVerdict verdict = iso_by_criteria(t, p, p, cfg);
            CHECK(verdict.by_criteria);
            REQUIRE(verdict.witness_shift.has_value());
            CHECK(verdict.witness_shift->first == 0);
            CHECK(verdict.witness_shift->second == 0);
        }
    }
}

TEST_CASE("forward-substituted tuples are accepted for every family") {
    RootConfig c24 = make_root_config(2, 4, 1, 1);
    RootConfig c33 = make_root_config(3, 3, 1, 2);

    ParamTuple lam = generic_params(FamilyTag::U_M_LAMBDA, c24);
    CHECK(criteria(FamilyTag::U_M_LAMBDA, c24, lam, lambda_shifted(c24, lam, 1, 2)));
    CHECK(criteria(FamilyTag::U_M_LAMBDA, c24, lam, lambda_shifted(c24, lam, 0, 3)));

    ParamTuple lam33 = generic_params(FamilyTag::U_M_LAMBDA, c33);
    IsoVerdict v33 =
        iso_by_criteria(FamilyTag::U_M_LAMBDA, lam33, lambda_shifted(c33, lam33, 0, 1), c33);
    CHECK(v33.by_criteria);
    REQUIRE(v33.witness_shift.has_value());
    CHECK(v33.witness_shift->first == 0);
    CHECK(v33.witness_shift->second == 1);

    ParamTuple mu = generic_params(FamilyTag::U_M_MU, c24);
    CHECK(criteria(FamilyTag::U_M_MU, c24, mu, mu_shifted(c24, mu, 1, 0)));
    CHECK(criteria(FamilyTag::U_M_MU, c24, mu, mu_shifted(c24, mu, 0, c24.ord_rs_inv)));

    ParamTuple eps = generic_params(FamilyTag::U_M_EPSILON, c24);
    CHECK(criteria(FamilyTag::U_M_EPSILON, c24, eps, epsilon_shifted(c24, eps, 2)));

    ParamTuple nu = generic_params(FamilyTag::U_M_NU, c24);
    CHECK(criteria(FamilyTag::U_M_NU, c24, nu, nu_shifted(c24, nu, 1, 0)));
    CHECK(criteria(FamilyTag::U_M_NU, c24, nu, nu_shifted(c24, nu, 0, c24.ord_r2s2inv)));

    RootConfig c12 = make_root_config(12, 12, 5, 1);
    ParamTuple xi = generic_params(FamilyTag::U_M_XI, c12);
    CHECK(dims_for(FamilyTag::U_M_XI, c12, xi).dim() == 6);
    CHECK(criteria(FamilyTag::U_M_XI, c12, xi, xi_shifted(c12, xi, 1)));
}

TEST_CASE("scaling a pinned parameter by a non-root is rejected") {
    RootConfig cfg = make_root_config(2, 4, 1, 1);
    for (FamilyTag t : {FamilyTag::U_M_LAMBDA, FamilyTag::U_M_MU, FamilyTag::U_M_EPSILON,
                        FamilyTag::U_M_NU, FamilyTag::U_M_XI}) {
        INFO("family ", to_string(t));
        ParamTuple p = generic_params(t, cfg);
        ParamTuple q = p;
        // The second slot is matched exactly up to root-of-unity factors in
        // every family, so a rational rescaling can never be absorbed.
        q[1] = q[1] * Rat(7);
        CHECK_FALSE(criteria(t, cfg, p, q));
        CHECK_FALSE(criteria(t, cfg, q, p));
    }
}

TEST_CASE("the diagonal family example with shifted second and third slots") {
    RootConfig cfg = make_root_config(2, 4, 1, 1);
    ParamTuple eps = {rat(cfg, 1), rat(cfg, 1), rat(cfg, 1)};
    ParamTuple eps2 = {rat(cfg, 1), cfg.rs_pow(1), cfg.rsinv_pow(1)};
    IsoVerdict verdict = iso_by_criteria(FamilyTag::U_M_EPSILON, eps, eps2, cfg);
    CHECK(verdict.by_criteria);
    REQUIRE(verdict.witness_shift.has_value());
    CHECK(verdict.witness_shift->first == 3);
    CHECK(criteria(FamilyTag::U_M_EPSILON, cfg, eps2, eps));

    Representation a = build_module(FamilyTag::U_M_EPSILON, cfg, eps);
    Representation b = build_module(FamilyTag::U_M_EPSILON, cfg, eps2);
    IsoVerdict full = decide_isomorphism(a, b);
    CHECK(full.by_criteria);
    CHECK(full.by_intertwiner.has_value());
    CHECK(*full.by_intertwiner);
    REQUIRE(full.intertwiner.has_value());
    CHECK(intertwines(a, *full.intertwiner, b));
}

TEST_CASE("first-parameter powers are compared at the module dimension") {
    // Here the grid has 3 points while the root lattice order is 6, so a
    // primitive 6th root twist of the first parameter changes the module but
    // a cube root twist does not. The intertwiner solver arbitrates.
    RootConfig cfg = make_root_config(6, 2, 1, 1);
    ParamTuple eps = generic_params(FamilyTag::U_M_EPSILON, cfg);
    REQUIRE(dims_for(FamilyTag::U_M_EPSILON, cfg, eps).dim() == 3);

    ParamTuple sixth = eps;
    sixth[0] = Cyc::zeta_pow(cfg.level, cfg.level / 6) * eps[0];
    ParamTuple third = eps;
    third[0] = Cyc::zeta_pow(cfg.level, cfg.level / 3) * eps[0];

    Representation base = build_module(FamilyTag::U_M_EPSILON, cfg, eps);
    Representation twisted6 = build_module(FamilyTag::U_M_EPSILON, cfg, sixth);
    Representation twisted3 = build_module(FamilyTag::U_M_EPSILON, cfg, third);

    CHECK_FALSE(criteria(FamilyTag::U_M_EPSILON, cfg, eps, sixth));
    CHECK_FALSE(find_intertwiner(base, twisted6).has_value());

    CHECK(criteria(FamilyTag::U_M_EPSILON, cfg, eps, third));
    std::optional<CycMatrix> t = find_intertwiner(base, twisted3);
    REQUIRE(t.has_value());
    CHECK(inverse(*t).has_value());
    CHECK(intertwines(base, *t, twisted3));
}

TEST_CASE("intertwiner solver basics") {
    RootConfig c33 = make_root_config(3, 3, 1, 2);
    ParamTuple lam = generic_params(FamilyTag::U_M_LAMBDA, c33);
    Representation rep = build_module(FamilyTag::U_M_LAMBDA, c33, lam);

    std::optional<CycMatrix> self = find_intertwiner(rep, rep);
    REQUIRE(self.has_value());
    CHECK(intertwines(rep, *self, rep));
    CHECK(inverse(*self).has_value());

    // Different grid sizes cannot be intertwined.
    RootConfig dn = make_root_config(24, 24, 1, 7);
    Representation big = build_module(FamilyTag::U_M_NU, dn, {rat(dn, 1), rat(dn, 1), rat(dn, 1)});
    Representation small =
        build_module(FamilyTag::U_M_NU, dn, {rat(dn, 1), rat(dn, 1), rat(dn, 0)});
    REQUIRE(big.dim() != small.dim());
    CHECK_FALSE(find_intertwiner(big, small).has_value());

    RootConfig c24 = make_root_config(2, 4, 1, 1);
    Representation other =
        build_module(FamilyTag::U_M_LAMBDA, c24, generic_params(FamilyTag::U_M_LAMBDA, c24));
    CHECK_THROWS_AS(find_intertwiner(rep, other), ConfigMismatch);

    Representation borel =
        build_module(FamilyTag::B_M1_LAMBDA, c33, generic_params(FamilyTag::U_M_LAMBDA, c33));
    CHECK_THROWS_AS(find_intertwiner(rep, borel), FamilyMismatch);
}

TEST_CASE("both decision routes agree and produce an invertible witness") {
    RootConfig cfg = make_root_config(3, 3, 1, 2);
    ParamTuple lam = generic_params(FamilyTag::U_M_LAMBDA, cfg);
    ParamTuple shifted = lambda_shifted(cfg, lam, 0, 2);
    Representation a = build_module(FamilyTag::U_M_LAMBDA, cfg, lam);
    Representation b = build_module(FamilyTag::U_M_LAMBDA, cfg, shifted);

    IsoVerdict verdict = decide_isomorphism(a, b);
    CHECK(verdict.by_criteria);
    REQUIRE(verdict.intertwiner.has_value());
    CHECK(intertwines(a, *verdict.intertwiner, b));

    ParamTuple unrelated = lam;
    unrelated[2] = unrelated[2] * Rat(2);
    Representation c = build_module(FamilyTag::U_M_LAMBDA, cfg, unrelated);
    IsoVerdict negative = decide_isomorphism(a, c);
    CHECK_FALSE(negative.by_criteria);
    REQUIRE(negative.by_intertwiner.has_value());
    CHECK_FALSE(*negative.by_intertwiner);
    CHECK_FALSE(negative.intertwiner.has_value());
}

TEST_CASE("the explicit relabeling matrix intertwines the two actions") {
    for (auto [m, n, k1, k2, u, v] : {std::array<long, 6>{3, 3, 1, 2, 0, 1},
                                      std::array<long, 6>{2, 4, 1, 1, 1, 2},
                                      std::array<long, 6>{2, 4, 1, 1, 1, 0}}) {
        RootConfig cfg = make_root_config(m, n, k1, k2);
        INFO("config ", m, " ", n, " ", k1, " ", k2, " shift ", u, " ", v);
        ParamTuple lam = generic_params(FamilyTag::U_M_LAMBDA, cfg);
        ParamTuple shifted = lambda_shifted(cfg, lam, u, v);
        REQUIRE(criteria(FamilyTag::U_M_LAMBDA, cfg, lam, shifted));
        Representation a = build_module(FamilyTag::U_M_LAMBDA, cfg, lam);
        Representation b = build_module(FamilyTag::U_M_LAMBDA, cfg, shifted);
        CycMatrix t = lambda_relabeling_map(cfg, lam, shifted, u, v);
        CHECK(intertwines(a, t, b));
        CHECK(inverse(t).has_value());
    }
}

TEST_CASE("criteria relation is symmetric and transitive on shifted chains") {
    RootConfig cfg = make_root_config(2, 4, 1, 1);

    ParamTuple lam = generic_params(FamilyTag::U_M_LAMBDA, cfg);
    ParamTuple lam2 = lambda_shifted(cfg, lam, 1, 1);
    ParamTuple lam3 = lambda_shifted(cfg, lam2, 1, 2);
    CHECK(criteria(FamilyTag::U_M_LAMBDA, cfg, lam2, lam));
    CHECK(criteria(FamilyTag::U_M_LAMBDA, cfg, lam, lam3));

    ParamTuple mu = generic_params(FamilyTag::U_M_MU, cfg);
    ParamTuple mu2 = mu_shifted(cfg, mu, 1, cfg.ord_rs_inv);
    ParamTuple mu3 = mu_shifted(cfg, mu2, 1, 0);
    CHECK(criteria(FamilyTag::U_M_MU, cfg, mu2, mu));
    CHECK(criteria(FamilyTag::U_M_MU, cfg, mu, mu3));

    ParamTuple eps = generic_params(FamilyTag::U_M_EPSILON, cfg);
    ParamTuple eps2 = epsilon_shifted(cfg, eps, 3);
    ParamTuple eps3 = epsilon_shifted(cfg, eps2, 2);
    CHECK(criteria(FamilyTag::U_M_EPSILON, cfg, eps2, eps));
    CHECK(criteria(FamilyTag::U_M_EPSILON, cfg, eps, eps3));

    ParamTuple nu = generic_params(FamilyTag::U_M_NU, cfg);
    ParamTuple nu2 = nu_shifted(cfg, nu, 3, 0);
    ParamTuple nu3 = nu_shifted(cfg, nu2, 2, cfg.ord_r2s2inv);
    CHECK(criteria(FamilyTag::U_M_NU, cfg, nu2, nu));
    CHECK(criteria(FamilyTag::U_M_NU, cfg, nu, nu3));
}

TEST_CASE("input guards") {
    RootConfig cfg = make_root_config(3, 3, 1, 2);
    ParamTuple lam = generic_params(FamilyTag::U_M_LAMBDA, cfg);
    CHECK_THROWS_AS(iso_by_criteria(FamilyTag::B_M1_LAMBDA, lam, lam, cfg), FamilyMismatch);
    ParamTuple wrong = {rat(cfg, 1), rat(cfg, 2)};
    CHECK_THROWS_AS(iso_by_criteria(FamilyTag::U_M_LAMBDA, lam, wrong, cfg), FamilyMismatch);
    ParamTuple off_level = {Cyc::from_rational(Rat(1), 8), Cyc::from_rational(Rat(2), 8),
                            Cyc::from_rational(Rat(1), 8), Cyc::from_rational(Rat(5), 8)};
    CHECK_THROWS_AS(iso_by_criteria(FamilyTag::U_M_LAMBDA, lam, off_level, cfg), LevelMismatch);
    CHECK_THROWS_AS(cross_validate(FamilyTag::B_M2_MU, cfg, 4), FamilyMismatch);
}

TEST_CASE("sampled cross validation sees zero disagreements") {
    RootConfig c33 = make_root_config(3, 3, 1, 2);
    for (FamilyTag t : {FamilyTag::U_M_LAMBDA, FamilyTag::U_M_MU, FamilyTag::U_M_EPSILON,
                        FamilyTag::U_M_NU, FamilyTag::U_M_XI}) {
        INFO("family ", to_string(t));
        CrossValidationReport report = cross_validate(t, c33, 20);
        CHECK(report.pairs == 20);
        CHECK(report.positives == 10);
        CHECK(report.negatives == 10);
        CHECK(report.positives_confirmed == report.positives);
        CHECK(report.mismatches == 0);
        CHECK(report.mismatch_details.empty());
    }

    // Exercises the dimension-versus-lattice-order power comparison.
    RootConfig c62 = make_root_config(6, 2, 1, 1);
    CrossValidationReport eps = cross_validate(FamilyTag::U_M_EPSILON, c62, 20);
    CHECK(eps.mismatches == 0);
    CHECK(eps.positives_confirmed == eps.positives);

    // Exercises the stride-constrained shift set on a long string.
    RootConfig c12 = make_root_config(12, 12, 5, 1);
    CrossValidationReport xi = cross_validate(FamilyTag::U_M_XI, c12, 10);
    CHECK(xi.mismatches == 0);
    CHECK(xi.positives_confirmed == xi.positives);

    // Same seed, same outcome.
    CrossValidationReport again = cross_validate(FamilyTag::U_M_XI, c12, 10);
    CHECK(again.pairs == xi.pairs);
    CHECK(again.positives_confirmed == xi.positives_confirmed);
    CHECK(again.mismatches == xi.mismatches);
}
