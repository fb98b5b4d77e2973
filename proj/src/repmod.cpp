#include "qb2/repmod.hpp"

#include <numeric>

namespace qb2 {

namespace {

long wrap(long x, long mod) { return ((x % mod) + mod) % mod; }

// 1 + u + ... + u^{k-1}
Cyc geom_sum(const RootConfig& cfg, const Cyc& u, long k) {
    Cyc acc = cfg.zero();
    Cyc p = cfg.one();
    for (long i = 0; i < k; ++i) {
        acc += p;
        p *= u;
    }
    return acc;
}

void require_params(FamilyTag fam, const RootConfig& cfg, const ParamTuple& params) {
    if (static_cast<long>(params.size()) != param_count(fam))
        throw FamilyMismatch(to_string(fam) + " takes " + std::to_string(param_count(fam)) +
                             " parameters, got " + std::to_string(params.size()));
    for (const Cyc& p : params)
        if (p.level() != cfg.level) throw LevelMismatch("parameter level differs from configuration level");
}

void require_unit(const Cyc& p, const std::string& name) {
    if (p.is_zero()) throw ZeroParameter(name + " must be invertible");
}

// true when x1 X4 - r^2 X4 x1 - X2 vanishes; pins the absolute normalization
// of X1 through the inhomogeneous X2 term.
bool x1_x4_relation_holds(const RootConfig& cfg, const CycMatrix& x1, const CycMatrix& x2,
                          const CycMatrix& x4) {
    CycMatrix lhs = matmul(x1, x4);
    CycMatrix rhs = matmul(x4, x1);
    rhs *= cfg.r_pow(2);
    rhs += x2;
    return lhs == rhs;
}

// true when X2 X4 - s^2 X4 X2 + s^2 X3 vanishes; ties the wrap-around column
// of X4 to the interior columns, which the x1 relation cannot see.
bool x2_x4_relation_holds(const RootConfig& cfg, const CycMatrix& x2, const CycMatrix& x3,
                          const CycMatrix& x4) {
    CycMatrix lhs = matmul(x2, x4);
    CycMatrix rhs = matmul(x4, x2);
    rhs *= cfg.s_pow(2);
    CycMatrix x3s = x3;
    x3s *= cfg.s_pow(2);
    rhs -= x3s;
    return lhs == rhs;
}

FamilyDims lambda_dims(const RootConfig& cfg) {
    FamilyDims d;
    d.rows = cfg.ord_r2s2;
    if ((cfg.ord_r2s2 * cfg.ord_rs_inv) % cfg.ord_s2 != 0) d.rows *= 2;
    d.cols = cfg.ord_rs_inv;
    return d;
}

FamilyDims mu_dims(const RootConfig& cfg, const Cyc& mu3) {
    FamilyDims d;
    d.rows = cfg.ord_r2s2;
    d.cols = cfg.ord_rs_inv;
    if (!mu3.is_zero() && (cfg.ord_r2s2 * cfg.ord_rs_inv) % cfg.ord_r2 != 0) d.cols *= 2;
    return d;
}

FamilyDims epsilon_dims(const RootConfig& cfg) {
    return {std::lcm(cfg.ord_rs, cfg.ord_rs_inv), 1};
}

FamilyDims nu_dims(const RootConfig& cfg, const Cyc& nu3) {
    FamilyDims d;
    d.rows = cfg.ord_rs;
    d.cols = cfg.ord_r2s2inv;
    if (!nu3.is_zero() && (cfg.ord_r2s2inv * cfg.ord_rs) % cfg.ord_s2 != 0) d.cols *= 2;
    return d;
}

FamilyDims xi_dims(const RootConfig& cfg, const Cyc& xi2) {
    if (xi2.is_zero()) return {cfg.ord_rs_inv, 1};
    return {std::lcm(cfg.ord_rs, cfg.ord_rs_inv), 1};
}

// Shared X1, X2, X3 and normal-element action of the lambda families.
Representation build_lambda_base(const RootConfig& cfg, const ParamTuple& p) {
    const Cyc &l1 = p[0], &l2 = p[1], &l3 = p[2], &l4 = p[3];
    require_unit(l1, "lambda1");
    require_unit(l2, "lambda2");
    require_unit(l3, "lambda3");
    const Cyc u = cfg.rsinv_pow(1);
    const Cyc s2d = cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2));
    // Excluded hyperplane: (1 - rs^{-1}) lambda4 = s^2 (r^2 - s^2) lambda3.
    if ((cfg.one() - u) * l4 == s2d * l3)
        throw ConstraintViolated("lambda4 lies on the excluded hyperplane");

    Representation rep;
    rep.family = FamilyTag::B_M1_LAMBDA;
    rep.config = cfg;
    rep.params = p;
    rep.dims = lambda_dims(cfg);
    const long L = rep.dims.rows, M = rep.dims.cols, D = rep.dim();
    const Cyc l1inv = l1.inv(), l2inv = l2.inv();

    CycMatrix X1(D, D, cfg.level), X2(D, D, cfg.level), X3(D, D, cfg.level), W(D, D, cfg.level);
    for (long a = 0; a < L; ++a) {
        for (long b = 0; b < M; ++b) {
            const long row = rep.index(a, b);
            X1.at(row, rep.index(wrap(a + 1, L), b)) = cfg.s_pow(-2 * b) * l1;
            if (b + 1 < M)
                X2.at(row, rep.index(a, b + 1)) = l2;
            else
                X2.at(row, rep.index(a, 0)) = cfg.s_pow(2 * a * M) * l2;
            X3.at(row, rep.index(wrap(a - 1, L), b)) = cfg.rs_pow(2 * a + b) * l1inv * l3;
            if (b > 0)
                W.at(row, rep.index(a, b - 1)) =
                    l2inv * cfg.rs_pow(2 * a) * (l4 - s2d * geom_sum(cfg, u, b) * l3);
            else
                W.at(row, rep.index(a, M - 1)) =
                    l2inv * l4 * cfg.r_pow(2 * a) * cfg.s_pow(-2 * a * (M - 1));
        }
    }
    rep.action = {std::move(X1), std::move(X2), std::move(X3), std::move(W)};
    return rep;
}

Representation build_u_m_lambda(const RootConfig& cfg, const ParamTuple& p) {
    Representation rep = build_lambda_base(cfg, p);
    rep.family = FamilyTag::U_M_LAMBDA;
    const Cyc &l1 = p[0], &l2 = p[1], &l3 = p[2], &l4 = p[3];
    const Cyc l1inv = l1.inv(), l2inv = l2.inv();
    const Cyc u = cfg.rsinv_pow(1);
    const Cyc s2d = cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2));
    const Cyc invD = (cfg.r_pow(2) - cfg.s_pow(2)).inv();
    const long L = rep.dims.rows, M = rep.dims.cols, D = rep.dim();

    auto t_coeff = [&](long b) {
        return l1inv * l2inv * (l4 - s2d * geom_sum(cfg, u, b) * l3);
    };

    // Two readings of the s-exponent in the b = 0 boundary term.
    auto build_x4 = [&](bool joint_exponent) {
        CycMatrix X4(D, D, cfg.level);
        for (long a = 0; a < L; ++a) {
            const long am1 = wrap(a - 1, L);
            for (long b = 0; b < M; ++b) {
                const long row = rep.index(a, b);
                if (b == 0) {
                    const Cyc sfac = joint_exponent ? cfg.s_pow(-2 * ((a - 1) * M + 1))
                                                    : cfg.s_pow(-2 * (a - 1) * M + 1);
                    X4.at(row, rep.index(am1, M - 1)) += invD * cfg.rs_pow(2 * a) * sfac * t_coeff(0);
                    X4.at(row, rep.index(am1, 1)) -= invD * cfg.s_pow(2) * l1inv * l2;
                } else if (b == M - 1) {
                    X4.at(row, rep.index(am1, M - 2)) +=
                        invD * cfg.rs_pow(2 * a) * cfg.s_pow(2 * (M - 2)) * t_coeff(M - 1);
                    X4.at(row, rep.index(am1, 0)) -= invD * cfg.s_pow(2 * a * M) * l1inv * l2;
                } else {
                    X4.at(row, rep.index(am1, b - 1)) +=
                        invD * cfg.rs_pow(2 * a) * cfg.s_pow(2 * (b - 1)) * t_coeff(b);
                    X4.at(row, rep.index(am1, b + 1)) -= invD * cfg.s_pow(2 * (b + 1)) * l1inv * l2;
                }
            }
        }
        return X4;
    };

    CycMatrix direct = build_x4(false);
    if (x1_x4_relation_holds(cfg, rep.x1(), rep.x2(), direct) &&
        x2_x4_relation_holds(cfg, rep.x2(), rep.x3(), direct)) {
        rep.action[3] = std::move(direct);
        rep.notes.push_back("x4 boundary exponent: split reading");
        return rep;
    }
    CycMatrix joint = build_x4(true);
    if (x1_x4_relation_holds(cfg, rep.x1(), rep.x2(), joint) &&
        x2_x4_relation_holds(cfg, rep.x2(), rep.x3(), joint)) {
        rep.action[3] = std::move(joint);
        rep.notes.push_back("x4 boundary exponent: joint reading");
        return rep;
    }
    throw CaseMismatch("no x4 boundary reading satisfies the defining relation");
}

Representation build_mu_base(const RootConfig& cfg, const ParamTuple& p) {
    const Cyc &m1 = p[0], &m2 = p[1], &m3 = p[2];
    require_unit(m1, "mu1");
    require_unit(m2, "mu2");
    const Cyc ubar = cfg.rsinv_pow(-1); // r^{-1} s
    const Cyc s2d = cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2));

    Representation rep;
    rep.family = FamilyTag::B_M2_MU;
    rep.config = cfg;
    rep.params = p;
    rep.dims = mu_dims(cfg, m3);
    const long L = rep.dims.rows, M = rep.dims.cols, D = rep.dim();
    const Cyc m1inv = m1.inv();

    CycMatrix X1(D, D, cfg.level), X2(D, D, cfg.level), X3(D, D, cfg.level), W(D, D, cfg.level);
    for (long a = 0; a < L; ++a) {
        for (long b = 0; b < M; ++b) {
            const long row = rep.index(a, b);
            X1.at(row, rep.index(wrap(a + 1, L), b)) = cfg.r_pow(-2 * b) * m1;
            if (b > 0)
                X2.at(row, rep.index(a, b - 1)) =
                    cfg.rs_pow(2 * a) * s2d * geom_sum(cfg, ubar, b) * m2;
            X3.at(row, rep.index(wrap(a - 1, L), b)) = cfg.rs_pow(2 * a + b) * m1inv * m2;
            if (b + 1 < M)
                W.at(row, rep.index(a, b + 1)) = cfg.one();
            else
                W.at(row, rep.index(a, 0)) = cfg.r_pow(2 * a * M) * m3;
        }
    }
    rep.action = {std::move(X1), std::move(X2), std::move(X3), std::move(W)};
    return rep;
}

Representation build_u_m_mu(const RootConfig& cfg, const ParamTuple& p) {
    Representation rep = build_mu_base(cfg, p);
    rep.family = FamilyTag::U_M_MU;
    const Cyc &m1 = p[0], &m2 = p[1], &m3 = p[2];
    const Cyc m1inv = m1.inv();
    const Cyc ubar = cfg.rsinv_pow(-1);
    const Cyc s2d = cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2));
    const Cyc invD = (cfg.r_pow(2) - cfg.s_pow(2)).inv();
    const long L = rep.dims.rows, M = rep.dims.cols, D = rep.dim();

    CycMatrix X4(D, D, cfg.level);
    for (long a = 0; a < L; ++a) {
        const long am1 = wrap(a - 1, L);
        for (long b = 0; b < M; ++b) {
            const long row = rep.index(a, b);
            if (b + 1 < M)
                X4.at(row, rep.index(am1, b + 1)) += invD * cfg.r_pow(2 * (b + 1)) * m1inv;
            else
                X4.at(row, rep.index(am1, 0)) += invD * cfg.r_pow(2 * a * M) * m1inv * m3;
            if (b > 0)
                X4.at(row, rep.index(am1, b - 1)) -= invD * cfg.rs_pow(2 * a) * s2d *
                                                     cfg.r_pow(2 * (b - 1)) *
                                                     geom_sum(cfg, ubar, b) * m1inv * m2;
        }
    }
    rep.action[3] = std::move(X4);
    return rep;
}

Representation build_epsilon_base(const RootConfig& cfg, const ParamTuple& p) {
    const Cyc &e1 = p[0], &e2 = p[1], &e3 = p[2];
    require_unit(e1, "epsilon1");
    require_unit(e2, "epsilon2");
    require_unit(e3, "epsilon3");
    const Cyc u = cfg.rsinv_pow(1);
    const Cyc s2d = cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2));

    Representation rep;
    rep.family = FamilyTag::B_M3_EPSILON;
    rep.config = cfg;
    rep.params = p;
    rep.dims = epsilon_dims(cfg);
    const long D = rep.dim();

    CycMatrix X1(D, D, cfg.level), X2(D, D, cfg.level), X3(D, D, cfg.level), W(D, D, cfg.level);
    const Cyc x1_base = e1 * e1 * e3 * e2.inv() * (cfg.one() - u) * s2d.inv();
    Cyc upow = cfg.one();
    for (long a = 0; a < D; ++a) {
        X1.at(a, wrap(a + 2, D)) = x1_base * cfg.s_pow(-2 * a);
        X2.at(a, wrap(a + 1, D)) = e1;
        X3.at(a, a) = cfg.rs_pow(a) * e2;
        W.at(a, wrap(a + 1, D)) = e1 * e3 * upow;
        upow *= u;
    }
    rep.action = {std::move(X1), std::move(X2), std::move(X3), std::move(W)};
    return rep;
}

Representation build_u_m_epsilon(const RootConfig& cfg, const ParamTuple& p) {
    Representation rep = build_epsilon_base(cfg, p);
    rep.family = FamilyTag::U_M_EPSILON;
    const Cyc &e1 = p[0], &e2 = p[1], &e3 = p[2];
    const Cyc u = cfg.rsinv_pow(1);
    const Cyc front = e1.inv() * e2 * e3.inv() * (cfg.one() - u).inv();
    const long D = rep.dim();

    CycMatrix X4(D, D, cfg.level);
    Cyc upow = cfg.one();
    for (long a = 0; a < D; ++a) {
        X4.at(a, wrap(a - 1, D)) = front * (e3 * upow - cfg.one()) * cfg.s_pow(2 * a);
        upow *= u;
    }
    rep.action[3] = std::move(X4);
    return rep;
}

Representation build_u_m_nu(const RootConfig& cfg, const ParamTuple& p) {
    const Cyc &n1 = p[0], &n2 = p[1], &n3 = p[2];
    require_unit(n1, "nu1");
    const Cyc u = cfg.rsinv_pow(1);
    const Cyc ubar = cfg.rsinv_pow(-1);
    const Cyc u2 = cfg.rsinv_pow(2);

    Representation rep;
    rep.family = FamilyTag::U_M_NU;
    rep.config = cfg;
    rep.params = p;
    rep.dims = nu_dims(cfg, n3);
    const long L = rep.dims.rows, M = rep.dims.cols, D = rep.dim();
    const Cyc n1inv = n1.inv();
    // s^{-2} - r^{-1} s^{-1} is invertible exactly when r != s.
    const Cyc invdenom = (cfg.s_pow(-2) - cfg.rs_pow(-1)).inv();

    CycMatrix X2(D, D, cfg.level), X3(D, D, cfg.level), X4(D, D, cfg.level);
    for (long a = 0; a < L; ++a) {
        const long am1 = wrap(a - 1, L);
        for (long b = 0; b < M; ++b) {
            const long row = rep.index(a, b);
            X2.at(row, rep.index(wrap(a + 1, L), b)) = cfg.s_pow(-2 * b) * n1;
            X3.at(row, rep.index(a, b)) = cfg.rs_pow(a) * n2;
            const Cyc outer = cfg.s_pow(2 * b) * invdenom;
            if (b + 1 < M)
                X4.at(row, rep.index(am1, b + 1)) += outer * n1inv;
            else
                X4.at(row, rep.index(am1, 0)) += outer * cfg.s_pow(2 * (a - 1) * M) * n1inv * n3;
            X4.at(row, rep.index(am1, b)) -= outer * cfg.rs_pow(a - 1) * n1inv * n2;
        }
    }

    // Two readings of the rs-power in the X1 coefficient.
    auto build_x1 = [&](long shift) {
        CycMatrix X1(D, D, cfg.level);
        for (long a = 0; a < L; ++a)
            for (long b = 1; b < M; ++b)
                X1.at(rep.index(a, b), rep.index(wrap(a + 2, L), b - 1)) =
                    -(cfg.one() - ubar) * cfg.rs_pow(-2 * b + shift) *
                    geom_sum(cfg, u2, b) * n1 * n1;
        return X1;
    };

    CycMatrix direct = build_x1(4);
    if (x1_x4_relation_holds(cfg, direct, X2, X4)) {
        rep.action = {std::move(direct), std::move(X2), std::move(X3), std::move(X4)};
        rep.notes.push_back("x1 coefficient: offset rs-power reading");
        return rep;
    }
    CycMatrix plain = build_x1(0);
    if (x1_x4_relation_holds(cfg, plain, X2, X4)) {
        rep.action = {std::move(plain), std::move(X2), std::move(X3), std::move(X4)};
        rep.notes.push_back("x1 coefficient: plain rs-power reading");
        return rep;
    }
    throw CaseMismatch("no x1 reading satisfies the defining relation");
}

Representation build_u_m_xi(const RootConfig& cfg, const ParamTuple& p) {
    const Cyc &xi1 = p[0], &xi2 = p[1];
    require_unit(xi1, "xi1");
    const Cyc u = cfg.rsinv_pow(1);
    const Cyc u2 = cfg.rsinv_pow(2);

    Representation rep;
    rep.family = FamilyTag::U_M_XI;
    rep.config = cfg;
    rep.params = p;
    rep.dims = xi_dims(cfg, xi2);
    const long D = rep.dim();

    CycMatrix X1(D, D, cfg.level), X2(D, D, cfg.level), X3(D, D, cfg.level), X4(D, D, cfg.level);
    for (long a = 0; a < D; ++a) {
        if (a >= 2)
            X1.at(a, a - 2) = -cfg.r_pow(-2 * (a - 1)) * geom_sum(cfg, u, a - 1) *
                              (cfg.one() - u.pow(a)) * (cfg.one() - u2).inv() * xi1;
        if (a >= 1) X2.at(a, a - 1) = cfg.rs_pow(-(a - 1)) * geom_sum(cfg, u, a) * xi1;
        X3.at(a, a) = cfg.rs_pow(-a) * xi1;
        if (a + 1 < D)
            X4.at(a, a + 1) = cfg.one();
        else
            X4.at(a, 0) = xi2;
    }
    rep.action = {std::move(X1), std::move(X2), std::move(X3), std::move(X4)};
    return rep;
}

} // namespace

std::string to_string(FamilyTag t) {
    switch (t) {
    case FamilyTag::U_M_LAMBDA: return "u-lambda";
    case FamilyTag::U_M_MU: return "u-mu";
    case FamilyTag::U_M_EPSILON: return "u-epsilon";
    case FamilyTag::U_M_NU: return "u-nu";
    case FamilyTag::U_M_XI: return "u-xi";
    case FamilyTag::B_M1_LAMBDA: return "b-lambda";
    case FamilyTag::B_M2_MU: return "b-mu";
    case FamilyTag::B_M3_EPSILON: return "b-epsilon";
    }
    return "unknown";
}

FamilyTag family_from_string(const std::string& name) {
    for (FamilyTag t : {FamilyTag::U_M_LAMBDA, FamilyTag::U_M_MU, FamilyTag::U_M_EPSILON,
                        FamilyTag::U_M_NU, FamilyTag::U_M_XI, FamilyTag::B_M1_LAMBDA,
                        FamilyTag::B_M2_MU, FamilyTag::B_M3_EPSILON})
        if (to_string(t) == name) return t;
    throw ParseError("unknown family: " + name);
}

bool is_borel_family(FamilyTag t) {
    return t == FamilyTag::B_M1_LAMBDA || t == FamilyTag::B_M2_MU || t == FamilyTag::B_M3_EPSILON;
}

FamilyTag lift_target(FamilyTag t) {
    switch (t) {
    case FamilyTag::B_M1_LAMBDA: return FamilyTag::U_M_LAMBDA;
    case FamilyTag::B_M2_MU: return FamilyTag::U_M_MU;
    case FamilyTag::B_M3_EPSILON: return FamilyTag::U_M_EPSILON;
    default: throw FamilyMismatch(to_string(t) + " is not a subalgebra family");
    }
}

long param_count(FamilyTag t) {
    switch (t) {
    case FamilyTag::U_M_LAMBDA:
    case FamilyTag::B_M1_LAMBDA: return 4;
    case FamilyTag::U_M_MU:
    case FamilyTag::B_M2_MU: return 3;
    case FamilyTag::U_M_EPSILON:
    case FamilyTag::B_M3_EPSILON: return 3;
    case FamilyTag::U_M_NU: return 3;
    case FamilyTag::U_M_XI: return 2;
    }
    return 0;
}

std::vector<std::string> param_names(FamilyTag t) {
    switch (t) {
    case FamilyTag::U_M_LAMBDA:
    case FamilyTag::B_M1_LAMBDA: return {"lambda1", "lambda2", "lambda3", "lambda4"};
    case FamilyTag::U_M_MU:
    case FamilyTag::B_M2_MU: return {"mu1", "mu2", "mu3"};
    case FamilyTag::U_M_EPSILON:
    case FamilyTag::B_M3_EPSILON: return {"epsilon1", "epsilon2", "epsilon3"};
    case FamilyTag::U_M_NU: return {"nu1", "nu2", "nu3"};
    case FamilyTag::U_M_XI: return {"xi1", "xi2"};
    }
    return {};
}

FamilyDims dims_for(FamilyTag family, const RootConfig& cfg, const ParamTuple& params) {
    require_params(family, cfg, params);
    switch (family) {
    case FamilyTag::U_M_LAMBDA:
    case FamilyTag::B_M1_LAMBDA: return lambda_dims(cfg);
    case FamilyTag::U_M_MU:
    case FamilyTag::B_M2_MU: return mu_dims(cfg, params[2]);
    case FamilyTag::U_M_EPSILON:
    case FamilyTag::B_M3_EPSILON: return epsilon_dims(cfg);
    case FamilyTag::U_M_NU: return nu_dims(cfg, params[2]);
    case FamilyTag::U_M_XI: return xi_dims(cfg, params[1]);
    }
    throw FamilyMismatch("unhandled family");
}

const CycMatrix& Representation::x4() const {
    if (is_borel_family(family)) throw FamilyMismatch(to_string(family) + " has no X4 action");
    return action[3];
}

const CycMatrix& Representation::normal_element() const {
    if (!is_borel_family(family)) throw FamilyMismatch(to_string(family) + " stores X4, not the normal element");
    return action[3];
}

Representation build_module(FamilyTag family, const RootConfig& cfg, const ParamTuple& params) {
    require_params(family, cfg, params);
    switch (family) {
    case FamilyTag::B_M1_LAMBDA: return build_lambda_base(cfg, params);
    case FamilyTag::U_M_LAMBDA: return build_u_m_lambda(cfg, params);
    case FamilyTag::B_M2_MU: return build_mu_base(cfg, params);
    case FamilyTag::U_M_MU: return build_u_m_mu(cfg, params);
    case FamilyTag::B_M3_EPSILON: return build_epsilon_base(cfg, params);
    case FamilyTag::U_M_EPSILON: return build_u_m_epsilon(cfg, params);
    case FamilyTag::U_M_NU: return build_u_m_nu(cfg, params);
    case FamilyTag::U_M_XI: return build_u_m_xi(cfg, params);
    }
    throw FamilyMismatch("unhandled family");
}

Representation lift_b_module(const Representation& b_rep) {
    if (!is_borel_family(b_rep.family))
        throw FamilyMismatch(to_string(b_rep.family) + " already carries a full action");
    const RootConfig& cfg = b_rep.config;
    std::optional<CycMatrix> x1inv = inverse(b_rep.x1());
    if (!x1inv) throw SingularX1("X1 does not act invertibly; cannot solve for X4");
    CycMatrix x4 = b_rep.normal_element() - b_rep.x2();
    x4 = matmul(x4, *x1inv);
    x4 *= (cfg.r_pow(2) - cfg.s_pow(2)).inv();

    Representation out = b_rep;
    out.family = lift_target(b_rep.family);
    out.action[3] = std::move(x4);
    out.notes.push_back("x4 solved from the normal element of " + to_string(b_rep.family));
    return out;
}

} // namespace qb2
