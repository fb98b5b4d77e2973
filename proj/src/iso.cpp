#include "qb2/iso.hpp"

#include <random>

namespace qb2 {

namespace {

Cyc geom_sum(const RootConfig& cfg, const Cyc& x, long k) {
    Cyc acc = cfg.zero();
    Cyc power = cfg.one();
    for (long i = 0; i < k; ++i) {
        acc += power;
        power *= x;
    }
    return acc;
}

Cyc scale_param(const RootConfig& cfg) {
    return cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2));
}

void require_tuple(FamilyTag family, const ParamTuple& p, const RootConfig& cfg) {
    if (static_cast<long>(p.size()) != param_count(family))
        throw FamilyMismatch(to_string(family) + " takes " +
                             std::to_string(param_count(family)) + " parameters, got " +
                             std::to_string(p.size()));
    for (const Cyc& c : p)
        if (c.level() != cfg.level)
            throw LevelMismatch("parameter level does not match the configuration");
}

IsoVerdict witness(long u, long v) {
    IsoVerdict verdict;
    verdict.by_criteria = true;
    verdict.witness_shift = std::pair<long, long>{u, v};
    return verdict;
}

IsoVerdict lambda_criteria(const RootConfig& cfg, const ParamTuple& p, const ParamTuple& p2) {
    const FamilyDims dims = dims_for(FamilyTag::U_M_LAMBDA, cfg, p);
    const long rows = dims.rows, cols = dims.cols;
    const Cyc s2d = scale_param(cfg);
    const Cyc uq = cfg.rsinv_pow(1);
    const Cyc pow1 = p[0].pow(rows), pow1b = p2[0].pow(rows);
    const Cyc pow2 = p[1].pow(cols), pow2b = p2[1].pow(cols);
    for (long u = 0; u < rows; ++u) {
        for (long v = 0; v < cols; ++v) {
            if (pow1 != cfg.s_pow(-2 * v * rows) * pow1b) continue;
            if (pow2 != cfg.s_pow(2 * u * cols) * pow2b) continue;
            if (p[2] != cfg.rs_pow(2 * u) * cfg.rsinv_pow(v) * p2[2]) continue;
            if (p[3] != cfg.rs_pow(2 * u) * (p2[3] - s2d * geom_sum(cfg, uq, v) * p2[2]))
                continue;
            return witness(u, v);
        }
    }
    return {};
}

IsoVerdict mu_criteria(const RootConfig& cfg, const ParamTuple& p, const ParamTuple& p2) {
    const FamilyDims dims = dims_for(FamilyTag::U_M_MU, cfg, p);
    const long rows = dims.rows, cols = dims.cols;
    const Cyc pow1 = p[0].pow(rows), pow1b = p2[0].pow(rows);
    for (long u = 0; u < rows; ++u) {
        for (long v : {0L, cfg.ord_rs_inv}) {
            if (pow1 != cfg.r_pow(-2 * v * rows) * pow1b) continue;
            if (p[1] != cfg.rs_pow(2 * u) * cfg.rsinv_pow(-v) * p2[1]) continue;
            if (p[2] != cfg.r_pow(2 * u * cols) * p2[2]) continue;
            return witness(u, v);
        }
    }
    return {};
}

IsoVerdict epsilon_criteria(const RootConfig& cfg, const ParamTuple& p, const ParamTuple& p2) {
    const long dim = dims_for(FamilyTag::U_M_EPSILON, cfg, p).dim();
    // Wrap consistency of the relabeling forces dim-th powers of the first
    // parameter to agree; the two shift factors jointly have period dim, so
    // larger shift ranges add nothing.
    if (p[0].pow(dim) != p2[0].pow(dim)) return {};
    for (long u = 0; u < dim; ++u) {
        if (p[1] != cfg.rs_pow(u) * p2[1]) continue;
        if (p[2] != cfg.rsinv_pow(u) * p2[2]) continue;
        return witness(u, 0);
    }
    return {};
}

IsoVerdict nu_criteria(const RootConfig& cfg, const ParamTuple& p, const ParamTuple& p2) {
    const FamilyDims dims = dims_for(FamilyTag::U_M_NU, cfg, p);
    const long rows = dims.rows, cols = dims.cols;
    const Cyc pow1 = p[0].pow(rows), pow1b = p2[0].pow(rows);
    for (long u = 0; u < rows; ++u) {
        for (long v : {0L, cfg.ord_r2s2inv}) {
            if (pow1 != cfg.s_pow(-2 * v * rows) * pow1b) continue;
            if (p[1] != cfg.rs_pow(u) * p2[1]) continue;
            if (p[2] != cfg.s_pow(2 * u * cols) * p2[2]) continue;
            return witness(u, v);
        }
    }
    return {};
}

IsoVerdict xi_criteria(const RootConfig& cfg, const ParamTuple& p, const ParamTuple& p2) {
    const long dim = dims_for(FamilyTag::U_M_XI, cfg, p).dim();
    if (p[1] != p2[1]) return {};
    for (long u = 0; u < dim; u += cfg.ord_rs_inv) {
        if (p[0] != cfg.rs_pow(-u) * p2[0]) continue;
        return witness(u, 0);
    }
    return {};
}

} // namespace

IsoVerdict iso_by_criteria(FamilyTag family, const ParamTuple& p, const ParamTuple& p2,
                           const RootConfig& cfg) {
    if (is_borel_family(family))
        throw FamilyMismatch("the relabeling criteria cover the full-algebra families");
    require_tuple(family, p, cfg);
    require_tuple(family, p2, cfg);
    switch (family) {
    case FamilyTag::U_M_LAMBDA: return lambda_criteria(cfg, p, p2);
    case FamilyTag::U_M_MU: return mu_criteria(cfg, p, p2);
    case FamilyTag::U_M_EPSILON: return epsilon_criteria(cfg, p, p2);
    case FamilyTag::U_M_NU: return nu_criteria(cfg, p, p2);
    default: return xi_criteria(cfg, p, p2);
    }
}

std::optional<CycMatrix> find_intertwiner(const Representation& a, const Representation& b) {
    if (is_borel_family(a.family) != is_borel_family(b.family))
        throw FamilyMismatch("cannot intertwine a full-algebra module with a subalgebra module");
    if (!a.config.same_parameters(b.config))
        throw ConfigMismatch("modules live over different root configurations");
    if (a.dim() != b.dim()) return std::nullopt;

    const long d = a.dim();
    const long level = a.config.level;
    const long unknowns = d * d;
    const long gens = static_cast<long>(a.action.size());
    // Unknown T flattened row-major; one block of d*d equations per generator.
    CycMatrix sys(gens * unknowns, unknowns, level);
    for (long g = 0; g < gens; ++g) {
        const CycMatrix& lhs = a.action[g];
        const CycMatrix& rhs = b.action[g];
        const long base = g * unknowns;
        for (long i = 0; i < d; ++i)
            for (long k = 0; k < d; ++k) {
                if (lhs.at(i, k).is_zero()) continue;
                for (long j = 0; j < d; ++j)
                    sys.at(base + i * d + j, k * d + j) += lhs.at(i, k);
            }
        for (long k = 0; k < d; ++k)
            for (long j = 0; j < d; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                for (long i = 0; i < d; ++i)
                    sys.at(base + i * d + j, i * d + k) -= rhs.at(k, j);
            }
    }
    const std::vector<std::vector<Cyc>> basis = nullspace(sys);
    if (basis.empty()) return std::nullopt;
    CycMatrix t(d, d, level);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) t.at(i, j) = basis[0][static_cast<size_t>(i * d + j)];
    return t;
}

IsoVerdict decide_isomorphism(const Representation& a, const Representation& b) {
    if (a.family != b.family)
        throw FamilyMismatch("cannot compare " + to_string(a.family) + " with " +
                             to_string(b.family));
    IsoVerdict verdict = iso_by_criteria(a.family, a.params, b.params, a.config);
    std::optional<CycMatrix> t = find_intertwiner(a, b);
    verdict.by_intertwiner = t.has_value();
    if (t) {
        if (!inverse(*t))
            throw CaseMismatch("nonzero intertwiner between simple modules is singular");
        verdict.intertwiner = std::move(*t);
    }
    if (verdict.by_criteria != *verdict.by_intertwiner)
        throw CaseMismatch("relabeling criteria and intertwiner solver disagree");
    return verdict;
}

CycMatrix lambda_relabeling_map(const RootConfig& cfg, const ParamTuple& p,
                                const ParamTuple& p2, long u, long v) {
    const FamilyDims dims = dims_for(FamilyTag::U_M_LAMBDA, cfg, p);
    const long rows = dims.rows, cols = dims.cols;
    CycMatrix t(dims.dim(), dims.dim(), cfg.level);
    const Cyc f1 = p[0].inv() * p2[0];
    const Cyc f2 = p[1].inv() * p2[1];
    for (long a = 0; a < rows; ++a) {
        const long ta = (a + u) % rows;
        for (long b = 0; b < cols; ++b) {
            Cyc c = f1.pow(a) * f2.pow(b) * cfg.s_pow(-2 * a * v);
            long tb = b + v;
            if (tb >= cols) {
                tb -= cols;
                c *= cfg.s_pow(2 * ta * cols);
            }
            t.at(a * cols + b, ta * cols + tb) = c;
        }
    }
    return t;
}

namespace {

Cyc random_unit(const RootConfig& cfg, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> expo(0, cfg.level - 1);
    std::uniform_int_distribution<long> mag(1, 3);
    Cyc c = Cyc::zeta_pow(cfg.level, expo(rng));
    c *= Rat(mag(rng));
    return c;
}

Cyc random_maybe_zero(const RootConfig& cfg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    if (pick(rng) == 0) return cfg.zero();
    return random_unit(cfg, rng);
}

bool lambda_tuple_buildable(const RootConfig& cfg, const ParamTuple& p) {
    return (cfg.one() - cfg.rsinv_pow(1)) * p[3] != scale_param(cfg) * p[2];
}

ParamTuple random_valid_params(FamilyTag family, const RootConfig& cfg, std::mt19937_64& rng) {
    switch (family) {
    case FamilyTag::U_M_LAMBDA: {
        ParamTuple p = {random_unit(cfg, rng), random_unit(cfg, rng), random_unit(cfg, rng),
                        random_maybe_zero(cfg, rng)};
        while (!lambda_tuple_buildable(cfg, p)) p[3] = random_maybe_zero(cfg, rng);
        return p;
    }
    case FamilyTag::U_M_MU:
        return {random_unit(cfg, rng), random_unit(cfg, rng), random_maybe_zero(cfg, rng)};
    case FamilyTag::U_M_EPSILON:
        return {random_unit(cfg, rng), random_unit(cfg, rng), random_unit(cfg, rng)};
    case FamilyTag::U_M_NU:
        return {random_unit(cfg, rng), random_unit(cfg, rng), random_maybe_zero(cfg, rng)};
    default:
        return {random_unit(cfg, rng), random_maybe_zero(cfg, rng)};
    }
}

// Forward-substitutes the family's relabeling equations at a random shift,
// twisting power-constrained parameters by random roots of unity of the
// matching order.
ParamTuple shifted_positive(FamilyTag family, const RootConfig& cfg, const ParamTuple& p,
                            std::mt19937_64& rng) {
    auto root_twist = [&](long order) {
        std::uniform_int_distribution<long> pick(0, order - 1);
        return Cyc::zeta_pow(cfg.level, (cfg.level / order) * pick(rng));
    };
    auto draw = [&](long bound) {
        std::uniform_int_distribution<long> pick(0, bound - 1);
        return pick(rng);
    };
    const FamilyDims dims = dims_for(family, cfg, p);
    switch (family) {
    case FamilyTag::U_M_LAMBDA: {
        const long u = draw(dims.rows), v = draw(dims.cols);
        ParamTuple q(4, cfg.zero());
        q[0] = cfg.s_pow(2 * v) * p[0] * root_twist(dims.rows);
        q[1] = cfg.s_pow(-2 * u) * p[1] * root_twist(dims.cols);
        q[2] = cfg.rs_pow(-2 * u) * cfg.rsinv_pow(-v) * p[2];
        q[3] = cfg.rs_pow(-2 * u) * p[3] +
               scale_param(cfg) * geom_sum(cfg, cfg.rsinv_pow(1), v) * q[2];
        return q;
    }
    case FamilyTag::U_M_MU: {
        const long u = draw(dims.rows), v = draw(2) == 0 ? 0 : cfg.ord_rs_inv;
        ParamTuple q(3, cfg.zero());
        q[0] = cfg.r_pow(2 * v) * p[0] * root_twist(dims.rows);
        q[1] = cfg.rs_pow(-2 * u) * cfg.rsinv_pow(v) * p[1];
        q[2] = cfg.r_pow(-2 * u * dims.cols) * p[2];
        return q;
    }
    case FamilyTag::U_M_EPSILON: {
        const long u = draw(dims.dim());
        ParamTuple q(3, cfg.zero());
        q[0] = p[0] * root_twist(dims.dim());
        q[1] = cfg.rs_pow(-u) * p[1];
        q[2] = cfg.rsinv_pow(-u) * p[2];
        return q;
    }
    case FamilyTag::U_M_NU: {
        const long u = draw(dims.rows), v = draw(2) == 0 ? 0 : cfg.ord_r2s2inv;
        ParamTuple q(3, cfg.zero());
        q[0] = cfg.s_pow(2 * v) * p[0] * root_twist(dims.rows);
        q[1] = cfg.rs_pow(-u) * p[1];
        q[2] = cfg.s_pow(-2 * u * dims.cols) * p[2];
        return q;
    }
    default: {
        const long u = cfg.ord_rs_inv * draw(dims.dim() / cfg.ord_rs_inv);
        ParamTuple q(2, cfg.zero());
        q[0] = cfg.rs_pow(u) * p[0];
        q[1] = p[1];
        return q;
    }
    }
}

std::string tuple_to_string(const ParamTuple& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += p[i].to_string();
    }
    return out + ")";
}

} // namespace

CrossValidationReport cross_validate(FamilyTag family, const RootConfig& cfg, long sample_count,
                                     unsigned long seed) {
    if (is_borel_family(family))
        throw FamilyMismatch("cross validation runs on the full-algebra families");
    std::mt19937_64 rng(seed);
    CrossValidationReport report;
    for (long i = 0; i < sample_count; ++i) {
        const bool manufactured = (i % 2 == 0);
        const ParamTuple p = random_valid_params(family, cfg, rng);
        const ParamTuple p2 =
            manufactured ? shifted_positive(family, cfg, p, rng)
                         : random_valid_params(family, cfg, rng);
        const IsoVerdict verdict = iso_by_criteria(family, p, p2, cfg);
        const Representation a = build_module(family, cfg, p);
        const Representation b = build_module(family, cfg, p2);
        const bool linked = find_intertwiner(a, b).has_value();
        ++report.pairs;
        if (manufactured) {
            ++report.positives;
            if (verdict.by_criteria) ++report.positives_confirmed;
        } else {
            ++report.negatives;
        }
        if (verdict.by_criteria != linked) {
            ++report.mismatches;
            report.mismatch_details.push_back(
                to_string(family) + " pair " + std::to_string(i) +
                (manufactured ? " (manufactured)" : " (random)") + ": p = " +
                tuple_to_string(p) + ", p2 = " + tuple_to_string(p2) + ", criteria " +
                (verdict.by_criteria ? "true" : "false") + ", intertwiner " +
                (linked ? "found" : "none"));
        }
    }
    return report;
}

} // namespace qb2
