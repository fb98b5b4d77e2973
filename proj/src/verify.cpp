#include "qb2/verify.hpp"

#include <cstdlib>

namespace qb2 {

namespace {

void record(RelationReport& report, const std::string& name, const CycMatrix& lhs,
            const CycMatrix& rhs) {
    const bool ok = lhs == rhs;
    report.checks.emplace_back(name, ok);
    if (ok || report.first_failure) return;
    for (long i = 0; i < lhs.rows(); ++i) {
        for (long j = 0; j < lhs.cols(); ++j) {
            if (lhs.at(i, j) != rhs.at(i, j)) {
                report.first_failure =
                    RelationFailure{name, i, j, lhs.at(i, j).to_string(), rhs.at(i, j).to_string()};
                return;
            }
        }
    }
}

CycMatrix scaled(CycMatrix m, const Cyc& c) {
    m *= c;
    return m;
}

} // namespace

RelationReport check_relations(const Representation& rep) {
    if (is_borel_family(rep.family))
        throw FamilyMismatch(to_string(rep.family) + " carries no X4 action to check");
    const RootConfig& cfg = rep.config;
    const CycMatrix &x1 = rep.x1(), &x2 = rep.x2(), &x3 = rep.x3(), &x4 = rep.x4();
    RelationReport report;

    record(report, "x1 x2 = s^2 x2 x1", matmul(x1, x2), scaled(matmul(x2, x1), cfg.s_pow(2)));
    record(report, "x1 x3 = r^2 s^2 x3 x1", matmul(x1, x3),
           scaled(matmul(x3, x1), cfg.r_pow(2) * cfg.s_pow(2)));
    record(report, "x1 x4 = r^2 x4 x1 + x2", matmul(x1, x4),
           scaled(matmul(x4, x1), cfg.r_pow(2)) + x2);
    record(report, "x2 x3 = rs x3 x2", matmul(x2, x3), scaled(matmul(x3, x2), cfg.rs_pow(1)));
    record(report, "x2 x4 = s^2 x4 x2 - s^2 x3", matmul(x2, x4),
           scaled(matmul(x4, x2), cfg.s_pow(2)) - scaled(x3, cfg.s_pow(2)));
    record(report, "x3 x4 = rs x4 x3", matmul(x3, x4), scaled(matmul(x4, x3), cfg.rs_pow(1)));

    // Higher-degree identities of the generating pair e1 = X1, e2 = X4.
    const CycMatrix e12 = matmul(x1, x1);
    const CycMatrix e12e2 = matmul(e12, x4);
    const CycMatrix e1e2e1 = matmul(matmul(x1, x4), x1);
    const CycMatrix e2e12 = matmul(x4, matmul(x1, x1));
    record(report, "cubic identity in e1", e12e2,
           scaled(e1e2e1, cfg.r_pow(2) + cfg.s_pow(2)) -
               scaled(e2e12, cfg.r_pow(2) * cfg.s_pow(2)));

    const Cyc f = cfg.r_pow(2) + cfg.rs_pow(1) + cfg.s_pow(2);
    const CycMatrix e23 = matmul(x4, matmul(x4, x4));
    const CycMatrix lhs4 = matmul(x1, e23);
    const CycMatrix t1 = matmul(x4, matmul(x1, matmul(x4, x4)));
    const CycMatrix t2 = matmul(x4, matmul(x4, matmul(x1, x4)));
    const CycMatrix t3 = matmul(e23, x1);
    record(report, "quartic identity in e2", lhs4,
           scaled(t1, f) - scaled(t2, cfg.rs_pow(1) * f) +
               scaled(t3, cfg.r_pow(3) * cfg.s_pow(3)));
    return report;
}

RelationReport check_b_relations(const Representation& rep) {
    if (!is_borel_family(rep.family))
        throw FamilyMismatch(to_string(rep.family) + " is a full-algebra module");
    const RootConfig& cfg = rep.config;
    const CycMatrix &x1 = rep.x1(), &x2 = rep.x2(), &x3 = rep.x3(), &w = rep.normal_element();
    RelationReport report;

    record(report, "w x1 = r^-2 x1 w", matmul(w, x1), scaled(matmul(x1, w), cfg.r_pow(-2)));
    record(report, "x2 x1 = s^-2 x1 x2", matmul(x2, x1), scaled(matmul(x1, x2), cfg.s_pow(-2)));
    record(report, "x3 x1 = (rs)^-2 x1 x3", matmul(x3, x1),
           scaled(matmul(x1, x3), cfg.rs_pow(-2)));
    record(report, "x3 x2 = (rs)^-1 x2 x3", matmul(x3, x2),
           scaled(matmul(x2, x3), cfg.rs_pow(-1)));
    record(report, "w x3 = rs x3 w", matmul(w, x3), scaled(matmul(x3, w), cfg.rs_pow(1)));
    const Cyc s2d = cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2));
    record(report, "w x2 = x2 w + s^2(r^2-s^2) x3 x1", matmul(w, x2),
           matmul(x2, w) + scaled(matmul(x3, x1), s2d));
    return report;
}

long generated_algebra_dimension(const std::vector<CycMatrix>& gens) {
    if (gens.empty()) throw Error("no generators given");
    const long d = gens[0].rows();
    const long level = gens[0].level();
    for (const CycMatrix& g : gens)
        if (g.rows() != d || g.cols() != d || g.level() != level)
            throw Error("generators must be square matrices over one field");

    const long full = d * d;
    EchelonSpan span(full, level);
    std::vector<CycMatrix> frontier;
    CycMatrix id = CycMatrix::identity(d, level);
    span.insert(id.vectorized());
    frontier.push_back(std::move(id));
    while (!frontier.empty() && span.dim() < full) {
        std::vector<CycMatrix> next;
        for (const CycMatrix& w : frontier) {
            for (const CycMatrix& g : gens) {
                if (span.dim() >= full) break;
                CycMatrix prod = matmul(w, g);
                if (span.insert(prod.vectorized())) next.push_back(std::move(prod));
            }
            if (span.dim() >= full) break;
        }
        frontier = std::move(next);
    }
    return span.dim();
}

bool is_simple(const Representation& rep) {
    long ceiling = 32;
    if (const char* env = std::getenv("QB2_SIMPLICITY_CEILING")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) ceiling = v;
    }
    const long d = rep.dim();
    if (d > ceiling)
        throw DimensionCeiling("dimension " + std::to_string(d) + " exceeds the ceiling " +
                               std::to_string(ceiling));
    return generated_algebra_dimension(rep.action) == d * d;
}

bool check_dimension_bound(const Representation& rep, const PiDegreeReport& report) {
    if (!rep.config.same_parameters(report.config))
        throw ConfigMismatch("bound report was computed for a different root configuration");
    return rep.dim() <= report.pi_deg_snf;
}

} // namespace qb2
