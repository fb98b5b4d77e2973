#include "qb2/pidegree.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace qb2 {

namespace {

int cmp_abs(const Int& x, const Int& y) {
    return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
}

Int gcd_int(const Int& x, const Int& y) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

Int int_sqrt_exact(const Int& v) {
    if (v < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0)
        throw RankUnexpected("invariant factor product is not a perfect square");
    Int root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return root;
}

long two_adic(long v) {
    long e = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++e;
    }
    return e;
}

} // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const long r = static_cast<long>(rows.size());
    const long c = r > 0 ? static_cast<long>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (long i = 0; i < r; ++i) {
        if (static_cast<long>(rows[static_cast<size_t>(i)].size()) != c)
            throw Error("ragged row list");
        for (long j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

void IntMatrix::swap_rows(long i, long j) {
    if (i == j) return;
    for (long k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(long i, long j) {
    if (i == j) return;
    for (long k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

bool IntMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

std::vector<Int> smith_normal_form(IntMatrix m) {
    const long R = m.rows(), C = m.cols();
    const long N = std::min(R, C);
    long t = 0;
    while (t < N) {
        // Bring a nonzero entry of minimal absolute value to position (t, t).
        long pi = -1, pj = -1;
        for (long i = t; i < R; ++i)
            for (long j = t; j < C; ++j)
                if (m.at(i, j) != 0 && (pi < 0 || cmp_abs(m.at(i, j), m.at(pi, pj)) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break; // trailing block is zero
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);

        for (;;) {
            // Alternate clearing column t and row t. Each swap strictly
            // shrinks |pivot|, so the loop terminates.
            bool column_clear = false;
            while (!column_clear) {
                column_clear = true;
                for (long i = t + 1; i < R; ++i) {
                    if (m.at(i, t) == 0) continue;
                    Int q = m.at(i, t) / m.at(t, t); // truncated division
                    if (q != 0)
                        for (long k = t; k < C; ++k) m.at(i, k) -= q * m.at(t, k);
                    if (m.at(i, t) != 0) {
                        m.swap_rows(t, i);
                        column_clear = false;
                    }
                }
            }
            bool row_clear = true;
            for (long j = t + 1; j < C; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                if (q != 0)
                    for (long k = t; k < R; ++k) m.at(k, j) -= q * m.at(k, t);
                if (m.at(t, j) != 0) {
                    m.swap_cols(t, j);
                    row_clear = false;
                }
            }
            if (!row_clear) continue; // column swaps may have dirtied column t

            // Column t and row t are clear; enforce divisibility of the
            // trailing block by the pivot.
            bool redo = false;
            for (long i = t + 1; i < R && !redo; ++i)
                for (long j = t + 1; j < C && !redo; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (long k = t; k < C; ++k) m.at(t, k) += m.at(i, k);
                        redo = true;
                    }
            if (!redo) break;
        }
        if (m.at(t, t) < 0)
            for (long k = t; k < C; ++k) m.at(t, k) = -m.at(t, k);
        ++t;
    }
    std::vector<Int> d(static_cast<size_t>(N), Int(0));
    for (long i = 0; i < t; ++i) d[static_cast<size_t>(i)] = m.at(i, i);
    return d;
}

long rank_from_invariants(const std::vector<Int>& inv) {
    long r = 0;
    for (const Int& d : inv)
        if (d != 0) ++r;
    return r;
}

Int pfaffian4(const IntMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4 || !m.is_skew_symmetric())
        throw RankUnexpected("pfaffian requires a 4x4 skew-symmetric matrix");
    return m.at(0, 1) * m.at(2, 3) - m.at(0, 2) * m.at(1, 3) + m.at(0, 3) * m.at(1, 2);
}

IntMatrix commutation_matrix(const RootConfig& cfg, long shift_r, long shift_s) {
    const long a = cfg.s1k1 + shift_r * cfg.ell;
    const long b = cfg.s2k2 + shift_s * cfg.ell;
    return IntMatrix::from_rows({{0, 2 * b, 2 * (a + b), 2 * a},
                                 {-2 * b, 0, a + b, 2 * b},
                                 {-2 * (a + b), -(a + b), 0, a + b},
                                 {-2 * a, -2 * b, -(a + b), 0}});
}

IntMatrix quotient_commutation_matrix(const RootConfig& cfg, long shift_r, long shift_s) {
    const long a = cfg.s1k1 + shift_r * cfg.ell;
    const long b = cfg.s2k2 + shift_s * cfg.ell;
    return IntMatrix::from_rows({{0, 2 * b, 2 * (a + b), 2 * a},
                                 {-2 * b, 0, a + b, a - b},
                                 {-2 * (a + b), -(a + b), 0, -(a + b)},
                                 {-2 * a, -(a - b), a + b, 0}});
}

long pi_from_invariants(const std::vector<Int>& inv, long ell) {
    Int prod = 1;
    const Int L(ell);
    for (const Int& d : inv) prod *= L / gcd_int(d, L); // gcd(0, ell) = ell
    return static_cast<long>(int_sqrt_exact(prod).get_si());
}

std::string to_string(PiCase c) {
    switch (c) {
    case PiCase::RS_EQUALS_ONE: return "rs_equals_one";
    case PiCase::ODD: return "odd";
    case PiCase::EVEN_DIFFERENT_E2: return "even_different_e2";
    case PiCase::EVEN_E2_ONE: return "even_e2_one";
    case PiCase::EVEN_E2_GE2: return "even_e2_ge2";
    }
    return "unknown";
}

namespace {

long pi_degree_closed(const RootConfig& cfg, PiCase& label) {
    if ((cfg.er + cfg.es) % cfg.ell == 0) {
        label = PiCase::RS_EQUALS_ONE;
        return cfg.ord_r2;
    }
    const long base = cfg.ord_r2s2 * cfg.ord_r2s2inv;
    if (cfg.ell % 2 != 0) {
        label = PiCase::ODD;
        return base;
    }
    const long vm = two_adic(cfg.m), vn = two_adic(cfg.n);
    if (vm != vn) {
        label = PiCase::EVEN_DIFFERENT_E2;
        return 2 * base;
    }
    if (vm == 1) {
        label = PiCase::EVEN_E2_ONE;
        return base;
    }
    label = PiCase::EVEN_E2_GE2;
    return 2 * base;
}

} // namespace

PiDegreeReport pi_degree(const RootConfig& cfg) {
    PiDegreeReport rep;
    rep.config = cfg;
    rep.matrix = commutation_matrix(cfg);
    rep.invariant_factors = smith_normal_form(rep.matrix);
    rep.pi_deg_snf = pi_from_invariants(rep.invariant_factors, cfg.ell);
    rep.pi_deg_closed = pi_degree_closed(cfg, rep.case_label);
    if (rep.pi_deg_snf != rep.pi_deg_closed)
        throw CaseMismatch("pi degree routes disagree: snf " + std::to_string(rep.pi_deg_snf) +
                           " vs closed " + std::to_string(rep.pi_deg_closed) + " in case " +
                           to_string(rep.case_label));
    return rep;
}

QuotientBoundReport quotient_pi_bound(const RootConfig& cfg) {
    QuotientBoundReport rep;
    rep.config = cfg;
    rep.matrix = quotient_commutation_matrix(cfg);
    if (pfaffian4(rep.matrix) != 0)
        throw RankUnexpected("quotient commutation matrix has nonzero pfaffian");
    rep.invariant_factors = smith_normal_form(rep.matrix);
    if (rank_from_invariants(rep.invariant_factors) != 2)
        throw RankUnexpected("quotient commutation matrix rank is not 2");
    rep.bound_snf = pi_from_invariants(rep.invariant_factors, cfg.ell);

    const long vm = two_adic(cfg.m), vn = two_adic(cfg.n);
    const bool halved = (cfg.m % 2 == 0) && (cfg.n % 2 == 0) && vm == vn;
    rep.bound_closed = halved ? cfg.ell / 2 : cfg.ell;
    if (rep.bound_snf != rep.bound_closed)
        throw CaseMismatch("quotient bound routes disagree: snf " + std::to_string(rep.bound_snf) +
                           " vs closed " + std::to_string(rep.bound_closed));
    return rep;
}

bool invariant_gcd_check(const RootConfig& cfg) {
    const long a = cfg.s1k1, b = cfg.s2k2;
    const Int h1(std::gcd(a + b, a - b));
    const std::vector<Int> d = smith_normal_form(commutation_matrix(cfg));
    const std::vector<Int> dq = smith_normal_form(quotient_commutation_matrix(cfg));
    return d.size() == 4 && d[0] == h1 && d[1] == h1 && dq.size() == 4 && dq[0] == h1 &&
           dq[1] == h1 && dq[2] == 0 && dq[3] == 0;
}

bool invariant_pfaffian_check(const RootConfig& cfg) {
    const IntMatrix m = commutation_matrix(cfg);
    const Int pf = pfaffian4(m);
    const long a = cfg.s1k1, b = cfg.s2k2;
    if (pf != Int(2) * Int(a + b) * Int(a - b)) return false;
    const std::vector<Int> d = smith_normal_form(m);
    if (d.size() != 4 || d[2] != d[3]) return false;
    Int abs_pf;
    mpz_abs(abs_pf.get_mpz_t(), pf.get_mpz_t());
    return d[0] * d[2] == abs_pf;
}

bool shift_invariance_check(const RootConfig& cfg) {
    const PiDegreeReport base = pi_degree(cfg);
    const QuotientBoundReport qbase = quotient_pi_bound(cfg);
    for (long tr : {-1L, 0L, 1L, 2L}) {
        for (long ts : {-1L, 0L, 1L}) {
            const std::vector<Int> d = smith_normal_form(commutation_matrix(cfg, tr, ts));
            if (pi_from_invariants(d, cfg.ell) != base.pi_deg_snf) return false;
            const std::vector<Int> dq = smith_normal_form(quotient_commutation_matrix(cfg, tr, ts));
            if (pi_from_invariants(dq, cfg.ell) != qbase.bound_snf) return false;
        }
    }
    return true;
}

} // namespace qb2
