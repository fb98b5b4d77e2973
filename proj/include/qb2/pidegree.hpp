#pragma once

#include <string>
#include <vector>

#include "qb2/cyclotomic.hpp"
#include "qb2/errors.hpp"

namespace qb2 {

// Dense integer matrix, just enough for commutation data and Smith normal
// form work.
class IntMatrix {
public:
    IntMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Int& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Int& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);
    bool is_skew_symmetric() const;

    bool operator==(const IntMatrix&) const = default;

private:
    long rows_, cols_;
    std::vector<Int> a_;
};

// Full diagonal of the Smith normal form: nonnegative entries, each dividing
// the next, padded with zeros for the rank deficit.
std::vector<Int> smith_normal_form(IntMatrix m);

long rank_from_invariants(const std::vector<Int>& inv);

// Pfaffian of a 4x4 skew-symmetric matrix.
Int pfaffian4(const IntMatrix& m);

// q-commutation exponent matrix of the ordered generators X1..X4: the leading
// term of Xi Xj is q^{A_ij} Xj Xi. Entries are built from the literal integer
// exponents of r and s; shift_r/shift_s add multiples of ell to those
// exponents (the computed degree must not depend on them).
IntMatrix commutation_matrix(const RootConfig& cfg, long shift_r = 0, long shift_s = 0);

// Commutation exponent matrix for the generators of the subalgebra presented
// with the normal element in place of X4. Its kernel has rank 2, which is what
// caps the dimensions of the quotient-family modules.
IntMatrix quotient_commutation_matrix(const RootConfig& cfg, long shift_r = 0, long shift_s = 0);

// sqrt of prod_i ell / gcd(d_i, ell); throws RankUnexpected when the product
// is not a perfect square.
long pi_from_invariants(const std::vector<Int>& inv, long ell);

enum class PiCase {
    RS_EQUALS_ONE,     // ell divides er + es
    ODD,               // ell odd
    EVEN_DIFFERENT_E2, // ell even, v2(m) != v2(n)
    EVEN_E2_ONE,       // m, n both even with v2(m) = v2(n) = 1
    EVEN_E2_GE2,       // m, n both even with v2(m) = v2(n) >= 2
};

std::string to_string(PiCase c);

struct PiDegreeReport {
    RootConfig config;
    IntMatrix matrix{4, 4};
    std::vector<Int> invariant_factors;
    long pi_deg_snf = 0;
    long pi_deg_closed = 0;
    PiCase case_label = PiCase::ODD;
};

// PI degree by two independent routes: Smith normal form of the commutation
// matrix, and the closed-form case analysis in terms of element orders.
// Throws CaseMismatch when the routes disagree.
PiDegreeReport pi_degree(const RootConfig& cfg);

struct QuotientBoundReport {
    RootConfig config;
    IntMatrix matrix{4, 4};
    std::vector<Int> invariant_factors;
    long bound_snf = 0;
    long bound_closed = 0;
};

// Dimension bound for the quotient family, again by two routes. Throws
// RankUnexpected when the matrix rank is not 2 and CaseMismatch when the
// routes disagree.
QuotientBoundReport quotient_pi_bound(const RootConfig& cfg);

// First invariant factor pair: d1 = d2 = gcd(a+b, a-b) where a, b are the
// literal exponents of r and s.
bool invariant_gcd_check(const RootConfig& cfg);

// Second pair and the determinant: d3 = d4 and d1 * d3 = |pf| with
// pf = 2 (a+b)(a-b).
bool invariant_pfaffian_check(const RootConfig& cfg);

// The reported degrees do not change when the exponents of r and s move by
// multiples of ell.
bool shift_invariance_check(const RootConfig& cfg);

} // namespace qb2
