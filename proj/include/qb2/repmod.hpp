#pragma once

#include <string>
#include <vector>

#include "qb2/cyclotomic.hpp"
#include "qb2/errors.hpp"
#include "qb2/matrix.hpp"

namespace qb2 {

// The eight module families. U_* tags carry an action of the full algebra
// (slot 3 of the action list is X4); B_* tags carry an action of the upper
// subalgebra generated by X1, X2, X3 and the normal element (slot 3 is the
// normal element).
enum class FamilyTag {
    U_M_LAMBDA,
    U_M_MU,
    U_M_EPSILON,
    U_M_NU,
    U_M_XI,
    B_M1_LAMBDA,
    B_M2_MU,
    B_M3_EPSILON,
};

std::string to_string(FamilyTag t);
FamilyTag family_from_string(const std::string& name); // ParseError on unknown names

bool is_borel_family(FamilyTag t);

// The full-algebra family reached by lifting a subalgebra module;
// FamilyMismatch for U_* tags.
FamilyTag lift_target(FamilyTag t);

long param_count(FamilyTag t);
std::vector<std::string> param_names(FamilyTag t);

using ParamTuple = std::vector<Cyc>;

struct FamilyDims {
    long rows = 1;
    long cols = 1; // 1 for single-index families
    long dim() const { return rows * cols; }
};

// Basis grid sizes for the given parameters. The lambda row count and the mu
// and nu column counts can double depending on order-divisibility conditions
// and, for mu and nu, on whether the wrap parameter vanishes.
FamilyDims dims_for(FamilyTag family, const RootConfig& cfg, const ParamTuple& params);

struct Representation {
    FamilyTag family = FamilyTag::U_M_LAMBDA;
    RootConfig config;
    ParamTuple params;
    FamilyDims dims;
    // Right-module convention throughout: basis vectors are rows, e(a,b) is
    // row a*cols + b, and mat(xy) = mat(x) mat(y).
    std::vector<CycMatrix> action; // X1, X2, X3, then X4 or the normal element
    std::vector<std::string> notes;

    long dim() const { return dims.dim(); }
    long index(long a, long b) const { return a * dims.cols + b; }
    const CycMatrix& x1() const { return action[0]; }
    const CycMatrix& x2() const { return action[1]; }
    const CycMatrix& x3() const { return action[2]; }
    const CycMatrix& x4() const;             // FamilyMismatch for B_* families
    const CycMatrix& normal_element() const; // FamilyMismatch for U_* families
};

// Builds the module with the stated parameters. Throws ZeroParameter when a
// parameter that must be invertible vanishes, ConstraintViolated when the
// lambda parameters sit on the excluded hyperplane, FamilyMismatch on a wrong
// parameter count. Where two readings of a boundary coefficient are possible,
// the one satisfying the X1 X4 - r^2 X4 X1 = X2 relation is selected and the
// choice is recorded in notes.
Representation build_module(FamilyTag family, const RootConfig& cfg, const ParamTuple& params);

// Extends a subalgebra module to the full algebra by solving for X4 from the
// normal element: X4 = (r^2 - s^2)^{-1} (mat(W) - mat(X2)) mat(X1)^{-1}.
// Throws SingularX1 when X1 does not act invertibly.
Representation lift_b_module(const Representation& b_rep);

} // namespace qb2
