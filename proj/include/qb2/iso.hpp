#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qb2/matrix.hpp"
#include "qb2/repmod.hpp"

namespace qb2 {

struct IsoVerdict {
    bool by_criteria = false;
    // First witnessing relabeling shift (u, v) when by_criteria holds. For
    // the single-shift families v is reported as 0.
    std::optional<std::pair<long, long>> witness_shift;
    // Filled by decide_isomorphism: the independent solver's answer and, on
    // success, an invertible intertwining matrix.
    std::optional<bool> by_intertwiner;
    std::optional<CycMatrix> intertwiner;
};

// Decides isomorphism of two modules of the same full-algebra family by
// enumerating the finite set of basis-relabeling shifts and comparing the
// parameter tuples exactly. Power conditions are compared as stated, never
// by extracting roots. FamilyMismatch for subalgebra families or wrong tuple
// sizes; LevelMismatch when a parameter lives at the wrong cyclotomic level.
IsoVerdict iso_by_criteria(FamilyTag family, const ParamTuple& p, const ParamTuple& p2,
                           const RootConfig& cfg);

// Basis of module homomorphisms a -> b in the right-module convention:
// solves rho_a(g) T = T rho_b(g) for all four generator matrices and returns
// one nonzero solution, or nothing when only T = 0 intertwines. Modules of
// different dimensions yield nothing immediately. FamilyMismatch when mixing
// a full-algebra module with a subalgebra module, ConfigMismatch when the
// root configurations differ.
std::optional<CycMatrix> find_intertwiner(const Representation& a, const Representation& b);

// Runs both routes on two built instances of one family and asserts they
// agree; a found intertwiner is checked invertible (between simple modules a
// nonzero homomorphism must be one). CaseMismatch when the routes disagree
// or a singular intertwiner shows up; both signal a bug, never a property of
// valid inputs.
IsoVerdict decide_isomorphism(const Representation& a, const Representation& b);

// The explicit basis-relabeling homomorphism for the first family: the map
// sending e(a,b) to a scalar multiple of e(a + u, b + v) with both indices
// cyclic. When the criteria equations hold at (u, v) this matrix intertwines
// the two actions; tests verify that directly.
CycMatrix lambda_relabeling_map(const RootConfig& cfg, const ParamTuple& p,
                                const ParamTuple& p2, long u, long v);

struct CrossValidationReport {
    long pairs = 0;
    long positives = 0;           // pairs manufactured from the criteria equations
    long negatives = 0;           // independently sampled pairs
    long positives_confirmed = 0; // manufactured pairs the criteria accepted
    long mismatches = 0;          // criteria verdict != intertwiner existence
    std::vector<std::string> mismatch_details;
};

// Samples parameter pairs (alternating manufactured positives and random
// pairs), builds both modules, and compares iso_by_criteria against the
// intertwiner solver on every pair. Deterministic for a fixed seed.
CrossValidationReport cross_validate(FamilyTag family, const RootConfig& cfg, long sample_count,
                                     unsigned long seed = 20260814);

} // namespace qb2
