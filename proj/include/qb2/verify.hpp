#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qb2/matrix.hpp"
#include "qb2/pidegree.hpp"
#include "qb2/repmod.hpp"

namespace qb2 {

struct RelationFailure {
    std::string relation;
    long row = -1, col = -1; // first mismatched matrix entry
    std::string lhs, rhs;    // entry values on both sides
};

struct RelationReport {
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<RelationFailure> first_failure;

    bool all_hold() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

// The six defining commutation identities plus the two higher-degree
// identities of the generating pair, evaluated as exact matrix equations.
// FamilyMismatch on subalgebra modules.
RelationReport check_relations(const Representation& rep);

// The six commutation identities of the subalgebra presentation (X1, X2, X3
// and the normal element). FamilyMismatch on full-algebra modules.
RelationReport check_b_relations(const Representation& rep);

// Dimension of the unital matrix algebra generated by the given square
// matrices, via span closure over the cyclotomic field.
long generated_algebra_dimension(const std::vector<CycMatrix>& gens);

// Absolute simplicity: the acting matrices generate the full d x d matrix
// algebra, which certifies simplicity over the cyclotomic field and every
// extension. Throws DimensionCeiling when dim exceeds the guard (default 32,
// override with the QB2_SIMPLICITY_CEILING environment variable).
bool is_simple(const Representation& rep);

// True iff the module dimension respects the invariant degree bound of the
// given report. ConfigMismatch when the report was computed for a different
// root configuration.
bool check_dimension_bound(const Representation& rep, const PiDegreeReport& report);

} // namespace qb2
