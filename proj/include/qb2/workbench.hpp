#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qb2/pbw.hpp"
#include "qb2/repmod.hpp"

namespace qb2 {

// Grid sweep description. Every output artifact records the seed, and two
// runs with equal spec and seed produce byte-identical files.
struct SweepSpec {
    long m_min = 2, m_max = 4;
    long n_min = 2, n_max = 4;
    // Enumerate all valid (k1, k2) pairs per (m, n); with false, use the
    // fixed pair below and note pairs the constructor rejects.
    bool all_coprime = true;
    long k1 = 1, k2 = 1;
    // Families to build per config; empty means degree reports and identity
    // checks only.
    std::vector<FamilyTag> families;
    long build_ceiling = 64;      // skip module builds above this dimension
    long simplicity_ceiling = 32; // skip span closure above this dimension
    std::string outdir;           // created if absent
    unsigned long seed = 20260814;
};

// One line of the human summary table.
struct SweepRow {
    long m = 0, n = 0, k1 = 0, k2 = 0, ell = 0;
    long pi_deg = 0;
    long quotient_bound = 0;
    bool identities = false; // straightening identity suite
    long built = 0;          // modules built at this config
    long failures = 0;       // failed assertions at this config
};

struct SweepSummary {
    long configs = 0; // configs fully processed
    long skipped = 0; // (k1, k2) pairs rejected by the constructor
    long modules_built = 0;
    long failures = 0;
    std::vector<SweepRow> rows;
    std::vector<std::string> failure_details;
    std::vector<std::string> notes;          // skip notes and ceiling notes
    std::vector<std::string> artifact_files; // relative to outdir, write order
};

// Runs degree reports, the straightening identity suite, and the requested
// family pipeline (build, relation checks, dimension bounds, simplicity
// within the ceiling) over the whole grid, writing one JSON artifact per
// config plus summary.json. Assertion failures are collected per config,
// never fatal. Error on an empty range or an unwritable output directory.
SweepSummary run_sweep(const SweepSpec& spec);

// Renders a normal form with coefficients written as small powers of r and
// s (falling back to explicit root-of-unity sums), e.g. "s^-2 * X1 X2".
std::string pretty_normal_form(const NCPoly& p);

// Command-line front end. args excludes the program name. Returns the
// process exit code: 0 success, 1 a requested check failed, 2 usage or
// input errors. Human-readable output goes to `out` unless --json is given,
// in which case `out` carries exactly one JSON document; diagnostics go to
// `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qb2
