#pragma once

#include <string>
#include <vector>

#include "pdslab/pds_params.hpp"

namespace pdslab {

/// Availability of a construction in a given group.
enum class Availability {
    yes,
    no,          // no admissible form index j of the right parity with k <= j <= ell
    degenerate,  // admissible but the set is empty (ell = 1, odd j)
};

const char* to_string(Availability a);

/// One row per group Z4^{2k} x Z2^{4*ell-4k}: whether a negative Latin
/// square (odd j) and a Latin square (even j) candidate exist, with the
/// smallest admissible j and the resulting parameters.
struct CoverageEntry {
    int ell = 1;
    int k = 0;
    Availability negative_latin = Availability::no;
    int negative_j = -1;
    PdsParams negative_params;
    Availability latin = Availability::no;
    int latin_j = -1;
    PdsParams latin_params;

    std::string group_name() const;
};

/// Rows for every 1 <= ell <= max_ell, 0 <= k <= ell.  Negative Latin
/// candidates need an odd j with k <= j <= ell, so Z4^{2*ell} (k = ell) is
/// excluded exactly when ell is even; Latin candidates need an even j (j = 0
/// is the k = 0 hyperbolic baseline).
std::vector<CoverageEntry> coverage_table(int max_ell);

std::string format_coverage_text(const std::vector<CoverageEntry>& rows);
std::string format_coverage_csv(const std::vector<CoverageEntry>& rows);

} // namespace pdslab
