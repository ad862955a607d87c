#include "pdslab/coverage.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "pdslab/candidate.hpp"

namespace pdslab {

namespace {

std::string params_string(const PdsParams& p) {
    std::ostringstream os;
    os << '(' << p.v << ',' << p.k << ',' << p.lambda << ',' << p.mu << ')';
    return os.str();
}

// Smallest j with the requested parity and k <= j <= ell, or -1.
int smallest_admissible_j(int ell, int k, int parity) {
    int j = (k % 2 == parity) ? k : k + 1;
    return j <= ell ? j : -1;
}

} // namespace

const char* to_string(Availability a) {
    switch (a) {
        case Availability::yes: return "yes";
        case Availability::no: return "no";
        default: return "degenerate";
    }
}

std::string CoverageEntry::group_name() const {
    std::ostringstream os;
    if (k > 0) os << "Z4^" << 2 * k;
    if (k > 0 && k < ell) os << " x ";
    if (k < ell) os << "Z2^" << 4 * (ell - k);
    return os.str();
}

std::vector<CoverageEntry> coverage_table(int max_ell) {
    if (max_ell < 1 || max_ell > 4)
        throw std::invalid_argument("coverage_table: need 1 <= max_ell <= 4");
    std::vector<CoverageEntry> rows;
    for (int ell = 1; ell <= max_ell; ++ell) {
        for (int k = 0; k <= ell; ++k) {
            CoverageEntry row;
            row.ell = ell;
            row.k = k;
            if (const int j = smallest_admissible_j(ell, k, 1); j >= 0) {
                row.negative_j = j;
                row.negative_params = expected_pds_params(ell, j);
                row.negative_latin =
                    row.negative_params.k == 0 ? Availability::degenerate : Availability::yes;
            }
            if (const int j = smallest_admissible_j(ell, k, 0); j >= 0) {
                row.latin_j = j;
                row.latin_params = expected_pds_params(ell, j);
                row.latin = Availability::yes;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_coverage_text(const std::vector<CoverageEntry>& rows) {
    std::ostringstream os;
    os << "ell k  group                 neg-latin    j  params                  "
          "latin        j  params\n";
    for (const CoverageEntry& r : rows) {
        char line[256];
        std::snprintf(line, sizeof line, "%-3d %-2d %-21s %-12s %-2s %-23s %-12s %-2s %s\n",
                      r.ell, r.k, r.group_name().c_str(), to_string(r.negative_latin),
                      r.negative_j >= 0 ? std::to_string(r.negative_j).c_str() : "-",
                      r.negative_j >= 0 ? params_string(r.negative_params).c_str() : "-",
                      to_string(r.latin),
                      r.latin_j >= 0 ? std::to_string(r.latin_j).c_str() : "-",
                      r.latin_j >= 0 ? params_string(r.latin_params).c_str() : "-");
        os << line;
    }
    return os.str();
}

std::string format_coverage_csv(const std::vector<CoverageEntry>& rows) {
    std::ostringstream os;
    os << "ell,k,group,negative_latin,negative_j,negative_params,latin,latin_j,latin_params\n";
    for (const CoverageEntry& r : rows) {
        os << r.ell << ',' << r.k << ',' << r.group_name() << ',' << to_string(r.negative_latin)
           << ',';
        if (r.negative_j >= 0)
            os << r.negative_j << ",\"" << params_string(r.negative_params) << '"';
        else
            os << ",";
        os << ',' << to_string(r.latin) << ',';
        if (r.latin_j >= 0)
            os << r.latin_j << ",\"" << params_string(r.latin_params) << '"';
        else
            os << ",";
        os << '\n';
    }
    return os.str();
}

} // namespace pdslab
