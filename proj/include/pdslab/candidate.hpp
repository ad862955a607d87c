#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdslab/group.hpp"
#include "pdslab/pds_params.hpp"

namespace pdslab {

/// Raised when a candidate file parses as JSON but violates the structural
/// invariants (sortedness, range, identity-freeness, symmetry, parameter
/// consistency).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A candidate partial difference set in Z4^{2k} x Z2^{4*ell-4k}: the
 * Teichmuller lift of the nonzero zero set of the (ell, j) quadratic form,
 * stored as a strictly ascending list of packed elements.  The identity is
 * never a member and the set is closed under negation.
 *
 * The ell = 1, j = 1 case is degenerate: the quadric has no nonzero zeros
 * and the element list is empty.
 */
struct PdsCandidate {
    GroupShape shape;
    int j = 0;
    int epsilon = +1;  // -1: negative Latin square type, +1: Latin square type
    PdsParams expected;
    std::vector<GroupElement> elements;  // sorted strictly ascending

    bool degenerate() const { return elements.empty(); }
    bool contains(GroupElement g) const;
};

/// Parameters the (ell, j) construction must produce:
///   j odd : (4^{2l}, (4^l+1)(4^{l-1}-1), 4^{2l-2} - 3*4^{l-1} - 2, 4^{2l-2} - 4^{l-1})
///   j even: (4^{2l}, (4^l-1)(4^{l-1}+1), 4^{2l-2} + 3*4^{l-1} - 2, 4^{2l-2} + 4^{l-1})
PdsParams expected_pds_params(int ell, int j);

/// Enumerates F4^{2*ell} minus the origin, keeps the zeros of the (ell, j)
/// form, lifts them into Z4^{2k} x Z2^{4*ell-4k} and sorts.  Requires
/// 0 <= k <= j <= ell (k = 0 is the elementary-abelian baseline).
PdsCandidate build_candidate(int ell, int j, int k, int threads = 1);

/// The group automorphism induced by the form equivalence (j -> j-2); maps
/// the (ell, j, k) candidate onto the (ell, j-2, k) one.  Requires
/// k <= j - 2 so the touched coordinates stay inside the field block.
PdsCandidate apply_form_equivalence(const PdsCandidate& c);

/// Canonical JSON: alphabetically ordered keys, no whitespace variance,
/// trailing newline.  Byte-reproducible for equal candidates.
std::string canonical_json(const PdsCandidate& c);

/// Parses and validates a candidate document.  Throws ValidationError on
/// structural violations and nlohmann::json::exception on malformed JSON.
PdsCandidate candidate_from_json_text(const std::string& text);

void save_candidate(const PdsCandidate& c, const std::filesystem::path& path);
PdsCandidate load_candidate(const std::filesystem::path& path);

} // namespace pdslab
