#pragma once

#include <string>
#include <vector>

#include "pdslab/candidate.hpp"
#include "pdslab/pds_params.hpp"
#include "pdslab/spectrum.hpp"

namespace pdslab {

enum class VerifyMethod { brute, spectral };
enum class VerifyStatus { pass, fail, degenerate };

const char* to_string(VerifyMethod m);

/// Verified parameter tuple with provenance: which independent methods
/// passed, the exact character spectrum (when the spectral route ran), and
/// wall-clock timing.
struct PdsCertificate {
    PdsParams params;
    int epsilon = +1;
    std::vector<VerifyMethod> methods_passed;
    SpectrumReport spectrum;
    double elapsed_ms = 0.0;
};

struct VerifyOutcome {
    VerifyStatus status = VerifyStatus::fail;
    PdsCertificate certificate;
    std::string message;  // witness description on failure

    bool passed() const { return status == VerifyStatus::pass; }
};

/**
 * Ground-truth verifier: materializes the full difference multiset
 * {d1 - d2 : d1 != d2} and demands count lambda on every nonidentity member
 * of D and count mu on every nonidentity non-member, matching the expected
 * parameters.  O(|D|^2) exact counting.
 *
 * Preconditions 0 not in D and D = -D are checked and raise
 * std::invalid_argument; an empty candidate reports degenerate.
 */
VerifyOutcome brute_force_verify(const PdsCandidate& c, int threads = 1);

/**
 * Spectral verifier: computes every character sum with the exact transform
 * and passes iff the principal sum is |D| = k and every nonprincipal sum
 * lies in the two-value set given by srg_eigenvalues(expected).  Same
 * preconditions as brute_force_verify.
 */
VerifyOutcome spectral_verify(const PdsCandidate& c, int threads = 1);

/// Runs both verifiers and demands they agree on pass/fail; the merged
/// certificate lists both methods on success.
VerifyOutcome verify_both(const PdsCandidate& c, int threads = 1);

/// Certificate JSON: {params, epsilon, methods_passed, spectrum_histogram,
/// elapsed_ms}, alphabetically ordered keys.  Deterministic except for the
/// elapsed_ms timing field.
std::string certificate_json(const VerifyOutcome& outcome);

} // namespace pdslab
