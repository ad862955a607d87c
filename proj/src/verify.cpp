#include "pdslab/verify.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "pdslab/parallel.hpp"

namespace pdslab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_hypotheses(const PdsCandidate& c) {
    if (!c.elements.empty() && c.elements.front().packed == 0)
        throw std::invalid_argument("verifier: candidate contains the identity");
    for (const GroupElement g : c.elements)
        if (!c.contains(c.shape.negate(g)))
            throw std::invalid_argument("verifier: candidate is not closed under negation");
}

VerifyOutcome degenerate_outcome(const PdsCandidate& c) {
    VerifyOutcome out;
    out.status = VerifyStatus::degenerate;
    out.certificate.params = c.expected;
    out.certificate.epsilon = c.epsilon;
    out.message = "degenerate: empty candidate (the parameter formula gives k = 0), "
                  "PDS verification is vacuous";
    return out;
}

std::vector<std::uint64_t> indicator_bits(const PdsCandidate& c) {
    std::vector<std::uint64_t> bits((c.shape.order() + 63) / 64);
    for (const GroupElement g : c.elements)
        bits[g.packed >> 6] |= std::uint64_t{1} << (g.packed & 63);
    return bits;
}

} // namespace

const char* to_string(VerifyMethod m) {
    return m == VerifyMethod::brute ? "brute" : "spectral";
}

VerifyOutcome brute_force_verify(const PdsCandidate& c, int threads) {
    const auto start = Clock::now();
    check_hypotheses(c);
    if (c.degenerate()) return degenerate_outcome(c);

    VerifyOutcome out;
    out.certificate.params = c.expected;
    out.certificate.epsilon = c.epsilon;

    if (c.elements.size() != c.expected.k) {
        out.message = "size mismatch: |D| = " + std::to_string(c.elements.size()) +
                      ", expected k = " + std::to_string(c.expected.k);
        out.certificate.elapsed_ms = ms_since(start);
        return out;
    }

    const std::uint64_t v = c.shape.order();
    const std::size_t n = c.elements.size();
    // Per-chunk difference counters, merged afterwards; memory is v * 4 bytes
    // per worker.
    std::vector<std::vector<std::uint32_t>> partial(
        std::max<std::size_t>(1, std::min<std::uint64_t>(threads < 1 ? 1 : threads, n)));
    parallel_ranges(n, threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t part) {
        auto& counts = partial[part];
        counts.assign(v, 0);
        for (std::uint64_t i = begin; i < end; ++i) {
            const GroupElement d1 = c.elements[i];
            for (const GroupElement d2 : c.elements) {
                if (d1 == d2) continue;
                ++counts[c.shape.subtract(d1, d2).packed];
            }
        }
    });
    std::vector<std::uint32_t>& counts = partial.front();
    for (std::size_t p = 1; p < partial.size(); ++p)
        for (std::uint64_t g = 0; g < v; ++g) counts[g] += partial[p][g];

    const auto bits = indicator_bits(c);
    for (std::uint64_t g = 1; g < v; ++g) {
        const bool member = (bits[g >> 6] >> (g & 63)) & 1;
        const auto want = static_cast<std::uint32_t>(member ? c.expected.lambda : c.expected.mu);
        if (counts[g] != want) {
            out.message = "difference count " + std::to_string(counts[g]) + " at element " +
                          std::to_string(g) + " (" + (member ? "member" : "non-member") +
                          "), expected " + std::to_string(want);
            out.certificate.elapsed_ms = ms_since(start);
            return out;
        }
    }

    out.status = VerifyStatus::pass;
    out.certificate.methods_passed = {VerifyMethod::brute};
    out.certificate.elapsed_ms = ms_since(start);
    return out;
}

VerifyOutcome spectral_verify(const PdsCandidate& c, int threads) {
    const auto start = Clock::now();
    check_hypotheses(c);
    if (c.degenerate()) return degenerate_outcome(c);

    VerifyOutcome out;
    out.certificate.params = c.expected;
    out.certificate.epsilon = c.epsilon;

    std::vector<GaussInt> indicator(c.shape.order());
    for (const GroupElement g : c.elements) indicator[g.packed] = GaussInt{1, 0};
    const std::vector<GaussInt> sums = character_transform(c.shape, std::move(indicator), threads);

    SpectrumReport report;
    report.principal = c.elements.size();
    for (const GaussInt z : sums) ++report.histogram[z];
    out.certificate.spectrum = report;

    const auto [r, s] = srg_eigenvalues(c.expected);
    if (sums[0] != GaussInt{static_cast<std::int64_t>(c.expected.k), 0}) {
        out.message = "principal sum " + to_string(sums[0]) + ", expected k = " +
                      std::to_string(c.expected.k);
        out.certificate.elapsed_ms = ms_since(start);
        return out;
    }
    for (std::uint64_t label = 1; label < sums.size(); ++label) {
        const GaussInt z = sums[label];
        if (z == GaussInt{r, 0} || z == GaussInt{s, 0}) continue;
        out.message = "character sum " + to_string(z) + " at label " + std::to_string(label) +
                      " outside {" + std::to_string(r) + ", " + std::to_string(s) + "}";
        out.certificate.elapsed_ms = ms_since(start);
        return out;
    }

    out.status = VerifyStatus::pass;
    out.certificate.methods_passed = {VerifyMethod::spectral};
    out.certificate.elapsed_ms = ms_since(start);
    return out;
}

VerifyOutcome verify_both(const PdsCandidate& c, int threads) {
    VerifyOutcome brute = brute_force_verify(c, threads);
    VerifyOutcome spectral = spectral_verify(c, threads);
    if (brute.status != spectral.status)
        throw std::logic_error("verifier disagreement: brute " +
                               std::string(brute.passed() ? "pass" : "fail") + " vs spectral " +
                               std::string(spectral.passed() ? "pass" : "fail"));
    VerifyOutcome out = spectral;
    out.certificate.elapsed_ms += brute.certificate.elapsed_ms;
    if (out.passed())
        out.certificate.methods_passed = {VerifyMethod::brute, VerifyMethod::spectral};
    else if (!brute.message.empty())
        out.message = brute.message + "; " + spectral.message;
    return out;
}

std::string certificate_json(const VerifyOutcome& outcome) {
    nlohmann::json doc;
    const PdsCertificate& cert = outcome.certificate;
    doc["params"] = {cert.params.v, cert.params.k, cert.params.lambda, cert.params.mu};
    doc["epsilon"] = cert.epsilon;
    auto& methods = doc["methods_passed"] = nlohmann::json::array();
    for (const VerifyMethod m : cert.methods_passed) methods.push_back(to_string(m));
    auto& hist = doc["spectrum_histogram"] = nlohmann::json::object();
    for (const auto& [value, count] : cert.spectrum.histogram) hist[to_string(value)] = count;
    doc["elapsed_ms"] = cert.elapsed_ms;
    if (!outcome.passed()) doc["failure"] = outcome.message;
    return doc.dump() + "\n";
}

} // namespace pdslab
