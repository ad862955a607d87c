#pragma once

#include <cstdint>
#include <utility>

namespace pdslab {

/// Parameter tuple (v, k, lambda, mu) of a partial difference set / strongly
/// regular graph.
struct PdsParams {
    std::uint64_t v = 0;
    std::uint64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    friend constexpr bool operator==(const PdsParams&, const PdsParams&) = default;

    /// Counting identity k(k - lambda - 1) = (v - k - 1) mu that every SRG
    /// parameter set satisfies.
    constexpr bool counting_identity_holds() const {
        const auto kk = static_cast<std::int64_t>(k);
        const auto vv = static_cast<std::int64_t>(v);
        return kk * (kk - lambda - 1) == (vv - kk - 1) * mu;
    }
};

/// The two restricted eigenvalues ((lambda-mu) +- sqrt((lambda-mu)^2 + 4(k-mu)))/2,
/// returned as (r, s) with r > s.  These are exactly the values every
/// nonprincipal character sum of a PDS with these parameters must take.
/// Throws std::domain_error when the discriminant is not a perfect square or
/// the roots are not integers (not a two-integer-eigenvalue parameter set).
std::pair<std::int64_t, std::int64_t> srg_eigenvalues(const PdsParams& p);

/// Multiplicities (f, g) of (r, s) forced by the trace equations
/// 1 + f + g = v and k + f r + g s = 0.
std::pair<std::uint64_t, std::uint64_t> srg_multiplicities(const PdsParams& p);

/// Parameters of the complement graph.
PdsParams complement_params(const PdsParams& p);

} // namespace pdslab
