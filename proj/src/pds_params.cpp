#include "pdslab/pds_params.hpp"

#include <cmath>
#include <stdexcept>

namespace pdslab {

namespace {

// Exact integer square root check.
bool perfect_square(std::int64_t n, std::int64_t& root) {
    if (n < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    root = r;
    return r * r == n;
}

} // namespace

std::pair<std::int64_t, std::int64_t> srg_eigenvalues(const PdsParams& p) {
    const std::int64_t d = p.lambda - p.mu;
    const std::int64_t disc = d * d + 4 * (static_cast<std::int64_t>(p.k) - p.mu);
    std::int64_t root = 0;
    if (!perfect_square(disc, root))
        throw std::domain_error("srg_eigenvalues: discriminant is not a perfect square");
    if (((d + root) & 1) != 0)
        throw std::domain_error("srg_eigenvalues: eigenvalues are not integers");
    return {(d + root) / 2, (d - root) / 2};
}

std::pair<std::uint64_t, std::uint64_t> srg_multiplicities(const PdsParams& p) {
    const auto [r, s] = srg_eigenvalues(p);
    if (r == s) throw std::domain_error("srg_multiplicities: repeated eigenvalue");
    const std::int64_t vm1 = static_cast<std::int64_t>(p.v) - 1;
    const std::int64_t num = -static_cast<std::int64_t>(p.k) - vm1 * s;
    if (num % (r - s) != 0)
        throw std::domain_error("srg_multiplicities: non-integral multiplicity");
    const std::int64_t f = num / (r - s);
    const std::int64_t g = vm1 - f;
    if (f < 0 || g < 0) throw std::domain_error("srg_multiplicities: negative multiplicity");
    return {static_cast<std::uint64_t>(f), static_cast<std::uint64_t>(g)};
}

PdsParams complement_params(const PdsParams& p) {
    const auto v = static_cast<std::int64_t>(p.v);
    const auto k = static_cast<std::int64_t>(p.k);
    return PdsParams{p.v, static_cast<std::uint64_t>(v - k - 1),
                     v - 2 - 2 * k + p.mu, v - 2 * k + p.lambda};
}

} // namespace pdslab
