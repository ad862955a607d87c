#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pdslab/gf4.hpp"
#include "pdslab/group.hpp"

namespace pdslab {

/**
 * The block-diagonal quadratic forms on F4^{2*ell}: j leading elliptic
 * binary blocks alpha*x^2 + x*y + y^2 followed by ell - j hyperbolic blocks
 * x*y.  The form is elliptic when j is odd and hyperbolic when j is even;
 * type() recomputes the zero count and refuses to answer if the two routes
 * disagree.
 */
class QuadraticForm {
public:
    enum class Type { elliptic, hyperbolic };

    QuadraticForm(int ell, int j);

    int ell() const { return ell_; }
    int j() const { return j_; }
    int dimension() const { return 2 * ell_; }
    std::uint64_t domain_size() const { return std::uint64_t{1} << (4 * ell_); }

    Gf4 evaluate(std::span<const Gf4> v) const;
    /// Same form on a packed vector (2-bit codes, least significant first).
    Gf4 evaluate_packed(std::uint64_t codes) const;

    /// Polarization Q(u+v) - Q(u) - Q(v).  Equals the standard symplectic
    /// pairing on every block.
    Gf4 bilinear(std::span<const Gf4> u, std::span<const Gf4> v) const;

    /// Number of zeros over F4^{2*ell}, the zero vector included.
    std::uint64_t zero_count() const;

    /// Number of zeros of the x1 = 0 restriction over F4^{2*ell-1}, zero
    /// vector included.  Equals 4^{2*ell-2} exactly when the restriction is
    /// a nonsingular parabolic form.
    std::uint64_t restricted_zero_count() const;

    /// Elliptic iff j is odd; cross-checked against zero_count() at the
    /// classified sizes.  Throws std::logic_error if the routes disagree.
    Type type() const;

    constexpr int epsilon() const { return (j_ % 2 == 1) ? -1 : +1; }

    /// Invertible substitution carrying this form (j >= 2) down two elliptic
    /// blocks: evaluate(equivalence_map(v)) == QuadraticForm(ell, j-2).evaluate(v)
    /// for every v.  Coordinates outside 2j-3 .. 2j are fixed.
    FieldVector equivalence_map(std::span<const Gf4> v) const;
    /// Inverse of equivalence_map.
    FieldVector equivalence_map_inverse(std::span<const Gf4> v) const;

    /// Replaces x_{2*block} by x_{2*block-1} + x_{2*block} for an elliptic
    /// block index 1 <= block <= j.  Leaves the value of the form unchanged
    /// and is an involution.
    FieldVector pair_flip(std::span<const Gf4> v, int block) const;

private:
    void check_dimension(std::span<const Gf4> v) const;

    int ell_;
    int j_;
};

} // namespace pdslab
