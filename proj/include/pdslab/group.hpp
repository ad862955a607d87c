#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "pdslab/gf4.hpp"
#include "pdslab/gr42.hpp"

namespace pdslab {

using FieldVector = std::vector<Gf4>;

/// An element of Z4^{2k} x Z2^{4l-4k} in packed mixed-radix form.  The first
/// 2k digits are base 4 (two bits each, least significant first), the
/// remaining 4l-4k digits are single bits above them.
struct GroupElement {
    std::uint64_t packed = 0;
    friend constexpr bool operator==(GroupElement, GroupElement) = default;
    friend constexpr auto operator<=>(GroupElement, GroupElement) = default;
};

/**
 * The abelian 2-group Z4^{2k} x Z2^{4l-4k} of order 4^{2l}, together with the
 * Teichmuller-lift bijection between it and F4^{2l}.
 *
 * Each of the k Galois-ring coordinates occupies two adjacent Z4 digits
 * (a, b) of a + b*xi; each remaining F4 coordinate occupies two Z2 digits
 * (b0, b1) of its 2-bit code.  With k = 0 the lift is a plain bit
 * reinterpretation of the codes.
 */
struct GroupShape {
    int ell = 1;  // half the F4 dimension; group order is 4^{2*ell}
    int k = 0;    // number of Galois-ring coordinates (pairs of Z4 factors)

    constexpr GroupShape() = default;
    GroupShape(int ell_, int k_);

    constexpr int z4_digits() const { return 2 * k; }
    constexpr int z2_digits() const { return 4 * (ell - k); }
    constexpr int field_dimension() const { return 2 * ell; }
    constexpr std::uint64_t order() const { return std::uint64_t{1} << (4 * ell); }

    /// Mask covering the Z4 block (low 4k bits).
    constexpr std::uint64_t z4_mask() const {
        return k == 0 ? 0 : (~std::uint64_t{0} >> (64 - 4 * k));
    }
    /// 01 pattern on the low bit of every Z4 digit.
    constexpr std::uint64_t z4_low_bits() const {
        return UINT64_C(0x5555555555555555) & z4_mask();
    }

    constexpr bool contains(GroupElement g) const { return g.packed < order(); }

    GroupElement add(GroupElement x, GroupElement y) const {
        // Per-digit mod-4 addition in the Z4 block: the only carry is from
        // the low bit of a digit into its own high bit.  The Z2 block is XOR.
        const std::uint64_t carry = ((x.packed & y.packed & z4_low_bits()) << 1) & z4_mask();
        return GroupElement{x.packed ^ y.packed ^ carry};
    }

    GroupElement negate(GroupElement x) const {
        // Swaps 1 and 3 in each Z4 digit; Z2 digits are their own inverses.
        return GroupElement{x.packed ^ (((x.packed & z4_low_bits()) << 1) & z4_mask())};
    }

    GroupElement subtract(GroupElement x, GroupElement y) const { return add(x, negate(y)); }

    constexpr unsigned z4_digit(std::uint64_t packed, int i) const {
        return (packed >> (2 * i)) & 3u;
    }
    constexpr std::uint64_t z2_bits(std::uint64_t packed) const { return packed >> (4 * k); }

    /// Teichmuller-lift encoding of a field vector (length 2*ell).  Field
    /// coordinates 2i-1, 2i (for i <= k) combine into the ring element
    /// lift(x_{2i-1}) + 2*lift(x_{2i}); the rest serialize their 2-bit codes.
    GroupElement lift(std::span<const Gf4> v) const;

    /// Exact inverse of lift().
    FieldVector unlift(GroupElement g) const;

    friend constexpr bool operator==(const GroupShape&, const GroupShape&) = default;
};

/// Packs F4 codes two bits per coordinate, least significant first.  This is
/// exactly the k = 0 group encoding.
std::uint64_t field_vector_index(std::span<const Gf4> v);
FieldVector field_vector_from_index(std::uint64_t idx, int dimension);

} // namespace pdslab
