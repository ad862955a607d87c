#pragma once

#include <array>
#include <cstdint>

#include "pdslab/gf4.hpp"

namespace pdslab {

/// 2-adic digits of a ring element: x = digit0 + 2*digit1 with both digits in
/// the Teichmuller set {0, 1, xi, xi^2}.  The decomposition is unique.
/// Digits are stored as table indices; see Gr42::from_index.
struct TeichPair {
    std::uint8_t digit0_index = 0;
    std::uint8_t digit1_index = 0;
    friend constexpr bool operator==(const TeichPair&, const TeichPair&) = default;
};

/**
 * An element of the Galois ring GR(4,2) = Z4[x]/(x^2 + x + 1), written
 * a + b*xi where xi is the image of x.  The defining relation gives
 * xi^2 = 3 + 3*xi, and xi has multiplicative order 3.
 *
 * GR(4,2) is a local ring: the maximal ideal is 2R (both coordinates even)
 * and the residue field R/2R is F4 under the fixed identification
 * residue(xi) = alpha.  Multiplication goes through a 256-entry table.
 */
class Gr42 {
public:
    constexpr Gr42() = default;
    constexpr Gr42(std::uint8_t a, std::uint8_t b) : a_(a & 3u), b_(b & 3u) {}

    static constexpr Gr42 zero() { return Gr42(0, 0); }
    static constexpr Gr42 one() { return Gr42(1, 0); }
    static constexpr Gr42 two() { return Gr42(2, 0); }
    static constexpr Gr42 xi() { return Gr42(0, 1); }
    static constexpr Gr42 xi_sq() { return Gr42(3, 3); }

    /// Coefficient of 1.
    constexpr std::uint8_t a() const { return a_; }
    /// Coefficient of xi.
    constexpr std::uint8_t b() const { return b_; }

    /// Index into 16-entry tables: a + 4*b.
    constexpr std::uint8_t index() const { return static_cast<std::uint8_t>(a_ | (b_ << 2)); }
    static constexpr Gr42 from_index(std::uint8_t idx) {
        return Gr42(idx & 3u, (idx >> 2) & 3u);
    }

    constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }
    /// Membership in the maximal ideal 2R.
    constexpr bool in_two_r() const { return (a_ & 1u) == 0 && (b_ & 1u) == 0; }

    friend constexpr Gr42 operator+(Gr42 x, Gr42 y) {
        return Gr42((x.a_ + y.a_) & 3u, (x.b_ + y.b_) & 3u);
    }
    friend constexpr Gr42 operator-(Gr42 x, Gr42 y) { return x + (-y); }
    constexpr Gr42 operator-() const {
        return Gr42(static_cast<std::uint8_t>(0u - a_) & 3u,
                    static_cast<std::uint8_t>(0u - b_) & 3u);
    }
    friend constexpr Gr42 operator*(Gr42 x, Gr42 y) {
        return from_index(kMul[(x.index() << 4) | y.index()]);
    }
    constexpr Gr42& operator+=(Gr42 y) { *this = *this + y; return *this; }
    constexpr Gr42& operator*=(Gr42 y) { *this = *this * y; return *this; }

    friend constexpr bool operator==(Gr42 x, Gr42 y) = default;

    /// The Frobenius ring automorphism.  It fixes Z4, sends xi to xi^2, and
    /// in 2-adic form maps digit0 + 2*digit1 to digit0^2 + 2*digit1^2.
    constexpr Gr42 frobenius() const {
        return Gr42((a_ + 3u * b_) & 3u, (3u * b_) & 3u);
    }

    /// Trace to Z4: x + frobenius(x).  The xi coefficient always cancels.
    constexpr std::uint8_t trace() const { return (2u * a_ + 3u * b_) & 3u; }

    /// Reduction modulo 2R onto the residue field, with residue(xi) = alpha.
    constexpr Gf4 residue() const {
        return Gf4(static_cast<std::uint8_t>((a_ & 1u) | ((b_ & 1u) << 1)));
    }

    /// The unique Teichmuller representative mapping to x under residue().
    static constexpr Gr42 teichmuller_lift(Gf4 x) { return from_index(kTeichIndex[x.code()]); }

    constexpr bool is_teichmuller() const { return index() == kTeichIndex[residue().code()]; }

    /// Unique 2-adic decomposition x = digit0 + 2*digit1 over the
    /// Teichmuller set.
    constexpr TeichPair teich_decompose() const {
        const Gr42 d0 = teichmuller_lift(residue());
        const Gr42 delta = *this - d0;  // lands in 2R
        const Gr42 d1 = teichmuller_lift(Gf4(
            static_cast<std::uint8_t>(((delta.a_ >> 1) & 1u) | (((delta.b_ >> 1) & 1u) << 1))));
        return TeichPair{d0.index(), d1.index()};
    }

    static constexpr Gr42 reconstruct(const TeichPair& p) {
        return from_index(p.digit0_index) + two() * from_index(p.digit1_index);
    }

private:
    // Indices of 0, 1, xi, xi^2 keyed by the residue code.
    static constexpr std::array<std::uint8_t, 4> kTeichIndex = {0, 1, 4, 15};

    static constexpr std::array<std::uint8_t, 256> kMul = [] {
        std::array<std::uint8_t, 256> t{};
        for (unsigned x = 0; x < 16; ++x) {
            for (unsigned y = 0; y < 16; ++y) {
                const unsigned a = x & 3u, b = x >> 2, c = y & 3u, d = y >> 2;
                // (a + b*xi)(c + d*xi) reduced by xi^2 = 3 + 3*xi
                const unsigned u = (a * c + 3u * b * d) & 3u;
                const unsigned v = (a * d + b * c + 3u * b * d) & 3u;
                t[(x << 4) | y] = static_cast<std::uint8_t>(u | (v << 2));
            }
        }
        return t;
    }();

    std::uint8_t a_ = 0;
    std::uint8_t b_ = 0;
};

/// First 2-adic digit as a ring element.
constexpr Gr42 teich_digit0(const TeichPair& p) { return Gr42::from_index(p.digit0_index); }
/// Second 2-adic digit as a ring element.
constexpr Gr42 teich_digit1(const TeichPair& p) { return Gr42::from_index(p.digit1_index); }

static_assert(Gr42::xi() * Gr42::xi() == Gr42::xi_sq());
static_assert(Gr42::xi() * Gr42::xi_sq() == Gr42::one());
static_assert(Gr42::two() * Gr42::two() == Gr42::zero());
static_assert(Gr42::one().trace() == 2 && Gr42::xi().trace() == 3);
static_assert(Gr42::xi().residue() == Gf4::alpha());
static_assert(Gr42::teichmuller_lift(Gf4::alpha_sq()) == Gr42::xi_sq());

} // namespace pdslab
