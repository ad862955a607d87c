#pragma once

#include <array>
#include <cstdint>

namespace pdslab {

/**
 * An element of the field with four elements, F4 = {0, 1, alpha, alpha^2},
 * where alpha^2 = alpha + 1.
 *
 * Storage is the 2-bit code b1*alpha + b0:
 *   0 -> 0, 1 -> 1, alpha -> 2, alpha^2 -> 3.
 * Addition is XOR on codes (characteristic 2); multiplication goes through a
 * 16-entry table so hot loops stay branch-free.
 */
class Gf4 {
public:
    constexpr Gf4() = default;
    constexpr explicit Gf4(std::uint8_t code) : code_(code & 3u) {}

    static constexpr Gf4 zero() { return Gf4(0); }
    static constexpr Gf4 one() { return Gf4(1); }
    static constexpr Gf4 alpha() { return Gf4(2); }
    static constexpr Gf4 alpha_sq() { return Gf4(3); }

    constexpr std::uint8_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr Gf4 operator+(Gf4 x, Gf4 y) { return Gf4(static_cast<std::uint8_t>(x.code_ ^ y.code_)); }
    friend constexpr Gf4 operator*(Gf4 x, Gf4 y) { return Gf4(kMul[(x.code_ << 2) | y.code_]); }
    constexpr Gf4& operator+=(Gf4 y) { code_ ^= y.code_; return *this; }
    constexpr Gf4& operator*=(Gf4 y) { code_ = kMul[(code_ << 2) | y.code_]; return *this; }

    friend constexpr bool operator==(Gf4 x, Gf4 y) = default;

    constexpr Gf4 square() const { return *this * *this; }

    /// Multiplicative inverse of a nonzero element; x^3 = 1 so x^-1 = x^2.
    constexpr Gf4 inverse() const { return square(); }

    /// Trace into the prime field: x + x^2, returned as a bit.
    constexpr int trace() const { return (code_ ^ kMul[(code_ << 2) | code_]) & 1; }

private:
    // Row x, column y of the multiplication table.  The nonzero elements form
    // a cyclic group of order 3 generated by alpha: 2*2=3, 2*3=1, 3*3=2.
    static constexpr std::array<std::uint8_t, 16> kMul = {
        0, 0, 0, 0,
        0, 1, 2, 3,
        0, 2, 3, 1,
        0, 3, 1, 2,
    };

    std::uint8_t code_ = 0;
};

static_assert(Gf4::alpha() * Gf4::alpha() == Gf4::alpha_sq());
static_assert(Gf4::alpha() * Gf4::alpha_sq() == Gf4::one());
static_assert((Gf4::alpha() + Gf4::one()) == Gf4::alpha_sq());
static_assert(Gf4::alpha().trace() == 1 && Gf4::one().trace() == 0);

} // namespace pdslab
