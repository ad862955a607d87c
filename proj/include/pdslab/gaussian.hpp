#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace pdslab {

/// Exact Gaussian integer (re + im*i) on signed 64-bit coordinates.  All
/// character sums in this project live here; there is no floating point.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend constexpr GaussInt operator+(GaussInt x, GaussInt y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend constexpr GaussInt operator-(GaussInt x, GaussInt y) {
        return {x.re - y.re, x.im - y.im};
    }
    constexpr GaussInt& operator+=(GaussInt y) { re += y.re; im += y.im; return *this; }
    constexpr GaussInt& operator-=(GaussInt y) { re -= y.re; im -= y.im; return *this; }

    /// Multiplication by i (rotate by 90 degrees).
    constexpr GaussInt times_i() const { return {-im, re}; }
    /// Multiplication by i^e for e in 0..3.
    constexpr GaussInt times_i_pow(unsigned e) const {
        switch (e & 3u) {
            case 0: return *this;
            case 1: return {-im, re};
            case 2: return {-re, -im};
            default: return {im, -re};
        }
    }

    constexpr std::uint64_t norm() const {
        return static_cast<std::uint64_t>(re * re + im * im);
    }
    constexpr bool is_real() const { return im == 0; }

    friend constexpr bool operator==(GaussInt, GaussInt) = default;
    friend constexpr auto operator<=>(GaussInt x, GaussInt y) {
        if (auto c = x.re <=> y.re; c != 0) return c;
        return x.im <=> y.im;
    }
};

inline std::string to_string(GaussInt z) {
    if (z.im == 0) return std::to_string(z.re);
    std::string s = std::to_string(z.re);
    s += (z.im < 0) ? "-" : "+";
    s += std::to_string(z.im < 0 ? -z.im : z.im);
    s += "i";
    return s;
}

} // namespace pdslab
