#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pdslab/candidate.hpp"
#include "pdslab/gaussian.hpp"

namespace pdslab {

/// A character of Z4^{2k} x Z2^{4l-4k}, addressed by the same packed
/// mixed-radix digits as group elements: a Z4 digit d with label digit c
/// contributes i^{c*d}, a Z2 digit e with label bit w contributes (-1)^{w*e}.
/// Label 0 is the principal character.
struct CharLabel {
    std::uint64_t packed = 0;
    friend constexpr bool operator==(CharLabel, CharLabel) = default;
};

/// Builds the digit label of the character given per-ring-coordinate
/// coefficients (the ring element beta defining x -> i^{trace(beta x)}) and
/// per-field-coordinate coefficients (w defining x -> (-1)^{tr(w x)}).
/// Ring coefficient beta turns into digits (trace(beta), trace(beta*xi));
/// field coefficient w = w0 + w1*alpha into bits (w1, w0 ^ w1).
CharLabel make_label(const GroupShape& shape, std::span<const Gr42> ring_coeffs,
                     std::span<const Gf4> field_coeffs);

/// Digit labels of the order-<=2 ring character defined by beta = 2*t for a
/// Teichmuller element t; both digits are even.
std::pair<unsigned, unsigned> even_label_digits(Gr42 teich);
/// Inverse of even_label_digits; throws std::domain_error on odd digits.
Gr42 teich_from_even_label(unsigned c0, unsigned c1);

/// Sum of the character over the candidate, computed exactly.
GaussInt character_sum(const PdsCandidate& c, CharLabel label);

/// Character sum over a set of F4 vectors under x -> (-1)^{tr(<w, x>)}.
std::int64_t field_character_sum(const std::vector<FieldVector>& vectors,
                                 std::span<const Gf4> w);

/// In-place mixed-radix character transform: given data indexed by packed
/// group element, returns the array of sums
///   out[label] = sum_g data[g] * i^{sum c_t d_t} * (-1)^{sum w_s e_s}
/// via one radix-4 butterfly pass per Z4 digit and one radix-2 pass per Z2
/// digit, all in exact Gaussian-integer arithmetic (O(v log v) operations).
std::vector<GaussInt> character_transform(const GroupShape& shape, std::vector<GaussInt> data,
                                          int threads = 1);

/// Multiset of character-sum values over all labels.
struct SpectrumReport {
    std::map<GaussInt, std::uint64_t> histogram;  // value -> number of labels
    std::uint64_t principal = 0;                  // sum at label 0, always |D|

    bool all_real() const;
    /// Sum of |value|^2 weighted by multiplicity; equals v * |D| by
    /// character orthogonality.
    std::uint64_t energy() const;
};

/// Runs the transform on the indicator of the candidate and histograms all
/// 4^{2*ell} character sums.
SpectrumReport fast_spectrum(const PdsCandidate& c, int threads = 1);

} // namespace pdslab
