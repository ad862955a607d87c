#include "pdslab/spectrum.hpp"

#include <bit>
#include <stdexcept>

#include "pdslab/parallel.hpp"

namespace pdslab {

CharLabel make_label(const GroupShape& shape, std::span<const Gr42> ring_coeffs,
                     std::span<const Gf4> field_coeffs) {
    if (static_cast<int>(ring_coeffs.size()) != shape.k ||
        static_cast<int>(field_coeffs.size()) != 2 * (shape.ell - shape.k))
        throw std::invalid_argument("make_label: coefficient counts must match the shape");
    std::uint64_t packed = 0;
    for (int i = 0; i < shape.k; ++i) {
        const Gr42 beta = ring_coeffs[i];
        packed |= static_cast<std::uint64_t>(beta.trace()) << (4 * i);
        packed |= static_cast<std::uint64_t>((beta * Gr42::xi()).trace()) << (4 * i + 2);
    }
    for (std::size_t s = 0; s < field_coeffs.size(); ++s) {
        const unsigned w0 = field_coeffs[s].code() & 1u;
        const unsigned w1 = (field_coeffs[s].code() >> 1) & 1u;
        const int base = 4 * shape.k + 2 * static_cast<int>(s);
        packed |= static_cast<std::uint64_t>(w1) << base;         // coefficient of x0
        packed |= static_cast<std::uint64_t>(w0 ^ w1) << (base + 1);  // coefficient of x1
    }
    return CharLabel{packed};
}

std::pair<unsigned, unsigned> even_label_digits(Gr42 teich) {
    if (!teich.is_teichmuller())
        throw std::domain_error("even_label_digits: not a Teichmuller element");
    const Gr42 beta = Gr42::two() * teich;
    return {beta.trace(), (beta * Gr42::xi()).trace()};
}

Gr42 teich_from_even_label(unsigned c0, unsigned c1) {
    if ((c0 | c1) & 1u) throw std::domain_error("teich_from_even_label: digits must be even");
    for (const Gf4 x : {Gf4::zero(), Gf4::one(), Gf4::alpha(), Gf4::alpha_sq()}) {
        const Gr42 t = Gr42::teichmuller_lift(x);
        if (even_label_digits(t) == std::pair<unsigned, unsigned>{c0, c1}) return t;
    }
    throw std::domain_error("teich_from_even_label: no preimage");  // unreachable
}

GaussInt character_sum(const PdsCandidate& c, CharLabel label) {
    const GroupShape& shape = c.shape;
    // Count elements by i-exponent class; the sum is then assembled once.
    std::uint64_t count[4] = {0, 0, 0, 0};
    for (const GroupElement g : c.elements) {
        unsigned e = 0;
        for (int i = 0; i < shape.z4_digits(); ++i)
            e += shape.z4_digit(label.packed, i) * shape.z4_digit(g.packed, i);
        e += 2u * (std::popcount(shape.z2_bits(label.packed) & shape.z2_bits(g.packed)) & 1u);
        ++count[e & 3u];
    }
    return GaussInt{static_cast<std::int64_t>(count[0]) - static_cast<std::int64_t>(count[2]),
                    static_cast<std::int64_t>(count[1]) - static_cast<std::int64_t>(count[3])};
}

std::int64_t field_character_sum(const std::vector<FieldVector>& vectors,
                                 std::span<const Gf4> w) {
    std::int64_t acc = 0;
    for (const auto& x : vectors) {
        Gf4 dot;
        for (std::size_t i = 0; i < x.size(); ++i) dot += w[i] * x[i];
        acc += dot.trace() ? -1 : +1;
    }
    return acc;
}

std::vector<GaussInt> character_transform(const GroupShape& shape, std::vector<GaussInt> data,
                                          int threads) {
    const std::uint64_t v = shape.order();
    if (data.size() != v)
        throw std::invalid_argument("character_transform: data size must equal group order");

    // Radix-4 pass per Z4 digit.  Butterflies with different block offsets
    // are independent, so each pass is data-parallel; passes are separated by
    // the joins inside parallel_ranges.
    for (int t = 0; t < shape.z4_digits(); ++t) {
        const std::uint64_t stride = std::uint64_t{1} << (2 * t);
        const std::uint64_t groups = v / 4;  // one butterfly per (block, offset) pair
        parallel_ranges(groups, threads, [&](std::uint64_t gb, std::uint64_t ge, std::size_t) {
            for (std::uint64_t grp = gb; grp < ge; ++grp) {
                const std::uint64_t base = (grp / stride) * 4 * stride + (grp % stride);
                GaussInt& a0 = data[base];
                GaussInt& a1 = data[base + stride];
                GaussInt& a2 = data[base + 2 * stride];
                GaussInt& a3 = data[base + 3 * stride];
                const GaussInt even = a0 + a2, eodd = a0 - a2;
                const GaussInt sum13 = a1 + a3;
                const GaussInt rot13 = (a1 - a3).times_i();
                a0 = even + sum13;
                a1 = eodd + rot13;
                a2 = even - sum13;
                a3 = eodd - rot13;
            }
        });
    }
    // Radix-2 pass per Z2 digit.
    for (int s = 0; s < shape.z2_digits(); ++s) {
        const std::uint64_t stride = std::uint64_t{1} << (4 * shape.k + s);
        const std::uint64_t groups = v / 2;
        parallel_ranges(groups, threads, [&](std::uint64_t gb, std::uint64_t ge, std::size_t) {
            for (std::uint64_t grp = gb; grp < ge; ++grp) {
                const std::uint64_t base = (grp / stride) * 2 * stride + (grp % stride);
                const GaussInt x0 = data[base], x1 = data[base + stride];
                data[base] = x0 + x1;
                data[base + stride] = x0 - x1;
            }
        });
    }
    return data;
}

bool SpectrumReport::all_real() const {
    for (const auto& [value, count] : histogram)
        if (!value.is_real()) return false;
    return true;
}

std::uint64_t SpectrumReport::energy() const {
    std::uint64_t acc = 0;
    for (const auto& [value, count] : histogram) acc += value.norm() * count;
    return acc;
}

SpectrumReport fast_spectrum(const PdsCandidate& c, int threads) {
    std::vector<GaussInt> indicator(c.shape.order());
    for (const GroupElement g : c.elements) indicator[g.packed] = GaussInt{1, 0};
    const std::vector<GaussInt> sums = character_transform(c.shape, std::move(indicator), threads);
    SpectrumReport report;
    report.principal = static_cast<std::uint64_t>(sums[0].re);
    for (const GaussInt z : sums) ++report.histogram[z];
    return report;
}

} // namespace pdslab
