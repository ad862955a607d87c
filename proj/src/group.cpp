#include "pdslab/group.hpp"

#include <stdexcept>

namespace pdslab {

GroupShape::GroupShape(int ell_, int k_) : ell(ell_), k(k_) {
    if (ell < 1 || ell > 15) throw std::invalid_argument("GroupShape: ell out of range");
    if (k < 0 || k > ell) throw std::invalid_argument("GroupShape: need 0 <= k <= ell");
}

GroupElement GroupShape::lift(std::span<const Gf4> v) const {
    if (static_cast<int>(v.size()) != field_dimension())
        throw std::invalid_argument("lift: vector length must be 2*ell");
    std::uint64_t packed = 0;
    for (int i = 0; i < k; ++i) {
        const Gr42 r = Gr42::teichmuller_lift(v[2 * i]) +
                       Gr42::two() * Gr42::teichmuller_lift(v[2 * i + 1]);
        packed |= static_cast<std::uint64_t>(r.a()) << (4 * i);
        packed |= static_cast<std::uint64_t>(r.b()) << (4 * i + 2);
    }
    for (int i = 2 * k; i < field_dimension(); ++i) {
        const unsigned code = v[i].code();
        const int base = 4 * k + 2 * (i - 2 * k);
        packed |= static_cast<std::uint64_t>(code & 1u) << base;
        packed |= static_cast<std::uint64_t>((code >> 1) & 1u) << (base + 1);
    }
    return GroupElement{packed};
}

FieldVector GroupShape::unlift(GroupElement g) const {
    if (!contains(g)) throw std::invalid_argument("unlift: element out of range");
    FieldVector v(field_dimension());
    for (int i = 0; i < k; ++i) {
        const Gr42 r(static_cast<std::uint8_t>((g.packed >> (4 * i)) & 3u),
                     static_cast<std::uint8_t>((g.packed >> (4 * i + 2)) & 3u));
        const TeichPair p = r.teich_decompose();
        v[2 * i] = teich_digit0(p).residue();
        v[2 * i + 1] = teich_digit1(p).residue();
    }
    for (int i = 2 * k; i < field_dimension(); ++i) {
        const int base = 4 * k + 2 * (i - 2 * k);
        v[i] = Gf4(static_cast<std::uint8_t>((g.packed >> base) & 3u));
    }
    return v;
}

std::uint64_t field_vector_index(std::span<const Gf4> v) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        idx |= static_cast<std::uint64_t>(v[i].code()) << (2 * i);
    return idx;
}

FieldVector field_vector_from_index(std::uint64_t idx, int dimension) {
    FieldVector v(dimension);
    for (int i = 0; i < dimension; ++i)
        v[i] = Gf4(static_cast<std::uint8_t>((idx >> (2 * i)) & 3u));
    return v;
}

} // namespace pdslab
