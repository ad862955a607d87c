#include "pdslab/projective.hpp"

#include <stdexcept>

namespace pdslab {

namespace {

constexpr std::uint64_t pow4(int e) { return std::uint64_t{1} << (2 * e); }

Gf4 dot(const FieldVector& u, const FieldVector& v) {
    Gf4 acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

} // namespace

std::vector<FieldVector> projective_points(int m) {
    if (m < 1 || m > 12) throw std::invalid_argument("projective_points: m out of range");
    std::vector<FieldVector> pts;
    pts.reserve((pow4(m) - 1) / 3);
    for (std::uint64_t idx = 1; idx < pow4(m); ++idx) {
        FieldVector v = field_vector_from_index(idx, m);
        std::size_t first = 0;
        while (v[first].is_zero()) ++first;
        if (v[first] == Gf4::one()) pts.push_back(std::move(v));
    }
    return pts;
}

std::vector<FieldVector> quadric_points(const QuadraticForm& form) {
    std::vector<FieldVector> pts;
    for (auto& p : projective_points(form.dimension()))
        if (form.evaluate(p).is_zero()) pts.push_back(std::move(p));
    return pts;
}

std::vector<FieldVector> quadric_section_points(const QuadraticForm& form) {
    std::vector<FieldVector> pts;
    for (auto& p : projective_points(form.dimension() - 1)) {
        FieldVector full(form.dimension());
        for (std::size_t i = 0; i < p.size(); ++i) full[i + 1] = p[i];
        if (form.evaluate(full).is_zero()) pts.push_back(std::move(p));
    }
    return pts;
}

IntersectionProfile hyperplane_profile(const std::vector<FieldVector>& points, int m) {
    IntersectionProfile hist;
    for (const auto& normal : projective_points(m)) {
        std::uint64_t hit = 0;
        for (const auto& p : points)
            if (dot(normal, p).is_zero()) ++hit;
        ++hist[hit];
    }
    return hist;
}

IntersectionProfile elliptic_quadric_profile(int ell) {
    if (ell < 2) throw std::domain_error("elliptic_quadric_profile: needs ell >= 2");
    const std::uint64_t n = (pow4(ell) + 1) * (pow4(ell - 1) - 1) / 3;  // quadric points
    const std::uint64_t total = (pow4(2 * ell) - 1) / 3;                // hyperplanes
    const std::uint64_t a = 1 + 4 * (pow4(ell - 1) + 1) * (pow4(ell - 2) - 1) / 3;
    const std::uint64_t b = (pow4(2 * ell - 2) - 1) / 3;
    // One tangent hyperplane per quadric point.
    return {{a, n}, {b, total - n}};
}

IntersectionProfile hyperbolic_quadric_profile(int ell) {
    if (ell < 2) throw std::domain_error("hyperbolic_quadric_profile: needs ell >= 2");
    const std::uint64_t n = (pow4(ell) - 1) * (pow4(ell - 1) + 1) / 3;
    const std::uint64_t total = (pow4(2 * ell) - 1) / 3;
    // Character values q^l - (q^{l-1}+1) and -(q^{l-1}+1) pull back to
    // intersection sizes via size = (value + n) / 4; the larger size belongs
    // to the tangent hyperplanes, one per point.
    const std::uint64_t tangent = (pow4(ell) - (pow4(ell - 1) + 1) + n) / 4;
    const std::uint64_t secant = (n - (pow4(ell - 1) + 1)) / 4;
    return {{tangent, n}, {secant, total - n}};
}

IntersectionProfile parabolic_quadric_profile(int ell) {
    if (ell < 2) throw std::domain_error("parabolic_quadric_profile: needs ell >= 2");
    const std::uint64_t t = (pow4(2 * ell - 3) - 1) / 3;
    const std::uint64_t cap_t = (pow4(2 * ell - 2) - 1) / 3;
    const std::uint64_t e = t - pow4(ell - 2);
    const std::uint64_t cap_e = (pow4(2 * ell - 2) - pow4(ell - 1)) / 2;
    const std::uint64_t h = t + pow4(ell - 2);
    const std::uint64_t cap_h = (pow4(2 * ell - 2) + pow4(ell - 1)) / 2;
    return {{t, cap_t}, {e, cap_e}, {h, cap_h}};
}

PdsParams two_intersection_pds_params(std::uint64_t n, int m, std::uint64_t h1,
                                      std::uint64_t h2) {
    if (h1 == h2) throw std::invalid_argument("two_intersection_pds_params: h1 == h2");
    const auto sn = static_cast<std::int64_t>(n);
    const std::int64_t c1 = 4 * static_cast<std::int64_t>(h1) - sn;
    const std::int64_t c2 = 4 * static_cast<std::int64_t>(h2) - sn;
    PdsParams p;
    p.v = pow4(m);
    p.k = 3 * n;
    p.mu = 3 * sn + c1 * c2;
    p.lambda = p.mu + 4 * static_cast<std::int64_t>(h1 + h2) - 2 * sn;
    return p;
}

} // namespace pdslab
