#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pdslab/pds_params.hpp"
#include "pdslab/quadratic_form.hpp"

namespace pdslab {

/// Histogram: intersection size (number of projective points a hyperplane
/// shares with the set) -> number of hyperplanes attaining it.
using IntersectionProfile = std::map<std::uint64_t, std::uint64_t>;

/// Canonical representatives of the points of PG(m-1, 4): one vector per
/// point, scaled so its first nonzero coordinate is 1 (the lexicographically
/// least nonzero scalar multiple).  There are (4^m - 1)/3 of them.
std::vector<FieldVector> projective_points(int m);

/// Points of the quadric of `form` in PG(2*ell - 1, 4).
std::vector<FieldVector> quadric_points(const QuadraticForm& form);

/// Points of the x1 = 0 section of the quadric, as vectors of length
/// 2*ell - 1 in PG(2*ell - 2, 4).  This section is a nonsingular parabolic
/// quadric.
std::vector<FieldVector> quadric_section_points(const QuadraticForm& form);

/// For every hyperplane of PG(m-1, 4) (enumerated as canonical normal
/// vectors), counts its intersection with the given point set.
IntersectionProfile hyperplane_profile(const std::vector<FieldVector>& points, int m);

/// Two-size profile of a nonsingular elliptic quadric in PG(2*ell - 1, 4):
/// tangent hyperplanes of size a, the rest of size b.  Needs ell >= 2.
IntersectionProfile elliptic_quadric_profile(int ell);

/// Two-size profile of a nonsingular hyperbolic quadric in PG(2*ell - 1, 4).
IntersectionProfile hyperbolic_quadric_profile(int ell);

/// Three-size profile of a nonsingular parabolic quadric in PG(2*ell - 2, 4):
/// tangent size t, hyperbolic-section size h, elliptic-section size e.
IntersectionProfile parabolic_quadric_profile(int ell);

/// Converts a projective (n, m, h1, h2) two-intersection set over F4 into the
/// parameters of the partial difference set formed by its nonzero vectors:
///   v = 4^m, k = 3n,
///   lambda = 3n + (4 h1 - n)(4 h2 - n) + 4(h1 + h2) - 2n,
///   mu     = 3n + (4 h1 - n)(4 h2 - n).
PdsParams two_intersection_pds_params(std::uint64_t n, int m, std::uint64_t h1, std::uint64_t h2);

} // namespace pdslab
