#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pdslab/projective.hpp"
#include "pdslab/quadratic_form.hpp"

using namespace pdslab;

namespace {

FieldVector vec(std::initializer_list<unsigned> codes) {
    FieldVector v;
    for (unsigned c : codes) v.push_back(Gf4(static_cast<std::uint8_t>(c)));
    return v;
}

FieldVector random_vector(std::mt19937& rng, int n) {
    std::uniform_int_distribution<unsigned> digit(0, 3);
    FieldVector v(n);
    for (auto& x : v) x = Gf4(static_cast<std::uint8_t>(digit(rng)));
    return v;
}

// Closed-form symplectic pairing: sum over blocks of x_{2i-1} y_{2i} + x_{2i} y_{2i-1}.
Gf4 symplectic(const FieldVector& u, const FieldVector& v) {
    Gf4 acc;
    for (std::size_t i = 0; i + 1 < u.size(); i += 2)
        acc += u[i] * v[i + 1] + u[i + 1] * v[i];
    return acc;
}

} // namespace

TEST_CASE("form evaluation") {
    const QuadraticForm q21(2, 1);
    CHECK(q21.evaluate(vec({1, 0, 0, 0})) == Gf4::alpha());
    CHECK(q21.evaluate(vec({0, 0, 1, 0})) == Gf4::zero());
    CHECK(q21.zero_count() == 52);  // 4^3 - 3*4, zero vector included
    CHECK(QuadraticForm(2, 0).zero_count() == 76);
    CHECK_THROWS_AS((void)q21.evaluate(vec({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticForm(2, 3), std::invalid_argument);
}

TEST_CASE("classification against the zero-count oracle") {
    CHECK(QuadraticForm(2, 1).type() == QuadraticForm::Type::elliptic);
    CHECK(QuadraticForm(2, 0).type() == QuadraticForm::Type::hyperbolic);
    CHECK(QuadraticForm(1, 1).type() == QuadraticForm::Type::elliptic);
    CHECK(QuadraticForm(1, 1).zero_count() == 1);  // irreducible block: only the origin

    for (int ell = 1; ell <= 3; ++ell) {
        for (int j = 0; j <= ell; ++j) {
            const QuadraticForm q(ell, j);
            const std::uint64_t half = std::uint64_t{1} << (4 * ell - 2);
            const std::uint64_t swing = 3ull << (2 * ell - 2);
            CHECK(q.zero_count() == (j % 2 ? half - swing : half + swing));
            CHECK(q.epsilon() == (j % 2 ? -1 : +1));
        }
    }
}

TEST_CASE("bilinear form equals the symplectic pairing") {
    const QuadraticForm q21(2, 1);
    CHECK(q21.bilinear(vec({1, 0, 0, 0}), vec({0, 1, 0, 0})) == Gf4::one());
    CHECK(q21.bilinear(vec({1, 0, 0, 0}), vec({0, 0, 1, 0})) == Gf4::zero());

    for (int j = 0; j <= 2; ++j) {
        const QuadraticForm q(2, j);
        for (std::uint64_t a = 0; a < 256; ++a) {
            const FieldVector u = field_vector_from_index(a, 4);
            CHECK(q.bilinear(u, u) == Gf4::zero());  // alternating
            for (std::uint64_t b = 0; b < 256; ++b) {
                const FieldVector v = field_vector_from_index(b, 4);
                CHECK(q.bilinear(u, v) == symplectic(u, v));
            }
        }
    }
    std::mt19937 rng(7);
    for (int ell : {3, 4}) {
        const QuadraticForm q(ell, ell >= 2 ? 2 : 1);
        for (int trial = 0; trial < 10000; ++trial) {
            const FieldVector u = random_vector(rng, 2 * ell);
            const FieldVector v = random_vector(rng, 2 * ell);
            CHECK(q.bilinear(u, v) == symplectic(u, v));
        }
    }
}

TEST_CASE("nonsingularity: trivial radical") {
    for (int ell = 1; ell <= 3; ++ell) {
        for (int j = 0; j <= ell; ++j) {
            const QuadraticForm q(ell, j);
            const int n = 2 * ell;
            for (std::uint64_t a = 1; a < (std::uint64_t{1} << (2 * n)); ++a) {
                const FieldVector v = field_vector_from_index(a, n);
                bool in_radical = true;
                for (int i = 0; i < n && in_radical; ++i) {
                    FieldVector e(n);
                    e[i] = Gf4::one();
                    if (!q.bilinear(v, e).is_zero()) in_radical = false;
                }
                CHECK_FALSE(in_radical);
            }
        }
    }
}

TEST_CASE("x1 = 0 restriction has the parabolic zero count") {
    // needs j >= 1: restricting the all-hyperbolic form kills x2 entirely and
    // the restriction is degenerate (4 * 4^{2l-3} + ... zeros, not 4^{2l-2})
    for (int ell = 2; ell <= 3; ++ell)
        for (int j = 1; j <= ell; ++j)
            CHECK(QuadraticForm(ell, j).restricted_zero_count() ==
                  std::uint64_t{1} << (4 * ell - 4));
    CHECK(QuadraticForm(2, 0).restricted_zero_count() == 28);  // 4 * 7, degenerate slice
}

TEST_CASE("equivalence map carries the form down two elliptic blocks") {
    const QuadraticForm q22(2, 2), q20(2, 0);
    for (std::uint64_t a = 0; a < 256; ++a) {
        const FieldVector v = field_vector_from_index(a, 4);
        const FieldVector mapped = q22.equivalence_map(v);
        CHECK(q22.evaluate(mapped) == q20.evaluate(v));
        CHECK(q22.equivalence_map_inverse(mapped) == v);
    }
    // coordinates outside 2j-3 .. 2j are fixed
    const QuadraticForm q33(3, 3);
    const FieldVector w = vec({1, 2, 3, 0, 1, 2});
    const FieldVector mapped = q33.equivalence_map(w);
    CHECK(mapped[0] == w[0]);
    CHECK(mapped[1] == w[1]);
    CHECK_THROWS_AS((void)QuadraticForm(2, 1).equivalence_map(vec({0, 0, 0, 0})),
                    std::domain_error);
}

TEST_CASE("pair flip preserves the form") {
    const QuadraticForm q21(2, 1);
    for (std::uint64_t a = 0; a < 256; ++a) {
        const FieldVector v = field_vector_from_index(a, 4);
        const FieldVector f = q21.pair_flip(v, 1);
        CHECK(q21.evaluate(f) == q21.evaluate(v));
        CHECK(q21.pair_flip(f, 1) == v);       // involution
        if (v[0].is_zero()) CHECK(f == v);     // fixed when x_{2i-1} = 0
    }
    std::mt19937 rng(11);
    const QuadraticForm q32(3, 2);
    for (int trial = 0; trial < 10000; ++trial) {
        const FieldVector v = random_vector(rng, 6);
        const int block = 1 + static_cast<int>(rng() % 2);
        CHECK(q32.evaluate(q32.pair_flip(v, block)) == q32.evaluate(v));
    }
    CHECK_THROWS_AS((void)q21.pair_flip(vec({0, 0, 0, 0}), 2), std::domain_error);
}

TEST_CASE("hyperplane profiles of the ell = 2 quadrics") {
    const QuadraticForm q21(2, 1);
    const auto elliptic = quadric_points(q21);
    CHECK(elliptic.size() == 17);
    CHECK(hyperplane_profile(elliptic, 4) == IntersectionProfile{{1, 17}, {5, 68}});

    const auto section = quadric_section_points(q21);
    CHECK(section.size() == 5);
    CHECK(hyperplane_profile(section, 3) == IntersectionProfile{{0, 6}, {1, 5}, {2, 10}});

    const auto hyperbolic = quadric_points(QuadraticForm(2, 0));
    CHECK(hyperbolic.size() == 25);
    CHECK(hyperplane_profile(hyperbolic, 4) == IntersectionProfile{{5, 60}, {9, 25}});
}

TEST_CASE("predicted profiles match enumeration") {
    CHECK(elliptic_quadric_profile(2) == IntersectionProfile{{1, 17}, {5, 68}});
    CHECK(hyperbolic_quadric_profile(2) == IntersectionProfile{{5, 60}, {9, 25}});
    CHECK(parabolic_quadric_profile(2) == IntersectionProfile{{0, 6}, {1, 5}, {2, 10}});

    for (int j : {1, 2}) {
        const QuadraticForm q(3, j);
        const auto predicted = (j % 2) ? elliptic_quadric_profile(3)
                                       : hyperbolic_quadric_profile(3);
        CHECK(hyperplane_profile(quadric_points(q), 6) == predicted);
        CHECK(hyperplane_profile(quadric_section_points(q), 5) == parabolic_quadric_profile(3));
    }
}

TEST_CASE("profile totals") {
    for (int ell = 2; ell <= 3; ++ell) {
        const QuadraticForm q(ell, 1);
        const auto pts = quadric_points(q);
        const auto profile = hyperplane_profile(pts, 2 * ell);
        std::uint64_t hyperplanes = 0, incidences = 0;
        for (const auto& [size, mult] : profile) {
            hyperplanes += mult;
            incidences += size * mult;
        }
        const std::uint64_t m = 2 * ell;
        CHECK(hyperplanes == ((std::uint64_t{1} << (2 * m)) - 1) / 3);
        // every point lies on (4^{m-1}-1)/3 hyperplanes
        CHECK(incidences == pts.size() * (((std::uint64_t{1} << (2 * (m - 1))) - 1) / 3));
    }
}

TEST_CASE("two-intersection set parameters") {
    const PdsParams elliptic = two_intersection_pds_params(17, 4, 1, 5);
    CHECK(elliptic == PdsParams{256, 51, 2, 12});
    const PdsParams hyperbolic = two_intersection_pds_params(25, 4, 9, 5);
    CHECK(hyperbolic == PdsParams{256, 75, 26, 20});
    CHECK(elliptic.counting_identity_holds());
    CHECK(hyperbolic.counting_identity_holds());
    CHECK_THROWS_AS(two_intersection_pds_params(17, 4, 5, 5), std::invalid_argument);
}
