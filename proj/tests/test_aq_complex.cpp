#include <doctest.h>

#include "aqcube/aq_complex.hpp"
#include "aqcube/cube_cat.hpp"
#include "test_support.hpp"

using namespace aqcube;

namespace {

FGAbelianGroup z() { return FGAbelianGroup::free_group(1); }

}  // namespace

TEST_CASE("cube_extension_sign") {
    // edges extending to the square diagonal [00,11]
    CHECK(cube_extension_sign(0b00, 0b11, 0b10, false) == -1);  // [0,1] -> [0,3]
    CHECK(cube_extension_sign(0b00, 0b11, 0b01, false) == 1);   // [0,2] -> [0,3]
    CHECK(cube_extension_sign(0b00, 0b11, 0b01, true) == -1);   // [1,3] -> [0,3]
    CHECK(cube_extension_sign(0b00, 0b11, 0b10, true) == 1);    // [2,3] -> [0,3]
    // vertex -> edge extensions always carry the bare sign
    for (unsigned b : {1u, 2u, 4u}) {
        CHECK(cube_extension_sign(0, b, b, false) == 1);
        CHECK(cube_extension_sign(0, b, b, true) == -1);
    }
}

TEST_CASE("extension signs on the square match the closed form") {
    GradedPoset sq = cube_poset(2);
    CoefficientSystem s = constant_system(sq, z());
    ExtensionSigns signs = extension_signs(sq, s);
    CHECK(signs.size() == 12);  // 8 vertex->edge, 4 edge->diagonal
    CHECK(signs.at({{0, 1}, {0, 3}}) == -1);
    CHECK(signs.at({{0, 2}, {0, 3}}) == 1);
    CHECK(signs.at({{1, 3}, {0, 3}}) == -1);
    CHECK(signs.at({{2, 3}, {0, 3}}) == 1);
    CHECK(signs.at({{0, 0}, {0, 1}}) == 1);
    CHECK(signs.at({{1, 1}, {0, 1}}) == -1);
}

TEST_CASE("interval complex of a point") {
    GradedPoset p = cube_poset(0);
    CochainComplex c = build_dphi(p, constant_system(p, z()), 0);
    CHECK(c.length() == 1);
    CHECK(c.cohomology_at(0) == FGAbelianGroup::Canonical{1, {}});
}

TEST_CASE("interval complex of the 1-cube") {
    GradedPoset p = cube_poset(1);
    CochainComplex c = build_dphi(p, constant_system(p, z()), 0);
    REQUIRE(c.length() == 2);
    // d(x_[0,0], x_[1,1]) = x_[0,0] - x_[1,1]
    CHECK(c.differential(0).matrix() == IntMatrix(1, 2, {1, -1}));
    CHECK(c.cohomology_at(0) == FGAbelianGroup::Canonical{1, {}});
    CHECK(c.cohomology_at(1).is_zero());
}

TEST_CASE("interval complex of the square against frozen matrices") {
    GradedPoset p = cube_poset(2);
    CochainComplex c = build_dphi(p, constant_system(p, z()), 0);
    REQUIRE(c.length() == 3);
    // vertices 00,10,01,11 (bitmasks 0..3); edges [0,1],[0,2],[1,3],[2,3]
    IntMatrix d0(4, 4, {
        1, -1, 0, 0,
        1, 0, -1, 0,
        0, 1, 0, -1,
        0, 0, 1, -1,
    });
    IntMatrix d1(1, 4, {-1, 1, -1, 1});
    CHECK(c.differential(0).matrix() == d0);
    CHECK(c.differential(1).matrix() == d1);
    CHECK(c.cohomology_at(0) == FGAbelianGroup::Canonical{1, {}});
    CHECK(c.cohomology_at(1).is_zero());
    CHECK(c.cohomology_at(2).is_zero());
}

TEST_CASE("cube complex degree support") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 3; ++n) {
            GradedPoset p = cube_poset(m);
            CoefficientSystem s = constant_system(p, FGAbelianGroup::cyclic(Int(2)));
            CochainComplex c = build_cube_cphi(m, s, n);
            CHECK(c.min_degree() == -n);
            CHECK(c.max_degree() == m - n);
            for (int k : c.support()) {
                CHECK(k >= -n);
                CHECK(k <= m - n);
            }
        }
}

TEST_CASE("square with coefficient degree one") {
    GradedPoset p = cube_poset(2);
    CochainComplex c = build_cube_cphi(2, constant_system(p, z()), 1);
    CHECK(c.min_degree() == -1);
    CHECK(c.max_degree() == 1);
    CHECK(c.cohomology_at(-1) == FGAbelianGroup::Canonical{1, {}});
    CHECK(c.cohomology_at(0).is_zero());
    CHECK(c.cohomology_at(1).is_zero());
    CHECK(c.summand_offset(1, "[00,01]") == 1);

    CHECK_THROWS_AS(build_cube_cphi(3, constant_system(p, z()), 1), InputError);
}

TEST_CASE("random systems on cubes give complexes") {
    testsup::Rng rng(5);
    for (int m = 1; m <= 3; ++m)
        for (int trial = 0; trial < 10; ++trial) {
            GradedPoset p = cube_poset(m);
            CoefficientSystem s = testsup::random_valid_system(p, rng);
            CochainComplex c = build_cube_cphi(m, s, 1);
            c.check_complex();  // d.d = 0 in the quotients
        }
}

TEST_CASE("axis permutation leaves cohomology unchanged") {
    testsup::Rng rng(13);
    GradedPoset p = cube_poset(3);
    CoefficientSystem s = testsup::random_valid_system(p, rng);
    CochainComplex c = build_cube_cphi(3, s, 1);

    // pull back along the cube automorphism swapping axes 1 and 3
    auto permute = [](int v) {
        int b0 = v & 1, b2 = (v >> 2) & 1;
        return (v & 0b010) | (b0 << 2) | b2;
    };
    GradedPoset q = cube_poset(3);
    std::vector<int> inc(8);
    for (int v = 0; v < 8; ++v) inc[v] = permute(v);
    CoefficientSystem sp = restrict_system(s, q, inc);
    CochainComplex cp = build_cube_cphi(3, sp, 1);
    for (int k = -1; k <= 2; ++k) CHECK(c.cohomology_at(k) == cp.cohomology_at(k));
}

TEST_CASE("three-chain has no consistent signs") {
    GradedPoset chain = check_graded(FinitePoset::from_covers(3, {{0, 1}, {1, 2}}));
    CoefficientSystem s = constant_system(chain, z());
    CHECK_THROWS_AS(build_dphi(chain, s, 0), NotSignableError);
    // ...unless every two-step composite vanishes
    CoefficientSystem zero = constant_system(chain, FGAbelianGroup::zero());
    CHECK_NOTHROW(build_dphi(chain, zero, 0));
}

TEST_CASE("square without coordinates takes the generic sign solver") {
    FinitePoset raw = FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                               {"00", "10", "01", "11"});
    GradedPoset p = check_graded(raw);
    REQUIRE(!p.has_coords());
    CochainComplex c = build_dphi(p, constant_system(p, z()), 0);
    CHECK(c.cohomology_at(0) == FGAbelianGroup::Canonical{1, {}});
    CHECK(c.cohomology_at(1).is_zero());
    CHECK(c.cohomology_at(2).is_zero());
}
