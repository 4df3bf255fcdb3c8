#include <doctest.h>

#include "aqcube/cube_cat.hpp"
#include "aqcube/permutohedron.hpp"

using namespace aqcube;

TEST_CASE("face maps") {
    // face(2,1,0): x -> (0, x)
    CubeMap d = CubeMap::face(2, 1, 0);
    CHECK(d.source_dim() == 1);
    CHECK(d.target_dim() == 2);
    CHECK(d.apply(0b0) == 0b00);
    CHECK(d.apply(0b1) == 0b10);

    CubeMap d21 = CubeMap::face(2, 2, 1);
    CHECK(d21.apply(0b0) == 0b10);
    CHECK(d21.apply(0b1) == 0b11);

    CHECK_THROWS_AS(CubeMap::face(2, 3, 0), InputError);
    CHECK_THROWS_AS(CubeMap::face(2, 1, 2), InputError);
}

TEST_CASE("degeneracy maps") {
    // degeneracy(1,1): (x1) -> ()
    CubeMap s = CubeMap::degeneracy(1, 1);
    CHECK(s.source_dim() == 1);
    CHECK(s.target_dim() == 0);
    CHECK(s.apply(0) == 0);
    CHECK(s.apply(1) == 0);

    CubeMap s1 = CubeMap::degeneracy(2, 1);  // drops coordinate 1
    CHECK(s1.apply(0b01) == 0b0);
    CHECK(s1.apply(0b10) == 0b1);
}

TEST_CASE("connection maps") {
    // connection(2,1,0): (x1,x2) -> max(x1,x2)
    CubeMap g = CubeMap::connection(2, 1, 0);
    CHECK(g.apply(0b00) == 0);
    CHECK(g.apply(0b01) == 1);
    CHECK(g.apply(0b10) == 1);
    CHECK(g.apply(0b11) == 1);

    CubeMap gmin = CubeMap::connection(2, 1, 1);
    CHECK(gmin.apply(0b01) == 0);
    CHECK(gmin.apply(0b11) == 1);

    CHECK_THROWS_AS(CubeMap::connection(1, 1, 0), InputError);
}

TEST_CASE("composition") {
    CHECK(CubeMap::degeneracy(1, 1).compose(CubeMap::face(1, 1, 0)) == CubeMap::identity(0));
    CHECK(CubeMap::connection(2, 1, 0).compose(CubeMap::face(2, 1, 0)) == CubeMap::identity(1));
    // d_{1,0} . d_{1,0} : [1]^0 -> [1]^2 is the constant (0,0)
    CubeMap dd = CubeMap::face(2, 1, 0).compose(CubeMap::face(1, 1, 0));
    CHECK(dd.apply(0) == 0b00);
    CHECK(dd.word().size() == 2);

    CHECK_THROWS_AS(CubeMap::face(1, 1, 0).compose(CubeMap::face(2, 1, 0)), InputError);
}

TEST_CASE("cubical identities up to dimension 4") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int eps : {0, 1}) {
                // sigma_i . d_{i,eps} = id
                CHECK(CubeMap::degeneracy(n, i).compose(CubeMap::face(n, i, eps)) ==
                      CubeMap::identity(n - 1));
                if (n >= 2 && i <= n - 1) {
                    // gamma_{i,eps} . d_{i,eps} = id and gamma_{i,eps} . d_{i+1,eps} = id
                    CHECK(CubeMap::connection(n, i, eps).compose(CubeMap::face(n, i, eps)) ==
                          CubeMap::identity(n - 1));
                    CHECK(CubeMap::connection(n, i, eps).compose(CubeMap::face(n, i + 1, eps)) ==
                          CubeMap::identity(n - 1));
                }
            }
    // face-face identity d_{j,e'} d_{i,e} = d_{i,e} d_{j-1,e'} for i < j
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int e : {0, 1})
                    for (int e2 : {0, 1})
                        CHECK(CubeMap::face(n, j, e2).compose(CubeMap::face(n - 1, i, e)) ==
                              CubeMap::face(n, i, e).compose(CubeMap::face(n - 1, j - 1, e2)));
}

TEST_CASE("is_face_composite") {
    CHECK(CubeMap::identity(3).is_face_composite());
    CHECK(CubeMap::face(3, 2, 1).is_face_composite());
    CHECK(CubeMap::face(3, 1, 0).compose(CubeMap::face(2, 2, 1)).is_face_composite());
    CHECK(!CubeMap::degeneracy(2, 1).is_face_composite());
    CHECK(!CubeMap::connection(2, 1, 0).is_face_composite());
    CHECK(!CubeMap::face(2, 1, 0).compose(CubeMap::degeneracy(2, 2)).is_face_composite());
}

TEST_CASE("cube_poset") {
    GradedPoset p0 = cube_poset(0);
    CHECK(p0.poset().size() == 1);

    GradedPoset p3 = cube_poset(3);
    CHECK(p3.interval_length(0b000, 0b111) == 3);

    CHECK(cube_poset(2).poset().comparable_pair_count() == 9);
    CHECK(cube_poset(2).has_coords());
}

TEST_CASE("vertex bit strings") {
    CHECK(vertex_bits(0b101, 3) == "101");
    CHECK(parse_vertex_bits("101", 3) == 0b101);
    CHECK_THROWS_AS(parse_vertex_bits("10", 3), InputError);
    CHECK_THROWS_AS(parse_vertex_bits("1a1", 3), InputError);
}

TEST_CASE("mapping space shapes") {
    auto hex = mapping_space_shape(3, 0b000, 0b111);
    REQUIRE(hex);
    CHECK(hex->rank() == 2);
    CHECK(hex->vertex_count() == 6);

    auto pt = mapping_space_shape(1, 0, 1);
    REQUIRE(pt);
    CHECK(pt->rank() == 0);
    CHECK(pt->vertex_count() == 1);

    auto p3 = mapping_space_shape(4, 0b0000, 0b1111);
    REQUIRE(p3);
    CHECK(p3->rank() == 3);
    CHECK(p3->vertex_count() == 24);

    CHECK(mapping_space_shape(2, 0b01, 0b10) == std::nullopt);
    auto self = mapping_space_shape(2, 0b01, 0b01);
    REQUIRE(self);
    CHECK(self->rank() == 0);
}
