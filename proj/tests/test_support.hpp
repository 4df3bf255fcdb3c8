#pragma once

#include <random>
#include <vector>

#include "aqcube/aq_complex.hpp"
#include "aqcube/cube_cat.hpp"
#include "aqcube/cubical_complex.hpp"
#include "aqcube/local_system.hpp"

namespace testsup {

using aqcube::Cell;
using aqcube::CoefficientSystem;
using aqcube::CubicalComplex;
using aqcube::FGAbelianGroup;
using aqcube::GradedPoset;
using aqcube::GroupHom;
using aqcube::Int;
using aqcube::IntMatrix;
using aqcube::Interval;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(unsigned long long seed) : eng(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
};

inline FGAbelianGroup random_group(Rng& rng) {
    std::size_t rank = static_cast<std::size_t>(rng.uniform(0, 3));
    std::vector<Int> torsion;
    switch (rng.uniform(0, 5)) {
        case 0: break;
        case 1: torsion = {Int(2)}; break;
        case 2: torsion = {Int(3)}; break;
        case 3: torsion = {Int(2), Int(4)}; break;
        case 4: torsion = {Int(12)}; break;
        case 5: torsion = {Int(2), Int(2), Int(12)}; break;
    }
    if (rank == 0 && torsion.empty()) rank = 1;
    return FGAbelianGroup::from_canonical(rank, torsion);
}

// A functorial coefficient system on a cube poset: all intervals carry the
// same group, target extensions along axis j apply the diagonal matrix
// T_j, source extensions S_j. Diagonal matrices commute pairwise, which
// gives path independence on every interval square and chain, and a
// diagonal matrix always respects the canonical relations.
inline CoefficientSystem random_valid_system(const GradedPoset& cube, Rng& rng) {
    FGAbelianGroup g = random_group(rng);
    std::size_t gg = g.generators();
    int dim = cube.max_interval_length();

    auto random_diag = [&]() {
        IntMatrix m(gg, gg);
        for (std::size_t i = 0; i < gg; ++i) m.at(i, i) = rng.uniform(-2, 2);
        return m;
    };
    std::vector<IntMatrix> t, s;
    for (int j = 0; j < dim; ++j) {
        t.push_back(random_diag());
        s.push_back(random_diag());
    }

    CoefficientSystem sys(cube);
    for (const Interval& i : cube.all_intervals()) sys.set_group(i, g);
    const auto& coords = cube.coords();
    for (const Interval& i : cube.all_intervals()) {
        auto [targets, sources] = cube.cover_extensions(i);
        for (const Interval& j : targets) {
            unsigned axis_bit = coords[j.high] ^ coords[i.high];
            int axis = aqcube::popcount32(axis_bit - 1);
            sys.set_cover_map(i, j, GroupHom(g, g, t[axis]));
        }
        for (const Interval& j : sources) {
            unsigned axis_bit = coords[i.low] ^ coords[j.low];
            int axis = aqcube::popcount32(axis_bit - 1);
            sys.set_cover_map(i, j, GroupHom(g, g, s[axis]));
        }
    }
    return sys;
}

// Random face-closed subcomplex of [1]^ambient generated by a few cells.
inline CubicalComplex random_subcomplex(int ambient, int max_gen_dim, Rng& rng) {
    std::uint32_t mask = (1u << ambient) - 1;
    std::vector<Cell> gens;
    int count = rng.uniform(1, 4);
    for (int i = 0; i < count; ++i) {
        std::uint32_t axes = 0;
        int d = rng.uniform(0, max_gen_dim);
        while (aqcube::popcount32(axes) < d) axes |= 1u << rng.uniform(0, ambient - 1);
        std::uint32_t base = static_cast<std::uint32_t>(rng.uniform(0, static_cast<int>(mask))) & ~axes;
        gens.push_back(Cell{base, axes});
    }
    return aqcube::face_closure(ambient, std::move(gens));
}

}  // namespace testsup
