// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "aqcube/aq_complex.hpp"
#include "aqcube/cubical_complex.hpp"
#include "aqcube/obstruction.hpp"
#include "aqcube/permutohedron.hpp"
#include "aqcube/smith.hpp"
#include "test_support.hpp"

using namespace aqcube;

namespace {

struct Gate {
    int failures = 0;
    void run(int num, const std::string& what, const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        std::cout << "criterion " << num << " [" << what << "]: " << (ok ? "PASS" : "FAIL") << note
                  << "\n";
        if (!ok) ++failures;
    }
};

FGAbelianGroup z() { return FGAbelianGroup::free_group(1); }

// ---- criterion 1 ------------------------------------------------------

bool complexes_are_complexes() {
    testsup::Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        int m = rng.uniform(0, 4);
        GradedPoset p = cube_poset(m);
        CoefficientSystem s = testsup::random_valid_system(p, rng);
        CochainComplex c = build_dphi(p, s, rng.uniform(-2, 2));
        // d.d = 0 exactly, as maps of the quotient groups
        for (std::size_t k = 0; k + 2 < c.length(); ++k) {
            GroupHom dd = c.differential(k + 1).compose(c.differential(k));
            if (!dd.same_map(GroupHom::zero(dd.source(), dd.target()))) return false;
        }
    }
    return true;
}

// ---- criterion 2 ------------------------------------------------------

// order-isomorphism search with up/down-set-size invariants
bool order_isomorphic(const FinitePoset& a, const FinitePoset& b) {
    std::size_t n = a.size();
    if (b.size() != n) return false;
    auto profile = [](const FinitePoset& p, std::size_t x) {
        int down = 0, up = 0;
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (p.leq(static_cast<int>(y), static_cast<int>(x))) ++down;
            if (p.leq(static_cast<int>(x), static_cast<int>(y))) ++up;
        }
        return std::pair(down, up);
    };
    std::vector<std::pair<int, int>> pa(n), pb(n);
    for (std::size_t x = 0; x < n; ++x) {
        pa[x] = profile(a, x);
        pb[x] = profile(b, x);
    }
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t x) {
        if (x == n) return true;
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || pa[x] != pb[y]) continue;
            bool fits = true;
            for (std::size_t x2 = 0; x2 < x && fits; ++x2) {
                if (a.leq(static_cast<int>(x), static_cast<int>(x2)) !=
                        b.leq(static_cast<int>(y), image[x2]) ||
                    a.leq(static_cast<int>(x2), static_cast<int>(x)) !=
                        b.leq(image[x2], static_cast<int>(y)))
                    fits = false;
            }
            if (!fits) continue;
            image[x] = static_cast<int>(y);
            used[y] = true;
            if (place(x + 1)) return true;
            used[y] = false;
            image[x] = -1;
        }
        return false;
    };
    return place(0);
}

bool twisted_arrow_matches_definition() {
    testsup::Rng rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 8));
        std::vector<std::pair<int, int>> covers;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.uniform(0, 2) == 0)
                    covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
        FinitePoset p = FinitePoset::from_covers(n, covers);

        // the definition, built from scratch: objects are the arrows
        // (a <= b), a morphism (a,b) -> (c,d) is a factorization, i.e.
        // c <= a and b <= d; enumerate the arrows in reversed order so
        // the match is not by construction
        std::vector<std::pair<int, int>> arrows;
        for (int b = static_cast<int>(n) - 1; b >= 0; --b)
            for (int a = static_cast<int>(n) - 1; a >= 0; --a)
                if (p.leq(a, b)) arrows.emplace_back(a, b);
        std::size_t m = arrows.size();
        std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                leq[i][j] = p.leq(arrows[j].first, arrows[i].first) &&
                            p.leq(arrows[i].second, arrows[j].second);
        FinitePoset oracle = FinitePoset::from_leq(m, leq);

        if (!order_isomorphic(twisted_arrow_poset(p), oracle)) return false;
    }
    return true;
}

// ---- criterion 3 ------------------------------------------------------

bool cube_degree_range() {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 3; ++n) {
            GradedPoset p = cube_poset(m);
            CochainComplex c =
                build_cube_cphi(m, constant_system(p, FGAbelianGroup::cyclic(Int(2))), n);
            std::vector<int> expected;
            for (int d = -n; d <= m - n; ++d) expected.push_back(d);
            if (c.support() != expected) return false;
        }
    return true;
}

// ---- criterion 4 ------------------------------------------------------

bool limit_equals_equalizer() {
    testsup::Rng rng(404);
    auto agree = [](const CubicalComplex& k, const CoefficientSystem& s, int n) {
        CochainComplex lim = build_limit_complex(k, s, n);
        CochainComplex eq = equalizer_oracle(k, s, n);
        for (int d = lim.min_degree(); d <= lim.max_degree(); ++d)
            if (!(lim.cohomology_at(d) == eq.cohomology_at(d))) return false;
        return true;
    };

    for (int m = 1; m <= 3; ++m)
        if (!agree(full_cube(m), testsup::random_valid_system(cube_poset(m), rng), 1)) return false;
    if (!agree(boundary_cube(2), testsup::random_valid_system(cube_poset(2), rng), 0)) return false;
    if (!agree(boundary_cube(3), testsup::random_valid_system(cube_poset(3), rng), 1)) return false;

    GradedPoset c4 = cube_poset(4);
    int done = 0;
    while (done < 20) {
        CubicalComplex k = testsup::random_subcomplex(4, 3, rng);
        if (k.cells().size() > 60) continue;  // oracle guard
        if (!agree(k, testsup::random_valid_system(c4, rng), 1)) return false;
        ++done;
    }
    return true;
}

// ---- criterion 5 ------------------------------------------------------

bool fixture_cohomology() {
    CochainComplex seg = build_cube_cphi(1, constant_system(cube_poset(1), z()), 0);
    if (!(seg.cohomology_at(0) == FGAbelianGroup::Canonical{1, {}})) return false;
    if (!seg.cohomology_at(1).is_zero()) return false;

    // oracle for the boundary square: Smith form of the 4-cycle
    // coboundary matrix, written down directly
    IntMatrix d(4, 4,
                {1, -1, 0, 0,
                 1, 0, -1, 0,
                 0, 1, 0, -1,
                 0, 0, 1, -1});
    SmithResult sr = snf(d);
    std::size_t rank_d = 0;
    for (std::size_t i = 0; i < 4; ++i)
        if (sr.d.at(i, i) != 0) {
            if (sr.d.at(i, i) != 1) return false;  // coker is torsion free
            ++rank_d;
        }
    std::size_t h0 = 4 - rank_d, h1 = 4 - rank_d;  // ker d and coker d ranks
    CochainComplex circle = build_limit_complex(boundary_cube(2),
                                                constant_system(cube_poset(2), z()), 0);
    if (!(circle.cohomology_at(0) == FGAbelianGroup::Canonical{h0, {}})) return false;
    if (!(circle.cohomology_at(1) == FGAbelianGroup::Canonical{h1, {}})) return false;

    // boundary cell counts against binomial enumeration
    auto binom = [](int n, int k) {
        long long b = 1;
        for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
        return b;
    };
    for (int n : {2, 3}) {
        long long cells = 0;
        for (int dd = 0; dd < n; ++dd) cells += binom(n, dd) * (1ll << (n - dd));
        if (boundary_cube(n).cells().size() != static_cast<std::size_t>(cells)) return false;
    }
    return boundary_cube(2).cells().size() == 8 && boundary_cube(3).cells().size() == 26;
}

// ---- criterion 6 ------------------------------------------------------

FacetClasses classes_from_cochain(const CochainComplex& c, int n, const std::vector<Int>& x) {
    FacetClasses f;
    f.n = n;
    int k = 1 - c.offset();
    for (const FacetKey& key : facet_keys(n)) {
        Interval iv = facet_long_interval(n, key);
        std::string label = "[" + vertex_bits(iv.low, n) + "," + vertex_bits(iv.high, n) + "]";
        std::size_t off = c.summand_offset(k, label);
        std::size_t g = c.term(k)[c.summand_index(k, label)].group.generators();
        f.alpha[key] = std::vector<Int>(x.begin() + off, x.begin() + off + g);
    }
    return f;
}

bool obstruction_soundness() {
    testsup::Rng rng(606);
    CochainComplex c3 = build_limit_complex(boundary_cube(3),
                                            constant_system(cube_poset(3), z()), 1);
    int k = 1 - c3.offset();
    std::size_t edges = c3.term_group(k - 1).generators();
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> beta(edges);
        for (Int& v : beta) v = rng.uniform(-3, 3);
        std::vector<Int> x = c3.differential(k - 1).apply(beta);
        ObstructionResult r = decide_vanishing(c3, assemble_cocycle(c3, 3, classes_from_cochain(c3, 3, x)));
        if (!r.vanishes || !r.certificate) return false;
        if (c3.differential(k - 1).apply(*r.certificate) != x) return false;

        // perturbing by a generator outside im d^0 flips the verdict
        std::vector<Int> bumped = x;
        bumped[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(x.size()) - 1))] += 1;
        ObstructionResult rb = decide_vanishing(c3, bumped);
        if (rb.vanishes) return false;
    }

    // the boundary-square generator is obstructed by the generator of H^1
    CochainComplex c2 = build_limit_complex(boundary_cube(2),
                                            constant_system(cube_poset(2), z()), 0);
    FacetClasses gen;
    gen.n = 2;
    for (const FacetKey& key : facet_keys(2)) gen.alpha[key] = {Int(0)};
    gen.alpha[{2, 0}] = {Int(1)};
    std::vector<Int> x = assemble_cocycle(c2, 2, gen);
    ObstructionResult r = decide_vanishing(c2, x);
    if (r.vanishes) return false;
    if (!(c2.cohomology_at(1) == FGAbelianGroup::Canonical{1, {}})) return false;
    return obstruction_class_coordinates(c2, x) == std::vector<Int>{1};
}

// ---- criterion 7 ------------------------------------------------------

bool hexagon_consistency() {
    struct Case {
        FGAbelianGroup g;
        bool exhaustive;
        int bound;
    };
    std::vector<Case> cases = {{FGAbelianGroup::cyclic(Int(2)), true, 1},
                               {FGAbelianGroup::cyclic(Int(3)), true, 2},
                               {z(), false, 3}};
    testsup::Rng rng(707);
    std::vector<FacetKey> keys = facet_keys(3);

    for (const Case& cs : cases) {
        CochainComplex c = build_limit_complex(boundary_cube(3),
                                               constant_system(cube_poset(3), cs.g), 1);
        TransportData t;
        t.m_grp = cs.g;
        for (const FacetKey& key : keys) t.transport.emplace(key, GroupHom::identity(cs.g));
        t.sign = default_facet_signs(3);

        auto check_one = [&](const std::vector<int>& vals) {
            FacetClasses f;
            f.n = 3;
            for (std::size_t i = 0; i < keys.size(); ++i) f.alpha[keys[i]] = {Int(vals[i])};
            bool total_zero = t.m_grp.is_zero_element(total_class(f, t));
            ObstructionResult r = decide_vanishing(c, assemble_cocycle(c, 3, f));
            return total_zero == r.vanishes;
        };

        if (cs.exhaustive) {
            int m = cs.bound + 1;
            std::vector<int> vals(6, 0);
            for (int code = 0; code < m * m * m * m * m * m; ++code) {
                int x = code;
                for (int i = 0; i < 6; ++i) {
                    vals[i] = x % m;
                    x /= m;
                }
                if (!check_one(vals)) return false;
            }
        } else {
            for (int trial = 0; trial < 500; ++trial) {
                std::vector<int> vals(6);
                for (int& v : vals) v = rng.uniform(-cs.bound, cs.bound);
                if (!check_one(vals)) return false;
            }
        }
    }
    return true;
}

// ---- criterion 8 ------------------------------------------------------

bool permutohedron_counts() {
    auto factorial = [](int n) {
        long long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    for (int n = 1; n <= 5; ++n) {
        std::uint32_t size = 1u << n;
        for (std::uint32_t j = 0; j < size; ++j)
            for (std::uint32_t j2 = 0; j2 < size; ++j2) {
                auto shape = mapping_space_shape(n, j, j2);
                if (j == j2) {
                    if (!shape || shape->rank() != 0) return false;
                } else if (j & ~j2) {
                    if (shape) return false;
                } else {
                    int r = popcount32(j2 & ~j) - 1;
                    if (!shape || shape->rank() != r) return false;
                    if (shape->vertex_count() != static_cast<std::size_t>(factorial(r + 1)))
                        return false;
                }
            }
    }
    Permutohedron hex(2);
    return hex.face_count(0) == 6 && hex.face_count(1) == 6;
}

}  // namespace

int main() {
    Gate gate;
    gate.run(1, "d.d = 0 on random systems", complexes_are_complexes);
    gate.run(2, "twisted arrow = interval poset", twisted_arrow_matches_definition);
    gate.run(3, "cube degree support [-n, m-n]", cube_degree_range);
    gate.run(4, "limit complex = equalizer oracle", limit_equals_equalizer);
    gate.run(5, "fixture cohomology and cell counts", fixture_cohomology);
    gate.run(6, "obstruction soundness", obstruction_soundness);
    gate.run(7, "hexagon total class = lifting", hexagon_consistency);
    gate.run(8, "permutohedron mapping spaces", permutohedron_counts);
    if (gate.failures) {
        std::cout << gate.failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
