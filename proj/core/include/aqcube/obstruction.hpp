#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "aqcube/cubical_complex.hpp"

namespace aqcube {

// Facets of [1]^n are keyed by (axis 1..n, eps 0/1): eps = 0 pins the
// axis at 0, eps = 1 at 1. The facet's long interval runs from its low
// to its high vertex.
using FacetKey = std::pair<int, int>;

Cell facet_cell(int n, const FacetKey& f);
Interval facet_long_interval(int n, const FacetKey& f);
std::vector<FacetKey> facet_keys(int n);

// One coefficient element per facet, on the facet's long interval.
struct FacetClasses {
    int n = 0;
    std::map<FacetKey, std::vector<Int>> alpha;
};

// Transport of each facet class into one fixed group, with a sign.
struct TransportData {
    FGAbelianGroup m_grp;
    std::map<FacetKey, GroupHom> transport;
    std::map<FacetKey, int> sign;
};

struct ObstructionResult {
    std::vector<Int> cocycle;
    bool vanishes = false;
    std::optional<std::vector<Int>> certificate;
};

// The degree-1 cochain of C*(boundary_cube(n)) (coefficient degree n-2)
// whose component at each facet's long interval is alpha and which is
// zero on every other length-(n-1) interval.
std::vector<Int> assemble_cocycle(const CochainComplex& c, int n, const FacetClasses& f);

// Exact vanishing decision in H^1: closedness is checked, then the
// cocycle is tested for membership in the image of d^0 with certificate.
ObstructionResult decide_vanishing(const CochainComplex& c, const std::vector<Int>& cocycle);

// Coordinates of the cocycle's class in the canonical decomposition of
// H^1 (torsion factors first, then free factors), sign-normalized.
std::vector<Int> obstruction_class_coordinates(const CochainComplex& c,
                                               const std::vector<Int>& cocycle);

// Sum of the signed transported facet classes in m_grp.
std::vector<Int> total_class(const FacetClasses& f, const TransportData& t);

// Declared orientation table: facet (j, 0) gets (-1)^(j-1), its opposite
// facet the opposite sign. This row is the primitive left kernel of the
// top cube differential, which is what makes the signed sum vanish on
// coboundaries.
std::map<FacetKey, int> default_facet_signs(int n);

// Worked boundary-of-a-3-cube instance shaped like a secondary bracket:
// three nontrivial facets carrying the composable classes, the three
// nullhomotopy facets zeroed, constant Z coefficients.
struct TodaFixture {
    CubicalComplex complex;
    CoefficientSystem system;
    FacetClasses facets;
};
TodaFixture toda_fixture();

}  // namespace aqcube
