#pragma once

#include <optional>
#include <string>

#include "aqcube/cubical_complex.hpp"
#include "aqcube/obstruction.hpp"

namespace aqcube {

// Parsed CLI input file. Exactly one of the three shapes is populated:
// a graded poset with a coefficient system, a cubical complex with a
// coefficient system, or an obstruction instance on boundary_cube(n).
struct InputDocument {
    enum class Kind { PosetSystem, ComplexSystem, Obstruction };
    Kind kind = Kind::PosetSystem;

    std::optional<GradedPoset> poset;
    std::optional<CubicalComplex> complex;
    std::optional<CoefficientSystem> system;

    int offset = 0;              // poset documents
    int coefficient_degree = 0;  // complex documents
    bool linear = false;         // allows the n = 2 obstruction case

    int n = 0;  // obstruction cube dimension
    std::optional<FacetClasses> facets;
    std::optional<TransportData> transports;
};

// Throws ParseError for syntax/shape problems and InputError (including
// NotGradedError) for semantically bad data.
InputDocument load_document(const std::string& path);
InputDocument parse_document(const std::string& text);

}  // namespace aqcube
