#pragma once

#include <map>
#include <utility>

#include "aqcube/cochain_complex.hpp"
#include "aqcube/local_system.hpp"

namespace aqcube {

// Sign of each cover extension used in the interval coboundary. Target
// extensions start from +1, source extensions from -1; on posets with a
// coordinate embedding both are corrected by the parity of the support
// axes below the extension axis, which is what makes the squares of the
// coboundary cancel. Posets without coordinates get a consistent
// assignment from a GF(2) solve over the extension graph, or
// NotSignableError when none exists.
using ExtensionSigns = std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int>;

ExtensionSigns extension_signs(const GradedPoset& p, const CoefficientSystem& s);

// Sign of a single cube-interval cover extension: the extended interval
// is [low, high] (vertex bitmasks), `flipped` is the extension axis bit.
int cube_extension_sign(unsigned low, unsigned high, unsigned flipped, bool source_extension);

// Cochain complex of a coefficient system on a graded poset: term at
// interval length k (degree k + offset) is the direct sum over intervals
// of length k, with the signed cover-extension coboundary. d.d = 0 is
// asserted before returning.
CochainComplex build_dphi(const GradedPoset& p, const CoefficientSystem& s, int offset);

// The cube instance: build_dphi on [1]^m with coefficient degree n,
// pinned to offset -n so the complex is supported in degrees [-n, m-n].
CochainComplex build_cube_cphi(int m, const CoefficientSystem& s, int n);

}  // namespace aqcube
