#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "aqcube/cochain_complex.hpp"
#include "aqcube/cube_cat.hpp"
#include "aqcube/local_system.hpp"

namespace aqcube {

// A face of the ambient cube [1]^N: free axes in `axes`, the remaining
// coordinates pinned by `base` (base bits on free axes are zero).
struct Cell {
    std::uint32_t base = 0;
    std::uint32_t axes = 0;

    int dim() const { return popcount32(axes); }
    std::uint32_t low_vertex() const { return base; }
    std::uint32_t high_vertex() const { return base | axes; }
    bool contains_vertex(std::uint32_t v) const { return (v & ~axes) == base; }
    bool is_face_of(const Cell& o) const {
        return (axes & ~o.axes) == 0 && (base & ~o.axes) == o.base;
    }

    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell& o) const {
        return std::tuple(dim(), base, axes) <=> std::tuple(o.dim(), o.base, o.axes);
    }

    std::string to_string(int ambient_dim) const;
};

// Finite set of faces of [1]^N; face-closure is checked separately by
// validate_complex, not forced by the constructor.
class CubicalComplex {
public:
    CubicalComplex(int ambient_dim, std::vector<Cell> cells);

    int ambient_dim() const { return n_; }
    // sorted by (dim, base, axes), deduplicated
    const std::vector<Cell>& cells() const { return cells_; }
    bool has_cell(const Cell& c) const;
    int dim() const;
    std::size_t cell_count(int d) const;
    std::vector<Cell> maximal_cells() const;

    // codim-1 faces inside the ambient cube (not necessarily present)
    static std::vector<Cell> faces_of(const Cell& c);

private:
    int n_;
    std::vector<Cell> cells_;
};

// Face-closure check; violations list each missing face. Warnings flag
// cell intervals shared by more than one maximal cell.
ValidationReport validate_complex(const CubicalComplex& k);

CubicalComplex full_cube(int n);
// All proper faces of [1]^n (3^n - 1 cells).
CubicalComplex boundary_cube(int n);
// Smallest face-closed complex containing the generators.
CubicalComplex face_closure(int ambient_dim, std::vector<Cell> generators);

// Cells ordered by face containment.
FinitePoset nd_cube_poset(const CubicalComplex& k);

// A pair of vertices lying in a common cell; because the complex is
// face-closed this happens exactly when their spanning cell is present.
bool is_cell_interval(const CubicalComplex& k, std::uint32_t low, std::uint32_t high);
Cell spanning_cell(std::uint32_t low, std::uint32_t high);

// Cell intervals as intervals of the ambient cube poset (element index =
// vertex bitmask), lexicographic on (low, high).
std::vector<Interval> cell_intervals_of_length(const CubicalComplex& k, int len);

// Cochain complex of the complex: one summand per cell interval,
// differentials over cover extensions whose extended interval is still a
// cell interval, ambient cube signs, offset -n.
CochainComplex build_limit_complex(const CubicalComplex& k, const CoefficientSystem& s, int n);

// Test oracle computing the same thing literally as a limit: product of
// the per-cell complexes, then the kernel of all face-restriction
// comparison maps, with the induced differential.
CochainComplex equalizer_oracle(const CubicalComplex& k, const CoefficientSystem& s, int n);

}  // namespace aqcube
