#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace aqcube {

// Combinatorial face lattice of the n-permutohedron: faces are ordered
// set partitions of {1,...,n+1}, a face with b blocks has dimension
// (n+1) - b. Only the combinatorics is built, no geometry.
class Permutohedron {
public:
    explicit Permutohedron(int rank);

    int rank() const { return rank_; }

    using OrderedSetPartition = std::vector<std::vector<int>>;

    // Faces of the given dimension, deterministic order.
    const std::vector<OrderedSetPartition>& faces(int dim) const;
    std::size_t face_count(int dim) const;
    std::size_t vertex_count() const { return face_count(0); }

    // Vertices as permutations (singleton-block partitions read in order).
    std::vector<std::vector<int>> vertices() const;

    // a refines b: b is obtained by merging consecutive blocks of a.
    static bool refines(const OrderedSetPartition& a, const OrderedSetPartition& b);

    // Euler characteristic of the boundary (all proper faces).
    long long boundary_euler_characteristic() const;

private:
    int rank_;
    // faces_[d] = faces of dimension d, d in [0, rank]
    std::vector<std::vector<OrderedSetPartition>> faces_;
};

// Combinatorial shape of the mapping space between two cube vertices
// J -> J' in [1]^n: empty unless J <= J'; a rank-0 point when J = J';
// otherwise the permutohedron of rank gap-1.
std::optional<Permutohedron> mapping_space_shape(int n, std::uint32_t j, std::uint32_t j2);

}  // namespace aqcube
