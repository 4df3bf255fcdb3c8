#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aqcube/poset.hpp"

namespace aqcube {

// Morphism in the cube category, determined by its monotone action on
// vertices {0,1}^m -> {0,1}^n. Vertices are bitmasks with coordinate i
// (1-based) stored in bit i-1.
class CubeMap {
public:
    static CubeMap identity(int n);
    // d_{i,eps}: [1]^{n-1} -> [1]^n, insert eps at slot i
    static CubeMap face(int n, int i, int eps);
    // sigma_i: [1]^n -> [1]^{n-1}, drop coordinate i
    static CubeMap degeneracy(int n, int i);
    // gamma_{i,0}: max of slots i, i+1; gamma_{i,1}: min
    static CubeMap connection(int n, int i, int eps);

    int source_dim() const { return m_; }
    int target_dim() const { return n_; }
    std::uint32_t apply(std::uint32_t vertex) const { return action_[vertex]; }

    const std::vector<std::string>& word() const { return word_; }

    // g.compose(f) = g after f
    CubeMap compose(const CubeMap& f) const;

    // Cube maps are functors between posets, so equality on vertices is
    // equality of maps.
    bool operator==(const CubeMap& o) const {
        return m_ == o.m_ && n_ == o.n_ && action_ == o.action_;
    }

    // True iff the vertex action is injective; for generator-built maps
    // this happens exactly when the word uses faces only.
    bool is_face_composite() const;

private:
    CubeMap(int m, int n, std::vector<std::uint32_t> action, std::vector<std::string> word);
    int m_, n_;
    std::vector<std::uint32_t> action_;
    std::vector<std::string> word_;
};

// {0,1}^n with the coordinatewise order; carries the coordinate embedding
// used for differential signs.
GradedPoset cube_poset(int n);

inline int popcount32(std::uint32_t x) { return __builtin_popcount(x); }

std::string vertex_bits(std::uint32_t v, int n);
std::uint32_t parse_vertex_bits(const std::string& s, int n);

}  // namespace aqcube
