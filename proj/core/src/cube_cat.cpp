#include "aqcube/cube_cat.hpp"

#include <algorithm>

namespace aqcube {

namespace {

void check_slot(int n, int i, const char* what) {
    if (i < 1 || i > n) throw InputError(std::string(what) + ": slot index out of range");
}

void check_eps(int eps) {
    if (eps != 0 && eps != 1) throw InputError("cube map: eps must be 0 or 1");
}

}  // namespace

CubeMap::CubeMap(int m, int n, std::vector<std::uint32_t> action, std::vector<std::string> word)
    : m_(m), n_(n), action_(std::move(action)), word_(std::move(word)) {
    for (std::uint32_t v = 0; v + 1 < action_.size(); ++v)
        for (int b = 0; b < m_; ++b) {
            std::uint32_t w = v | (1u << b);
            if (w != v && (action_[v] & ~action_[w]) != 0)
                throw StructuralError("cube map: vertex action not monotone");
        }
}

CubeMap CubeMap::identity(int n) {
    std::vector<std::uint32_t> a(1u << n);
    for (std::uint32_t v = 0; v < a.size(); ++v) a[v] = v;
    return CubeMap(n, n, std::move(a), {});
}

CubeMap CubeMap::face(int n, int i, int eps) {
    if (n < 1) throw InputError("face: dimension must be >= 1");
    check_slot(n, i, "face");
    check_eps(eps);
    int m = n - 1;
    std::vector<std::uint32_t> a(1u << m);
    std::uint32_t low_mask = (1u << (i - 1)) - 1;
    for (std::uint32_t v = 0; v < a.size(); ++v) {
        std::uint32_t lo = v & low_mask;
        std::uint32_t hi = (v & ~low_mask) << 1;
        a[v] = lo | hi | (static_cast<std::uint32_t>(eps) << (i - 1));
    }
    return CubeMap(m, n, std::move(a),
                   {"d_{" + std::to_string(i) + "," + std::to_string(eps) + "}"});
}

CubeMap CubeMap::degeneracy(int n, int i) {
    if (n < 1) throw InputError("degeneracy: dimension must be >= 1");
    check_slot(n, i, "degeneracy");
    std::vector<std::uint32_t> a(1u << n);
    std::uint32_t low_mask = (1u << (i - 1)) - 1;
    for (std::uint32_t v = 0; v < a.size(); ++v)
        a[v] = (v & low_mask) | ((v >> 1) & ~low_mask);
    return CubeMap(n, n - 1, std::move(a), {"s_" + std::to_string(i)});
}

CubeMap CubeMap::connection(int n, int i, int eps) {
    if (n < 2) throw InputError("connection: dimension must be >= 2");
    check_slot(n - 1, i, "connection");
    check_eps(eps);
    std::vector<std::uint32_t> a(1u << n);
    std::uint32_t low_mask = (1u << (i - 1)) - 1;
    for (std::uint32_t v = 0; v < a.size(); ++v) {
        int xi = (v >> (i - 1)) & 1;
        int xj = (v >> i) & 1;
        int merged = eps == 0 ? (xi | xj) : (xi & xj);
        std::uint32_t rest = (v >> (i + 1)) << i;
        a[v] = (v & low_mask) | (static_cast<std::uint32_t>(merged) << (i - 1)) | rest;
    }
    return CubeMap(n, n - 1, std::move(a),
                   {"g_{" + std::to_string(i) + "," + std::to_string(eps) + "}"});
}

CubeMap CubeMap::compose(const CubeMap& f) const {
    if (f.n_ != m_) throw InputError("CubeMap::compose: dimension mismatch");
    std::vector<std::uint32_t> a(1u << f.m_);
    for (std::uint32_t v = 0; v < a.size(); ++v) a[v] = action_[f.action_[v]];
    std::vector<std::string> w = word_;
    w.insert(w.end(), f.word_.begin(), f.word_.end());
    return CubeMap(f.m_, n_, std::move(a), std::move(w));
}

bool CubeMap::is_face_composite() const {
    std::vector<std::uint32_t> sorted = action_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

GradedPoset cube_poset(int n) {
    if (n < 0 || n > 20) throw InputError("cube_poset: dimension out of supported range");
    std::size_t size = 1u << n;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> names(size);
    for (std::uint32_t v = 0; v < size; ++v) {
        names[v] = vertex_bits(v, n);
        for (int b = 0; b < n; ++b)
            if (!(v & (1u << b))) covers.emplace_back(static_cast<int>(v), static_cast<int>(v | (1u << b)));
    }
    GradedPoset g = check_graded(FinitePoset::from_covers(size, covers, names));
    std::vector<unsigned> coords(size);
    for (std::uint32_t v = 0; v < size; ++v) coords[v] = v;
    g.set_coords(std::move(coords));
    return g;
}

std::string vertex_bits(std::uint32_t v, int n) {
    std::string s(n, '0');
    for (int b = 0; b < n; ++b)
        if (v & (1u << b)) s[b] = '1';
    return s;
}

std::uint32_t parse_vertex_bits(const std::string& s, int n) {
    if (static_cast<int>(s.size()) != n)
        throw InputError("vertex '" + s + "': expected " + std::to_string(n) + " bits");
    std::uint32_t v = 0;
    for (int b = 0; b < n; ++b) {
        if (s[b] == '1')
            v |= 1u << b;
        else if (s[b] != '0')
            throw InputError("vertex '" + s + "': bits must be 0 or 1");
    }
    return v;
}

}  // namespace aqcube
