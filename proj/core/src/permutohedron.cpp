#include "aqcube/permutohedron.hpp"

#include <algorithm>

#include "aqcube/errors.hpp"

namespace aqcube {

Permutohedron::Permutohedron(int rank) : rank_(rank) {
    if (rank < 0 || rank > 7) throw InputError("Permutohedron: rank out of supported range");
    int n = rank + 1;  // ground set {1,...,n}
    faces_.assign(rank + 1, {});
    // enumerate ordered set partitions by assigning each element a block
    // index; a partition into b blocks is a face of dimension n - b
    for (int b = 1; b <= n; ++b) {
        std::vector<int> assign(n, 0);
        while (true) {
            bool onto = true;
            {
                std::vector<bool> hit(b, false);
                for (int a : assign) hit[a] = true;
                for (int k = 0; k < b; ++k) onto = onto && hit[k];
            }
            if (onto) {
                OrderedSetPartition part(b);
                for (int e = 0; e < n; ++e) part[assign[e]].push_back(e + 1);
                faces_[n - b].push_back(std::move(part));
            }
            int pos = n - 1;
            while (pos >= 0 && assign[pos] == b - 1) assign[pos--] = 0;
            if (pos < 0) break;
            ++assign[pos];
        }
    }
}

const std::vector<Permutohedron::OrderedSetPartition>& Permutohedron::faces(int dim) const {
    if (dim < 0 || dim > rank_) throw InputError("Permutohedron::faces: dimension out of range");
    return faces_[dim];
}

std::size_t Permutohedron::face_count(int dim) const { return faces(dim).size(); }

std::vector<std::vector<int>> Permutohedron::vertices() const {
    std::vector<std::vector<int>> out;
    for (const auto& part : faces_[0]) {
        std::vector<int> perm;
        for (const auto& block : part) perm.push_back(block.front());
        out.push_back(std::move(perm));
    }
    return out;
}

bool Permutohedron::refines(const OrderedSetPartition& a, const OrderedSetPartition& b) {
    std::size_t i = 0;
    for (const auto& block : b) {
        std::vector<int> merged;
        while (i < a.size() && merged.size() < block.size()) {
            merged.insert(merged.end(), a[i].begin(), a[i].end());
            ++i;
        }
        if (merged.size() != block.size()) return false;
        std::sort(merged.begin(), merged.end());
        std::vector<int> want = block;
        std::sort(want.begin(), want.end());
        if (merged != want) return false;
    }
    return i == a.size();
}

long long Permutohedron::boundary_euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d < rank_; ++d)
        chi += (d % 2 == 0 ? 1LL : -1LL) * static_cast<long long>(faces_[d].size());
    return chi;
}

std::optional<Permutohedron> mapping_space_shape(int n, std::uint32_t j, std::uint32_t j2) {
    std::uint32_t mask = (n >= 32) ? ~0u : ((1u << n) - 1);
    if ((j & ~mask) || (j2 & ~mask)) throw InputError("mapping_space_shape: vertex out of cube");
    if (j == j2) return Permutohedron(0);
    if ((j & ~j2) != 0) return std::nullopt;  // j not below j2
    // |J| counts zeros, so the rank gap is the number of flipped coordinates
    int gap = __builtin_popcount(j2 & ~j);
    return Permutohedron(gap - 1);
}

}  // namespace aqcube
