#include "aqcube/cochain_complex.hpp"

#include "aqcube/errors.hpp"
#include "aqcube/smith.hpp"

namespace aqcube {

FGAbelianGroup direct_sum_group(const std::vector<Summand>& summands) {
    std::vector<FGAbelianGroup> parts;
    parts.reserve(summands.size());
    for (const auto& s : summands) parts.push_back(s.group);
    return FGAbelianGroup::direct_sum(parts);
}

CochainComplex::CochainComplex(int offset, std::vector<std::vector<Summand>> terms,
                               std::vector<GroupHom> differentials)
    : offset_(offset), terms_(std::move(terms)), differentials_(std::move(differentials)) {
    if (!terms_.empty() && differentials_.size() + 1 != terms_.size())
        throw InputError("CochainComplex: need one differential per consecutive term pair");
    term_groups_.reserve(terms_.size());
    for (const auto& t : terms_) term_groups_.push_back(direct_sum_group(t));
    for (std::size_t k = 0; k < differentials_.size(); ++k) {
        if (differentials_[k].matrix().cols() != term_groups_[k].generators() ||
            differentials_[k].matrix().rows() != term_groups_[k + 1].generators())
            throw InputError("CochainComplex: differential shape mismatch at position " +
                             std::to_string(k));
    }
}

bool CochainComplex::in_support(int degree) const {
    int k = degree - offset_;
    if (k < 0 || k >= static_cast<int>(terms_.size())) return false;
    return !term_groups_[k].is_zero_group();
}

std::vector<int> CochainComplex::support() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (!term_groups_[k].is_zero_group()) out.push_back(static_cast<int>(k) + offset_);
    return out;
}

std::size_t CochainComplex::summand_index(std::size_t k, const std::string& label) const {
    const auto& t = terms_[k];
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i].label == label) return i;
    throw InputError("CochainComplex: no summand labelled '" + label + "' in term " +
                     std::to_string(k));
}

std::size_t CochainComplex::summand_offset(std::size_t k, const std::string& label) const {
    const auto& t = terms_[k];
    std::size_t off = 0;
    for (const auto& s : t) {
        if (s.label == label) return off;
        off += s.group.generators();
    }
    throw InputError("CochainComplex: no summand labelled '" + label + "' in term " +
                     std::to_string(k));
}

void CochainComplex::check_complex() const {
    for (std::size_t k = 0; k + 1 < differentials_.size(); ++k) {
        IntMatrix composite = differentials_[k + 1].matrix() * differentials_[k].matrix();
        if (!solve_many(term_groups_[k + 2].relations(), composite))
            throw StructuralError("CochainComplex: d∘d != 0 between positions " +
                                  std::to_string(k) + " and " + std::to_string(k + 2));
    }
}

FGAbelianGroup::Canonical CochainComplex::cohomology_at(int degree) const {
    int k = degree - offset_;
    if (k < 0 || k >= static_cast<int>(terms_.size())) return {};

    const FGAbelianGroup& a = term_groups_[k];
    std::size_t ga = a.generators();
    if (ga == 0) return {};

    bool has_next = k + 1 < static_cast<int>(terms_.size());
    bool has_prev = k > 0;

    if (has_next && has_prev) {
        IntMatrix composite = differentials_[k].matrix() * differentials_[k - 1].matrix();
        if (!solve_many(term_groups_[k + 1].relations(), composite))
            throw StructuralError("cohomology_at: complex malformed, d∘d != 0 at degree " +
                                  std::to_string(degree));
    }

    // Cocycle lattice: x with d(x) = 0 in the target group, i.e.
    // M x in the column span of the target relations.
    IntMatrix cocycles(0, 0);
    if (has_next) {
        IntMatrix block =
            differentials_[k].matrix().hcat(term_groups_[k + 1].relations());
        IntMatrix ker = kernel_basis(block);
        IntMatrix xpart(ga, ker.cols());
        for (std::size_t r = 0; r < ga; ++r)
            for (std::size_t c = 0; c < ker.cols(); ++c) xpart.at(r, c) = ker.at(r, c);
        cocycles = column_lattice_basis(xpart);
    } else {
        cocycles = IntMatrix::identity(ga);
    }

    // Coboundaries plus the term's own relations, written in the cocycle
    // basis; the quotient's Smith form is the canonical answer.
    IntMatrix boundaries = has_prev
                               ? differentials_[k - 1].matrix().hcat(a.relations())
                               : a.relations();
    auto q = solve_many(cocycles, boundaries);
    if (!q)
        throw StructuralError(
            "cohomology_at: coboundaries do not lie in the cocycle lattice (degree " +
            std::to_string(degree) + ")");
    return FGAbelianGroup(cocycles.cols(), *q).canonical();
}

}  // namespace aqcube
