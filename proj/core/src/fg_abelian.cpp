#include "aqcube/fg_abelian.hpp"

#include <sstream>

#include "aqcube/errors.hpp"
#include "aqcube/smith.hpp"

namespace aqcube {

std::string FGAbelianGroup::Canonical::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

FGAbelianGroup::FGAbelianGroup(std::size_t generators, IntMatrix relations)
    : gens_(generators), relations_(std::move(relations)) {
    if (relations_.rows() != gens_)
        throw InputError("FGAbelianGroup: relation matrix must have one row per generator");
}

FGAbelianGroup FGAbelianGroup::zero() { return FGAbelianGroup(0, IntMatrix(0, 0)); }

FGAbelianGroup FGAbelianGroup::free_group(std::size_t rank) {
    return FGAbelianGroup(rank, IntMatrix(rank, 0));
}

FGAbelianGroup FGAbelianGroup::cyclic(const Int& order) {
    IntMatrix rel(1, 1);
    rel.at(0, 0) = order;
    return FGAbelianGroup(1, rel);
}

FGAbelianGroup FGAbelianGroup::from_canonical(std::size_t rank, const std::vector<Int>& torsion) {
    std::size_t g = rank + torsion.size();
    IntMatrix rel(g, torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) rel.at(rank + i, i) = torsion[i];
    return FGAbelianGroup(g, rel);
}

FGAbelianGroup FGAbelianGroup::direct_sum(const std::vector<FGAbelianGroup>& parts) {
    std::size_t g = 0, r = 0;
    for (const auto& p : parts) {
        g += p.generators();
        r += p.relations().cols();
    }
    IntMatrix rel(g, r);
    std::size_t go = 0, ro = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.generators(); ++i)
            for (std::size_t j = 0; j < p.relations().cols(); ++j)
                rel.at(go + i, ro + j) = p.relations().at(i, j);
        go += p.generators();
        ro += p.relations().cols();
    }
    return FGAbelianGroup(g, rel);
}

const FGAbelianGroup::Canonical& FGAbelianGroup::canonical() const {
    if (!canonical_) {
        SmithResult s = snf(relations_);
        Canonical c;
        std::size_t nz = s.rank();
        c.rank = gens_ - nz;
        for (const auto& d : s.diagonal())
            if (d > 1) c.torsion.push_back(d);
        canonical_ = std::move(c);
    }
    return *canonical_;
}

bool FGAbelianGroup::congruent(const std::vector<Int>& a, const std::vector<Int>& b) const {
    if (a.size() != gens_ || b.size() != gens_)
        throw InputError("FGAbelianGroup::congruent: element size mismatch");
    std::vector<Int> diff(gens_);
    for (std::size_t i = 0; i < gens_; ++i) diff[i] = a[i] - b[i];
    return solve(relations_, diff).has_value();
}

bool FGAbelianGroup::is_zero_element(const std::vector<Int>& a) const {
    return congruent(a, std::vector<Int>(gens_));
}

GroupHom::GroupHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
        throw InputError("GroupHom: matrix shape must be target generators x source generators");
}

GroupHom GroupHom::identity(const FGAbelianGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.generators()));
}

GroupHom GroupHom::zero(const FGAbelianGroup& source, const FGAbelianGroup& target) {
    return GroupHom(source, target, IntMatrix(target.generators(), source.generators()));
}

bool GroupHom::is_well_defined() const {
    IntMatrix image_of_rel = matrix_ * source_.relations();
    return solve_many(target_.relations(), image_of_rel).has_value();
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& x) const { return matrix_.apply(x); }

GroupHom GroupHom::compose(const GroupHom& f) const {
    if (f.target_.generators() != source_.generators())
        throw InputError("GroupHom::compose: dimension mismatch");
    return GroupHom(f.source_, target_, matrix_ * f.matrix_);
}

bool GroupHom::same_map(const GroupHom& o) const {
    if (matrix_.rows() != o.matrix_.rows() || matrix_.cols() != o.matrix_.cols()) return false;
    IntMatrix diff = matrix_ + (-o.matrix_);
    return solve_many(target_.relations(), diff).has_value();
}

std::optional<std::vector<Int>> write_in_image(const GroupHom& d, const std::vector<Int>& target) {
    if (target.size() != d.target().generators())
        throw InputError("write_in_image: target vector size mismatch");
    // d(x) = target in the quotient  <=>  M x + R y = target over Z
    IntMatrix block = d.matrix().hcat(d.target().relations());
    auto sol = solve(block, target);
    if (!sol) return std::nullopt;
    sol->resize(d.source().generators());
    return sol;
}

}  // namespace aqcube
