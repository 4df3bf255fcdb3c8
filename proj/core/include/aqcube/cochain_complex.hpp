#pragma once

#include <string>
#include <vector>

#include "aqcube/fg_abelian.hpp"

namespace aqcube {

// One direct summand of a cochain term, tagged with the interval it
// belongs to.
struct Summand {
    std::string label;
    FGAbelianGroup group;
};

// Graded complex of finitely generated abelian groups with integer
// differentials. The term at position k lives in degree k + offset.
class CochainComplex {
public:
    CochainComplex(int offset, std::vector<std::vector<Summand>> terms,
                   std::vector<GroupHom> differentials);

    int offset() const { return offset_; }
    std::size_t length() const { return terms_.size(); }
    int min_degree() const { return offset_; }
    int max_degree() const { return offset_ + static_cast<int>(terms_.size()) - 1; }

    const std::vector<Summand>& term(std::size_t k) const { return terms_[k]; }
    const FGAbelianGroup& term_group(std::size_t k) const { return term_groups_[k]; }
    // d[k] : term k -> term k+1
    const GroupHom& differential(std::size_t k) const { return differentials_[k]; }

    bool in_support(int degree) const;
    // Degrees whose term group is nonzero.
    std::vector<int> support() const;

    // Position of a summand inside the concatenated generator vector of
    // term k, by label; throws if absent.
    std::size_t summand_offset(std::size_t k, const std::string& label) const;
    std::size_t summand_index(std::size_t k, const std::string& label) const;

    // Exact check that consecutive differentials compose to zero (as maps
    // of quotient groups).
    void check_complex() const;

    // ker d^degree / im d^{degree-1}, canonical form via Smith reduction.
    FGAbelianGroup::Canonical cohomology_at(int degree) const;

private:
    int offset_;
    std::vector<std::vector<Summand>> terms_;
    std::vector<FGAbelianGroup> term_groups_;
    std::vector<GroupHom> differentials_;
};

FGAbelianGroup direct_sum_group(const std::vector<Summand>& summands);

}  // namespace aqcube
