#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqcube/int_matrix.hpp"

namespace aqcube {

// Z^g modulo the column span of an integer relation matrix with g rows.
class FGAbelianGroup {
public:
    // rank + divisibility-ordered torsion coefficients, each >= 2
    struct Canonical {
        std::size_t rank = 0;
        std::vector<Int> torsion;
        bool operator==(const Canonical&) const = default;
        bool is_zero() const { return rank == 0 && torsion.empty(); }
        std::string to_string() const;
    };

    FGAbelianGroup() : gens_(0), relations_(0, 0) {}
    FGAbelianGroup(std::size_t generators, IntMatrix relations);

    static FGAbelianGroup zero();
    static FGAbelianGroup free_group(std::size_t rank);
    static FGAbelianGroup cyclic(const Int& order);
    static FGAbelianGroup from_canonical(std::size_t rank, const std::vector<Int>& torsion);
    static FGAbelianGroup direct_sum(const std::vector<FGAbelianGroup>& parts);

    std::size_t generators() const { return gens_; }
    const IntMatrix& relations() const { return relations_; }

    const Canonical& canonical() const;
    bool is_zero_group() const { return canonical().is_zero(); }

    // Equality of elements given as generator coordinate vectors.
    bool congruent(const std::vector<Int>& a, const std::vector<Int>& b) const;
    bool is_zero_element(const std::vector<Int>& a) const;

private:
    std::size_t gens_;
    IntMatrix relations_;
    mutable std::optional<Canonical> canonical_;
};

// Homomorphism between finitely generated abelian groups, given by its
// action on generators.
class GroupHom {
public:
    GroupHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix);

    static GroupHom identity(const FGAbelianGroup& g);
    static GroupHom zero(const FGAbelianGroup& source, const FGAbelianGroup& target);

    const FGAbelianGroup& source() const { return source_; }
    const FGAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    // The matrix must carry source relations into the column span of the
    // target relations, otherwise the map is not defined on the quotient.
    bool is_well_defined() const;

    std::vector<Int> apply(const std::vector<Int>& x) const;

    // g . f  (apply f first)
    GroupHom compose(const GroupHom& f) const;

    // Equality as maps of quotient groups (entrywise congruence on
    // generator images).
    bool same_map(const GroupHom& o) const;

private:
    FGAbelianGroup source_, target_;
    IntMatrix matrix_;
};

// Preimage certificate: some x with d(x) = target in d's target group,
// or nullopt when target is not in the image.
std::optional<std::vector<Int>> write_in_image(const GroupHom& d, const std::vector<Int>& target);

}  // namespace aqcube
