#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aqcube/fg_abelian.hpp"
#include "aqcube/poset.hpp"

namespace aqcube {

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
};

// Coefficient values on the intervals of a graded poset, with a group
// homomorphism for each cover extension of intervals. The domain may be
// partial: only the intervals that carry a group participate.
class CoefficientSystem {
public:
    explicit CoefficientSystem(GradedPoset base) : base_(std::move(base)) {}

    const GradedPoset& base() const { return base_; }

    void set_group(const Interval& i, FGAbelianGroup g);
    // `to` must be a cover extension of `from` (same low and covering high,
    // or same high and covered low).
    void set_cover_map(const Interval& from, const Interval& to, GroupHom h);

    bool has_group(const Interval& i) const;
    const FGAbelianGroup& group(const Interval& i) const;
    bool has_cover_map(const Interval& from, const Interval& to) const;
    const GroupHom& cover_map(const Interval& from, const Interval& to) const;

    // Intervals carrying a group, lexicographic on (low, high).
    std::vector<Interval> domain() const;

    // True when every interval of the base has a group and every cover
    // extension between them has a map.
    bool is_total() const;

    // Checks map shapes, well-definedness on quotients, and
    // path-independence of composites over every two-step extension
    // (target-target, source-source and mixed squares).
    ValidationReport validate() const;

private:
    using Key = std::pair<int, int>;
    static Key key(const Interval& i) { return {i.low, i.high}; }
    std::string interval_name(const Interval& i) const;

    GradedPoset base_;
    std::map<Key, FGAbelianGroup> groups_;
    std::map<std::pair<Key, Key>, GroupHom> maps_;
};

// All groups G, all cover maps the identity.
CoefficientSystem constant_system(const GradedPoset& p, const FGAbelianGroup& g);

// Pull back a system along an inclusion of graded posets given by the
// image index of each element of q; the inclusion must be full and
// preserve interval lengths.
CoefficientSystem restrict_system(const CoefficientSystem& s, const GradedPoset& q,
                                  const std::vector<int>& inclusion);

}  // namespace aqcube
