#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqcube/errors.hpp"

namespace aqcube {

// Finite poset over indexed elements; stores the full order relation and
// the covering relation (transitive reduction).
class FinitePoset {
public:
    static FinitePoset from_covers(std::size_t n, const std::vector<std::pair<int, int>>& covers,
                                   std::vector<std::string> names = {});
    static FinitePoset from_leq(std::size_t n, const std::vector<std::vector<bool>>& leq,
                                std::vector<std::string> names = {});

    std::size_t size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a][b]; }
    const std::vector<int>& covers_above(int a) const { return up_[a]; }
    const std::vector<int>& covers_below(int a) const { return down_[a]; }
    const std::string& name(int a) const { return names_[a]; }
    std::optional<int> index_of(const std::string& name) const;

    std::size_t comparable_pair_count() const;

private:
    FinitePoset() = default;
    void finish(std::vector<std::string> names);

    std::size_t n_ = 0;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<int>> up_, down_;  // covering relation
    std::vector<std::string> names_;
};

// A pair low <= high together with its chain length.
struct Interval {
    int low = 0;
    int high = 0;
    int length = 0;
    bool operator==(const Interval&) const = default;
    auto operator<=>(const Interval& o) const { return std::pair(low, high) <=> std::pair(o.low, o.high); }
};

// Poset in which all maximal chains between comparable elements have the
// same edge count; built by check_graded.
class GradedPoset {
public:
    const FinitePoset& poset() const { return *poset_; }
    std::shared_ptr<const FinitePoset> poset_ptr() const { return poset_; }

    // -1 when the pair is incomparable.
    int interval_length(int a, int b) const { return length_[a][b]; }
    int max_interval_length() const { return max_length_; }

    Interval interval(int a, int b) const;

    // All intervals of the given length, lexicographic on (low, high).
    std::vector<Interval> intervals_of_length(int k) const;
    std::vector<Interval> all_intervals() const;

    // Cover extensions of [a,b]: first the intervals [a,b'] with b' covering
    // b, then the intervals [a',b] with a' covered by a.
    std::pair<std::vector<Interval>, std::vector<Interval>> cover_extensions(
        const Interval& i) const;

    // Optional coordinate embedding into a product of [1]-chains; set for
    // cube posets and used for the canonical differential signs.
    bool has_coords() const { return !coords_.empty(); }
    const std::vector<unsigned>& coords() const { return coords_; }
    void set_coords(std::vector<unsigned> coords);

    friend GradedPoset check_graded(const FinitePoset& p);
    friend GradedPoset check_graded(std::shared_ptr<const FinitePoset> p);

private:
    std::shared_ptr<const FinitePoset> poset_;
    std::vector<std::vector<int>> length_;
    int max_length_ = 0;
    std::vector<unsigned> coords_;
};

// Verifies gradedness and computes the interval length table; throws
// NotGradedError with two witness chains otherwise.
GradedPoset check_graded(const FinitePoset& p);
GradedPoset check_graded(std::shared_ptr<const FinitePoset> p);

// "[low,high]" using element names; the summand labels of the interval
// cochain complexes.
std::string interval_label(const FinitePoset& p, const Interval& i);

// Poset whose elements are the intervals of p, ordered by inclusion:
// [a,b] <= [c,d] iff c <= a and b <= d.
FinitePoset twisted_arrow_poset(const FinitePoset& p);

}  // namespace aqcube
