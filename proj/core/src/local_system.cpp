#include "aqcube/local_system.hpp"

#include <algorithm>

#include "aqcube/errors.hpp"

namespace aqcube {

std::string CoefficientSystem::interval_name(const Interval& i) const {
    const FinitePoset& p = base_.poset();
    return "[" + p.name(i.low) + "," + p.name(i.high) + "]";
}

void CoefficientSystem::set_group(const Interval& i, FGAbelianGroup g) {
    base_.interval(i.low, i.high);  // validates comparability
    groups_.insert_or_assign(key(i), std::move(g));
}

void CoefficientSystem::set_cover_map(const Interval& from, const Interval& to, GroupHom h) {
    bool target_ext = from.low == to.low && base_.interval_length(from.high, to.high) == 1;
    bool source_ext = from.high == to.high && base_.interval_length(to.low, from.low) == 1;
    if (!target_ext && !source_ext)
        throw InputError("set_cover_map: " + interval_name(to) +
                         " is not a cover extension of " + interval_name(from));
    maps_.insert_or_assign({key(from), key(to)}, std::move(h));
}

bool CoefficientSystem::has_group(const Interval& i) const { return groups_.count(key(i)) > 0; }

const FGAbelianGroup& CoefficientSystem::group(const Interval& i) const {
    auto it = groups_.find(key(i));
    if (it == groups_.end())
        throw InputError("coefficient system has no group on interval " + interval_name(i));
    return it->second;
}

bool CoefficientSystem::has_cover_map(const Interval& from, const Interval& to) const {
    return maps_.count({key(from), key(to)}) > 0;
}

const GroupHom& CoefficientSystem::cover_map(const Interval& from, const Interval& to) const {
    auto it = maps_.find({key(from), key(to)});
    if (it == maps_.end())
        throw InputError("coefficient system has no map " + interval_name(from) + " -> " +
                         interval_name(to));
    return it->second;
}

std::vector<Interval> CoefficientSystem::domain() const {
    std::vector<Interval> out;
    for (const auto& [k, g] : groups_) out.push_back(base_.interval(k.first, k.second));
    return out;
}

bool CoefficientSystem::is_total() const {
    for (const Interval& i : base_.all_intervals()) {
        if (!has_group(i)) return false;
        auto [targets, sources] = base_.cover_extensions(i);
        for (const Interval& j : targets)
            if (!has_cover_map(i, j)) return false;
        for (const Interval& j : sources)
            if (!has_cover_map(i, j)) return false;
    }
    return true;
}

ValidationReport CoefficientSystem::validate() const {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    for (const auto& [kk, h] : maps_) {
        Interval from = base_.interval(kk.first.first, kk.first.second);
        Interval to = base_.interval(kk.second.first, kk.second.second);
        std::string edge = interval_name(from) + " -> " + interval_name(to);
        if (!has_group(from) || !has_group(to)) {
            fail("map " + edge + ": an endpoint interval has no group");
            continue;
        }
        if (h.source().generators() != group(from).generators() ||
            h.source().relations() != group(from).relations())
            fail("map " + edge + ": source group disagrees with the system's group on " +
                 interval_name(from));
        if (h.target().generators() != group(to).generators() ||
            h.target().relations() != group(to).relations())
            fail("map " + edge + ": target group disagrees with the system's group on " +
                 interval_name(to));
        if (!h.is_well_defined())
            fail("map " + edge + ": matrix does not respect the source relations\n" +
                 h.matrix().to_string());
    }
    if (!rep.ok) return rep;

    // Path independence: composites over every two-step extension agree.
    for (const auto& [k0, g0] : groups_) {
        Interval i = base_.interval(k0.first, k0.second);
        auto [t1, s1] = base_.cover_extensions(i);
        std::vector<Interval> step1 = t1;
        step1.insert(step1.end(), s1.begin(), s1.end());
        // collect all two-step composites grouped by final interval
        std::map<Key, std::vector<std::pair<Interval, GroupHom>>> paths;
        for (const Interval& j : step1) {
            if (!has_cover_map(i, j)) continue;
            auto [t2, s2] = base_.cover_extensions(j);
            std::vector<Interval> step2 = t2;
            step2.insert(step2.end(), s2.begin(), s2.end());
            for (const Interval& l : step2) {
                if (!has_cover_map(j, l)) continue;
                paths[key(l)].emplace_back(j, cover_map(j, l).compose(cover_map(i, j)));
            }
        }
        for (const auto& [kl, list] : paths) {
            Interval l = base_.interval(kl.first, kl.second);
            for (std::size_t a = 1; a < list.size(); ++a)
                if (!list[a].second.same_map(list[0].second))
                    fail("composite " + interval_name(i) + " -> " + interval_name(list[0].first) +
                         " -> " + interval_name(l) + " disagrees with " + interval_name(i) +
                         " -> " + interval_name(list[a].first) + " -> " + interval_name(l) +
                         "\n" + list[0].second.matrix().to_string() + "vs\n" +
                         list[a].second.matrix().to_string());
        }
    }
    return rep;
}

CoefficientSystem constant_system(const GradedPoset& p, const FGAbelianGroup& g) {
    CoefficientSystem s(p);
    for (const Interval& i : p.all_intervals()) s.set_group(i, g);
    GroupHom id = GroupHom::identity(g);
    for (const Interval& i : p.all_intervals()) {
        auto [targets, sources] = p.cover_extensions(i);
        for (const Interval& j : targets) s.set_cover_map(i, j, id);
        for (const Interval& j : sources) s.set_cover_map(i, j, id);
    }
    return s;
}

CoefficientSystem restrict_system(const CoefficientSystem& s, const GradedPoset& q,
                                  const std::vector<int>& inclusion) {
    const GradedPoset& p = s.base();
    std::size_t nq = q.poset().size();
    if (inclusion.size() != nq) throw InputError("restrict_system: inclusion size mismatch");
    for (int v : inclusion)
        if (v < 0 || v >= static_cast<int>(p.poset().size()))
            throw InputError("restrict_system: inclusion index out of range");
    std::vector<int> sorted = inclusion;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("restrict_system: inclusion not injective");
    for (std::size_t a = 0; a < nq; ++a)
        for (std::size_t b = 0; b < nq; ++b)
            if (q.interval_length(static_cast<int>(a), static_cast<int>(b)) !=
                p.interval_length(inclusion[a], inclusion[b]))
                throw InputError("restrict_system: inclusion does not preserve interval lengths "
                                 "between '" + q.poset().name(static_cast<int>(a)) + "' and '" +
                                 q.poset().name(static_cast<int>(b)) + "'");

    auto image = [&](const Interval& i) {
        return p.interval(inclusion[i.low], inclusion[i.high]);
    };
    CoefficientSystem out(q);
    for (const Interval& i : q.all_intervals())
        if (s.has_group(image(i))) out.set_group(i, s.group(image(i)));
    for (const Interval& i : q.all_intervals()) {
        auto [targets, sources] = q.cover_extensions(i);
        std::vector<Interval> exts = targets;
        exts.insert(exts.end(), sources.begin(), sources.end());
        for (const Interval& j : exts)
            if (s.has_cover_map(image(i), image(j)))
                out.set_cover_map(i, j, s.cover_map(image(i), image(j)));
    }
    return out;
}

}  // namespace aqcube
