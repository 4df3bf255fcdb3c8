#include "aqcube/aq_complex.hpp"

#include <algorithm>
#include <array>

#include "aqcube/errors.hpp"

namespace aqcube {

namespace {

using Key = std::pair<int, int>;
using Edge = std::pair<Key, Key>;

Key key(const Interval& i) { return {i.low, i.high}; }

struct ExtEdge {
    Interval from, to;
    int base;  // 0: target extension (+), 1: source extension (-)
};

std::vector<ExtEdge> extension_edges(const GradedPoset& p) {
    std::vector<ExtEdge> edges;
    for (const Interval& i : p.all_intervals()) {
        auto [targets, sources] = p.cover_extensions(i);
        for (const Interval& j : targets) edges.push_back({i, j, 0});
        for (const Interval& j : sources) edges.push_back({i, j, 1});
    }
    return edges;
}

int coord_sign(const GradedPoset& p, const ExtEdge& e) {
    const auto& c = p.coords();
    unsigned flipped = e.base == 0 ? (c[e.to.high] ^ c[e.from.high]) : (c[e.from.low] ^ c[e.to.low]);
    if (__builtin_popcount(flipped) != 1)
        throw StructuralError("extension_signs: coordinate embedding is not cover-compatible");
    return cube_extension_sign(c[e.to.low], c[e.to.high], flipped, e.base == 1);
}

ExtensionSigns solve_signs_generic(const GradedPoset& p, const CoefficientSystem& s,
                                   const std::vector<ExtEdge>& edges) {
    std::map<Edge, int> idx;
    for (std::size_t e = 0; e < edges.size(); ++e)
        idx[{key(edges[e].from), key(edges[e].to)}] = static_cast<int>(e);

    std::size_t nvars = edges.size();
    std::vector<std::vector<char>> rows;  // augmented, nvars + 1 columns

    for (const Interval& i : p.all_intervals()) {
        auto [t1, s1] = p.cover_extensions(i);
        std::vector<Interval> step1 = t1;
        step1.insert(step1.end(), s1.begin(), s1.end());
        // two-step extensions grouped by endpoint: (middle, e1, e2)
        std::map<Key, std::vector<std::array<int, 2>>> by_end;
        for (const Interval& j : step1) {
            auto [t2, s2] = p.cover_extensions(j);
            std::vector<Interval> step2 = t2;
            step2.insert(step2.end(), s2.begin(), s2.end());
            for (const Interval& l : step2)
                by_end[key(l)].push_back({idx.at({key(i), key(j)}), idx.at({key(j), key(l)})});
        }
        for (const auto& [kl, paths] : by_end) {
            if (paths.size() == 2) {
                std::vector<char> row(nvars + 1, 0);
                int rhs = 1;
                for (const auto& pr : paths)
                    for (int e : {pr[0], pr[1]}) {
                        row[e] ^= 1;
                        rhs ^= edges[e].base;
                    }
                row[nvars] = static_cast<char>(rhs);
                rows.push_back(std::move(row));
                continue;
            }
            // any other path count forces the (path-independent) composite
            // to vanish; otherwise no sign assignment can cancel it
            const auto& pr = paths.front();
            GroupHom comp = s.cover_map(edges[pr[1]].from, edges[pr[1]].to)
                                .compose(s.cover_map(edges[pr[0]].from, edges[pr[0]].to));
            if (comp.same_map(GroupHom::zero(comp.source(), comp.target()))) continue;
            Interval l = p.interval(kl.first, kl.second);
            throw NotSignableError(
                "no consistent coboundary signs: the two-step extension " +
                interval_label(p.poset(), i) + " -> " + interval_label(p.poset(), l) + " has " +
                std::to_string(paths.size()) + " middle interval(s) with nonzero composite");
        }
    }

    // GF(2) elimination, free variables set to 0
    std::vector<int> pivot_of_row;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nvars && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv][col]) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && rows[k][col])
                for (std::size_t c = col; c <= nvars; ++c) rows[k][c] ^= rows[r][c];
        pivot_of_row.push_back(static_cast<int>(col));
        ++r;
    }
    for (std::size_t k = r; k < rows.size(); ++k)
        if (rows[k][nvars])
            throw NotSignableError(
                "no consistent coboundary signs: the sign constraints are unsatisfiable");

    std::vector<int> x(nvars, 0);
    for (std::size_t k = 0; k < r; ++k) x[pivot_of_row[k]] = rows[k][nvars];

    ExtensionSigns out;
    for (std::size_t e = 0; e < nvars; ++e) {
        int sign = ((edges[e].base ^ x[e]) & 1) ? -1 : 1;
        out[{key(edges[e].from), key(edges[e].to)}] = sign;
    }
    return out;
}

}  // namespace

int cube_extension_sign(unsigned low, unsigned high, unsigned flipped, bool source_extension) {
    unsigned support = high ^ low;
    int parity = __builtin_popcount(support & (flipped - 1)) & 1;
    int sign = parity ? -1 : 1;
    return source_extension ? -sign : sign;
}

ExtensionSigns extension_signs(const GradedPoset& p, const CoefficientSystem& s) {
    std::vector<ExtEdge> edges = extension_edges(p);
    if (p.has_coords()) {
        ExtensionSigns out;
        for (const ExtEdge& e : edges) out[{key(e.from), key(e.to)}] = coord_sign(p, e);
        return out;
    }
    return solve_signs_generic(p, s, edges);
}

CochainComplex build_dphi(const GradedPoset& p, const CoefficientSystem& s, int offset) {
    if (&s.base().poset() != &p.poset() && s.base().poset_ptr() != p.poset_ptr())
        throw InputError("build_dphi: coefficient system lives on a different poset");
    if (!s.is_total())
        throw InputError("build_dphi: coefficient system must cover every interval and cover "
                         "extension of the poset");
    ValidationReport rep = s.validate();
    if (!rep.ok) throw InputError("build_dphi: invalid coefficient system: " + rep.violations[0]);

    ExtensionSigns signs = extension_signs(p, s);
    int maxlen = p.max_interval_length();

    std::vector<std::vector<Summand>> terms(maxlen + 1);
    for (int k = 0; k <= maxlen; ++k)
        for (const Interval& i : p.intervals_of_length(k))
            terms[k].push_back({interval_label(p.poset(), i), s.group(i)});

    std::vector<FGAbelianGroup> term_groups;
    for (const auto& t : terms) term_groups.push_back(direct_sum_group(t));

    std::vector<GroupHom> diffs;
    for (int k = 0; k < maxlen; ++k) {
        std::vector<Interval> src = p.intervals_of_length(k);
        std::vector<Interval> dst = p.intervals_of_length(k + 1);
        std::map<Key, std::size_t> dst_index;
        std::vector<std::size_t> dst_offset(dst.size()), src_offset(src.size());
        std::size_t rows = 0, cols = 0;
        for (std::size_t j = 0; j < dst.size(); ++j) {
            dst_index[key(dst[j])] = j;
            dst_offset[j] = rows;
            rows += s.group(dst[j]).generators();
        }
        for (std::size_t i = 0; i < src.size(); ++i) {
            src_offset[i] = cols;
            cols += s.group(src[i]).generators();
        }
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < src.size(); ++i) {
            auto [targets, sources] = p.cover_extensions(src[i]);
            std::vector<Interval> exts = targets;
            exts.insert(exts.end(), sources.begin(), sources.end());
            for (const Interval& j : exts) {
                int sign = signs.at({key(src[i]), key(j)});
                const IntMatrix& block = s.cover_map(src[i], j).matrix();
                std::size_t r0 = dst_offset[dst_index.at(key(j))];
                std::size_t c0 = src_offset[i];
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t c = 0; c < block.cols(); ++c)
                        m.at(r0 + r, c0 + c) += sign * block.at(r, c);
            }
        }
        diffs.emplace_back(term_groups[k], term_groups[k + 1], std::move(m));
    }

    CochainComplex cx(offset, std::move(terms), std::move(diffs));
    cx.check_complex();
    return cx;
}

CochainComplex build_cube_cphi(int m, const CoefficientSystem& s, int n) {
    const GradedPoset& p = s.base();
    if (p.poset().size() != (std::size_t{1} << m) || p.max_interval_length() != m)
        throw InputError("build_cube_cphi: coefficient system is not on the " + std::to_string(m) +
                         "-cube poset");
    return build_dphi(p, s, -n);
}

}  // namespace aqcube
