#include "aqcube/poset.hpp"

#include <algorithm>
#include <functional>

namespace aqcube {

namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
    if (names.empty()) {
        names.resize(n);
        for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    }
    if (names.size() != n) throw InputError("FinitePoset: name count mismatch");
    return names;
}

}  // namespace

FinitePoset FinitePoset::from_covers(std::size_t n,
                                     const std::vector<std::pair<int, int>>& covers,
                                     std::vector<std::string> names) {
    FinitePoset p;
    p.n_ = n;
    p.leq_.assign(n, std::vector<bool>(n, false));
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
            throw InputError("FinitePoset: cover index out of range");
        if (a == b) throw InputError("FinitePoset: cover relation may not be reflexive");
        adj[a].push_back(b);
    }
    // reachability closure; a cycle would make the relation non-antisymmetric
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> stack{static_cast<int>(s)};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (w == static_cast<int>(s))
                    throw InputError("FinitePoset: cover relation contains a cycle");
                if (!p.leq_[s][w]) {
                    p.leq_[s][w] = true;
                    stack.push_back(w);
                }
            }
        }
        p.leq_[s][s] = true;
    }
    p.finish(std::move(names));
    return p;
}

FinitePoset FinitePoset::from_leq(std::size_t n, const std::vector<std::vector<bool>>& leq,
                                  std::vector<std::string> names) {
    FinitePoset p;
    p.n_ = n;
    p.leq_ = leq;
    if (leq.size() != n) throw InputError("FinitePoset: leq table size mismatch");
    for (std::size_t a = 0; a < n; ++a) {
        if (leq[a].size() != n) throw InputError("FinitePoset: leq table size mismatch");
        if (!leq[a][a]) throw InputError("FinitePoset: relation not reflexive");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && leq[a][b] && leq[b][a])
                throw InputError("FinitePoset: relation not antisymmetric");
            if (leq[a][b])
                for (std::size_t c = 0; c < n; ++c)
                    if (leq[b][c] && !leq[a][c])
                        throw InputError("FinitePoset: relation not transitive");
        }
    p.finish(std::move(names));
    return p;
}

void FinitePoset::finish(std::vector<std::string> names) {
    names_ = default_names(n_, std::move(names));
    up_.assign(n_, {});
    down_.assign(n_, {});
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            if (a == b || !leq_[a][b]) continue;
            bool cover = true;
            for (std::size_t c = 0; c < n_ && cover; ++c)
                if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
            if (cover) {
                up_[a].push_back(static_cast<int>(b));
                down_[b].push_back(static_cast<int>(a));
            }
        }
}

std::optional<int> FinitePoset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::size_t FinitePoset::comparable_pair_count() const {
    std::size_t c = 0;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (leq_[a][b]) ++c;
    return c;
}

namespace {

// Maximal chains of [x,y] are exactly Hasse-diagram paths from x to y;
// find one with the given edge count by depth-first search.
std::vector<int> chain_of_length(const FinitePoset& p, int x, int y, int len) {
    std::vector<int> chain{x};
    std::function<bool(int, int)> dfs = [&](int v, int remaining) -> bool {
        if (v == y) return remaining == 0;
        if (remaining == 0) return false;
        for (int w : p.covers_above(v)) {
            if (!p.leq(w, y)) continue;
            chain.push_back(w);
            if (dfs(w, remaining - 1)) return true;
            chain.pop_back();
        }
        return false;
    };
    if (!dfs(x, len)) chain.clear();
    return chain;
}

}  // namespace

GradedPoset check_graded(std::shared_ptr<const FinitePoset> pp) {
    const FinitePoset& p = *pp;
    std::size_t n = p.size();
    std::vector<std::vector<int>> shortest(n, std::vector<int>(n, -1));
    std::vector<std::vector<int>> longest(n, std::vector<int>(n, -1));

    // order elements so that covers go forward
    std::vector<int> order;
    {
        std::vector<int> indeg(n, 0);
        for (std::size_t a = 0; a < n; ++a) indeg[a] = static_cast<int>(p.covers_below(a).size());
        std::vector<int> q;
        for (std::size_t a = 0; a < n; ++a)
            if (indeg[a] == 0) q.push_back(static_cast<int>(a));
        while (!q.empty()) {
            int v = q.back();
            q.pop_back();
            order.push_back(v);
            for (int w : p.covers_above(v))
                if (--indeg[w] == 0) q.push_back(w);
        }
    }

    for (std::size_t x = 0; x < n; ++x) {
        shortest[x][x] = longest[x][x] = 0;
        for (int v : order) {
            if (shortest[x][v] < 0) continue;
            for (int w : p.covers_above(v)) {
                if (!p.leq(static_cast<int>(x), w)) continue;
                if (shortest[x][w] < 0 || shortest[x][v] + 1 < shortest[x][w])
                    shortest[x][w] = shortest[x][v] + 1;
                if (longest[x][v] + 1 > longest[x][w]) longest[x][w] = longest[x][v] + 1;
            }
        }
    }

    GradedPoset g;
    g.poset_ = std::move(pp);
    g.length_.assign(n, std::vector<int>(n, -1));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!p.leq(static_cast<int>(x), static_cast<int>(y))) continue;
            if (shortest[x][y] != longest[x][y]) {
                auto a = chain_of_length(p, static_cast<int>(x), static_cast<int>(y), shortest[x][y]);
                auto b = chain_of_length(p, static_cast<int>(x), static_cast<int>(y), longest[x][y]);
                auto render = [&](const std::vector<int>& chain) {
                    std::string s;
                    for (std::size_t i = 0; i < chain.size(); ++i)
                        s += (i ? " < " : "") + p.name(chain[i]);
                    return s;
                };
                throw NotGradedError("poset not graded: elements '" + p.name(static_cast<int>(x)) +
                                         "' and '" + p.name(static_cast<int>(y)) +
                                         "' are joined by maximal chains of lengths " +
                                         std::to_string(shortest[x][y]) + " and " +
                                         std::to_string(longest[x][y]) + ": " + render(a) +
                                         "  versus  " + render(b),
                                     a, b);
            }
            g.length_[x][y] = shortest[x][y];
            g.max_length_ = std::max(g.max_length_, shortest[x][y]);
        }
    return g;
}

GradedPoset check_graded(const FinitePoset& p) {
    return check_graded(std::make_shared<const FinitePoset>(p));
}

Interval GradedPoset::interval(int a, int b) const {
    int len = length_[a][b];
    if (len < 0)
        throw InputError("interval: elements '" + poset_->name(a) + "' and '" + poset_->name(b) +
                         "' are incomparable");
    return Interval{a, b, len};
}

std::vector<Interval> GradedPoset::intervals_of_length(int k) const {
    std::vector<Interval> out;
    std::size_t n = poset_->size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (length_[a][b] == k) out.push_back(Interval{static_cast<int>(a), static_cast<int>(b), k});
    return out;
}

std::vector<Interval> GradedPoset::all_intervals() const {
    std::vector<Interval> out;
    std::size_t n = poset_->size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (length_[a][b] >= 0)
                out.push_back(Interval{static_cast<int>(a), static_cast<int>(b), length_[a][b]});
    return out;
}

std::pair<std::vector<Interval>, std::vector<Interval>> GradedPoset::cover_extensions(
    const Interval& i) const {
    std::vector<Interval> target, source;
    for (int b2 : poset_->covers_above(i.high)) target.push_back(interval(i.low, b2));
    for (int a2 : poset_->covers_below(i.low)) source.push_back(interval(a2, i.high));
    std::sort(target.begin(), target.end());
    std::sort(source.begin(), source.end());
    return {target, source};
}

void GradedPoset::set_coords(std::vector<unsigned> coords) {
    if (coords.size() != poset_->size()) throw InputError("set_coords: size mismatch");
    coords_ = std::move(coords);
}

std::string interval_label(const FinitePoset& p, const Interval& i) {
    return "[" + p.name(i.low) + "," + p.name(i.high) + "]";
}

FinitePoset twisted_arrow_poset(const FinitePoset& p) {
    std::vector<std::pair<int, int>> ivals;
    std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (p.leq(static_cast<int>(a), static_cast<int>(b)))
                ivals.emplace_back(static_cast<int>(a), static_cast<int>(b));

    std::size_t m = ivals.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            leq[i][j] = p.leq(ivals[j].first, ivals[i].first) && p.leq(ivals[i].second, ivals[j].second);

    std::vector<std::string> names(m);
    for (std::size_t i = 0; i < m; ++i)
        names[i] = "[" + p.name(ivals[i].first) + "," + p.name(ivals[i].second) + "]";
    return FinitePoset::from_leq(m, leq, names);
}

}  // namespace aqcube
