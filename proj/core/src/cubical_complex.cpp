#include "aqcube/cubical_complex.hpp"

#include <algorithm>
#include <map>

#include "aqcube/aq_complex.hpp"
#include "aqcube/errors.hpp"
#include "aqcube/smith.hpp"

namespace aqcube {

namespace {

// iterate over all subsets of mask, descending, ending with 0
template <typename F>
void for_subsets(std::uint32_t mask, F f) {
    std::uint32_t sub = mask;
    while (true) {
        f(sub);
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
}

}  // namespace

std::string Cell::to_string(int ambient_dim) const {
    std::string s = "(" + vertex_bits(base, ambient_dim) + "; {";
    bool first = true;
    for (int b = 0; b < ambient_dim; ++b)
        if (axes & (1u << b)) {
            if (!first) s += ",";
            s += std::to_string(b + 1);
            first = false;
        }
    return s + "})";
}

CubicalComplex::CubicalComplex(int ambient_dim, std::vector<Cell> cells) : n_(ambient_dim) {
    if (ambient_dim < 0 || ambient_dim > 20)
        throw InputError("CubicalComplex: ambient dimension out of supported range");
    std::uint32_t mask = (ambient_dim == 0) ? 0 : ((1u << ambient_dim) - 1);
    for (Cell& c : cells) {
        if ((c.axes & ~mask) || (c.base & ~mask))
            throw InputError("CubicalComplex: cell " + c.to_string(ambient_dim) +
                             " does not fit in the ambient cube");
        c.base &= ~c.axes;
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    cells_ = std::move(cells);
    if (cells_.empty()) throw InputError("CubicalComplex: cell set is empty");
}

bool CubicalComplex::has_cell(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

int CubicalComplex::dim() const { return cells_.back().dim(); }

std::size_t CubicalComplex::cell_count(int d) const {
    std::size_t c = 0;
    for (const Cell& cell : cells_)
        if (cell.dim() == d) ++c;
    return c;
}

std::vector<Cell> CubicalComplex::maximal_cells() const {
    std::vector<Cell> out;
    for (const Cell& c : cells_) {
        bool maximal = true;
        for (const Cell& o : cells_)
            if (!(o == c) && c.is_face_of(o)) maximal = false;
        if (maximal) out.push_back(c);
    }
    return out;
}

std::vector<Cell> CubicalComplex::faces_of(const Cell& c) {
    std::vector<Cell> out;
    for (int b = 0; b < 32; ++b) {
        std::uint32_t e = 1u << b;
        if (!(c.axes & e)) continue;
        out.push_back(Cell{c.base, c.axes & ~e});
        out.push_back(Cell{c.base | e, c.axes & ~e});
    }
    std::sort(out.begin(), out.end());
    return out;
}

ValidationReport validate_complex(const CubicalComplex& k) {
    ValidationReport rep;
    CubicalComplex closed = face_closure(k.ambient_dim(), k.cells());
    for (const Cell& f : closed.cells())
        if (!k.has_cell(f)) {
            rep.ok = false;
            rep.violations.push_back("missing face " + f.to_string(k.ambient_dim()));
        }
    if (!rep.ok) return rep;
    std::vector<Cell> maximal = k.maximal_cells();
    for (const Cell& c : k.cells()) {
        int owners = 0;
        for (const Cell& m : maximal)
            if (c.is_face_of(m) || c == m) ++owners;
        if (owners > 1)
            rep.warnings.push_back("interval [" + vertex_bits(c.low_vertex(), k.ambient_dim()) +
                                   "," + vertex_bits(c.high_vertex(), k.ambient_dim()) +
                                   "] is shared by " + std::to_string(owners) + " maximal cells");
    }
    return rep;
}

CubicalComplex full_cube(int n) {
    if (n < 0 || n > 16) throw InputError("full_cube: dimension out of supported range");
    std::uint32_t mask = (n == 0) ? 0 : ((1u << n) - 1);
    std::vector<Cell> cells;
    for_subsets(mask, [&](std::uint32_t axes) {
        for_subsets(mask & ~axes, [&](std::uint32_t base) { cells.push_back(Cell{base, axes}); });
    });
    return CubicalComplex(n, std::move(cells));
}

CubicalComplex boundary_cube(int n) {
    if (n < 1 || n > 16) throw InputError("boundary_cube: dimension must be >= 1");
    std::uint32_t mask = (1u << n) - 1;
    std::vector<Cell> cells;
    for_subsets(mask, [&](std::uint32_t axes) {
        if (axes == mask) return;  // drop the top cell only
        for_subsets(mask & ~axes, [&](std::uint32_t base) { cells.push_back(Cell{base, axes}); });
    });
    return CubicalComplex(n, std::move(cells));
}

CubicalComplex face_closure(int ambient_dim, std::vector<Cell> generators) {
    CubicalComplex seed(ambient_dim, std::move(generators));
    std::vector<Cell> all = seed.cells();
    std::vector<Cell> frontier = all;
    while (!frontier.empty()) {
        std::vector<Cell> next;
        for (const Cell& c : frontier)
            for (const Cell& f : CubicalComplex::faces_of(c))
                if (!std::binary_search(all.begin(), all.end(), f)) next.push_back(f);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<Cell> merged;
        std::merge(all.begin(), all.end(), next.begin(), next.end(), std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        all = std::move(merged);
        frontier = std::move(next);
    }
    return CubicalComplex(ambient_dim, std::move(all));
}

FinitePoset nd_cube_poset(const CubicalComplex& k) {
    const auto& cells = k.cells();
    std::size_t m = cells.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            leq[a][b] = (a == b) || cells[a].is_face_of(cells[b]);
    std::vector<std::string> names(m);
    for (std::size_t a = 0; a < m; ++a) names[a] = cells[a].to_string(k.ambient_dim());
    return FinitePoset::from_leq(m, leq, names);
}

Cell spanning_cell(std::uint32_t low, std::uint32_t high) {
    return Cell{low, low ^ high};
}

bool is_cell_interval(const CubicalComplex& k, std::uint32_t low, std::uint32_t high) {
    if (low & ~high) return false;
    return k.has_cell(spanning_cell(low, high));
}

std::vector<Interval> cell_intervals_of_length(const CubicalComplex& k, int len) {
    std::vector<Interval> out;
    for (const Cell& c : k.cells())
        if (c.dim() == len)
            out.push_back(Interval{static_cast<int>(c.low_vertex()),
                                   static_cast<int>(c.high_vertex()), len});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string bit_interval_label(std::uint32_t low, std::uint32_t high, int n) {
    return "[" + vertex_bits(low, n) + "," + vertex_bits(high, n) + "]";
}

void require_valid(const CubicalComplex& k) {
    ValidationReport rep = validate_complex(k);
    if (!rep.ok) throw InputError("cubical complex is not face-closed: " + rep.violations[0]);
}

void check_system_base(const CubicalComplex& k, const CoefficientSystem& s) {
    if (s.base().poset().size() != (std::size_t{1} << k.ambient_dim()))
        throw InputError("coefficient system must live on the vertex poset of the ambient " +
                         std::to_string(k.ambient_dim()) + "-cube");
}

// cover extensions of a cell interval that stay cell intervals:
// (extended interval, extension axis bit, source flag)
struct CellExt {
    Interval to;
    std::uint32_t axis;
    bool source;
};

std::vector<CellExt> cell_extensions(const CubicalComplex& k, std::uint32_t low,
                                     std::uint32_t high) {
    std::vector<CellExt> out;
    int len = popcount32(high ^ low);
    for (int b = 0; b < k.ambient_dim(); ++b) {
        std::uint32_t e = 1u << b;
        if (!(high & e) && is_cell_interval(k, low, high | e))
            out.push_back({Interval{static_cast<int>(low), static_cast<int>(high | e), len + 1},
                           e, false});
        if ((low & e) && is_cell_interval(k, low & ~e, high))
            out.push_back({Interval{static_cast<int>(low & ~e), static_cast<int>(high), len + 1},
                           e, true});
    }
    return out;
}

}  // namespace

CochainComplex build_limit_complex(const CubicalComplex& k, const CoefficientSystem& s, int n) {
    require_valid(k);
    check_system_base(k, s);
    int nn = k.ambient_dim();
    int maxlen = k.dim();

    // every cell interval needs its group and every admissible extension
    // its map
    for (int len = 0; len <= maxlen; ++len)
        for (const Interval& i : cell_intervals_of_length(k, len)) {
            if (!s.has_group(i))
                throw InputError("coefficient system has no group on cell interval " +
                                 bit_interval_label(i.low, i.high, nn));
            for (const CellExt& e : cell_extensions(k, i.low, i.high))
                if (!s.has_cover_map(i, e.to))
                    throw InputError("coefficient system has no map " +
                                     bit_interval_label(i.low, i.high, nn) + " -> " +
                                     bit_interval_label(e.to.low, e.to.high, nn));
        }
    ValidationReport rep = s.validate();
    if (!rep.ok)
        throw InputError("build_limit_complex: invalid coefficient system: " + rep.violations[0]);

    std::vector<std::vector<Summand>> terms(maxlen + 1);
    for (int len = 0; len <= maxlen; ++len)
        for (const Interval& i : cell_intervals_of_length(k, len))
            terms[len].push_back({bit_interval_label(i.low, i.high, nn), s.group(i)});

    std::vector<FGAbelianGroup> term_groups;
    for (const auto& t : terms) term_groups.push_back(direct_sum_group(t));

    std::vector<GroupHom> diffs;
    for (int len = 0; len < maxlen; ++len) {
        std::vector<Interval> src = cell_intervals_of_length(k, len);
        std::vector<Interval> dst = cell_intervals_of_length(k, len + 1);
        std::map<std::pair<int, int>, std::size_t> dst_offset;
        std::size_t rows = 0, cols = 0;
        for (const Interval& j : dst) {
            dst_offset[{j.low, j.high}] = rows;
            rows += s.group(j).generators();
        }
        for (const Interval& i : src) cols += s.group(i).generators();
        IntMatrix m(rows, cols);
        std::size_t c0 = 0;
        for (const Interval& i : src) {
            for (const CellExt& e : cell_extensions(k, i.low, i.high)) {
                int sign = cube_extension_sign(static_cast<unsigned>(e.to.low),
                                               static_cast<unsigned>(e.to.high), e.axis, e.source);
                const IntMatrix& block = s.cover_map(i, e.to).matrix();
                std::size_t r0 = dst_offset.at({e.to.low, e.to.high});
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t c = 0; c < block.cols(); ++c)
                        m.at(r0 + r, c0 + c) += sign * block.at(r, c);
            }
            c0 += s.group(i).generators();
        }
        diffs.emplace_back(term_groups[len], term_groups[len + 1], std::move(m));
    }

    CochainComplex cx(-n, std::move(terms), std::move(diffs));
    cx.check_complex();
    return cx;
}

namespace {

// per-cell cochain data for the literal limit computation
struct CellCx {
    std::vector<std::vector<Interval>> ivals;                       // by length
    std::vector<FGAbelianGroup> groups;                             // by length
    std::vector<std::map<std::pair<int, int>, std::size_t>> offs;   // interval -> gen offset
    std::vector<IntMatrix> diffs;                                   // length k -> k+1
};

CellCx build_cell_cx(const Cell& cell, const CoefficientSystem& s) {
    CellCx cx;
    int d = cell.dim();
    cx.ivals.assign(d + 1, {});
    for_subsets(cell.axes, [&](std::uint32_t x) {
        std::uint32_t u = cell.base | x;
        for_subsets(cell.axes & ~x, [&](std::uint32_t m) {
            cx.ivals[popcount32(m)].push_back(
                Interval{static_cast<int>(u), static_cast<int>(u | m), popcount32(m)});
        });
    });
    for (auto& v : cx.ivals) std::sort(v.begin(), v.end());

    cx.groups.resize(d + 1);
    cx.offs.assign(d + 1, {});
    for (int len = 0; len <= d; ++len) {
        std::vector<FGAbelianGroup> parts;
        std::size_t off = 0;
        for (const Interval& i : cx.ivals[len]) {
            cx.offs[len][{i.low, i.high}] = off;
            off += s.group(i).generators();
            parts.push_back(s.group(i));
        }
        cx.groups[len] = FGAbelianGroup::direct_sum(parts);
    }

    for (int len = 0; len < d; ++len) {
        IntMatrix m(cx.groups[len + 1].generators(), cx.groups[len].generators());
        std::size_t c0 = 0;
        for (const Interval& i : cx.ivals[len]) {
            std::uint32_t u = static_cast<std::uint32_t>(i.low);
            std::uint32_t v = static_cast<std::uint32_t>(i.high);
            for (int b = 0; b < 32; ++b) {
                std::uint32_t e = 1u << b;
                if (!(cell.axes & e)) continue;
                // extend the target within the cell
                if (!(v & e)) {
                    Interval to{static_cast<int>(u), static_cast<int>(v | e), len + 1};
                    int sign = cube_extension_sign(u, v | e, e, false);
                    const IntMatrix& block = s.cover_map(i, to).matrix();
                    std::size_t r0 = cx.offs[len + 1].at({to.low, to.high});
                    for (std::size_t r = 0; r < block.rows(); ++r)
                        for (std::size_t c = 0; c < block.cols(); ++c)
                            m.at(r0 + r, c0 + c) += sign * block.at(r, c);
                }
                // extend the source within the cell
                if (u & e) {
                    Interval to{static_cast<int>(u & ~e), static_cast<int>(v), len + 1};
                    int sign = cube_extension_sign(u & ~e, v, e, true);
                    const IntMatrix& block = s.cover_map(i, to).matrix();
                    std::size_t r0 = cx.offs[len + 1].at({to.low, to.high});
                    for (std::size_t r = 0; r < block.rows(); ++r)
                        for (std::size_t c = 0; c < block.cols(); ++c)
                            m.at(r0 + r, c0 + c) += sign * block.at(r, c);
                }
            }
            c0 += s.group(i).generators();
        }
        cx.diffs.push_back(std::move(m));
    }
    return cx;
}

}  // namespace

CochainComplex equalizer_oracle(const CubicalComplex& k, const CoefficientSystem& s, int n) {
    require_valid(k);
    check_system_base(k, s);
    if (k.cells().size() > 60)
        throw InputError("equalizer_oracle: complex too large for the literal limit");

    const std::vector<Cell>& cells = k.cells();
    int maxlen = k.dim();

    std::vector<CellCx> cc;
    cc.reserve(cells.size());
    for (const Cell& c : cells) cc.push_back(build_cell_cx(c, s));

    // comparison pairs: each cell against each of its codim-1 faces
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        for (const Cell& f : CubicalComplex::faces_of(cells[ci])) {
            auto it = std::lower_bound(cells.begin(), cells.end(), f);
            pairs.emplace_back(ci, static_cast<std::size_t>(it - cells.begin()));
        }

    auto group_at = [&](std::size_t ci, int len) -> const FGAbelianGroup& {
        static const FGAbelianGroup zero = FGAbelianGroup::zero();
        if (len >= static_cast<int>(cc[ci].groups.size())) return zero;
        return cc[ci].groups[len];
    };

    std::vector<IntMatrix> kb(maxlen + 1, IntMatrix(0, 0));
    std::vector<FGAbelianGroup> lim_groups(maxlen + 1);
    std::vector<IntMatrix> d_prod(maxlen, IntMatrix(0, 0));

    std::vector<std::vector<std::size_t>> prod_off(maxlen + 1, std::vector<std::size_t>(cells.size()));
    for (int len = 0; len <= maxlen; ++len) {
        std::size_t off = 0;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            prod_off[len][ci] = off;
            off += group_at(ci, len).generators();
        }
        std::vector<FGAbelianGroup> parts;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) parts.push_back(group_at(ci, len));
        FGAbelianGroup prod = FGAbelianGroup::direct_sum(parts);

        // difference map into the product over comparison pairs
        std::size_t rows = 0;
        std::vector<std::size_t> pair_off(pairs.size());
        std::vector<FGAbelianGroup> face_parts;
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            pair_off[pi] = rows;
            rows += group_at(pairs[pi].second, len).generators();
            face_parts.push_back(group_at(pairs[pi].second, len));
        }
        IntMatrix diff(rows, off);
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            auto [ci, fi] = pairs[pi];
            if (len >= static_cast<int>(cc[fi].ivals.size())) continue;
            for (const Interval& i : cc[fi].ivals[len]) {
                std::size_t g = s.group(i).generators();
                std::size_t rf = pair_off[pi] + cc[fi].offs[len].at({i.low, i.high});
                std::size_t cbig = prod_off[len][ci] + cc[ci].offs[len].at({i.low, i.high});
                std::size_t csmall = prod_off[len][fi] + cc[fi].offs[len].at({i.low, i.high});
                for (std::size_t r = 0; r < g; ++r) {
                    diff.at(rf + r, cbig + r) += 1;
                    diff.at(rf + r, csmall + r) -= 1;
                }
            }
        }
        FGAbelianGroup face_prod = FGAbelianGroup::direct_sum(face_parts);

        // kernel of the comparison map, as a presented group
        IntMatrix block = diff.hcat(face_prod.relations());
        IntMatrix ker = kernel_basis(block);
        IntMatrix xpart(off, ker.cols());
        for (std::size_t r = 0; r < off; ++r)
            for (std::size_t c = 0; c < ker.cols(); ++c) xpart.at(r, c) = ker.at(r, c);
        kb[len] = column_lattice_basis(xpart);
        auto rels = solve_many(kb[len], prod.relations());
        if (!rels) throw StructuralError("equalizer_oracle: product relations escape the kernel");
        lim_groups[len] = FGAbelianGroup(kb[len].cols(), *rels);
    }

    for (int len = 0; len < maxlen; ++len) {
        std::size_t rows = 0;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) rows += group_at(ci, len + 1).generators();
        std::size_t cols = 0;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) cols += group_at(ci, len).generators();
        IntMatrix m(rows, cols);
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            if (len >= static_cast<int>(cc[ci].diffs.size())) continue;
            const IntMatrix& block = cc[ci].diffs[len];
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c)
                    m.at(prod_off[len + 1][ci] + r, prod_off[len][ci] + c) = block.at(r, c);
        }
        d_prod[len] = std::move(m);
    }

    std::vector<std::vector<Summand>> terms(maxlen + 1);
    std::vector<GroupHom> diffs;
    for (int len = 0; len <= maxlen; ++len) terms[len].push_back({"lim", lim_groups[len]});
    for (int len = 0; len < maxlen; ++len) {
        IntMatrix image = d_prod[len] * kb[len];
        auto dm = solve_many(kb[len + 1], image);
        if (!dm)
            throw StructuralError("equalizer_oracle: induced differential escapes the kernel");
        diffs.emplace_back(lim_groups[len], lim_groups[len + 1], *dm);
    }

    CochainComplex cx(-n, std::move(terms), std::move(diffs));
    cx.check_complex();
    return cx;
}

}  // namespace aqcube
