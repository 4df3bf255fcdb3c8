#include "aqcube/obstruction.hpp"

#include "aqcube/errors.hpp"
#include "aqcube/smith.hpp"

namespace aqcube {

namespace {

std::string facet_name(const FacetKey& f) {
    return "facet (axis " + std::to_string(f.first) + ", eps " + std::to_string(f.second) + ")";
}

}  // namespace

Cell facet_cell(int n, const FacetKey& f) {
    auto [axis, eps] = f;
    if (n < 1 || axis < 1 || axis > n || (eps != 0 && eps != 1))
        throw InputError("bad " + facet_name(f) + " for the " + std::to_string(n) + "-cube");
    std::uint32_t bit = 1u << (axis - 1);
    std::uint32_t mask = (1u << n) - 1;
    return Cell{eps ? bit : 0u, mask & ~bit};
}

Interval facet_long_interval(int n, const FacetKey& f) {
    Cell c = facet_cell(n, f);
    return Interval{static_cast<int>(c.low_vertex()), static_cast<int>(c.high_vertex()), n - 1};
}

std::vector<FacetKey> facet_keys(int n) {
    std::vector<FacetKey> out;
    for (int j = 1; j <= n; ++j)
        for (int eps : {0, 1}) out.emplace_back(j, eps);
    return out;
}

std::vector<Int> assemble_cocycle(const CochainComplex& c, int n, const FacetClasses& f) {
    if (f.n != n) throw InputError("assemble_cocycle: facet classes are for a different cube");
    int k = 1 - c.offset();
    if (k < 0 || k >= static_cast<int>(c.length()))
        throw InputError("assemble_cocycle: complex has no degree-1 term");

    std::vector<FacetKey> keys = facet_keys(n);
    if (f.alpha.size() != keys.size())
        throw InputError("assemble_cocycle: expected " + std::to_string(keys.size()) +
                         " facet classes, got " + std::to_string(f.alpha.size()));

    std::vector<Int> out(c.term_group(k).generators(), 0);
    for (const FacetKey& key : keys) {
        auto it = f.alpha.find(key);
        if (it == f.alpha.end()) throw InputError("assemble_cocycle: missing " + facet_name(key));
        Interval iv = facet_long_interval(n, key);
        std::string label = "[" + vertex_bits(static_cast<std::uint32_t>(iv.low), n) + "," +
                            vertex_bits(static_cast<std::uint32_t>(iv.high), n) + "]";
        const FGAbelianGroup& g = c.term(k)[c.summand_index(k, label)].group;
        if (it->second.size() != g.generators())
            throw InputError("assemble_cocycle: " + facet_name(key) + " has " +
                             std::to_string(it->second.size()) + " coordinates, its group needs " +
                             std::to_string(g.generators()));
        std::size_t off = c.summand_offset(k, label);
        for (std::size_t i = 0; i < it->second.size(); ++i) out[off + i] = it->second[i];
    }
    return out;
}

ObstructionResult decide_vanishing(const CochainComplex& c, const std::vector<Int>& cocycle) {
    int k = 1 - c.offset();
    if (k < 0 || k >= static_cast<int>(c.length()))
        throw InputError("decide_vanishing: complex has no degree-1 term");
    if (cocycle.size() != c.term_group(k).generators())
        throw InputError("decide_vanishing: cochain has the wrong number of coordinates");

    if (k + 1 < static_cast<int>(c.length())) {
        std::vector<Int> img = c.differential(k).apply(cocycle);
        if (!c.term_group(k + 1).is_zero_element(img))
            throw InputError("decide_vanishing: cochain is not closed (d^1 != 0), facet data is "
                             "inconsistent");
    }

    ObstructionResult res;
    res.cocycle = cocycle;
    if (k == 0) {
        res.vanishes = c.term_group(0).is_zero_element(cocycle);
        if (res.vanishes) res.certificate = std::vector<Int>{};
        return res;
    }
    auto cert = write_in_image(c.differential(k - 1), cocycle);
    res.vanishes = cert.has_value();
    res.certificate = std::move(cert);
    return res;
}

std::vector<Int> obstruction_class_coordinates(const CochainComplex& c,
                                               const std::vector<Int>& cocycle) {
    int k = 1 - c.offset();
    const FGAbelianGroup& a = c.term_group(k);

    IntMatrix cocycles(0, 0);
    if (k + 1 < static_cast<int>(c.length())) {
        IntMatrix block = c.differential(k).matrix().hcat(c.term_group(k + 1).relations());
        IntMatrix ker = kernel_basis(block);
        IntMatrix xpart(a.generators(), ker.cols());
        for (std::size_t r = 0; r < a.generators(); ++r)
            for (std::size_t col = 0; col < ker.cols(); ++col) xpart.at(r, col) = ker.at(r, col);
        cocycles = column_lattice_basis(xpart);
    } else {
        cocycles = IntMatrix::identity(a.generators());
    }

    auto y = solve(cocycles, cocycle);
    if (!y) throw InputError("obstruction class: cochain is not a cocycle");
    IntMatrix boundaries =
        k > 0 ? c.differential(k - 1).matrix().hcat(a.relations()) : a.relations();
    auto q = solve_many(cocycles, boundaries);
    if (!q) throw StructuralError("obstruction class: boundaries escape the cocycle lattice");

    SmithResult sr = snf(*q);
    std::vector<Int> z = sr.u.apply(*y);

    std::vector<Int> torsion, free_part;
    std::size_t t = cocycles.cols();
    for (std::size_t i = 0; i < t; ++i) {
        Int di = i < sr.d.rows() && i < sr.d.cols() ? sr.d.at(i, i) : Int(0);
        if (di == 1) continue;
        if (di == 0)
            free_part.push_back(z[i]);
        else {
            Int r = z[i] % di;
            if (r < 0) r += di;
            torsion.push_back(r);
        }
    }
    std::vector<Int> out = torsion;
    out.insert(out.end(), free_part.begin(), free_part.end());
    // negation is an automorphism; fix the sign of the leading entry
    for (const Int& v : out) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& w : out) w = -w;
        break;
    }
    return out;
}

std::vector<Int> total_class(const FacetClasses& f, const TransportData& t) {
    std::vector<Int> sum(t.m_grp.generators(), 0);
    for (const auto& [key, alpha] : f.alpha) {
        auto ti = t.transport.find(key);
        auto si = t.sign.find(key);
        if (ti == t.transport.end() || si == t.sign.end())
            throw InputError("total_class: no transport for " + facet_name(key));
        if (si->second != 1 && si->second != -1)
            throw InputError("total_class: sign for " + facet_name(key) + " must be +1 or -1");
        if (ti->second.source().generators() != alpha.size() ||
            ti->second.target().generators() != t.m_grp.generators())
            throw InputError("total_class: transport shape mismatch at " + facet_name(key));
        std::vector<Int> v = ti->second.apply(alpha);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += si->second * v[i];
    }
    return sum;
}

std::map<FacetKey, int> default_facet_signs(int n) {
    std::map<FacetKey, int> out;
    for (int j = 1; j <= n; ++j) {
        int s = (j % 2 == 1) ? 1 : -1;
        out[{j, 0}] = s;
        out[{j, 1}] = -s;
    }
    return out;
}

TodaFixture toda_fixture() {
    CubicalComplex k = boundary_cube(3);
    CoefficientSystem s = constant_system(cube_poset(3), FGAbelianGroup::free_group(1));
    FacetClasses f;
    f.n = 3;
    // the three composable classes sit on the eps = 0 facets; the
    // nullhomotopy facets are zero
    for (int j = 1; j <= 3; ++j) {
        f.alpha[{j, 0}] = {Int(1)};
        f.alpha[{j, 1}] = {Int(0)};
    }
    return TodaFixture{std::move(k), std::move(s), std::move(f)};
}

}  // namespace aqcube
