#include "aqcube/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aqcube/errors.hpp"

namespace aqcube {

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

Int to_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
    return Int(j.get<long long>());
}

IntMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected a matrix (array of rows)");
    IntMatrix m(rows, cols);
    if (j.size() != rows)
        throw ParseError(what + ": expected " + std::to_string(rows) + " rows, got " +
                         std::to_string(j.size()));
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw ParseError(what + ": row " + std::to_string(r) + " must have " +
                             std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = to_int(row[c], what.c_str());
    }
    return m;
}

FGAbelianGroup parse_group(const json& j, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected a group object");
    if (j.contains("rank") || j.contains("torsion")) {
        long long rank = j.contains("rank") ? need(j, "rank").get<long long>() : 0;
        if (rank < 0) throw ParseError(what + ": rank must be nonnegative");
        std::vector<Int> torsion;
        if (j.contains("torsion"))
            for (const json& t : j["torsion"]) torsion.push_back(to_int(t, what.c_str()));
        return FGAbelianGroup::from_canonical(static_cast<std::size_t>(rank), torsion);
    }
    if (j.contains("generators")) {
        long long g = need(j, "generators").get<long long>();
        if (g < 0) throw ParseError(what + ": generators must be nonnegative");
        std::size_t gg = static_cast<std::size_t>(g);
        IntMatrix rel(gg, 0);
        if (j.contains("relations")) {
            const json& rj = j["relations"];
            std::size_t cols = rj.empty() ? 0 : rj[0].size();
            rel = parse_matrix(rj, gg, cols, what + ".relations");
        }
        return FGAbelianGroup(gg, rel);
    }
    throw ParseError(what + ": group needs either rank/torsion or generators/relations");
}

Interval parse_interval_key(const std::string& key, const GradedPoset& base) {
    if (key.size() < 4 || key.front() != '[' || key.back() != ']')
        throw ParseError("interval key '" + key + "': expected \"[low,high]\"");
    std::string body = key.substr(1, key.size() - 2);
    std::size_t comma = body.find(',');
    if (comma == std::string::npos)
        throw ParseError("interval key '" + key + "': expected \"[low,high]\"");
    std::string lo = body.substr(0, comma), hi = body.substr(comma + 1);
    auto a = base.poset().index_of(lo);
    auto b = base.poset().index_of(hi);
    if (!a) throw InputError("interval key '" + key + "': unknown element '" + lo + "'");
    if (!b) throw InputError("interval key '" + key + "': unknown element '" + hi + "'");
    return base.interval(*a, *b);
}

CoefficientSystem parse_system(const json& j, const GradedPoset& base) {
    if (!j.is_object()) throw ParseError("system: expected an object");
    if (j.contains("constant")) return constant_system(base, parse_group(j["constant"], "system.constant"));

    CoefficientSystem s(base);
    const json& groups = need(j, "groups");
    if (!groups.is_object()) throw ParseError("system.groups: expected an object");
    for (auto it = groups.begin(); it != groups.end(); ++it)
        s.set_group(parse_interval_key(it.key(), base), parse_group(it.value(), "group " + it.key()));
    if (j.contains("maps")) {
        const json& maps = j["maps"];
        if (!maps.is_object()) throw ParseError("system.maps: expected an object");
        for (auto it = maps.begin(); it != maps.end(); ++it) {
            const std::string& key = it.key();
            std::size_t arrow = key.find("->");
            if (arrow == std::string::npos)
                throw ParseError("map key '" + key + "': expected \"[a,b]->[c,d]\"");
            Interval from = parse_interval_key(key.substr(0, arrow), base);
            Interval to = parse_interval_key(key.substr(arrow + 2), base);
            const FGAbelianGroup& gf = s.group(from);
            const FGAbelianGroup& gt = s.group(to);
            IntMatrix m = parse_matrix(it.value(), gt.generators(), gf.generators(), "map " + key);
            s.set_cover_map(from, to, GroupHom(gf, gt, std::move(m)));
        }
    }
    return s;
}

GradedPoset parse_poset(const json& j) {
    if (!j.is_object()) throw ParseError("poset: expected an object");
    const json& elems = need(j, "elements");
    if (!elems.is_array()) throw ParseError("poset.elements: expected an array of names");
    std::vector<std::string> names;
    for (const json& e : elems) {
        if (!e.is_string()) throw ParseError("poset.elements: expected strings");
        std::string name = e.get<std::string>();
        if (name.empty() || name.find_first_of("[],") != std::string::npos ||
            name.find("->") != std::string::npos)
            throw ParseError("poset element name '" + name + "' may not contain [ ] , or ->");
        names.push_back(std::move(name));
    }
    auto index_of = [&](const std::string& n) -> int {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        throw InputError("poset.covers: unknown element '" + n + "'");
    };
    std::vector<std::pair<int, int>> covers;
    for (const json& c : need(j, "covers")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw ParseError("poset.covers: expected pairs of element names");
        covers.emplace_back(index_of(c[0].get<std::string>()), index_of(c[1].get<std::string>()));
    }
    return check_graded(FinitePoset::from_covers(names.size(), covers, names));
}

CubicalComplex parse_complex(const json& j) {
    if (!j.is_object()) throw ParseError("complex: expected an object");
    std::string kind = need(j, "kind").get<std::string>();
    int n = static_cast<int>(need(j, "n").get<long long>());
    if (kind == "full_cube") return full_cube(n);
    if (kind == "boundary_cube") return boundary_cube(n);
    if (kind != "cells") throw ParseError("complex.kind must be full_cube, boundary_cube or cells");
    std::vector<Cell> cells;
    for (const json& cj : need(j, "cells")) {
        std::string base = need(cj, "base").get<std::string>();
        std::uint32_t axes = 0;
        for (const json& aj : need(cj, "axes")) {
            long long a = aj.get<long long>();
            if (a < 1 || a > n) throw InputError("cell axis " + std::to_string(a) + " out of range");
            axes |= 1u << (a - 1);
        }
        cells.push_back(Cell{parse_vertex_bits(base, n), axes});
    }
    return CubicalComplex(n, std::move(cells));
}

FacetKey parse_facet_key(const std::string& key, int n) {
    if (key.size() < 2 || (key.back() != '-' && key.back() != '+'))
        throw ParseError("facet key '" + key + "': expected e.g. \"2-\" or \"2+\"");
    int axis;
    try {
        axis = std::stoi(key.substr(0, key.size() - 1));
    } catch (const std::exception&) {
        throw ParseError("facet key '" + key + "': expected e.g. \"2-\" or \"2+\"");
    }
    if (axis < 1 || axis > n)
        throw InputError("facet key '" + key + "': axis out of range for the " +
                         std::to_string(n) + "-cube");
    return {axis, key.back() == '+' ? 1 : 0};
}

}  // namespace

InputDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) throw ParseError("document must be a JSON object");
        if (to_int(need(j, "schema"), "schema") != 1)
            throw ParseError("unsupported schema version");
        std::string type = need(j, "type").get<std::string>();

        InputDocument doc;
        json options = j.contains("options") ? j["options"] : json::object();
        if (options.contains("offset"))
            doc.offset = static_cast<int>(options["offset"].get<long long>());
        if (options.contains("coefficient_degree"))
            doc.coefficient_degree = static_cast<int>(options["coefficient_degree"].get<long long>());
        if (options.contains("linear")) doc.linear = options["linear"].get<bool>();

        if (type == "poset_system") {
            doc.kind = InputDocument::Kind::PosetSystem;
            doc.poset = parse_poset(need(j, "poset"));
            doc.system = parse_system(need(j, "system"), *doc.poset);
            return doc;
        }
        if (type == "complex_system") {
            doc.kind = InputDocument::Kind::ComplexSystem;
            doc.complex = parse_complex(need(j, "complex"));
            doc.poset = cube_poset(doc.complex->ambient_dim());
            doc.system = parse_system(need(j, "system"), *doc.poset);
            return doc;
        }
        if (type == "obstruction") {
            doc.kind = InputDocument::Kind::Obstruction;
            doc.n = static_cast<int>(need(j, "n").get<long long>());
            if (doc.n < 1 || doc.n > 6) throw InputError("obstruction: n must be between 1 and 6");
            doc.complex = boundary_cube(doc.n);
            doc.poset = cube_poset(doc.n);
            doc.system = parse_system(need(j, "system"), *doc.poset);

            FacetClasses f;
            f.n = doc.n;
            const json& fc = need(j, "facet_classes");
            if (!fc.is_object()) throw ParseError("facet_classes: expected an object");
            for (auto it = fc.begin(); it != fc.end(); ++it) {
                FacetKey key = parse_facet_key(it.key(), doc.n);
                std::vector<Int> v;
                if (!it.value().is_array())
                    throw ParseError("facet_classes['" + it.key() + "']: expected an array");
                for (const json& e : it.value()) v.push_back(to_int(e, "facet class"));
                f.alpha[key] = std::move(v);
            }
            doc.facets = std::move(f);

            if (j.contains("transports")) {
                const json& tj = j["transports"];
                TransportData t;
                t.m_grp = parse_group(need(tj, "target"), "transports.target");
                auto signs = default_facet_signs(doc.n);
                const json& maps = need(tj, "maps");
                for (auto it = maps.begin(); it != maps.end(); ++it) {
                    FacetKey key = parse_facet_key(it.key(), doc.n);
                    const FGAbelianGroup& src =
                        doc.system->group(facet_long_interval(doc.n, key));
                    IntMatrix m = parse_matrix(it.value(), t.m_grp.generators(), src.generators(),
                                               "transports.maps['" + it.key() + "']");
                    t.transport.emplace(key, GroupHom(src, t.m_grp, std::move(m)));
                }
                if (tj.contains("signs"))
                    for (auto it = tj["signs"].begin(); it != tj["signs"].end(); ++it)
                        signs[parse_facet_key(it.key(), doc.n)] =
                            static_cast<int>(it.value().get<long long>());
                t.sign = std::move(signs);
                doc.transports = std::move(t);
            }
            return doc;
        }
        throw ParseError("unknown document type '" + type + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

}  // namespace aqcube
