#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aqcube/aq_complex.hpp"
#include "aqcube/cubical_complex.hpp"
#include "aqcube/io.hpp"
#include "aqcube/obstruction.hpp"
#include "aqcube/permutohedron.hpp"

namespace {

using aqcube::CochainComplex;
using aqcube::InputDocument;
using aqcube::Int;
using nlohmann::json;

json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

json canonical_to_json(const aqcube::FGAbelianGroup::Canonical& c) {
    json t = json::array();
    for (const Int& d : c.torsion) t.push_back(json_int(d));
    return json{{"rank", c.rank}, {"torsion", t}};
}

CochainComplex build_from_document(const InputDocument& doc) {
    switch (doc.kind) {
        case InputDocument::Kind::PosetSystem:
            return aqcube::build_dphi(*doc.poset, *doc.system, doc.offset);
        case InputDocument::Kind::ComplexSystem:
            return aqcube::build_limit_complex(*doc.complex, *doc.system, doc.coefficient_degree);
        case InputDocument::Kind::Obstruction:
            return aqcube::build_limit_complex(*doc.complex, *doc.system, doc.n - 2);
    }
    throw aqcube::StructuralError("unreachable document kind");
}

int cmd_validate(const std::string& path) {
    InputDocument doc = aqcube::load_document(path);
    aqcube::ValidationReport rep = doc.system->validate();
    if (doc.complex) {
        aqcube::ValidationReport crep = aqcube::validate_complex(*doc.complex);
        rep.ok = rep.ok && crep.ok;
        rep.violations.insert(rep.violations.end(), crep.violations.begin(), crep.violations.end());
        rep.warnings.insert(rep.warnings.end(), crep.warnings.begin(), crep.warnings.end());
    }
    for (const std::string& w : rep.warnings) std::cout << "warning: " << w << "\n";
    if (!rep.ok) {
        std::cout << "invalid: " << rep.violations.front() << "\n";
        return 2;
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_cohomology(const std::string& path, int degree, bool all, bool as_json) {
    InputDocument doc = aqcube::load_document(path);
    CochainComplex cx = build_from_document(doc);

    std::vector<int> degrees;
    if (all)
        for (int d = cx.min_degree(); d <= cx.max_degree(); ++d) degrees.push_back(d);
    else
        degrees.push_back(degree);

    if (as_json) {
        json out;
        out["interval_counts"] = json::object();
        for (std::size_t k = 0; k < cx.length(); ++k)
            out["interval_counts"][std::to_string(k)] = cx.term(k).size();
        out["cohomology"] = json::object();
        for (int d : degrees)
            out["cohomology"][std::to_string(d)] = canonical_to_json(cx.cohomology_at(d));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "intervals per length:";
    for (std::size_t k = 0; k < cx.length(); ++k) std::cout << " " << k << ":" << cx.term(k).size();
    std::cout << "\n";
    for (int d : degrees)
        std::cout << "H^" << d << " = " << cx.cohomology_at(d).to_string() << "\n";
    return 0;
}

int cmd_obstruct(const std::string& path, bool as_json) {
    InputDocument doc = aqcube::load_document(path);
    if (doc.kind != InputDocument::Kind::Obstruction)
        throw aqcube::InputError("obstruct needs an obstruction document");
    if (doc.n == 2 && !doc.linear)
        throw aqcube::InputError(
            "n = 2 obstruction coefficients are not abelian in general; set options.linear = true "
            "to assert a linear instance");

    CochainComplex cx = build_from_document(doc);
    std::vector<Int> cocycle = aqcube::assemble_cocycle(cx, doc.n, *doc.facets);
    aqcube::ObstructionResult res = aqcube::decide_vanishing(cx, cocycle);

    std::optional<std::vector<Int>> total;
    if (doc.transports) total = aqcube::total_class(*doc.facets, *doc.transports);

    if (as_json) {
        json out;
        out["verdict"] = res.vanishes ? "LIFTS" : "OBSTRUCTED";
        if (res.certificate) {
            json c = json::array();
            for (const Int& v : *res.certificate) c.push_back(json_int(v));
            out["certificate"] = c;
        }
        if (!res.vanishes) {
            json cls = json::array();
            for (const Int& v : aqcube::obstruction_class_coordinates(cx, cocycle))
                cls.push_back(json_int(v));
            out["class"] = cls;
            out["h1"] = canonical_to_json(cx.cohomology_at(1));
        }
        if (total) {
            json t = json::array();
            for (const Int& v : *total) t.push_back(json_int(v));
            out["total_class"] = t;
        }
        std::cout << out.dump(2) << "\n";
        return res.vanishes ? 0 : 1;
    }

    if (res.vanishes) {
        std::cout << "LIFTS\ncertificate:";
        for (const Int& v : *res.certificate) std::cout << " " << v;
        std::cout << "\n";
    } else {
        std::cout << "OBSTRUCTED\nclass:";
        for (const Int& v : aqcube::obstruction_class_coordinates(cx, cocycle))
            std::cout << " " << v;
        std::cout << "\nH^1 = " << cx.cohomology_at(1).to_string() << "\n";
    }
    if (total) {
        std::cout << "total class:";
        for (const Int& v : *total) std::cout << " " << v;
        std::cout << "\n";
    }
    return res.vanishes ? 0 : 1;
}

int cmd_cube_info(int n) {
    if (n < 0 || n > 7) throw aqcube::InputError("cube-info: n must be between 0 and 7");
    aqcube::CubicalComplex cube = aqcube::full_cube(n);
    std::cout << "faces of [1]^" << n << " by dimension:";
    for (int d = 0; d <= n; ++d) std::cout << " " << d << ":" << cube.cell_count(d);
    std::cout << "\n";

    aqcube::GradedPoset p = aqcube::cube_poset(n);
    std::cout << "vertex-poset intervals by length:";
    for (int k = 0; k <= n; ++k) std::cout << " " << k << ":" << p.intervals_of_length(k).size();
    std::cout << "\n";

    std::uint32_t top = (n == 0) ? 0 : ((1u << n) - 1);
    auto shape = aqcube::mapping_space_shape(n, 0, top);
    if (!shape) {
        std::cout << "mapping space bottom -> top: empty\n";
        return 0;
    }
    std::cout << "mapping space bottom -> top: permutohedron of rank " << shape->rank() << " with "
              << shape->vertex_count() << " vertices";
    if (shape->rank() == 2) std::cout << " (hexagon)";
    if (shape->rank() == 0) std::cout << " (point)";
    std::cout << "\nface counts by dimension:";
    for (int d = 0; d <= shape->rank(); ++d) std::cout << " " << d << ":" << shape->face_count(d);
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cochain complexes and lifting obstructions for cubical complexes"};
    app.require_subcommand(1);

    std::string path;
    int degree = 0;
    bool all = false, as_json = false;
    int n = 0;

    CLI::App* validate = app.add_subcommand("validate", "check an input file");
    validate->add_option("file", path)->required();

    CLI::App* cohomology = app.add_subcommand("cohomology", "canonical cohomology of an input");
    cohomology->add_option("file", path)->required();
    CLI::Option* deg_opt = cohomology->add_option("--degree", degree, "single degree to compute");
    cohomology->add_flag("--all", all, "all degrees in the support range");
    cohomology->add_flag("--json", as_json, "machine-readable output");

    CLI::App* obstruct = app.add_subcommand("obstruct", "decide the lifting obstruction");
    obstruct->add_option("file", path)->required();
    obstruct->add_flag("--json", as_json, "machine-readable output");

    CLI::App* cube_info = app.add_subcommand("cube-info", "cube and mapping-space combinatorics");
    cube_info->add_option("n", n)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (cohomology->parsed()) {
            if (!all && deg_opt->count() == 0)
                throw aqcube::InputError("cohomology: pass --degree k or --all");
            return cmd_cohomology(path, degree, all, as_json);
        }
        if (obstruct->parsed()) return cmd_obstruct(path, as_json);
        if (cube_info->parsed()) return cmd_cube_info(n);
    } catch (const aqcube::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const aqcube::NotGradedError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const aqcube::InputError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
