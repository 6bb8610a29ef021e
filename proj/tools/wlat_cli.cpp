// wlat: inspect finite presented lattices and the cell complexes of their
// mapping spaces.  Exit codes: 0 success, 1 usage error, 2 invalid input
// (parse diagnostics or validation failure, or a failing family check).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wlat/cells.hpp"
#include "wlat/dsl.hpp"
#include "wlat/export.hpp"
#include "wlat/families.hpp"
#include "wlat/homology.hpp"
#include "wlat/lattice.hpp"
#include "wlat/quotient.hpp"

using nlohmann::json;
using namespace wlat;

namespace {

struct Common {
    std::string lattice_file;
    std::string builtin;
    std::string from;
    std::string to;
    std::vector<std::string> nulls;
    bool as_json = false;
    std::string out;
};

void add_common(CLI::App* sub, Common& c, bool endpoints = true) {
    sub->add_option("--lattice", c.lattice_file, "lattice presentation file (.lat)");
    sub->add_option("--builtin", c.builtin, "builtin lattice kind[:n]");
    if (endpoints) {
        sub->add_option("--from", c.from, "source node (default: init)");
        sub->add_option("--to", c.to, "target node (default: fin)");
        sub->add_option("--null", c.nulls,
                        "extra null mark, a dotted arrow path; repeatable");
    }
    sub->add_flag("--json", c.as_json, "emit JSON");
    sub->add_option("--out", c.out, "write output to a file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot write " + c.out);
        f << text;
    }
}

void emit(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

Lattice make_builtin(const std::string& spec) {
    auto pos = spec.find(':');
    std::string kind = spec.substr(0, pos);
    int n = 0;
    if (pos != std::string::npos) {
        size_t used = 0;
        n = std::stoi(spec.substr(pos + 1), &used);
        if (used != spec.size() - pos - 1)
            throw std::invalid_argument("bad builtin size in " + spec);
    }
    return make_lattice(kind, n);
}

struct Ctx {
    Lattice lat;
    std::optional<MorphismTable> tab;
    NodeId from = -1;
    NodeId to = -1;
};

// fills ctx through validation; nonzero return is the process exit code
int load_lattice(const Common& c, Ctx& ctx, bool build_table = true) {
    if (c.lattice_file.empty() == c.builtin.empty()) {
        std::cerr << "exactly one of --lattice or --builtin is required\n";
        return 1;
    }
    if (!c.builtin.empty()) {
        ctx.lat = make_builtin(c.builtin);
    } else {
        ParseResult pr = parse_lattice_file(c.lattice_file);
        if (!pr.ok()) {
            for (const auto& d : pr.diagnostics) std::cerr << d.render(c.lattice_file) << "\n";
            return 2;
        }
        ctx.lat = std::move(pr.lattice);
    }
    for (const std::string& dotted : c.nulls) {
        auto p = ctx.lat.parse_path(dotted);
        if (!p) {
            std::cerr << "--null path does not name arrows: " << dotted << "\n";
            return 1;
        }
        ctx.lat.null_marks.push_back(*p);
    }
    ValidationReport rep = validate(ctx.lat);
    if (!rep.ok()) {
        for (const auto& e : rep.errors) std::cerr << e << "\n";
        return 2;
    }
    if (!build_table) return 0;
    ctx.tab.emplace(MorphismTable::build(ctx.lat));
    ctx.from = ctx.lat.init;
    ctx.to = ctx.lat.fin;
    if (!c.from.empty()) {
        auto id = ctx.lat.node_id(c.from);
        if (!id) {
            std::cerr << "unknown node for --from: " << c.from << "\n";
            return 1;
        }
        ctx.from = *id;
    }
    if (!c.to.empty()) {
        auto id = ctx.lat.node_id(c.to);
        if (!id) {
            std::cerr << "unknown node for --to: " << c.to << "\n";
            return 1;
        }
        ctx.to = *id;
    }
    return 0;
}

std::string fvec_text(const std::vector<int>& f) {
    std::string s;
    for (size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + std::to_string(f[i]);
    return s + "\n";
}

json torsion_json(const std::vector<std::vector<Int>>& torsion) {
    json t = json::array();
    for (const auto& level : torsion) {
        json row = json::array();
        for (const auto& d : level) row.push_back(d.str());
        t.push_back(row);
    }
    return t;
}

int run_validate(const Common& c) {
    Ctx ctx;
    if (c.lattice_file.empty() == c.builtin.empty()) {
        std::cerr << "exactly one of --lattice or --builtin is required\n";
        return 1;
    }
    std::vector<std::string> errors;
    if (!c.builtin.empty()) {
        ctx.lat = make_builtin(c.builtin);
    } else {
        ParseResult pr = parse_lattice_file(c.lattice_file);
        if (!pr.ok()) {
            for (const auto& d : pr.diagnostics) errors.push_back(d.render(c.lattice_file));
        } else {
            ctx.lat = std::move(pr.lattice);
        }
    }
    if (errors.empty()) {
        for (const std::string& dotted : c.nulls) {
            auto p = ctx.lat.parse_path(dotted);
            if (!p) {
                std::cerr << "--null path does not name arrows: " << dotted << "\n";
                return 1;
            }
            ctx.lat.null_marks.push_back(*p);
        }
        ValidationReport rep = validate(ctx.lat);
        errors.insert(errors.end(), rep.errors.begin(), rep.errors.end());
    }
    if (!errors.empty()) {
        if (c.as_json) {
            emit(c, json{{"ok", false}, {"errors", errors}});
        } else {
            for (const auto& e : errors) std::cerr << e << "\n";
        }
        return 2;
    }
    MorphismTable tab = MorphismTable::build(ctx.lat);
    ClassId maximal = tab.classes_between(ctx.lat.init, ctx.lat.fin).front();
    if (c.as_json) {
        emit(c, json{{"ok", true},
                     {"nodes", ctx.lat.nodes.size()},
                     {"arrows", ctx.lat.arrows.size()},
                     {"classes", tab.classes().size()},
                     {"maximal", tab.label(maximal)}});
    } else {
        std::ostringstream os;
        os << "ok: " << ctx.lat.nodes.size() << " nodes, " << ctx.lat.arrows.size() << " arrows, "
           << tab.classes().size() << " morphism classes, maximal class " << tab.label(maximal)
           << "\n";
        emit(c, os.str());
    }
    return 0;
}

int run_complex(const Common& c, int mode, int k) {  // mode 0 complex, 1 basis, 2 skeleton
    Ctx ctx;
    if (int rc = load_lattice(c, ctx)) return rc;
    HomComplex h = HomComplex::build(ctx.lat, *ctx.tab, ctx.from, ctx.to);
    if (mode == 1) h = h.basis_subcomplex();
    if (mode == 2) h = h.skeleton(k);
    if (c.as_json) {
        emit(c, complex_to_json(h));
    } else {
        emit(c, fvec_text(h.f_vector()));
    }
    return 0;
}

int run_homology(const Common& c, bool reduced) {
    Ctx ctx;
    if (int rc = load_lattice(c, ctx)) return rc;
    HomComplex h = HomComplex::build(ctx.lat, *ctx.tab, ctx.from, ctx.to);
    HomologyResult hom = homology(h.face_poset(), {}, reduced);
    if (c.as_json) {
        emit(c, json{{"reduced", reduced},
                     {"betti", hom.betti},
                     {"torsion", torsion_json(hom.torsion)}});
        return 0;
    }
    std::ostringstream os;
    os << "betti:";
    for (long b : hom.betti) os << " " << b;
    os << "\n";
    if (hom.torsion_free()) {
        os << "torsion: none\n";
    } else {
        for (size_t kk = 0; kk < hom.torsion.size(); ++kk) {
            if (hom.torsion[kk].empty()) continue;
            os << "torsion[" << kk << "]:";
            for (const auto& d : hom.torsion[kk]) os << " " << d.str();
            os << "\n";
        }
    }
    emit(c, os.str());
    return 0;
}

int run_simplified(const Common& c) {
    Ctx ctx;
    if (int rc = load_lattice(c, ctx)) return rc;
    HomComplex h = HomComplex::build(ctx.lat, *ctx.tab, ctx.from, ctx.to);
    QuotientComplex q = simplified_basis(h);
    if (c.as_json) {
        emit(c, json{{"betti", q.quotient_betti},
                     {"relative_betti", q.relative.betti},
                     {"relative_torsion", torsion_json(q.relative.torsion)},
                     {"collapsed_cells", q.collapsed_cells.size()},
                     {"fvector", q.f_vector()},
                     {"log", q.collapse_log},
                     {"notes", q.notes}});
        return 0;
    }
    std::ostringstream os;
    os << "quotient betti:";
    for (long b : q.quotient_betti) os << " " << b;
    os << "\nrelative betti (reduced):";
    for (long b : q.relative.betti) os << " " << b;
    os << "\ncollapsed cells: " << q.collapsed_cells.size() << "\n";
    for (const auto& note : q.notes) os << "note: " << note << "\n";
    emit(c, os.str());
    return 0;
}

int run_quotient(const Common& c) {
    Ctx ctx;
    if (int rc = load_lattice(c, ctx)) return rc;
    HomComplex h = HomComplex::build(ctx.lat, *ctx.tab, ctx.from, ctx.to);
    QuotientComplex q = strict_quotient(h);
    if (c.as_json) {
        json classes = json::array();
        for (const auto& cls : q.vertex_classes) {
            json row = json::array();
            for (int id : cls) row.push_back(q.base.label(id));
            classes.push_back(row);
        }
        emit(c, json{{"vertex_classes", classes},
                     {"fvector", q.f_vector()},
                     {"collapse_log", q.collapse_log},
                     {"notes", q.notes}});
        return 0;
    }
    std::ostringstream os;
    os << "vertex classes: " << q.vertex_classes.size() << "\n";
    for (size_t i = 0; i < q.vertex_classes.size(); ++i) {
        os << "class " << i << " (" << q.vertex_classes[i].size() << "):";
        for (int id : q.vertex_classes[i]) os << " " << q.base.label(id);
        os << "\n";
    }
    os << "f-vector: " << fvec_text(q.f_vector());
    for (const auto& line : q.collapse_log) os << "collapse: " << line << "\n";
    for (const auto& note : q.notes) os << "note: " << note << "\n";
    emit(c, os.str());
    return 0;
}

int run_indecomposables(const Common& c, int dim) {
    Ctx ctx;
    if (int rc = load_lattice(c, ctx)) return rc;
    HomComplex h = HomComplex::build(ctx.lat, *ctx.tab, ctx.from, ctx.to);
    std::vector<int> ids = indecomposable_cubes(h, dim);
    if (c.as_json) {
        json cells = json::array();
        for (int id : ids) cells.push_back({{"id", id}, {"label", h.label(id)}});
        emit(c, json{{"dim", dim}, {"cells", cells}});
        return 0;
    }
    std::ostringstream os;
    os << ids.size() << " indecomposable " << dim << "-cells\n";
    for (int id : ids) os << h.label(id) << "\n";
    emit(c, os.str());
    return 0;
}

int run_pairs(const Common& c, int dim) {
    Ctx ctx;
    if (int rc = load_lattice(c, ctx)) return rc;
    HomComplex h = HomComplex::build(ctx.lat, *ctx.tab, ctx.from, ctx.to);
    std::vector<ObstructionPair> pairs = obstruction_pairs(h, dim);
    if (c.as_json) {
        json rows = json::array();
        for (const auto& p : pairs)
            rows.push_back({{"a", p.a},
                            {"b", p.b},
                            {"meet", p.meet},
                            {"a_label", h.label(p.a)},
                            {"b_label", h.label(p.b)},
                            {"meet_label", h.label(p.meet)}});
        emit(c, json{{"dim", dim}, {"pairs", rows}});
        return 0;
    }
    std::ostringstream os;
    os << pairs.size() << " pairs at cube dimension " << dim << "\n";
    for (const auto& p : pairs)
        os << h.label(p.a) << " , " << h.label(p.b) << " -> " << h.label(p.meet) << "\n";
    emit(c, os.str());
    return 0;
}

int run_family(const Common& c, const std::string& target) {
    auto pos = target.find(':');
    std::string kind = target.substr(0, pos);
    int n = -1;
    if (pos != std::string::npos) n = std::stoi(target.substr(pos + 1));
    if (kind == "pe" || kind == "assoc") {
        if (n < 0) throw std::invalid_argument("family " + kind + " needs a size, e.g. " + kind + ":2");
        FacePoset poset = kind == "pe" ? permutohedron_faces(n).poset : associahedron_faces(n).poset;
        if (c.as_json) {
            json faces = json::array();
            for (const auto& e : poset.elems) faces.push_back({{"dim", e.dim}, {"label", e.label}});
            emit(c, json{{"kind", kind}, {"n", n}, {"fvector", poset.f_vector()}, {"faces", faces}});
        } else {
            emit(c, fvec_text(poset.f_vector()));
        }
        return 0;
    }
    if (kind == "tonks") {
        if (n < 0) throw std::invalid_argument("family tonks needs a size, e.g. tonks:2");
        TonksMap map = tonks_collapse(n);
        if (c.as_json) {
            json rows = json::array();
            for (int id : map.collapsed)
                rows.push_back({{"label", map.pe.poset.elems[id].label},
                                {"dim", map.pe.poset.elems[id].dim},
                                {"image", map.assoc.poset.elems[map.image[id]].label},
                                {"image_dim", map.assoc.poset.elems[map.image[id]].dim}});
            emit(c, json{{"n", n},
                         {"collapsed", rows},
                         {"image_fvector", map.assoc.poset.f_vector()}});
            return 0;
        }
        std::ostringstream os;
        os << "collapsed faces: " << map.collapsed.size() << "\n";
        for (int id : map.collapsed)
            os << map.pe.poset.elems[id].label << " (dim " << map.pe.poset.elems[id].dim << ") -> "
               << map.assoc.poset.elems[map.image[id]].label << " (dim "
               << map.assoc.poset.elems[map.image[id]].dim << ")\n";
        os << "image f-vector: " << fvec_text(map.assoc.poset.f_vector());
        emit(c, os.str());
        return 0;
    }
    if (kind == "simplex" || kind == "cube" || kind == "mapping-simplex") {
        if (n < 0) throw std::invalid_argument("family " + kind + " needs a size");
        FamilyCheckReport rep = family_quotient_check(kind, n);
        if (c.as_json) {
            emit(c, json{{"kind", rep.kind},
                         {"n", rep.n},
                         {"expected", rep.expected},
                         {"classes", rep.classes},
                         {"ok", rep.ok()}});
        } else {
            std::ostringstream os;
            os << rep.summary() << "\n";
            for (size_t i = 0; i < rep.classes.size(); ++i) {
                os << "class " << i << ":";
                for (const auto& lbl : rep.classes[i]) os << " " << lbl;
                os << "\n";
            }
            emit(c, os.str());
        }
        return rep.ok() ? 0 : 2;
    }
    throw std::invalid_argument("unknown family target: " + target);
}

int run_export(const Common& c, const std::string& format, const std::string& family) {
    if (format == "off") {
        if (family.empty())
            throw std::invalid_argument("off export needs --family pe:3 or --family assoc:3");
        auto pos = family.find(':');
        std::string kind = family.substr(0, pos);
        int n = pos == std::string::npos ? -1 : std::stoi(family.substr(pos + 1));
        emit(c, off_realization(kind, n));
        return 0;
    }
    if (!family.empty())
        throw std::invalid_argument("--family applies to the off format only");
    Ctx ctx;
    if (format == "dot") {
        if (int rc = load_lattice(c, ctx, /*build_table=*/false)) return rc;
        emit(c, lattice_to_dot(ctx.lat));
        return 0;
    }
    if (format == "json") {
        if (int rc = load_lattice(c, ctx)) return rc;
        HomComplex h = HomComplex::build(ctx.lat, *ctx.tab, ctx.from, ctx.to);
        emit(c, complex_to_json(h));
        return 0;
    }
    throw std::invalid_argument("unknown export format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mapping complexes of finite presented lattices"};
    app.require_subcommand(1);

    Common c_validate, c_complex, c_basis, c_skeleton, c_homology, c_simplified, c_quotient,
        c_indec, c_pairs, c_family, c_export;
    int skeleton_k = 0, indec_dim = 0, pairs_dim = 1;
    bool reduced = false;
    std::string family_target, export_format, export_family;

    auto* sub_validate = app.add_subcommand("validate", "check a lattice presentation");
    add_common(sub_validate, c_validate, /*endpoints=*/false);
    sub_validate->add_option("--null", c_validate.nulls, "extra null mark, dotted path");

    auto* sub_complex = app.add_subcommand("complex", "f-vector (or JSON) of the cell complex");
    add_common(sub_complex, c_complex);

    auto* sub_basis = app.add_subcommand("basis", "the decomposable subcomplex");
    add_common(sub_basis, c_basis);

    auto* sub_skeleton = app.add_subcommand("skeleton", "cells of dimension <= k");
    add_common(sub_skeleton, c_skeleton);
    sub_skeleton->add_option("--k", skeleton_k, "top dimension kept")->required();

    auto* sub_homology = app.add_subcommand("homology", "integer homology of the complex");
    add_common(sub_homology, c_homology);
    sub_homology->add_flag("--reduced", reduced, "reduced homology");

    auto* sub_simplified = app.add_subcommand("simplified",
                                              "null cells of the basis collapsed to a point");
    add_common(sub_simplified, c_simplified);

    auto* sub_quotient = app.add_subcommand("quotient", "identify vertices along strict relations");
    add_common(sub_quotient, c_quotient);

    auto* sub_indec = app.add_subcommand("indecomposables", "indecomposable cube cells");
    add_common(sub_indec, c_indec);
    sub_indec->add_option("--dim", indec_dim, "cube dimension")->required();

    auto* sub_pairs = app.add_subcommand("pairs", "obstruction pairs of indecomposable cubes");
    add_common(sub_pairs, c_pairs);
    sub_pairs->add_option("--dim", pairs_dim, "cube dimension")->required();

    auto* sub_family = app.add_subcommand("family", "polytope families and quotient checks");
    sub_family->add_option("target", family_target,
                           "pe:n | assoc:n | tonks:n | simplex:n | cube:n | mapping-simplex:n")
        ->required();
    add_common(sub_family, c_family, /*endpoints=*/false);

    auto* sub_export = app.add_subcommand("export", "write json, dot, or off output");
    add_common(sub_export, c_export);
    sub_export->add_option("--format", export_format, "json | dot | off")->required();
    sub_export->add_option("--family", export_family, "off target: pe:3 | assoc:3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*sub_validate) return run_validate(c_validate);
        if (*sub_complex) return run_complex(c_complex, 0, 0);
        if (*sub_basis) return run_complex(c_basis, 1, 0);
        if (*sub_skeleton) return run_complex(c_skeleton, 2, skeleton_k);
        if (*sub_homology) return run_homology(c_homology, reduced);
        if (*sub_simplified) return run_simplified(c_simplified);
        if (*sub_quotient) return run_quotient(c_quotient);
        if (*sub_indec) return run_indecomposables(c_indec, indec_dim);
        if (*sub_pairs) return run_pairs(c_pairs, pairs_dim);
        if (*sub_family) return run_family(c_family, family_target);
        if (*sub_export) return run_export(c_export, export_format, export_family);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}
