#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "wlat/dsl.hpp"
#include "wlat/families.hpp"
#include "wlat/quotient.hpp"

using namespace wlat;

namespace {

HomComplex complex_of(const Lattice& lat, const MorphismTable& tab) {
    return HomComplex::build(lat, tab, lat.init, lat.fin);
}

std::set<std::string> collapsed_labels(const QuotientComplex& q) {
    std::set<std::string> out;
    for (int id : q.collapsed_cells) out.insert(q.base.label(id));
    return out;
}

}  // namespace

TEST_CASE("two null marks on the two-step chain leave a circle") {
    Lattice lat = make_lattice("chain", 3);
    lat.null_marks = {*lat.parse_path("f1.f2"), *lat.parse_path("f2.f3")};
    MorphismTable tab = MorphismTable::build(lat);
    QuotientComplex q = simplified_basis(complex_of(lat, tab));

    CHECK(q.quotient_betti == std::vector<long>{1, 1});
    CHECK(q.relative.betti == std::vector<long>{0, 1});
    CHECK(q.relative.torsion_free());
    CHECK(collapsed_labels(q) == std::set<std::string>{"(f1)(f2.f3)", "(f1.f2)(f3)"});
    CHECK_FALSE(q.collapse_log.empty());
    CHECK(q.notes.empty());

    // surviving cells: one ordinary vertex and both edges (the collapse
    // point itself is not a base cell, so it is not counted here)
    CHECK(q.f_vector() == std::vector<int>{1, 2});
}

TEST_CASE("all length-two nulls on the three-step chain leave a sphere") {
    Lattice lat = make_lattice("chain", 4);
    lat.null_marks = {*lat.parse_path("f1.f2"), *lat.parse_path("f2.f3"),
                      *lat.parse_path("f3.f4")};
    MorphismTable tab = MorphismTable::build(lat);
    QuotientComplex q = simplified_basis(complex_of(lat, tab));

    CHECK(q.quotient_betti == std::vector<long>{1, 0, 1});
    CHECK(q.relative.betti == std::vector<long>{0, 0, 1});
    CHECK(q.collapsed_cells.size() == 12);

    // every collapsed cell mentions a null class; every survivor does not
    for (int id = 0; id < q.base.size(); ++id) {
        const Cell& c = q.base.cell(id);
        bool touches_null = std::any_of(c.chain.begin(), c.chain.end(),
                                        [&](ClassId x) { return tab.is_null(x); });
        bool collapsed = std::find(q.collapsed_cells.begin(), q.collapsed_cells.end(), id) !=
                         q.collapsed_cells.end();
        if (c.breaks != 0) CHECK(collapsed == touches_null);
    }
}

TEST_CASE("the triple-bracket lattice simplifies to a circle") {
    Lattice lat = make_lattice("toda");
    MorphismTable tab = MorphismTable::build(lat);
    QuotientComplex q = simplified_basis(complex_of(lat, tab));
    CHECK(q.quotient_betti == std::vector<long>{1, 1});
    CHECK(q.relative.betti == std::vector<long>{0, 1});
    CHECK(collapsed_labels(q) ==
          std::set<std::string>{"(alpha)(beta.gamma)", "(alpha.beta)(gamma)"});
}

TEST_CASE("no null marks: nothing collapses and the quotient is the basis") {
    Lattice lat = make_lattice("chain", 3);
    MorphismTable tab = MorphismTable::build(lat);
    HomComplex h = complex_of(lat, tab);
    QuotientComplex q = simplified_basis(h);
    CHECK(q.collapsed_cells.empty());
    CHECK(q.f_vector() == h.basis_subcomplex().f_vector());
    CHECK(q.quotient_betti == std::vector<long>{1, 0});
    for (long b : q.relative.betti) CHECK(b == 0);
}

TEST_CASE("strict quotient with no marks is the identity") {
    Lattice lat = make_lattice("cosimplicial", 2);
    MorphismTable tab = MorphismTable::build(lat);
    HomComplex h = complex_of(lat, tab);
    QuotientComplex q = strict_quotient(h);
    CHECK(q.f_vector() == h.f_vector());
    CHECK(q.vertex_classes.size() == 6);  // one class per generator chain
    for (const auto& cls : q.vertex_classes) CHECK(cls.size() == 1);
    CHECK(q.notes.empty());
}

TEST_CASE("strict coface identities fold the square complex onto a triangle") {
    ParseResult r = parse_lattice_file(fixture_path("simplex_check2.lat"));
    REQUIRE(r.ok());
    MorphismTable tab = MorphismTable::build(r.lattice);
    QuotientComplex q = strict_quotient(complex_of(r.lattice, tab));

    REQUIRE(q.vertex_classes.size() == 3);
    auto labels = [&](int k) {
        std::set<std::string> out;
        for (int id : q.vertex_classes[k]) out.insert(q.base.label(id));
        return out;
    };
    CHECK(labels(0) == std::set<std::string>{"(eps)(d1_0)(d2_0)", "(eps)(d1_0)(d2_1)"});
    CHECK(labels(1) == std::set<std::string>{"(eps)(d1_0)(d2_2)", "(eps)(d1_1)(d2_0)"});
    CHECK(labels(2) == std::set<std::string>{"(eps)(d1_1)(d2_1)", "(eps)(d1_1)(d2_2)"});
    CHECK(q.f_vector() == std::vector<int>{10, 15, 6});
}

TEST_CASE("strict quotients of the shipped check fixtures") {
    auto classes_of = [](const std::string& file) {
        ParseResult r = parse_lattice_file(fixture_path(file));
        REQUIRE(r.ok());
        MorphismTable tab = MorphismTable::build(r.lattice);
        QuotientComplex q = strict_quotient(complex_of(r.lattice, tab));
        std::vector<size_t> sizes;
        for (const auto& cls : q.vertex_classes) sizes.push_back(cls.size());
        std::sort(sizes.begin(), sizes.end());
        return std::pair{q.vertex_classes.size(), sizes};
    };
    CHECK(classes_of("cube_check2.lat").first == 4);
    auto [count, sizes] = classes_of("mapping_check1.lat");
    CHECK(count == 3);
    CHECK(sizes == std::vector<size_t>{1, 2, 3});
}

TEST_CASE("collapsed ids always carry a nonempty break set") {
    Lattice lat = make_lattice("whitehead");
    MorphismTable tab = MorphismTable::build(lat);
    QuotientComplex q = simplified_basis(complex_of(lat, tab));
    for (int id : q.collapsed_cells) CHECK(q.base.cell(id).breaks != 0);
    CHECK(q.relative.betti.size() >= 1);
}
