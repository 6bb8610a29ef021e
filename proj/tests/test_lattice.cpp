#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "helpers.hpp"
#include "wlat/dsl.hpp"
#include "wlat/families.hpp"
#include "wlat/lattice.hpp"

using namespace wlat;

namespace {

Lattice parse_ok(const std::string& text) {
    ParseResult r = parse_lattice(text);
    REQUIRE(r.ok());
    return r.lattice;
}

bool has_error_containing(const ValidationReport& rep, const std::string& needle) {
    return std::any_of(rep.errors.begin(), rep.errors.end(), [&](const std::string& e) {
        return e.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("path helpers on the triple-bracket lattice") {
    Lattice lat = make_lattice("toda");
    auto p = lat.parse_path("alpha.d");
    REQUIRE(p.has_value());
    CHECK(p->size() == 2);
    CHECK(lat.composable(*p));
    CHECK(lat.path_src(*p) == *lat.node_id("X"));
    CHECK(lat.path_dst(*p) == *lat.node_id("W"));
    CHECK(lat.path_label(*p) == "alpha.d");

    CHECK_FALSE(lat.parse_path("alpha.bogus").has_value());
    CHECK_FALSE(lat.parse_path("").has_value());
    // gamma.alpha does not compose (W then X)
    Path bad = {*lat.arrow_id("gamma"), *lat.arrow_id("alpha")};
    CHECK_FALSE(lat.composable(bad));
    CHECK_FALSE(lat.composable(Path{}));
}

TEST_CASE("validation reports structural defects as values") {
    SUBCASE("empty lattice") {
        Lattice lat;
        CHECK_FALSE(validate(lat).ok());
    }
    SUBCASE("init and fin must differ") {
        Lattice lat = parse_ok("format 1\nnode a b\ninit a\nfin a\narrow f: a -> b\n");
        ValidationReport rep = validate(lat);
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("at least one internal node") {
        Lattice lat = parse_ok("format 1\nnode a x\ninit a\nfin x\narrow f: a -> x\n");
        ValidationReport rep = validate(lat);
        CHECK_FALSE(rep.ok());
        CHECK(has_error_containing(rep, "besides init and fin"));
    }
    SUBCASE("cycles are rejected") {
        Lattice lat = parse_ok(
            "format 1\nnode a b c x\ninit a\nfin x\n"
            "arrow f: a -> b\narrow g: b -> c\narrow h: c -> b\narrow k: c -> x\n");
        ValidationReport rep = validate(lat);
        CHECK_FALSE(rep.ok());
        CHECK(has_error_containing(rep, "cycle"));
    }
    SUBCASE("every node reachable from init") {
        Lattice lat = parse_ok(
            "format 1\nnode a b c x\ninit a\nfin x\n"
            "arrow f: a -> b\narrow g: b -> x\narrow h: c -> x\n");
        ValidationReport rep = validate(lat);
        CHECK_FALSE(rep.ok());
        CHECK(has_error_containing(rep, "reach"));
    }
    SUBCASE("every node reaches fin") {
        Lattice lat = parse_ok(
            "format 1\nnode a b c x\ninit a\nfin x\n"
            "arrow f: a -> b\narrow g: b -> x\narrow h: a -> c\n");
        ValidationReport rep = validate(lat);
        CHECK_FALSE(rep.ok());
        CHECK(has_error_containing(rep, "fin"));
    }
    SUBCASE("relation sides must be parallel") {
        Lattice lat = parse_ok(
            "format 1\nnode a b x\ninit a\nfin x\n"
            "arrow f: a -> b\narrow g: b -> x\n");
        lat.relations.push_back({Path{0}, Path{1}});
        ValidationReport rep = validate(lat);
        CHECK_FALSE(rep.ok());
        CHECK(has_error_containing(rep, "parallel"));
    }
    SUBCASE("null marks must be composable paths") {
        Lattice lat = parse_ok(
            "format 1\nnode a b x\ninit a\nfin x\n"
            "arrow f: a -> b\narrow g: b -> x\n");
        lat.null_marks.push_back(Path{1, 0});
        CHECK_FALSE(validate(lat).ok());
    }
    SUBCASE("strict indices must point at relations") {
        Lattice lat = make_lattice("toda");
        lat.strict_marks.push_back(99);
        ValidationReport rep = validate(lat);
        CHECK_FALSE(rep.ok());
        CHECK(has_error_containing(rep, "strict"));
    }
    SUBCASE("the maximal morphism class must be unique") {
        Lattice lat = parse_ok(
            "format 1\nnode a b x\ninit a\nfin x\n"
            "arrow f: a -> b\narrow g: b -> x\narrow h: b -> x\n");
        ValidationReport rep = validate(lat);
        CHECK_FALSE(rep.ok());
        CHECK(has_error_containing(rep, "maximal"));
    }
    SUBCASE("builtins all validate") {
        for (const char* kind : {"toda", "whitehead"}) CHECK(validate(make_lattice(kind)).ok());
        for (int n = 2; n <= 6; ++n) CHECK(validate(make_lattice("chain", n)).ok());
        for (int n = 1; n <= 3; ++n) {
            CHECK(validate(make_lattice("cosimplicial", n)).ok());
            CHECK(validate(make_lattice("powerset", n)).ok());
        }
        for (int n = 1; n <= 2; ++n) CHECK(validate(make_lattice("mapping", n)).ok());
    }
}

TEST_CASE("morphism classes of the triple-bracket lattice") {
    Lattice lat = make_lattice("toda");
    MorphismTable tab = MorphismTable::build(lat);
    NodeId X = *lat.node_id("X"), Y = *lat.node_id("Y"), W = *lat.node_id("W");

    CHECK(tab.classes().size() == 6);
    CHECK(tab.classes_between(X, W).size() == 1);

    // the two declared rewrites and their consequences
    CHECK(tab.class_of(*lat.parse_path("beta.gamma")) == tab.class_of(*lat.parse_path("d")));
    CHECK(tab.class_of(*lat.parse_path("alpha.beta")) == tab.class_of(*lat.parse_path("e")));
    ClassId maximal = tab.classes_between(X, W)[0];
    CHECK(tab.class_of(*lat.parse_path("alpha.beta.gamma")) == maximal);
    CHECK(tab.class_of(*lat.parse_path("alpha.d")) == maximal);
    CHECK(tab.class_of(*lat.parse_path("e.gamma")) == maximal);
    CHECK(tab.class_of(*lat.parse_path("f")) == maximal);
    CHECK(tab.cls(maximal).paths.size() == 4);

    // canonical representative is the least path, so labels are stable
    CHECK(tab.label(maximal) == "alpha.beta.gamma");
    CHECK(tab.label(tab.class_of(*lat.parse_path("d"))) == "beta.gamma");
    CHECK(tab.label(tab.class_of(*lat.parse_path("e"))) == "alpha.beta");

    // composition respects classes
    ClassId a = tab.class_of(*lat.parse_path("alpha"));
    ClassId d = tab.class_of(*lat.parse_path("d"));
    CHECK(tab.compose(a, d) == maximal);
    CHECK(tab.compose(tab.class_of(*lat.parse_path("e")),
                      tab.class_of(*lat.parse_path("gamma"))) == maximal);

    // null marks, plus upward closure through factorization
    CHECK(tab.is_null(d));
    CHECK(tab.is_null(maximal));
    CHECK_FALSE(tab.is_null(a));
    CHECK(tab.class_of(*lat.parse_path("d")) == tab.class_of(Path{*lat.arrow_id("d")}));

    // chains between X and W: the apex, two length-2 routes, one length-3
    auto chains = enumerate_chains(tab, X, W);
    REQUIRE(chains.size() == 4);
    CHECK(chains[0] == Chain{maximal});
    CHECK(chains[3].size() == 3);
    for (size_t i = 1; i < chains.size(); ++i) CHECK(chains[i - 1].size() <= chains[i].size());

    auto yw = enumerate_chains(tab, Y, W);
    CHECK(yw.size() == 2);  // the null class itself and beta,gamma
}

TEST_CASE("null marks propagate to every composite that factors through them") {
    Lattice lat = make_lattice("chain", 3);
    lat.null_marks.push_back(*lat.parse_path("f1.f2"));
    MorphismTable tab = MorphismTable::build(lat);
    CHECK(tab.is_null(tab.class_of(*lat.parse_path("f1.f2"))));
    CHECK(tab.is_null(tab.class_of(*lat.parse_path("f1.f2.f3"))));
    CHECK_FALSE(tab.is_null(tab.class_of(*lat.parse_path("f1"))));
    CHECK_FALSE(tab.is_null(tab.class_of(*lat.parse_path("f2.f3"))));
}

TEST_CASE("chain lattices have free composition") {
    Lattice lat = make_lattice("chain", 4);
    MorphismTable tab = MorphismTable::build(lat);
    // one class per interval 0 <= i < j <= 4
    CHECK(tab.classes().size() == 10);
    auto chains = enumerate_chains(tab, lat.init, lat.fin);
    CHECK(chains.size() == 8);  // compositions of 4
    CHECK(MorphismTable::build(lat).classes().size() == 10);  // deterministic rebuild
}

TEST_CASE("building a table from an invalid lattice throws") {
    Lattice lat;
    CHECK_THROWS_AS(MorphismTable::build(lat), std::invalid_argument);
}
