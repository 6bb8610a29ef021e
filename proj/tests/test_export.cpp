#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "json.hpp"
#include "wlat/export.hpp"
#include "wlat/families.hpp"

using namespace wlat;
using nlohmann::json;

namespace {

HomComplex complex_of(const Lattice& lat, const MorphismTable& tab) {
    return HomComplex::build(lat, tab, lat.init, lat.fin);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("complex serialization survives re-ingestion") {
    for (const char* kind : {"chain", "toda"}) {
        Lattice lat = kind[0] == 'c' ? make_lattice(kind, 3) : make_lattice(kind);
        MorphismTable tab = MorphismTable::build(lat);
        HomComplex h = complex_of(lat, tab);
        json j = complex_to_json(h);

        CHECK(j["format_version"] == 1);
        CHECK(j["cells"].size() == static_cast<size_t>(h.size()));
        std::string why;
        CHECK(json_matches_complex(j, h, &why));
        CHECK(why.empty());
    }
}

TEST_CASE("tampered serializations are refused with a reason") {
    Lattice lat = make_lattice("chain", 3);
    MorphismTable tab = MorphismTable::build(lat);
    HomComplex h = complex_of(lat, tab);
    json good = complex_to_json(h);

    json bad = good;
    bad["cells"][1]["id"] = 99;
    std::string why;
    CHECK_FALSE(json_matches_complex(bad, h, &why));
    CHECK_FALSE(why.empty());

    bad = good;
    bad["cells"][2]["chain"] = json::array({"f1"});
    CHECK_FALSE(json_matches_complex(bad, h, &why));

    bad = good;
    bad["faces"].erase(0);
    CHECK_FALSE(json_matches_complex(bad, h, &why));

    bad = good;
    bad["fvector"] = json::array({1, 2, 3});
    CHECK_FALSE(json_matches_complex(bad, h, &why));

    bad = good;
    REQUIRE(bad["cells"][0]["breaks"].is_array());
    bad["cells"][0]["dim"] = 7;
    CHECK_FALSE(json_matches_complex(bad, h, &why));
}

TEST_CASE("generator graphs in dot form") {
    std::string dot = lattice_to_dot(make_lattice("toda"));
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(count_occurrences(dot, "doublecircle") == 2);
    CHECK(count_occurrences(dot, "[label=") == 6);
    CHECK(count_occurrences(dot, "// rel:") == 4);
    CHECK(count_occurrences(dot, "// null:") == 3);
    CHECK(dot.find("alpha") != std::string::npos);

    std::string chain = lattice_to_dot(make_lattice("chain", 4));
    CHECK(count_occurrences(chain, "[label=") == 4);
    CHECK(count_occurrences(chain, "// rel:") == 0);
}

TEST_CASE("three dimensional realizations have closed polygonal boundaries") {
    auto check_off = [](const std::string& text, int nv, int nf, int ne) {
        auto lines = lines_of(text);
        REQUIRE(lines.size() >= 2);
        CHECK(lines[0] == "OFF");
        std::istringstream head(lines[1]);
        int v = 0, f = 0, e = 0;
        head >> v >> f >> e;
        CHECK(v == nv);
        CHECK(f == nf);
        CHECK(e == ne);
        REQUIRE(lines.size() == static_cast<size_t>(2 + v + f));

        std::set<std::vector<double>> verts;
        for (int i = 0; i < v; ++i) {
            std::istringstream row(lines[2 + i]);
            std::vector<double> x(3);
            REQUIRE((row >> x[0] >> x[1] >> x[2]));
            verts.insert(x);
        }
        CHECK(verts.size() == static_cast<size_t>(v));  // no duplicate corners

        // every face row: count then that many distinct vertex indices
        long edge_incidences = 0;
        for (int i = 0; i < f; ++i) {
            std::istringstream row(lines[2 + v + i]);
            int k = 0;
            REQUIRE((row >> k));
            CHECK(k >= 3);
            std::set<int> ids;
            for (int t = 0; t < k; ++t) {
                int id = -1;
                REQUIRE((row >> id));
                CHECK(id >= 0);
                CHECK(id < v);
                ids.insert(id);
            }
            CHECK(ids.size() == static_cast<size_t>(k));
            edge_incidences += k;
        }
        // faces of a closed surface traverse each edge exactly twice
        CHECK(edge_incidences == 2 * e);
    };

    check_off(off_realization("pe", 3), 24, 14, 36);
    check_off(off_realization("assoc", 3), 14, 9, 21);

    CHECK_THROWS_AS(off_realization("pe", 2), std::invalid_argument);
    CHECK_THROWS_AS(off_realization("simplex", 3), std::invalid_argument);
}
