#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "wlat/cells.hpp"
#include "wlat/families.hpp"
#include "wlat/simplicial.hpp"

using namespace wlat;

namespace {

SimplicialModel model_of(const Lattice& lat, const MorphismTable& tab) {
    return SimplicialModel::build(lat, tab, lat.init, lat.fin);
}

void check_dd_zero(const ChainComplex& cc) {
    for (size_t k = 1; k + 1 < cc.boundary.size(); ++k) {
        const SparseMat& a = cc.boundary[k];
        const SparseMat& b = cc.boundary[k + 1];
        std::map<std::pair<int, int>, Int> prod;
        for (size_t r = 0; r < a.size(); ++r)
            for (const auto& [mid, av] : a[r])
                for (const auto& [c, bv] : b[mid]) prod[{static_cast<int>(r), c}] += av * bv;
        for (const auto& [rc, v] : prod) CHECK(v == 0);
    }
}

}  // namespace

TEST_CASE("simplex census of the two-step chain") {
    Lattice lat = make_lattice("chain", 3);
    MorphismTable tab = MorphismTable::build(lat);
    SimplicialModel m = model_of(lat, tab);
    CHECK(m.f_vector() == std::vector<int>{4, 5, 2});
    CHECK(m.euler() == 1);
    CHECK(m.dim() == 2);

    // vertices are exactly the chains with no marked positions
    for (const WsSimplex& s : m.levels()[0]) CHECK(s.parts.empty());
    CHECK(m.levels()[0].size() == enumerate_chains(tab, lat.init, lat.fin).size());
}

TEST_CASE("faces satisfy the simplicial identities") {
    for (const char* kind : {"chain", "cosimplicial", "toda"}) {
        Lattice lat = kind[0] == 'c' && kind[1] == 'h' ? make_lattice(kind, 4)
                      : kind[0] == 'c'                 ? make_lattice(kind, 2)
                                                       : make_lattice(kind);
        MorphismTable tab = MorphismTable::build(lat);
        SimplicialModel m = model_of(lat, tab);
        for (int r = 1; r <= m.dim(); ++r) {
            for (const WsSimplex& s : m.levels()[r]) {
                for (int j = 0; j <= r; ++j) {
                    WsSimplex f = m.face(s, j);
                    CHECK(f.dim() == r - 1);
                    CHECK(m.index_of(f) >= 0);
                }
                // d_i d_j = d_{j-1} d_i for i < j (needs two face maps, so r >= 2)
                if (r >= 2)
                    for (int j = 1; j <= r; ++j)
                        for (int i = 0; i < j; ++i)
                            CHECK(m.face(m.face(s, j), i) == m.face(m.face(s, i), j - 1));
            }
        }
    }
}

TEST_CASE("first face composes marked positions away") {
    Lattice lat = make_lattice("chain", 3);
    MorphismTable tab = MorphismTable::build(lat);
    SimplicialModel m = model_of(lat, tab);

    Chain top = {tab.class_of(*lat.parse_path("f1")), tab.class_of(*lat.parse_path("f2")),
                 tab.class_of(*lat.parse_path("f3"))};
    WsSimplex s{top, {{1}, {2}}};
    REQUIRE(m.index_of(s) >= 0);

    WsSimplex d0 = m.face(s, 0);  // compose at position 1, then renumber
    CHECK(d0.chain == Chain{tab.class_of(*lat.parse_path("f1.f2")),
                            tab.class_of(*lat.parse_path("f3"))});
    CHECK(d0.parts == std::vector<std::vector<int>>{{1}});

    WsSimplex d1 = m.face(s, 1);  // merge the two parts
    CHECK(d1.chain == top);
    CHECK(d1.parts == std::vector<std::vector<int>>{{1, 2}});

    WsSimplex d2 = m.face(s, 2);  // drop the last part
    CHECK(d2.chain == top);
    CHECK(d2.parts == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("boundary operators compose to zero and give cone homology") {
    Lattice lat = make_lattice("chain", 4);
    MorphismTable tab = MorphismTable::build(lat);
    SimplicialModel m = model_of(lat, tab);
    ChainComplex cc = m.chain_complex();
    check_dd_zero(cc);
    CHECK(m.homology().betti == std::vector<long>{1, 0, 0, 0});
    HomologyResult red = m.homology(true);
    for (long b : red.betti) CHECK(b == 0);
}

TEST_CASE("the two models of the same mapping space agree") {
    auto run = [](const Lattice& lat) {
        CAPTURE(lat.name);
        MorphismTable tab = MorphismTable::build(lat);
        HomComplex cells = HomComplex::build(lat, tab, lat.init, lat.fin);
        SimplicialModel simp = model_of(lat, tab);
        ModelComparison cmp = compare_models(cells, simp);
        CHECK(cmp.agree);
        CHECK(cmp.euler_cells == cmp.euler_simplices);
        CHECK(cmp.vertices_cells == cmp.vertices_simplices);
        CHECK(cmp.betti_cells == cmp.betti_simplices);
        CHECK_FALSE(cmp.report().empty());
    };
    for (int n = 2; n <= 4; ++n) run(make_lattice("chain", n));
    run(make_lattice("cosimplicial", 1));
    run(make_lattice("cosimplicial", 2));
    run(make_lattice("powerset", 2));
    run(make_lattice("mapping", 1));
    run(make_lattice("toda"));
}

TEST_CASE("absent simplices have no index") {
    Lattice lat = make_lattice("chain", 3);
    MorphismTable tab = MorphismTable::build(lat);
    SimplicialModel m = model_of(lat, tab);
    WsSimplex bogus{{0, 0}, {}};
    CHECK(m.index_of(bogus) == -1);
}
