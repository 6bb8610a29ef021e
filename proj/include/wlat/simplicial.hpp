#pragma once

// Simplicial model of the same mapping complex: an r-simplex is a chain of
// morphism classes together with an ordered partition (U_1, .., U_r) of a
// subset of its internal positions.  Face d_0 composes the chain at the U_1
// positions, inner faces merge consecutive parts, and d_r forgets U_r.  Its
// homology must agree with the cubical model's; compare_models checks that.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wlat/cells.hpp"
#include "wlat/homology.hpp"
#include "wlat/lattice.hpp"

namespace wlat {

struct WsSimplex {
    Chain chain;
    std::vector<std::vector<int>> parts;  // nonempty, disjoint, sorted inside

    int dim() const { return static_cast<int>(parts.size()); }
    bool operator==(const WsSimplex& other) const = default;
};

class SimplicialModel {
  public:
    static SimplicialModel build(const Lattice& lat, const MorphismTable& tab, NodeId from,
                                 NodeId to);

    const MorphismTable& table() const { return *tab_; }
    int dim() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<std::vector<WsSimplex>>& levels() const { return levels_; }

    std::vector<int> f_vector() const;
    long euler() const;

    // j in 0..s.dim(); the result has dimension s.dim() - 1
    WsSimplex face(const WsSimplex& s, int j) const;
    // position within its level; -1 if absent
    int index_of(const WsSimplex& s) const;

    ChainComplex chain_complex() const;
    HomologyResult homology(bool reduced = false) const;

  private:
    using Key = std::pair<Chain, std::vector<std::vector<int>>>;

    const MorphismTable* tab_ = nullptr;
    std::vector<std::vector<WsSimplex>> levels_;
    std::vector<std::map<Key, int>> index_;
};

struct ModelComparison {
    long euler_cells = 0;
    long euler_simplices = 0;
    int vertices_cells = 0;
    int vertices_simplices = 0;
    std::vector<long> betti_cells;      // zero-padded to a common length
    std::vector<long> betti_simplices;
    bool agree = false;

    std::string report() const;
};

ModelComparison compare_models(const HomComplex& cells, const SimplicialModel& simp);

}  // namespace wlat
