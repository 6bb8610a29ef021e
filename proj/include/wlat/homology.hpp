#pragma once

// Integer homology via Smith normal form.  Matrices are kept sparse
// (row -> column -> value) because boundary matrices of the order complex
// have a handful of entries per column; exact arithmetic uses cpp_int so
// intermediate entries may grow without overflow.

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wlat/poset.hpp"

namespace wlat {

using Int = boost::multiprecision::cpp_int;

using SparseMat = std::vector<std::map<int, Int>>;  // rows[r][c] = value, nonzero only

struct SmithResult {
    int rank = 0;
    std::vector<Int> divisors;  // nonzero diagonal entries, each divides the next
};

SmithResult smith_normal_form(SparseMat rows, int ncols);

// boundary[k] maps k-chains to (k-1)-chains; its rows are indexed by
// (k-1)-cells and columns by k-cells.  boundary[0] has no rows.
struct ChainComplex {
    std::vector<int> sizes;             // sizes[k] = number of k-cells
    std::vector<SparseMat> boundary;    // boundary.size() == sizes.size()
};

struct HomologyResult {
    std::vector<long> betti;
    std::vector<std::vector<Int>> torsion;  // torsion[k] = invariant factors > 1

    bool torsion_free() const;
};

HomologyResult homology(const ChainComplex& cc, bool reduced = false);

// Homology of the order complex of a face poset.  A nonempty `sub` lists
// poset elements spanning a closed subcomplex; simplices lying entirely in
// it are dropped, which computes the homology of the pair.  `reduced` only
// applies to the absolute case.
HomologyResult homology(const FacePoset& poset, const std::vector<int>& sub = {},
                        bool reduced = false);

// Chain complex of an explicit simplex list where faces are vertex subsets
// (simplices[d][i] = sorted vertex ids; every face must be present).
ChainComplex subset_face_chain_complex(const std::vector<std::vector<std::vector<int>>>& simplices);

}  // namespace wlat
