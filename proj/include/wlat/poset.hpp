#pragma once

// Graded face posets shared by cell complexes, polytope families, and
// quotients, plus the order complex used for homology.

#include <string>
#include <vector>

namespace wlat {

struct FacePoset {
    struct Elem {
        int dim = 0;
        std::string label;
    };

    std::vector<Elem> elems;
    std::vector<std::vector<int>> covers;  // covers[i] = facets of i (dim - 1), sorted

    int size() const { return static_cast<int>(elems.size()); }
    int dim() const;
    std::vector<int> f_vector() const;
    long euler() const;

    // Strict down-set of each element (every id strictly below it), sorted.
    std::vector<std::vector<int>> down_sets() const;
};

// The order complex: one d-simplex per strictly increasing chain of d+1
// poset elements.  Its geometric realization is the barycentric subdivision
// of a regular complex, so homology computed here is the complex's homology.
struct OrderComplex {
    // simplices[d][i] = chain of d+1 element ids, ascending by the order.
    std::vector<std::vector<std::vector<int>>> simplices;

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    static OrderComplex build(const FacePoset& poset);
};

}  // namespace wlat
