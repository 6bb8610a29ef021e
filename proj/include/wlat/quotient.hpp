#pragma once

// Two quotients of a hom complex.  simplified_basis collapses every basis
// cell whose chain mentions a null class to a single point and reports the
// quotient's homology as the relative homology of the pair.  strict_quotient
// identifies vertices that differ by an application of a relation marked
// strict, then propagates the identification to higher cells through their
// vertex sets.

#include <string>
#include <vector>

#include "wlat/cells.hpp"
#include "wlat/homology.hpp"

namespace wlat {

struct QuotientComplex {
    HomComplex base;

    // rep[id] = surviving cell the id maps to, or -1 when the cell is
    // collapsed to the distinguished point (simplified quotient only).
    std::vector<int> rep;
    std::vector<std::vector<int>> surviving;  // per dimension, representative ids
    std::vector<std::string> collapse_log;
    std::vector<std::string> notes;  // irregularities, never silently dropped

    std::vector<int> f_vector() const;

    // simplified_basis outputs
    std::vector<int> collapsed_cells;  // the null subcomplex, cell ids in base
    HomologyResult relative;           // homology of the pair = reduced homology of the quotient
    std::vector<long> quotient_betti;  // unreduced Betti numbers of the quotient

    // strict_quotient outputs: classes of the fully decomposed vertices
    // (every chain entry a generator class); these are the vertices of the
    // minimal polytope models.
    std::vector<std::vector<int>> vertex_classes;
};

// h is the full (init, fin) complex; its basis is taken inside.
QuotientComplex simplified_basis(const HomComplex& h);

QuotientComplex strict_quotient(const HomComplex& h);

}  // namespace wlat
