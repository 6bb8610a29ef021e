#pragma once

// Points of a hom space with exact rational coordinates.  A point is a
// chain f1,...,fm with parameters t1,...,t_{m-1} in [0,1] sitting between
// consecutive entries; t=0 composes the neighbours away, so canonical form
// has no zero coordinate.  The whole space is a cone over the subspace
// where some coordinate equals 1, with the fully composed chain as apex.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wlat/lattice.hpp"

namespace wlat {

using Rat = boost::multiprecision::cpp_rational;

struct PointRep {
    Chain chain;
    std::vector<Rat> coords;  // size chain.size() - 1

    bool operator==(const PointRep&) const = default;
};

// Composes away every zero coordinate.  Throws std::invalid_argument when a
// coordinate lies outside [0,1] or sizes disagree.
PointRep canonicalize_point(const MorphismTable& tab, PointRep p);

struct ConeSplit {
    bool at_apex = false;
    Rat height;     // max of the coordinates; 0 only at the apex
    PointRep base;  // rescaled so its maximum coordinate is 1
};

// Cone coordinates of a canonical point: height plus a point of the base.
ConeSplit cone_beta(const MorphismTable& tab, const PointRep& p);

// Inverse: scale a base point (max coordinate 1) by s in [0,1] and
// re-canonicalize.  s = 0 lands on the apex.
PointRep cone_alpha(const MorphismTable& tab, const Rat& s, const PointRep& base);

}  // namespace wlat
