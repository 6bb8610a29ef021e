#include "wlat/point.hpp"

#include <stdexcept>

namespace wlat {

PointRep canonicalize_point(const MorphismTable& tab, PointRep p) {
    if (p.chain.empty() || p.coords.size() + 1 != p.chain.size())
        throw std::invalid_argument("point: coordinate count must be chain length - 1");
    for (const Rat& t : p.coords)
        if (t < 0 || t > 1) throw std::invalid_argument("point: coordinate outside [0,1]");

    PointRep out;
    out.chain.push_back(p.chain[0]);
    for (size_t i = 0; i < p.coords.size(); ++i) {
        if (p.coords[i] == 0) {
            out.chain.back() = tab.compose(out.chain.back(), p.chain[i + 1]);
        } else {
            out.coords.push_back(p.coords[i]);
            out.chain.push_back(p.chain[i + 1]);
        }
    }
    return out;
}

ConeSplit cone_beta(const MorphismTable& tab, const PointRep& p) {
    PointRep q = canonicalize_point(tab, p);
    ConeSplit out;
    if (q.coords.empty()) {  // fully composed chain, the cone apex
        out.at_apex = true;
        out.height = 0;
        out.base = std::move(q);
        return out;
    }
    Rat s = q.coords[0];
    for (const Rat& t : q.coords)
        if (t > s) s = t;
    out.height = s;
    out.base = std::move(q);
    for (Rat& t : out.base.coords) t /= s;  // max becomes exactly 1
    return out;
}

PointRep cone_alpha(const MorphismTable& tab, const Rat& s, const PointRep& base) {
    if (s < 0 || s > 1) throw std::invalid_argument("cone: scale outside [0,1]");
    PointRep q = base;
    if (!q.coords.empty()) {
        Rat mx = q.coords[0];
        for (const Rat& t : q.coords)
            if (t > mx) mx = t;
        if (mx != 1) throw std::invalid_argument("cone: base point must have maximum coordinate 1");
    }
    for (Rat& t : q.coords) t *= s;
    return canonicalize_point(tab, q);
}

}  // namespace wlat
