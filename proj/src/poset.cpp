#include "wlat/poset.hpp"

#include <algorithm>
#include <functional>

namespace wlat {

int FacePoset::dim() const {
    int d = 0;
    for (const Elem& e : elems) d = std::max(d, e.dim);
    return d;
}

std::vector<int> FacePoset::f_vector() const {
    std::vector<int> f(elems.empty() ? 1 : dim() + 1, 0);
    for (const Elem& e : elems) f[e.dim]++;
    return f;
}

long FacePoset::euler() const {
    long e = 0;
    for (const Elem& el : elems) e += (el.dim % 2 == 0) ? 1 : -1;
    return e;
}

std::vector<std::vector<int>> FacePoset::down_sets() const {
    // ascending dim order guarantees facets are finished first
    std::vector<int> order(elems.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return elems[a].dim < elems[b].dim; });

    std::vector<std::vector<int>> down(elems.size());
    for (int id : order) {
        std::vector<int> acc;
        for (int f : covers[id]) {
            acc.push_back(f);
            acc.insert(acc.end(), down[f].begin(), down[f].end());
        }
        std::sort(acc.begin(), acc.end());
        acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
        down[id] = std::move(acc);
    }
    return down;
}

OrderComplex OrderComplex::build(const FacePoset& poset) {
    OrderComplex oc;
    auto down = poset.down_sets();
    // extend chains downward from each element; a chain is recorded when
    // emitted at its top element, so each strictly increasing chain appears
    // exactly once
    std::vector<int> chain;
    std::function<void(int)> grow = [&](int top) {
        chain.push_back(top);
        int d = static_cast<int>(chain.size()) - 1;
        if (static_cast<int>(oc.simplices.size()) <= d) oc.simplices.resize(d + 1);
        std::vector<int> ascending(chain.rbegin(), chain.rend());
        oc.simplices[d].push_back(std::move(ascending));
        for (int below : down[top]) grow(below);
        chain.pop_back();
    };
    for (int i = 0; i < poset.size(); ++i) grow(i);
    for (auto& level : oc.simplices) std::sort(level.begin(), level.end());
    return oc;
}

}  // namespace wlat
