#include "wlat/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wlat {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // the smaller id wins, so every root is its class's least member
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

bool chain_has_null(const MorphismTable& tab, const Chain& ch) {
    for (ClassId c : ch)
        if (tab.is_null(c)) return true;
    return false;
}

bool is_generator_class(const MorphismTable& tab, ClassId c) {
    for (const Path& p : tab.cls(c).paths)
        if (p.size() == 1) return true;
    return false;
}

bool fully_decomposed(const MorphismTable& tab, const Chain& ch) {
    for (ClassId c : ch)
        if (!is_generator_class(tab, c)) return false;
    return true;
}

std::vector<ClassId> letter_classes(const MorphismTable& tab, const Path& p) {
    std::vector<ClassId> out;
    out.reserve(p.size());
    for (ArrowId a : p) out.push_back(tab.class_of(Path{a}));
    return out;
}

uint32_t full_break_mask(size_t chain_len) {
    return chain_len < 2 ? 0u : (uint32_t{1} << chain_len) - 2;  // bits 1..len-1
}

}  // namespace

std::vector<int> QuotientComplex::f_vector() const {
    std::vector<int> f;
    for (const auto& s : surviving) f.push_back(static_cast<int>(s.size()));
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

QuotientComplex simplified_basis(const HomComplex& h) {
    QuotientComplex q;
    q.base = h.basis_subcomplex();
    const MorphismTable& tab = q.base.table();
    const int n = q.base.size();

    q.rep.assign(n, -1);
    q.surviving.assign(q.base.dim() + 1, {});
    for (int i = 0; i < n; ++i) {
        const int d = q.base.cell(i).dim();
        if (chain_has_null(tab, q.base.cell(i).chain)) {
            q.collapsed_cells.push_back(i);
            q.collapse_log.push_back("cell " + q.base.label(i) + " (dim " + std::to_string(d) +
                                     ") collapsed to the point");
        } else {
            q.rep[i] = i;
            q.surviving[d].push_back(i);
        }
    }

    const FacePoset poset = q.base.face_poset();
    if (q.collapsed_cells.empty())
        q.relative = homology(poset, {}, true);
    else
        q.relative = homology(poset, q.collapsed_cells, false);

    q.quotient_betti = q.relative.betti;
    if (n > 0) {  // the quotient gains the distinguished point's component
        if (q.quotient_betti.empty()) q.quotient_betti.assign(1, 0);
        q.quotient_betti[0] += 1;
    }
    return q;
}

QuotientComplex strict_quotient(const HomComplex& h) {
    QuotientComplex q;
    q.base = h;
    const MorphismTable& tab = q.base.table();
    const Lattice& lat = tab.lattice();
    const int n = q.base.size();

    int nv = 0;
    while (nv < n && q.base.cell(nv).dim() == 0) ++nv;  // cells are sorted by dimension

    std::vector<std::pair<std::vector<ClassId>, std::vector<ClassId>>> rules;
    for (int idx : lat.strict_marks) {
        const Relation& rel = lat.relations.at(idx);
        rules.emplace_back(letter_classes(tab, rel.lhs), letter_classes(tab, rel.rhs));
    }

    UnionFind uf(nv);
    auto rewrite_unite = [&](int v, const Chain& ch, const std::vector<ClassId>& from,
                             const std::vector<ClassId>& to) {
        if (ch.size() < from.size()) return;
        for (size_t i = 0; i + from.size() <= ch.size(); ++i) {
            if (!std::equal(from.begin(), from.end(), ch.begin() + i)) continue;
            Chain rewritten(ch.begin(), ch.begin() + i);
            rewritten.insert(rewritten.end(), to.begin(), to.end());
            rewritten.insert(rewritten.end(), ch.begin() + i + from.size(), ch.end());
            const int target = q.base.index_of(Cell{rewritten, full_break_mask(rewritten.size())});
            if (target < 0) throw std::logic_error("strict rewrite left the chain set");
            uf.unite(v, target);
        }
    };
    for (int v = 0; v < nv; ++v) {
        const Chain& ch = q.base.cell(v).chain;
        for (const auto& [lhs, rhs] : rules) {
            rewrite_unite(v, ch, lhs, rhs);
            rewrite_unite(v, ch, rhs, lhs);
        }
    }

    // identify cells through the vertex-class images of their vertex sets;
    // an image equal to a lower-dimensional cell's collapses onto it
    q.rep.assign(n, -1);
    q.surviving.assign(q.base.dim() + 1, {});
    std::map<std::vector<int>, std::pair<int, int>> seen;  // image -> (dim, representative)
    for (int c = 0; c < n; ++c) {
        const int d = q.base.cell(c).dim();
        std::vector<int> img;
        for (int v : q.base.vertex_set(c)) img.push_back(uf.find(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        auto [it, fresh] = seen.try_emplace(std::move(img), std::pair<int, int>{d, c});
        if (fresh) {
            q.rep[c] = c;
            q.surviving[d].push_back(c);
        } else {
            const auto [d0, r0] = it->second;
            q.rep[c] = r0;
            if (d0 < d)
                q.collapse_log.push_back("cell " + q.base.label(c) + " (dim " + std::to_string(d) +
                                         ") collapses onto " + q.base.label(r0) + " (dim " +
                                         std::to_string(d0) + ")");
        }
    }

    // identified same-dimension cells must agree facet-by-facet, else the
    // quotient is not a regular complex and we say so
    std::map<int, std::vector<int>> facet_pattern;
    for (int c = 0; c < n; ++c) {
        const int d = q.base.cell(c).dim();
        if (d == 0) continue;
        const int r = q.rep[c];
        if (q.base.cell(r).dim() != d) continue;  // collapse, checked by the log instead
        std::vector<int> fr;
        for (const CellFaces& f : q.base.faces(c)) {
            fr.push_back(q.rep[f.zero]);
            fr.push_back(q.rep[f.one]);
        }
        std::sort(fr.begin(), fr.end());
        fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
        auto [it, fresh] = facet_pattern.try_emplace(r, fr);
        if (!fresh && it->second != fr)
            q.notes.push_back("irregular identification: cells " + q.base.label(c) + " and " +
                              q.base.label(r) + " share vertex classes but differ in facets");
    }

    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < nv; ++v)
        if (fully_decomposed(tab, q.base.cell(v).chain)) by_root[uf.find(v)].push_back(v);
    for (auto& [root, members] : by_root) q.vertex_classes.push_back(std::move(members));

    return q;
}

}  // namespace wlat
