#include "wlat/cells.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace wlat {

int Cell::dim() const { return static_cast<int>(chain.size()) - 1 - std::popcount(breaks); }

namespace {

bool cell_order(const Cell& a, const Cell& b) {
    int da = a.dim(), db = b.dim();
    if (da != db) return da < db;
    if (a.chain != b.chain) return a.chain < b.chain;
    return a.breaks < b.breaks;
}

Cell zero_face(const MorphismTable& tab, const Cell& c, int pos) {
    // compose entries pos-1 and pos (0-based), dropping break slot pos
    Cell out;
    out.chain.reserve(c.chain.size() - 1);
    for (size_t i = 0; i + 1 < c.chain.size(); ++i) {
        size_t src = i < static_cast<size_t>(pos) ? i : i + 1;
        out.chain.push_back(c.chain[src]);
    }
    out.chain[pos - 1] = tab.compose(c.chain[pos - 1], c.chain[pos]);
    // breaks above pos shift down one slot
    uint32_t low = c.breaks & ((1u << pos) - 1);
    uint32_t high = c.breaks >> (pos + 1);
    out.breaks = low | (high << pos);
    return out;
}

Cell one_face(const Cell& c, int pos) { return {c.chain, c.breaks | (1u << pos)}; }

}  // namespace

HomComplex HomComplex::build(const Lattice& lat, const MorphismTable& tab, NodeId from, NodeId to) {
    if (from < 0 || from >= static_cast<NodeId>(lat.nodes.size()) || to < 0 ||
        to >= static_cast<NodeId>(lat.nodes.size()) || from == to)
        throw std::invalid_argument("hom complex needs two distinct nodes of the lattice");
    HomComplex h;
    h.lat_ = &lat;
    h.tab_ = &tab;
    h.from_ = from;
    h.to_ = to;
    for (const Chain& chain : enumerate_chains(tab, from, to)) {
        uint32_t positions = static_cast<uint32_t>(chain.size()) - 1;
        for (uint32_t s = 0; s < (1u << positions); ++s) h.cells_.push_back({chain, s << 1});
    }
    std::sort(h.cells_.begin(), h.cells_.end(), cell_order);
    h.finalize();
    return h;
}

void HomComplex::finalize() {
    index_.clear();
    for (int i = 0; i < size(); ++i) index_.emplace(cells_[i], i);
    dim_ = cells_.empty() ? 0 : cells_.back().dim();

    faces_.assign(size(), {});
    for (int i = 0; i < size(); ++i) {
        const Cell& c = cells_[i];
        for (int pos = 1; pos < static_cast<int>(c.chain.size()); ++pos) {
            if (c.breaks & (1u << pos)) continue;
            CellFaces f;
            f.pos = pos;
            f.zero = index_of(zero_face(*tab_, c, pos));
            f.one = index_of(one_face(c, pos));
            if (f.zero < 0 || f.one < 0) throw std::logic_error("cell set is not face-closed");
            faces_[i].push_back(f);
        }
    }

    // cells_ is sorted by dimension, so facets are already resolved
    vertex_sets_.assign(size(), {});
    for (int i = 0; i < size(); ++i) {
        if (cells_[i].dim() == 0) {
            vertex_sets_[i] = {i};
            continue;
        }
        std::vector<int> verts;
        for (const CellFaces& f : faces_[i]) {
            verts.insert(verts.end(), vertex_sets_[f.zero].begin(), vertex_sets_[f.zero].end());
            verts.insert(verts.end(), vertex_sets_[f.one].begin(), vertex_sets_[f.one].end());
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        vertex_sets_[i] = std::move(verts);
    }
}

int HomComplex::index_of(const Cell& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> HomComplex::f_vector() const {
    std::vector<int> f(dim_ + 1, 0);
    for (const Cell& c : cells_) f[c.dim()]++;
    return f;
}

long HomComplex::euler() const {
    long e = 0;
    for (const Cell& c : cells_) e += (c.dim() % 2 == 0) ? 1 : -1;
    return e;
}

std::string HomComplex::label(int id) const {
    const Cell& c = cells_[id];
    std::string out;
    std::string part;
    for (size_t i = 0; i < c.chain.size(); ++i) {
        if (i > 0 && (c.breaks & (1u << i))) {
            out += '(' + part + ')';
            part.clear();
        }
        if (!part.empty()) part += '.';
        part += tab_->label(c.chain[i]);
    }
    out += '(' + part + ')';
    return out;
}

HomComplex HomComplex::restrict_to(const std::vector<char>& keep, std::vector<int>* parent_ids) const {
    HomComplex h;
    h.lat_ = lat_;
    h.tab_ = tab_;
    h.from_ = from_;
    h.to_ = to_;
    if (parent_ids) parent_ids->clear();
    for (int i = 0; i < size(); ++i) {
        if (!keep[i]) continue;
        h.cells_.push_back(cells_[i]);
        if (parent_ids) parent_ids->push_back(i);
    }
    // cells_ is already sorted; the subsequence keeps the order
    h.finalize();
    return h;
}

HomComplex HomComplex::basis_subcomplex(std::vector<int>* parent_ids) const {
    std::vector<char> keep(size(), 0);
    for (int i = 0; i < size(); ++i) keep[i] = cells_[i].breaks != 0;
    return restrict_to(keep, parent_ids);
}

HomComplex HomComplex::skeleton(int k, std::vector<int>* parent_ids) const {
    std::vector<char> keep(size(), 0);
    for (int i = 0; i < size(); ++i) keep[i] = cells_[i].dim() <= k;
    return restrict_to(keep, parent_ids);
}

FacePoset HomComplex::face_poset() const {
    FacePoset p;
    p.elems.resize(size());
    p.covers.resize(size());
    for (int i = 0; i < size(); ++i) {
        p.elems[i].dim = cells_[i].dim();
        p.elems[i].label = label(i);
        std::vector<int> cov;
        for (const CellFaces& f : faces_[i]) {
            cov.push_back(f.zero);
            cov.push_back(f.one);
        }
        std::sort(cov.begin(), cov.end());
        cov.erase(std::unique(cov.begin(), cov.end()), cov.end());
        p.covers[i] = std::move(cov);
    }
    return p;
}

std::vector<int> indecomposable_cubes(const HomComplex& h, int k) {
    std::vector<int> out;
    for (int i = 0; i < h.size(); ++i) {
        const Cell& c = h.cell(i);
        if (c.dim() != k) continue;
        if (k >= 1 && c.breaks == 0) continue;
        // part lengths between consecutive pinned breaks
        int long_parts = 0;
        int part_len = 0;
        for (size_t pos = 0; pos < c.chain.size(); ++pos) {
            if (pos > 0 && (c.breaks & (1u << pos))) {
                if (part_len > 1) ++long_parts;
                part_len = 0;
            }
            ++part_len;
        }
        if (part_len > 1) ++long_parts;
        if (long_parts <= 1) out.push_back(i);
    }
    return out;
}

std::vector<ObstructionPair> obstruction_pairs(const HomComplex& h, int cube_dim) {
    if (cube_dim < 1 || cube_dim > h.dim())
        throw std::invalid_argument("obstruction_pairs: cube dimension must lie in 1..dim");
    std::vector<int> cubes = indecomposable_cubes(h, cube_dim);

    std::map<std::vector<int>, int> by_vertices;
    for (int i = 0; i < h.size(); ++i) by_vertices.emplace(h.vertex_set(i), i);

    auto down_sets = h.face_poset().down_sets();
    auto is_face_of = [&](int c, int of) {
        const auto& d = down_sets[of];
        return c == of || std::binary_search(d.begin(), d.end(), c);
    };

    std::vector<ObstructionPair> out;
    for (size_t i = 0; i < cubes.size(); ++i) {
        for (size_t j = i + 1; j < cubes.size(); ++j) {
            std::vector<int> common;
            const auto& va = h.vertex_set(cubes[i]);
            const auto& vb = h.vertex_set(cubes[j]);
            std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
            auto it = by_vertices.find(common);
            if (it == by_vertices.end()) continue;
            int meet = it->second;
            if (h.cell(meet).dim() != cube_dim - 1) continue;
            if (!is_face_of(meet, cubes[i]) || !is_face_of(meet, cubes[j])) continue;
            out.push_back({cubes[i], cubes[j], meet});
        }
    }
    return out;
}

}  // namespace wlat
