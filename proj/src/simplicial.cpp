#include "wlat/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace wlat {

namespace {

void ordered_parts(std::vector<int> rest, std::vector<std::vector<int>>& acc,
                   std::vector<std::vector<std::vector<int>>>& out) {
    if (rest.empty()) {
        out.push_back(acc);
        return;
    }
    int m = static_cast<int>(rest.size());
    for (unsigned pick = 1; pick < (1u << m); ++pick) {
        std::vector<int> part, remain;
        for (int t = 0; t < m; ++t)
            ((pick >> t) & 1u ? part : remain).push_back(rest[t]);
        acc.push_back(part);
        ordered_parts(remain, acc, out);
        acc.pop_back();
    }
}

}  // namespace

SimplicialModel SimplicialModel::build(const Lattice& lat, const MorphismTable& tab, NodeId from,
                                       NodeId to) {
    (void)lat;
    SimplicialModel model;
    model.tab_ = &tab;
    for (const Chain& chain : enumerate_chains(tab, from, to)) {
        int m = static_cast<int>(chain.size());
        unsigned inner = m >= 1 ? (1u << (m - 1)) - 1 : 0;  // subsets of 1..m-1, shifted
        for (unsigned sub = 0; sub <= inner; ++sub) {
            std::vector<int> positions;
            for (int k = 1; k < m; ++k)
                if ((sub >> (k - 1)) & 1u) positions.push_back(k);
            std::vector<std::vector<std::vector<int>>> partitions;
            std::vector<std::vector<int>> acc;
            ordered_parts(positions, acc, partitions);
            for (auto& parts : partitions) {
                int r = static_cast<int>(parts.size());
                if (static_cast<int>(model.levels_.size()) <= r) model.levels_.resize(r + 1);
                model.levels_[r].push_back({chain, std::move(parts)});
            }
        }
    }
    model.index_.resize(model.levels_.size());
    for (int r = 0; r < static_cast<int>(model.levels_.size()); ++r) {
        auto& level = model.levels_[r];
        std::sort(level.begin(), level.end(), [](const WsSimplex& a, const WsSimplex& b) {
            return std::tie(a.chain, a.parts) < std::tie(b.chain, b.parts);
        });
        for (int i = 0; i < static_cast<int>(level.size()); ++i)
            model.index_[r].emplace(Key{level[i].chain, level[i].parts}, i);
    }
    return model;
}

std::vector<int> SimplicialModel::f_vector() const {
    std::vector<int> f;
    for (const auto& level : levels_) f.push_back(static_cast<int>(level.size()));
    if (f.empty()) f.push_back(0);
    return f;
}

long SimplicialModel::euler() const {
    long e = 0;
    int sign = 1;
    for (const auto& level : levels_) {
        e += sign * static_cast<long>(level.size());
        sign = -sign;
    }
    return e;
}

WsSimplex SimplicialModel::face(const WsSimplex& s, int j) const {
    int r = s.dim();
    if (j < 0 || j > r || r == 0) throw std::invalid_argument("face index out of range");
    if (j == r) {
        WsSimplex out{s.chain, {s.parts.begin(), s.parts.end() - 1}};
        return out;
    }
    if (j > 0) {
        WsSimplex out = s;
        auto& merged = out.parts[j - 1];
        merged.insert(merged.end(), out.parts[j].begin(), out.parts[j].end());
        std::sort(merged.begin(), merged.end());
        out.parts.erase(out.parts.begin() + j);
        return out;
    }
    // d_0: compose the chain at the U_1 positions, then reindex the rest
    const std::vector<int>& at = s.parts.front();
    WsSimplex out;
    ClassId cur = s.chain[0];
    for (int k = 1; k < static_cast<int>(s.chain.size()); ++k) {
        if (std::binary_search(at.begin(), at.end(), k)) {
            cur = tab_->compose(cur, s.chain[k]);
        } else {
            out.chain.push_back(cur);
            cur = s.chain[k];
        }
    }
    out.chain.push_back(cur);
    for (size_t t = 1; t < s.parts.size(); ++t) {
        std::vector<int> part;
        for (int k : s.parts[t]) {
            int shift = static_cast<int>(std::lower_bound(at.begin(), at.end(), k) - at.begin());
            part.push_back(k - shift);
        }
        out.parts.push_back(part);
    }
    return out;
}

int SimplicialModel::index_of(const WsSimplex& s) const {
    int r = s.dim();
    if (r < 0 || r >= static_cast<int>(index_.size())) return -1;
    auto it = index_[r].find(Key{s.chain, s.parts});
    return it == index_[r].end() ? -1 : it->second;
}

ChainComplex SimplicialModel::chain_complex() const {
    ChainComplex cc;
    int top = dim();
    for (int r = 0; r <= top; ++r) cc.sizes.push_back(static_cast<int>(levels_[r].size()));
    cc.boundary.resize(top + 1);
    for (int r = 1; r <= top; ++r) {
        SparseMat b(static_cast<size_t>(cc.sizes[r - 1]));
        for (int col = 0; col < cc.sizes[r]; ++col) {
            const WsSimplex& s = levels_[r][col];
            for (int j = 0; j <= r; ++j) {
                int row = index_of(face(s, j));
                if (row < 0) throw std::logic_error("simplex face missing from the model");
                auto& entry = b[row][col];
                entry += (j % 2 == 0) ? 1 : -1;
                if (entry == 0) b[row].erase(col);
            }
        }
        cc.boundary[r] = std::move(b);
    }
    return cc;
}

HomologyResult SimplicialModel::homology(bool reduced) const {
    return wlat::homology(chain_complex(), reduced);
}

std::string ModelComparison::report() const {
    std::ostringstream os;
    auto row = [&os](const std::string& what, const std::string& a, const std::string& b,
                     bool ok) {
        os << what << ": " << a << " vs " << b << (ok ? " (ok)\n" : " (MISMATCH)\n");
    };
    row("euler", std::to_string(euler_cells), std::to_string(euler_simplices),
        euler_cells == euler_simplices);
    row("vertices", std::to_string(vertices_cells), std::to_string(vertices_simplices),
        vertices_cells == vertices_simplices);
    auto render = [](const std::vector<long>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    };
    row("betti", render(betti_cells), render(betti_simplices), betti_cells == betti_simplices);
    os << (agree ? "models agree" : "models disagree") << "\n";
    return os.str();
}

ModelComparison compare_models(const HomComplex& cells, const SimplicialModel& simp) {
    ModelComparison cmp;
    cmp.euler_cells = cells.euler();
    cmp.euler_simplices = simp.euler();
    cmp.vertices_cells = cells.f_vector().empty() ? 0 : cells.f_vector()[0];
    cmp.vertices_simplices = simp.f_vector().empty() ? 0 : simp.f_vector()[0];
    cmp.betti_cells = homology(cells.face_poset()).betti;
    cmp.betti_simplices = simp.homology().betti;
    size_t len = std::max(cmp.betti_cells.size(), cmp.betti_simplices.size());
    cmp.betti_cells.resize(len, 0);
    cmp.betti_simplices.resize(len, 0);
    cmp.agree = cmp.euler_cells == cmp.euler_simplices &&
                cmp.vertices_cells == cmp.vertices_simplices &&
                cmp.betti_cells == cmp.betti_simplices;
    return cmp;
}

}  // namespace wlat
