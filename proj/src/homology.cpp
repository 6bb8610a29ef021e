#include "wlat/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace wlat {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// In-place Smith reduction.  Phase one eliminates with +-1 pivots only,
// clearing the pivot column by row operations; the pivot row can then be
// erased outright because the matching column operations touch nothing
// else.  Boundary matrices are almost entirely unimodular this way, so the
// dense classical phase below runs on a small leftover block.
struct Reducer {
    SparseMat rows;
    std::vector<std::set<int>> col_rows;
    std::vector<char> row_live, col_live;
    SmithResult result;

    Reducer(SparseMat m, int ncols)
        : rows(std::move(m)), col_rows(ncols),
          row_live(rows.size(), 1), col_live(ncols, 1) {
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            for (auto it = rows[r].begin(); it != rows[r].end();) {
                if (it->second == 0) {
                    it = rows[r].erase(it);
                } else {
                    col_rows[it->first].insert(r);
                    ++it;
                }
            }
        }
    }

    void add_row(int dst, int src, const Int& q) {  // row dst -= q * row src
        if (q == 0) return;
        for (const auto& [c, v] : rows[src]) {
            auto it = rows[dst].find(c);
            if (it == rows[dst].end()) {
                rows[dst].emplace(c, -q * v);
                col_rows[c].insert(dst);
            } else {
                it->second -= q * v;
                if (it->second == 0) {
                    rows[dst].erase(it);
                    col_rows[c].erase(dst);
                }
            }
        }
    }

    void retire_pivot(int r, int c) {
        for (const auto& [c2, v2] : rows[r])
            if (c2 != c) col_rows[c2].erase(r);
        rows[r].clear();
        col_rows[c].clear();
        row_live[r] = 0;
        col_live[c] = 0;
        result.rank++;
        result.divisors.emplace_back(1);
    }

    void unit_phase() {
        while (true) {
            // (fill estimate, row, col); stale entries are re-checked on use
            std::vector<std::tuple<long, int, int>> cand;
            for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
                if (!row_live[r]) continue;
                for (const auto& [c, v] : rows[r]) {
                    if (v != 1 && v != -1) continue;
                    long fill = static_cast<long>(rows[r].size() - 1) *
                                static_cast<long>(col_rows[c].size() - 1);
                    cand.emplace_back(fill, r, c);
                }
            }
            if (cand.empty()) return;
            std::sort(cand.begin(), cand.end());
            for (const auto& [fill, r, c] : cand) {
                if (!row_live[r] || !col_live[c]) continue;
                auto it = rows[r].find(c);
                if (it == rows[r].end() || (it->second != 1 && it->second != -1)) continue;
                const Int p = it->second;
                const std::vector<int> in_col(col_rows[c].begin(), col_rows[c].end());
                for (int r2 : in_col) {
                    if (r2 == r) continue;
                    add_row(r2, r, rows[r2].at(c) / p);
                }
                retire_pivot(r, c);
            }
        }
    }

    void dense_phase() {
        std::vector<int> lr, lc;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (row_live[r] && !rows[r].empty()) lr.push_back(r);
        for (int c = 0; c < static_cast<int>(col_rows.size()); ++c)
            if (col_live[c] && !col_rows[c].empty()) lc.push_back(c);
        const int R = static_cast<int>(lr.size());
        const int C = static_cast<int>(lc.size());
        if (R == 0 || C == 0) return;

        std::vector<std::vector<Int>> m(R, std::vector<Int>(C, 0));
        std::map<int, int> col_pos;
        for (int j = 0; j < C; ++j) col_pos[lc[j]] = j;
        for (int i = 0; i < R; ++i)
            for (const auto& [c, v] : rows[lr[i]]) m[i][col_pos.at(c)] = v;

        for (int t = 0; t < std::min(R, C); ++t) {
            int bi = -1, bj = -1;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j)
                    if (m[i][j] != 0 &&
                        (bi < 0 || abs(m[i][j]) < abs(m[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) break;
            std::swap(m[t], m[bi]);
            if (bj != t)
                for (int i = t; i < R; ++i) std::swap(m[i][t], m[i][bj]);

            // each swap under a nonzero remainder shrinks |pivot|, so this
            // settles
            bool again = true;
            while (again) {
                again = false;
                for (int i = t + 1; i < R; ++i) {
                    if (m[i][t] == 0) continue;
                    const Int q = m[i][t] / m[t][t];
                    for (int j = t; j < C; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] != 0) {
                        std::swap(m[t], m[i]);
                        again = true;
                    }
                }
                if (again) continue;
                for (int j = t + 1; j < C; ++j) {
                    if (m[t][j] == 0) continue;
                    const Int q = m[t][j] / m[t][t];
                    for (int i = t; i < R; ++i) m[i][j] -= q * m[i][t];
                    if (m[t][j] != 0) {
                        for (int i = t; i < R; ++i) std::swap(m[i][t], m[i][j]);
                        again = true;
                    }
                }
            }
            result.rank++;
            result.divisors.push_back(abs(m[t][t]));
        }
    }

    SmithResult run() {
        unit_phase();
        dense_phase();
        // sort prime powers into the divisor chain; gcd/lcm on a pair keeps
        // the multiset of elementary divisors intact
        auto& d = result.divisors;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                const Int g = gcd(d[i], d[j]);
                d[j] = d[i] / g * d[j];
                d[i] = g;
            }
        return std::move(result);
    }
};

}  // namespace

SmithResult smith_normal_form(SparseMat rows, int ncols) {
    Reducer red(std::move(rows), ncols);
    return red.run();
}

bool HomologyResult::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

HomologyResult homology(const ChainComplex& cc, bool reduced) {
    const int top = static_cast<int>(cc.sizes.size()) - 1;
    std::vector<int> rank(top + 2, 0);
    std::vector<std::vector<Int>> tors(top + 2);
    for (int k = 0; k <= top; ++k) {
        SmithResult s = smith_normal_form(cc.boundary[k], cc.sizes[k]);
        rank[k] = s.rank;
        for (const Int& v : s.divisors)
            if (v > 1) tors[k].push_back(v);
    }
    HomologyResult out;
    out.betti.assign(top + 1, 0);
    out.torsion.assign(top + 1, {});
    for (int k = 0; k <= top; ++k) {
        out.betti[k] = cc.sizes[k] - rank[k] - rank[k + 1];
        out.torsion[k] = tors[k + 1];  // torsion of H_k lives in coker of d_{k+1}
    }
    if (reduced && top >= 0 && cc.sizes[0] > 0) out.betti[0] -= 1;
    return out;
}

namespace {

ChainComplex chain_complex_from_lists(const std::vector<std::vector<std::vector<int>>>& kept) {
    ChainComplex cc;
    const int top = static_cast<int>(kept.size()) - 1;
    cc.sizes.assign(top + 1, 0);
    cc.boundary.assign(top + 1, {});
    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    for (int d = 0; d <= top; ++d) {
        cc.sizes[d] = static_cast<int>(kept[d].size());
        for (int i = 0; i < cc.sizes[d]; ++i) index[d][kept[d][i]] = i;
    }
    for (int d = 1; d <= top; ++d) {
        SparseMat& b = cc.boundary[d];
        b.assign(cc.sizes[d - 1], {});
        for (int col = 0; col < cc.sizes[d]; ++col) {
            const std::vector<int>& s = kept[d][col];
            for (int i = 0; i <= d; ++i) {
                std::vector<int> face = s;
                face.erase(face.begin() + i);
                auto it = index[d - 1].find(face);
                if (it == index[d - 1].end()) continue;  // face fell into the dropped part
                b[it->second][col] += (i % 2 == 0) ? 1 : -1;
            }
        }
    }
    return cc;
}

}  // namespace

HomologyResult homology(const FacePoset& poset, const std::vector<int>& sub, bool reduced) {
    OrderComplex oc = OrderComplex::build(poset);
    std::vector<char> in_sub(poset.size(), 0);
    for (int s : sub) in_sub.at(s) = 1;
    for (int s : sub)
        for (int f : poset.covers[s])
            if (!in_sub[f]) throw std::invalid_argument("relative subcomplex is not face-closed");

    std::vector<std::vector<std::vector<int>>> kept(oc.simplices.size());
    for (size_t d = 0; d < oc.simplices.size(); ++d) {
        for (const auto& s : oc.simplices[d]) {
            bool inside = true;
            for (int v : s)
                if (!in_sub[v]) {
                    inside = false;
                    break;
                }
            if (!inside) kept[d].push_back(s);
        }
    }
    while (!kept.empty() && kept.back().empty()) kept.pop_back();

    return homology(chain_complex_from_lists(kept), reduced && sub.empty());
}

ChainComplex subset_face_chain_complex(const std::vector<std::vector<std::vector<int>>>& simplices) {
    for (size_t d = 1; d < simplices.size(); ++d) {
        // every face must be listed one level down
        std::set<std::vector<int>> lower(simplices[d - 1].begin(), simplices[d - 1].end());
        for (const auto& s : simplices[d])
            for (size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face = s;
                face.erase(face.begin() + i);
                if (!lower.count(face)) throw std::logic_error("simplex list is missing a face");
            }
    }
    return chain_complex_from_lists(simplices);
}

}  // namespace wlat
