#include "wlat/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "wlat/cells.hpp"
#include "wlat/quotient.hpp"

namespace wlat {

namespace {

// ---------------------------------------------------------------------------
// built-in lattice builders

struct LatBuilder {
    Lattice lat;

    NodeId node(const std::string& name) {
        if (auto id = lat.node_id(name)) return *id;
        lat.nodes.push_back(name);
        return static_cast<NodeId>(lat.nodes.size()) - 1;
    }

    ArrowId arrow(const std::string& name, const std::string& src, const std::string& dst) {
        NodeId s = node(src), d = node(dst);
        lat.arrows.push_back({name, s, d});
        return static_cast<ArrowId>(lat.arrows.size()) - 1;
    }

    Path path(std::initializer_list<std::string> names) const {
        Path p;
        for (const auto& n : names) p.push_back(*lat.arrow_id(n));
        return p;
    }

    void rel(std::initializer_list<std::string> lhs, std::initializer_list<std::string> rhs) {
        lat.relations.push_back({path(lhs), path(rhs)});
    }
};

Lattice make_chain(int n) {
    LatBuilder b;
    b.lat.name = "chain:" + std::to_string(n);
    for (int k = 0; k <= n; ++k) b.node("v" + std::to_string(k));
    for (int k = 1; k <= n; ++k)
        b.arrow("f" + std::to_string(k), "v" + std::to_string(k - 1), "v" + std::to_string(k));
    b.lat.init = *b.lat.node_id("v0");
    b.lat.fin = *b.lat.node_id("v" + std::to_string(n));
    return std::move(b.lat);
}

std::string conode(int k, const std::string& suffix) {
    return (k < 0 ? std::string("om1") : "o" + std::to_string(k)) + suffix;
}

// the level-0 coface is the augmentation
std::string coarrow(int k, int i, const std::string& suffix) {
    if (k == 0) return "eps" + suffix;
    return "d" + std::to_string(k) + "_" + std::to_string(i) + suffix;
}

// nodes o(-1)..o(n) and all cofaces d^k_i: o(k-1) -> o(k); the relations are
// the coface identities [d^{k-1}_i, d^k_j] = [d^{k-1}_{j-1}, d^k_i] for i < j,
// emitted for k ascending, then i, then j
void add_cosimplicial(LatBuilder& b, int n, const std::string& suffix) {
    for (int k = -1; k <= n; ++k) b.node(conode(k, suffix));
    b.arrow(coarrow(0, 0, suffix), conode(-1, suffix), conode(0, suffix));
    for (int k = 1; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
            b.arrow(coarrow(k, i, suffix), conode(k - 1, suffix), conode(k, suffix));
    for (int k = 1; k <= n; ++k)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j <= k; ++j)
                b.rel({coarrow(k - 1, i, suffix), coarrow(k, j, suffix)},
                      {coarrow(k - 1, j - 1, suffix), coarrow(k, i, suffix)});
}

Lattice make_cosimplicial(int n) {
    LatBuilder b;
    b.lat.name = "cosimplicial:" + std::to_string(n);
    add_cosimplicial(b, n, "");
    b.lat.init = *b.lat.node_id(conode(-1, ""));
    b.lat.fin = *b.lat.node_id(conode(n, ""));
    return std::move(b.lat);
}

std::string subset_digits(unsigned mask) {
    std::string s;
    for (int e = 0; e < 16; ++e)
        if (mask & (1u << e)) s += static_cast<char>('0' + e);
    return s;
}

Lattice make_powerset(int n) {
    LatBuilder b;
    b.lat.name = "powerset:" + std::to_string(n);
    unsigned full = (1u << (n + 1)) - 1;
    std::vector<unsigned> masks;
    for (unsigned m = 0; m <= full; ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    for (unsigned m : masks) b.node("p" + subset_digits(m));
    auto grow = [&](unsigned m, int e) {
        return "a" + std::to_string(e) + "_" + subset_digits(m | (1u << e));
    };
    for (unsigned m : masks)
        for (int e = 0; e <= n; ++e)
            if (!(m & (1u << e)))
                b.arrow(grow(m, e), "p" + subset_digits(m), "p" + subset_digits(m | (1u << e)));
    for (unsigned m : masks)
        for (int e = 0; e <= n; ++e)
            for (int f = e + 1; f <= n; ++f)
                if (!(m & (1u << e)) && !(m & (1u << f)))
                    b.rel({grow(m, e), grow(m | (1u << e), f)}, {grow(m, f), grow(m | (1u << f), e)});
    b.lat.init = *b.lat.node_id("p");
    b.lat.fin = *b.lat.node_id("p" + subset_digits(full));
    return std::move(b.lat);
}

std::string bridge_name(int k) { return k < 0 ? std::string("fm1") : "f" + std::to_string(k); }

// two cosimplicial columns joined by a level-preserving map; the bridge
// squares [d^k_j a, f_k] = [f_{k-1}, d^k_j b] come after both columns'
// coface identities, ordered by k then j
Lattice make_mapping(int n) {
    LatBuilder b;
    b.lat.name = "mapping:" + std::to_string(n);
    add_cosimplicial(b, n, "a");
    add_cosimplicial(b, n, "b");
    for (int k = -1; k <= n; ++k) b.arrow(bridge_name(k), conode(k, "a"), conode(k, "b"));
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j)
            b.rel({coarrow(k, j, "a"), bridge_name(k)}, {bridge_name(k - 1), coarrow(k, j, "b")});
    b.lat.init = *b.lat.node_id(conode(-1, "a"));
    b.lat.fin = *b.lat.node_id(conode(n, "b"));
    return std::move(b.lat);
}

// the classical secondary-composition shape: two overlapping triangles with
// every composite to the terminal node declared null
Lattice make_toda() {
    LatBuilder b;
    b.lat.name = "toda";
    for (const char* v : {"X", "Y", "Z", "W"}) b.node(v);
    b.arrow("alpha", "X", "Y");
    b.arrow("beta", "Y", "Z");
    b.arrow("gamma", "Z", "W");
    b.arrow("d", "Y", "W");
    b.arrow("e", "X", "Z");
    b.arrow("f", "X", "W");
    b.rel({"beta", "gamma"}, {"d"});
    b.rel({"alpha", "beta"}, {"e"});
    b.rel({"e", "gamma"}, {"f"});
    b.rel({"alpha", "d"}, {"f"});
    b.lat.null_marks = {b.path({"d"}), b.path({"e"}), b.path({"f"})};
    b.lat.init = *b.lat.node_id("X");
    b.lat.fin = *b.lat.node_id("W");
    return std::move(b.lat);
}

// triple-bracket shape: two wedge decompositions of the source map into a
// common target, each factoring through the zero object (star), with the
// total composite null.  The projections pb, pc kill the outer summand, so
// both long composites factor through star; relating the short composites
// to them keeps the maximal class unique (and null, which is the hypothesis
// that makes the bracket well defined).
Lattice make_whitehead() {
    LatBuilder b;
    b.lat.name = "whitehead";
    for (const char* v : {"a", "b", "c", "e", "g", "h", "i", "d", "star", "x"}) b.node(v);
    b.arrow("wa", "a", "b");
    b.arrow("wb", "a", "c");
    b.arrow("pb", "b", "e");
    b.arrow("pc", "c", "h");
    b.arrow("wg", "e", "g");
    b.arrow("wi", "h", "i");
    b.arrow("jg", "g", "d");
    b.arrow("ji", "i", "d");
    b.arrow("mb", "b", "d");
    b.arrow("mc", "c", "d");
    b.arrow("bigf", "d", "x");
    b.arrow("ns", "e", "star");
    b.arrow("nt", "h", "star");
    b.arrow("z", "star", "x");
    b.rel({"wa", "mb"}, {"wb", "mc"});
    b.rel({"wg", "jg", "bigf"}, {"ns", "z"});
    b.rel({"wi", "ji", "bigf"}, {"nt", "z"});
    b.rel({"wa", "mb", "bigf"}, {"wa", "pb", "ns", "z"});
    b.rel({"wb", "mc", "bigf"}, {"wb", "pc", "nt", "z"});
    b.lat.null_marks = {b.path({"ns", "z"}), b.path({"nt", "z"})};
    b.lat.init = *b.lat.node_id("a");
    b.lat.fin = *b.lat.node_id("x");
    return std::move(b.lat);
}

[[noreturn]] void bad_size(const std::string& kind, int n, const std::string& range) {
    throw std::invalid_argument("builtin " + kind + " expects n in " + range + ", got " +
                                std::to_string(n));
}

}  // namespace

Lattice make_lattice(const std::string& kind, int n) {
    if (kind == "chain") {
        if (n < 2 || n > 6) bad_size(kind, n, "2..6");
        return make_chain(n);
    }
    if (kind == "cosimplicial") {
        if (n < 1 || n > 4) bad_size(kind, n, "1..4");
        return make_cosimplicial(n);
    }
    if (kind == "powerset") {
        if (n < 1 || n > 4) bad_size(kind, n, "1..4");
        return make_powerset(n);
    }
    if (kind == "mapping") {
        if (n < 1 || n > 2) bad_size(kind, n, "1..2");
        return make_mapping(n);
    }
    if (kind == "toda") return make_toda();
    if (kind == "whitehead") return make_whitehead();
    throw std::invalid_argument("unknown builtin lattice kind: " + kind);
}

// ---------------------------------------------------------------------------
// simplex and cube face posets

FacePoset simplex_faces(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("simplex_faces: n must be in 0..9");
    unsigned full = (1u << (n + 1)) - 1;
    std::vector<unsigned> masks;
    for (unsigned m = 1; m <= full; ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    std::map<unsigned, int> id;
    FacePoset p;
    for (unsigned m : masks) {
        id[m] = p.size();
        p.elems.push_back({__builtin_popcount(m) - 1, subset_digits(m)});
    }
    p.covers.resize(p.size());
    for (unsigned m : masks)
        if (__builtin_popcount(m) >= 2)
            for (int e = 0; e <= n; ++e)
                if (m & (1u << e)) p.covers[id[m]].push_back(id[m & ~(1u << e)]);
    for (auto& c : p.covers) std::sort(c.begin(), c.end());
    return p;
}

FacePoset cube_faces(int n) {
    if (n < 0 || n > 12) throw std::invalid_argument("cube_faces: n must be in 0..12");
    std::vector<std::string> faces{""};
    for (int k = 0; k < n; ++k) {
        std::vector<std::string> next;
        for (const auto& f : faces)
            for (char c : {'0', '1', '*'}) next.push_back(f + c);
        faces = std::move(next);
    }
    auto stars = [](const std::string& f) {
        return static_cast<int>(std::count(f.begin(), f.end(), '*'));
    };
    std::stable_sort(faces.begin(), faces.end(),
                     [&](const std::string& a, const std::string& b) { return stars(a) < stars(b); });
    std::map<std::string, int> id;
    FacePoset p;
    for (const auto& f : faces) {
        id[f] = p.size();
        p.elems.push_back({stars(f), f.empty() ? "pt" : f});
    }
    p.covers.resize(p.size());
    for (const auto& f : faces)
        for (int k = 0; k < n; ++k)
            if (f[k] == '*')
                for (char c : {'0', '1'}) {
                    std::string g = f;
                    g[k] = c;
                    p.covers[id[f]].push_back(id[g]);
                }
    for (auto& c : p.covers) std::sort(c.begin(), c.end());
    return p;
}

// ---------------------------------------------------------------------------
// permutohedron

namespace {

void ordered_partitions(std::vector<int> rest, OrderedPartition& acc,
                        std::vector<OrderedPartition>& out) {
    if (rest.empty()) {
        out.push_back(acc);
        return;
    }
    int m = static_cast<int>(rest.size());
    for (unsigned pick = 1; pick < (1u << m); ++pick) {
        std::vector<int> block, remain;
        for (int t = 0; t < m; ++t)
            ((pick >> t) & 1u ? block : remain).push_back(rest[t]);
        acc.push_back(block);
        ordered_partitions(remain, acc, out);
        acc.pop_back();
    }
}

std::string digits_of(const std::vector<int>& s) {
    std::string out;
    for (int e : s) out += static_cast<char>('0' + e);
    return out;
}

}  // namespace

std::string flag_label(const OrderedPartition& p) {
    std::vector<int> cur;
    for (const auto& b : p) cur.insert(cur.end(), b.begin(), b.end());
    std::sort(cur.begin(), cur.end());
    int k = static_cast<int>(p.size());
    std::string out = "(" + digits_of(cur);
    for (int j = 1; j < k; ++j) {
        std::vector<int> next;
        const auto& drop = p[k - j];  // removing blocks from the last built
        for (int e : cur)
            if (std::find(drop.begin(), drop.end(), e) == drop.end()) next.push_back(e);
        cur = std::move(next);
        out += "," + digits_of(cur);
    }
    return out + ")";
}

OrderedPartition partition_from_flag(const std::vector<std::vector<int>>& subsets) {
    int k = static_cast<int>(subsets.size());
    if (k == 0) throw std::invalid_argument("flag has no subsets");
    for (int j = 0; j + 1 < k; ++j) {
        if (!std::includes(subsets[j].begin(), subsets[j].end(), subsets[j + 1].begin(),
                           subsets[j + 1].end()) ||
            subsets[j].size() <= subsets[j + 1].size())
            throw std::invalid_argument("flag subsets must strictly descend");
    }
    if (subsets.back().empty()) throw std::invalid_argument("flag subsets must be nonempty");
    OrderedPartition p;
    p.push_back(subsets[k - 1]);
    for (int j = k - 2; j >= 0; --j) {
        std::vector<int> diff;
        std::set_difference(subsets[j].begin(), subsets[j].end(), subsets[j + 1].begin(),
                            subsets[j + 1].end(), std::back_inserter(diff));
        p.push_back(diff);
    }
    return p;
}

OrderedPartition partition_from_flag_label(const std::string& label, int n) {
    std::string body = label;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses in flag label");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::vector<int>> subsets;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::vector<int> s;
        for (char c : tok) {
            if (c < '0' || c > '9') throw std::invalid_argument("flag label holds a non-digit");
            int e = c - '0';
            if (e > n) throw std::invalid_argument("flag label element out of range");
            s.push_back(e);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("flag label repeats an element");
        subsets.push_back(s);
    }
    if (subsets.empty()) throw std::invalid_argument("empty flag label");
    if (static_cast<int>(subsets.front().size()) != n + 1)
        throw std::invalid_argument("flag label must start with the full set");
    return partition_from_flag(subsets);
}

PermutohedronData permutohedron_faces(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("permutohedron_faces: n must be in 0..6");
    std::vector<int> all;
    for (int e = 0; e <= n; ++e) all.push_back(e);
    std::vector<OrderedPartition> faces;
    OrderedPartition acc;
    ordered_partitions(all, acc, faces);
    auto face_dim = [&](const OrderedPartition& p) {
        return (n + 1) - static_cast<int>(p.size());
    };
    std::sort(faces.begin(), faces.end(), [&](const OrderedPartition& a, const OrderedPartition& b) {
        if (face_dim(a) != face_dim(b)) return face_dim(a) < face_dim(b);
        return a < b;
    });

    PermutohedronData data;
    data.n = n;
    data.faces = faces;
    std::map<OrderedPartition, int> id;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        id[faces[i]] = i;
        data.poset.elems.push_back({face_dim(faces[i]), flag_label(faces[i])});
    }
    data.poset.covers.resize(faces.size());
    data.coords.resize(faces.size());
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        const auto& p = faces[i];
        for (int j = 0; j < static_cast<int>(p.size()); ++j) {
            const auto& blk = p[j];
            int m = static_cast<int>(blk.size());
            if (m < 2) continue;
            for (unsigned pick = 1; pick + 1 < (1u << m); ++pick) {
                std::vector<int> first, second;
                for (int t = 0; t < m; ++t)
                    ((pick >> t) & 1u ? first : second).push_back(blk[t]);
                OrderedPartition q(p.begin(), p.begin() + j);
                q.push_back(first);
                q.push_back(second);
                q.insert(q.end(), p.begin() + j + 1, p.end());
                data.poset.covers[i].push_back(id.at(q));
            }
        }
        std::sort(data.poset.covers[i].begin(), data.poset.covers[i].end());
        if (face_dim(p) == 0) {
            data.coords[i].assign(n + 1, 0);
            for (int j = 0; j <= n; ++j) data.coords[i][p[j][0]] = j;
        }
    }
    return data;
}

int PermutohedronData::find(const OrderedPartition& p) const {
    auto it = std::find(faces.begin(), faces.end(), p);
    return it == faces.end() ? -1 : static_cast<int>(it - faces.begin());
}

DWord dword_of_vertex(const OrderedPartition& vertex) {
    int m = static_cast<int>(vertex.size());
    std::vector<int> pool;
    for (const auto& b : vertex) {
        if (b.size() != 1) throw std::invalid_argument("dword needs a vertex: all blocks singleton");
        pool.push_back(b[0]);
    }
    std::sort(pool.begin(), pool.end());
    for (int t = 0; t < m; ++t)
        if (pool[t] != t) throw std::invalid_argument("vertex blocks must partition 0..n");
    DWord w(m, 0);
    std::vector<int> set = pool;
    for (int k = m - 1; k >= 0; --k) {
        int e = vertex[k][0];
        auto it = std::lower_bound(set.begin(), set.end(), e);
        w[k] = static_cast<int>(it - set.begin());
        set.erase(it);
    }
    return w;
}

std::string dword_name(const DWord& w) {
    std::string out;
    for (int i : w) out += "d" + std::to_string(i);
    return out;
}

VertexLabel perm_vertex_label(int n, const std::vector<int>& swaps) {
    if (n < 0) throw std::invalid_argument("perm_vertex_label: n must be nonnegative");
    VertexLabel out;
    out.word.resize(n + 1);
    out.permutation.resize(n + 1);
    for (int k = 0; k <= n; ++k) out.word[k] = k, out.permutation[k] = k;
    for (int p : swaps) {
        if (p < 0 || p >= n)
            throw std::invalid_argument("swap position out of range: " + std::to_string(p));
        int a = out.word[p], b = out.word[p + 1];
        if (a < b) {
            out.word[p] = b - 1;
            out.word[p + 1] = a;
        } else {
            out.word[p] = b;
            out.word[p + 1] = a + 1;
        }
        std::swap(out.permutation[p], out.permutation[p + 1]);
    }
    long inversions = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (out.permutation[i] > out.permutation[j]) ++inversions;
    out.reduced = inversions == static_cast<long>(swaps.size());
    return out;
}

// ---------------------------------------------------------------------------
// associahedron

namespace {

bool compatible(std::pair<int, int> a, std::pair<int, int> b) {
    if (a.second < b.first || b.second < a.first) return true;               // disjoint
    if (a.first <= b.first && b.second <= a.second) return true;             // b inside a
    if (b.first <= a.first && a.second <= b.second) return true;             // a inside b
    return false;
}

std::string render_bracketing(int letters, const Bracketing& b) {
    // parents come before children when sorted by (start asc, end desc)
    std::vector<std::pair<int, int>> ivs = b;
    ivs.push_back({0, letters - 1});
    std::sort(ivs.begin(), ivs.end(), [](auto x, auto y) {
        return x.first != y.first ? x.first < y.first : x.second > y.second;
    });
    std::function<std::string(int, size_t&)> render = [&](int self, size_t& next) {
        std::string out = "(";
        int p = ivs[self].first;
        while (p <= ivs[self].second) {
            if (next < ivs.size() && ivs[next].first == p) {
                int child = static_cast<int>(next++);
                out += render(child, next);
                p = ivs[child].second + 1;
            } else {
                out += static_cast<char>('a' + p);
                ++p;
            }
        }
        return out + ")";
    };
    size_t next = 1;
    return render(0, next);
}

}  // namespace

AssociahedronData associahedron_faces(int n) {
    if (n < 0 || n > 4) throw std::invalid_argument("associahedron_faces: n must be in 0..4");
    int letters = n + 2;
    std::vector<std::pair<int, int>> ivs;
    for (int l = 0; l < letters; ++l)
        for (int r = l + 1; r < letters; ++r)
            if (!(l == 0 && r == letters - 1)) ivs.push_back({l, r});
    int m = static_cast<int>(ivs.size());

    std::vector<Bracketing> faces;
    for (unsigned pick = 0; pick < (1u << m); ++pick) {
        Bracketing b;
        bool ok = true;
        for (int t = 0; t < m && ok; ++t)
            if ((pick >> t) & 1u) {
                for (const auto& prev : b) ok = ok && compatible(prev, ivs[t]);
                b.push_back(ivs[t]);
            }
        if (ok) faces.push_back(b);
    }
    auto face_dim = [&](const Bracketing& b) { return n - static_cast<int>(b.size()); };
    std::sort(faces.begin(), faces.end(), [&](const Bracketing& a, const Bracketing& b) {
        if (face_dim(a) != face_dim(b)) return face_dim(a) < face_dim(b);
        return a < b;
    });

    AssociahedronData data;
    data.n = n;
    data.faces = faces;
    std::map<Bracketing, int> id;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        id[faces[i]] = i;
        data.poset.elems.push_back({face_dim(faces[i]), render_bracketing(letters, faces[i])});
    }
    data.poset.covers.resize(faces.size());
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        for (const auto& iv : ivs) {
            if (std::find(faces[i].begin(), faces[i].end(), iv) != faces[i].end()) continue;
            bool ok = true;
            for (const auto& prev : faces[i]) ok = ok && compatible(prev, iv);
            if (!ok) continue;
            Bracketing g = faces[i];
            g.insert(std::upper_bound(g.begin(), g.end(), iv), iv);
            data.poset.covers[i].push_back(id.at(g));
        }
        std::sort(data.poset.covers[i].begin(), data.poset.covers[i].end());
    }
    return data;
}

int AssociahedronData::find(const Bracketing& b) const {
    auto it = std::find(faces.begin(), faces.end(), b);
    return it == faces.end() ? -1 : static_cast<int>(it - faces.begin());
}

// ---------------------------------------------------------------------------
// the collapse from the permutohedron onto the associahedron

Bracketing tonks_image(int n, const OrderedPartition& face) {
    int letters = n + 2;
    // clusters of letters stay contiguous, tracked by a union-find whose
    // roots carry the cluster's letter interval
    std::vector<int> parent(letters), lo(letters), hi(letters);
    for (int x = 0; x < letters; ++x) parent[x] = lo[x] = hi[x] = x;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> consumed(n + 1, 0);
    Bracketing out;
    for (const auto& block : face) {
        std::vector<int> gaps = block;
        std::sort(gaps.begin(), gaps.end());
        std::vector<char> before = consumed;  // same-block gaps do not bridge each other
        size_t t = 0;
        while (t < gaps.size()) {
            size_t u = t;
            while (u + 1 < gaps.size()) {
                bool bridged = true;
                for (int h = gaps[u] + 1; h < gaps[u + 1]; ++h) bridged = bridged && before[h];
                if (!bridged) break;
                ++u;
            }
            int left = lo[find(gaps[t])];
            int right = hi[find(gaps[u] + 1)];
            if (!(left == 0 && right == letters - 1)) out.push_back({left, right});
            for (int x = left; x < right; ++x) {
                int ra = find(x), rb = find(x + 1);
                if (ra != rb) {
                    parent[rb] = ra;
                    lo[ra] = std::min(lo[ra], lo[rb]);
                    hi[ra] = std::max(hi[ra], hi[rb]);
                }
            }
            for (size_t s = t; s <= u; ++s) consumed[gaps[s]] = 1;
            t = u + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TonksMap tonks_collapse(int n) {
    TonksMap map;
    map.pe = permutohedron_faces(n);
    map.assoc = associahedron_faces(n);
    map.image.resize(map.pe.poset.size());
    for (int i = 0; i < map.pe.poset.size(); ++i) {
        int img = map.assoc.find(tonks_image(n, map.pe.faces[i]));
        if (img < 0) throw std::logic_error("collapse image is not an associahedron face");
        map.image[i] = img;
        if (map.assoc.poset.elems[img].dim < map.pe.poset.elems[i].dim)
            map.collapsed.push_back(i);
    }
    return map;
}

// ---------------------------------------------------------------------------
// polytope recognition through strict quotients

namespace {

// index layout mirrors add_cosimplicial's emission order
std::vector<int> cosimplicial_strict(int n, bool cube_rule, int base) {
    std::vector<int> out;
    int idx = base;
    for (int k = 1; k <= n; ++k)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                bool skip = cube_rule ? (i == 0 && j == 1) : (k == 1);
                if (!skip) out.push_back(idx);
                ++idx;
            }
    return out;
}

int cosimplicial_relation_count(int n) {
    int c = 0;
    for (int k = 1; k <= n; ++k) c += k * (k + 1) / 2;
    return c;
}

}  // namespace

std::string FamilyCheckReport::summary() const {
    std::ostringstream os;
    os << kind << " n=" << n << ": " << classes.size() << " vertex classes (expected " << expected
       << ")";
    return os.str();
}

FamilyCheckReport family_quotient_check(const std::string& kind, int n) {
    FamilyCheckReport rep;
    rep.kind = kind;
    rep.n = n;
    Lattice lat;
    if (kind == "simplex") {
        if (n < 1 || n > 3) throw std::invalid_argument("simplex check expects n in 1..3");
        lat = make_lattice("cosimplicial", n);
        lat.strict_marks = cosimplicial_strict(n, false, 0);
        rep.expected = n + 1;
    } else if (kind == "cube") {
        if (n < 1 || n > 3) throw std::invalid_argument("cube check expects n in 1..3");
        lat = make_lattice("cosimplicial", n);
        lat.strict_marks = cosimplicial_strict(n, true, 0);
        rep.expected = 1 << n;
    } else if (kind == "mapping-simplex") {
        if (n < 1 || n > 2) throw std::invalid_argument("mapping-simplex check expects n in 1..2");
        lat = make_lattice("mapping", n);
        int per_copy = cosimplicial_relation_count(n);
        for (int idx = 0; idx < 2 * per_copy; ++idx) lat.strict_marks.push_back(idx);
        int idx = 2 * per_copy;
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= k; ++j, ++idx)
                if (j != k) lat.strict_marks.push_back(idx);
        rep.expected = n + 2;
    } else {
        throw std::invalid_argument("unknown family check kind: " + kind);
    }
    MorphismTable tab = MorphismTable::build(lat);
    HomComplex h = HomComplex::build(lat, tab, lat.init, lat.fin);
    QuotientComplex q = strict_quotient(h);
    for (const auto& cls : q.vertex_classes) {
        std::vector<std::string> labels;
        for (int id : cls) labels.push_back(q.base.label(id));
        rep.classes.push_back(labels);
    }
    return rep;
}

}  // namespace wlat
