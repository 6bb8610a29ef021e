#include "wlat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wlat {

std::optional<NodeId> Lattice::node_id(std::string_view name) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == name) return static_cast<NodeId>(i);
    return std::nullopt;
}

std::optional<ArrowId> Lattice::arrow_id(std::string_view name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<ArrowId>(i);
    return std::nullopt;
}

bool Lattice::composable(const Path& p) const {
    if (p.empty()) return false;
    for (ArrowId a : p)
        if (a < 0 || a >= static_cast<ArrowId>(arrows.size())) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (arrows[p[i]].dst != arrows[p[i + 1]].src) return false;
    return true;
}

std::string Lattice::path_label(const Path& p) const {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += '.';
        out += arrows[p[i]].name;
    }
    return out;
}

std::optional<Path> Lattice::parse_path(std::string_view dotted) const {
    Path p;
    size_t pos = 0;
    while (pos <= dotted.size()) {
        size_t dot = dotted.find('.', pos);
        std::string_view part = dotted.substr(pos, dot == std::string_view::npos ? dotted.size() - pos : dot - pos);
        auto id = arrow_id(part);
        if (!id) return std::nullopt;
        p.push_back(*id);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    if (!composable(p)) return std::nullopt;
    return p;
}

std::string ValidationReport::joined() const {
    std::string out;
    for (const auto& e : errors) {
        if (!out.empty()) out += '\n';
        out += e;
    }
    return out;
}

namespace {

struct PathUniverse {
    // paths[k] for every composable path in the lattice, grouped implicitly
    // by endpoints; index lookup by content.
    std::vector<Path> paths;
    std::unordered_map<Path, int, PathHash> index;

    void add(const Path& p) {
        if (index.emplace(p, static_cast<int>(paths.size())).second) paths.push_back(p);
    }
};

// Enumerates every composable path.  Finite because the arrow graph is
// acyclic; callers must have checked that already.
PathUniverse enumerate_paths(const Lattice& lat) {
    PathUniverse u;
    std::vector<std::vector<ArrowId>> out_arrows(lat.nodes.size());
    for (ArrowId a = 0; a < static_cast<ArrowId>(lat.arrows.size()); ++a)
        out_arrows[lat.arrows[a].src].push_back(a);

    Path cur;
    std::function<void(NodeId)> extend = [&](NodeId at) {
        for (ArrowId a : out_arrows[at]) {
            cur.push_back(a);
            u.add(cur);
            extend(lat.arrows[a].dst);
            cur.pop_back();
        }
    };
    for (NodeId v = 0; v < static_cast<NodeId>(lat.nodes.size()); ++v) extend(v);
    return u;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Unites each path with every one-step rewrite of a contiguous relation-side
// occurrence.  All paths exist in the universe, so a single pass generates
// the whole congruence.
void saturate(const Lattice& lat, PathUniverse& u, UnionFind& uf) {
    auto rewrite_occurrences = [&](int pi, const Path& from, const Path& to) {
        const Path& p = u.paths[pi];
        if (p.size() < from.size()) return;
        for (size_t at = 0; at + from.size() <= p.size(); ++at) {
            if (!std::equal(from.begin(), from.end(), p.begin() + at)) continue;
            Path q;
            q.reserve(p.size() - from.size() + to.size());
            q.insert(q.end(), p.begin(), p.begin() + at);
            q.insert(q.end(), to.begin(), to.end());
            q.insert(q.end(), p.begin() + at + from.size(), p.end());
            auto it = u.index.find(q);
            if (it == u.index.end()) throw std::logic_error("rewrite produced unknown path");
            uf.unite(pi, it->second);
        }
    };
    for (int pi = 0; pi < static_cast<int>(u.paths.size()); ++pi) {
        for (const Relation& r : lat.relations) {
            rewrite_occurrences(pi, r.lhs, r.rhs);
            rewrite_occurrences(pi, r.rhs, r.lhs);
        }
    }
}

struct CongruenceResult {
    std::vector<MorphismClass> classes;  // canonical order
    std::unordered_map<Path, ClassId, PathHash> class_of;
};

CongruenceResult congruence(const Lattice& lat) {
    PathUniverse u = enumerate_paths(lat);
    UnionFind uf(u.paths.size());
    saturate(lat, u, uf);

    std::unordered_map<int, std::vector<Path>> groups;
    for (int pi = 0; pi < static_cast<int>(u.paths.size()); ++pi)
        groups[uf.find(pi)].push_back(u.paths[pi]);

    CongruenceResult res;
    for (auto& [root, paths] : groups) {
        std::sort(paths.begin(), paths.end());
        MorphismClass mc;
        mc.src = lat.path_src(paths.front());
        mc.dst = lat.path_dst(paths.front());
        mc.paths = std::move(paths);
        res.classes.push_back(std::move(mc));
    }
    std::sort(res.classes.begin(), res.classes.end(), [](const MorphismClass& a, const MorphismClass& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return a.paths.front() < b.paths.front();
    });
    for (ClassId c = 0; c < static_cast<ClassId>(res.classes.size()); ++c)
        for (const Path& p : res.classes[c].paths) res.class_of.emplace(p, c);
    return res;
}

// A class is null iff some representative contains, as a contiguous
// subpath, a representative of a null-marked class.  Subpaths of subpaths
// are subpaths, so one level of marking suffices.
void mark_null_closure(const Lattice& lat, CongruenceResult& cong) {
    std::set<ClassId> base;
    for (const Path& mark : lat.null_marks) base.insert(cong.class_of.at(mark));
    for (auto& mc : cong.classes) {
        bool null = false;
        for (const Path& p : mc.paths) {
            for (size_t i = 0; i < p.size() && !null; ++i) {
                Path sub;
                for (size_t j = i; j < p.size() && !null; ++j) {
                    sub.push_back(p[j]);
                    if (base.count(cong.class_of.at(sub))) null = true;
                }
            }
            if (null) break;
        }
        mc.is_null = null;
    }
}

ValidationReport structural_checks(const Lattice& lat) {
    ValidationReport rep;
    auto fail = [&](std::string msg) { rep.errors.push_back(std::move(msg)); };

    if (lat.nodes.empty()) fail("structure: lattice has no nodes");
    if (lat.init < 0 || lat.init >= static_cast<NodeId>(lat.nodes.size())) fail("structure: init node missing");
    if (lat.fin < 0 || lat.fin >= static_cast<NodeId>(lat.nodes.size())) fail("structure: fin node missing");
    if (!rep.ok()) return rep;
    if (lat.init == lat.fin) fail("structure: init and fin must be distinct");

    std::set<std::string> seen;
    for (const auto& n : lat.nodes)
        if (!seen.insert(n).second) fail("structure: duplicate node id '" + n + "'");
    seen.clear();
    for (const auto& a : lat.arrows) {
        if (!seen.insert(a.name).second) fail("structure: duplicate arrow id '" + a.name + "'");
        if (a.src < 0 || a.src >= static_cast<NodeId>(lat.nodes.size()) || a.dst < 0 ||
            a.dst >= static_cast<NodeId>(lat.nodes.size()))
            fail("structure: arrow '" + a.name + "' references a missing node");
    }
    if (!rep.ok()) return rep;

    if (lat.nodes.size() < 3) fail("trivial: need at least one node besides init and fin");

    // Kahn's algorithm; leftovers witness a cycle.  Self-loops land here too,
    // which also enforces the non-unital condition.
    {
        std::vector<int> indeg(lat.nodes.size(), 0);
        for (const auto& a : lat.arrows) indeg[a.dst]++;
        std::vector<NodeId> queue;
        for (NodeId v = 0; v < static_cast<NodeId>(lat.nodes.size()); ++v)
            if (indeg[v] == 0) queue.push_back(v);
        size_t removed = 0;
        while (!queue.empty()) {
            NodeId v = queue.back();
            queue.pop_back();
            ++removed;
            for (const auto& a : lat.arrows)
                if (a.src == v && --indeg[a.dst] == 0) queue.push_back(a.dst);
        }
        if (removed != lat.nodes.size()) fail("acyclic: arrow graph contains a directed cycle");
    }
    if (!rep.ok()) return rep;

    {
        auto reach = [&](NodeId start, bool forward) {
            std::vector<bool> seen_v(lat.nodes.size(), false);
            seen_v[start] = true;
            std::vector<NodeId> stack{start};
            while (!stack.empty()) {
                NodeId v = stack.back();
                stack.pop_back();
                for (const auto& a : lat.arrows) {
                    NodeId from = forward ? a.src : a.dst;
                    NodeId to = forward ? a.dst : a.src;
                    if (from == v && !seen_v[to]) {
                        seen_v[to] = true;
                        stack.push_back(to);
                    }
                }
            }
            return seen_v;
        };
        auto from_init = reach(lat.init, true);
        auto to_fin = reach(lat.fin, false);
        for (NodeId v = 0; v < static_cast<NodeId>(lat.nodes.size()); ++v) {
            if (!from_init[v]) fail("reachable: node '" + lat.nodes[v] + "' is not reachable from init");
            if (!to_fin[v]) fail("coreachable: node '" + lat.nodes[v] + "' cannot reach fin");
        }
    }

    for (size_t i = 0; i < lat.relations.size(); ++i) {
        const Relation& r = lat.relations[i];
        if (!lat.composable(r.lhs) || !lat.composable(r.rhs)) {
            fail("relation " + std::to_string(i) + ": side is not a composable path");
            continue;
        }
        if (lat.path_src(r.lhs) != lat.path_src(r.rhs) || lat.path_dst(r.lhs) != lat.path_dst(r.rhs))
            fail("relation " + std::to_string(i) + ": sides are not parallel");
    }
    for (size_t i = 0; i < lat.null_marks.size(); ++i)
        if (!lat.composable(lat.null_marks[i]))
            fail("null " + std::to_string(i) + ": not a composable path");
    for (size_t i = 0; i < lat.strict_marks.size(); ++i)
        if (lat.strict_marks[i] < 0 || lat.strict_marks[i] >= static_cast<int>(lat.relations.size()))
            fail("strict " + std::to_string(i) + ": relation index out of range");
    return rep;
}

}  // namespace

ValidationReport validate(const Lattice& lat) {
    ValidationReport rep = structural_checks(lat);
    if (!rep.ok()) return rep;
    CongruenceResult cong = congruence(lat);
    size_t maximal = 0;
    for (const auto& mc : cong.classes)
        if (mc.src == lat.init && mc.dst == lat.fin) ++maximal;
    if (maximal != 1)
        rep.errors.push_back("maximal-class: found " + std::to_string(maximal) +
                             " morphism classes from init to fin, expected exactly 1");
    return rep;
}

MorphismTable MorphismTable::build(const Lattice& lat) {
    ValidationReport rep = validate(lat);
    if (!rep.ok()) throw std::invalid_argument("invalid lattice: " + rep.joined());
    MorphismTable tab;
    tab.lat_ = &lat;
    CongruenceResult cong = congruence(lat);
    mark_null_closure(lat, cong);
    tab.classes_ = std::move(cong.classes);
    tab.class_of_ = std::move(cong.class_of);
    return tab;
}

ClassId MorphismTable::class_of(const Path& p) const {
    auto it = class_of_.find(p);
    if (it == class_of_.end()) throw std::invalid_argument("not a composable path of this lattice");
    return it->second;
}

ClassId MorphismTable::compose(ClassId a, ClassId b) const {
    const MorphismClass& ca = classes_[a];
    const MorphismClass& cb = classes_[b];
    if (ca.dst != cb.src) throw std::invalid_argument("compose: classes are not composable");
    Path joined = ca.paths.front();
    joined.insert(joined.end(), cb.paths.front().begin(), cb.paths.front().end());
    return class_of_.at(joined);
}

std::vector<ClassId> MorphismTable::classes_between(NodeId u, NodeId v) const {
    std::vector<ClassId> out;
    for (ClassId c = 0; c < static_cast<ClassId>(classes_.size()); ++c)
        if (classes_[c].src == u && classes_[c].dst == v) out.push_back(c);
    return out;
}

std::string MorphismTable::label(ClassId c) const { return lat_->path_label(classes_[c].paths.front()); }

std::vector<Chain> enumerate_chains(const MorphismTable& tab, NodeId u, NodeId v) {
    // chains(w) = all class chains from w to v, assembled from shorter tails.
    const auto& lat = tab.lattice();
    std::vector<std::optional<std::vector<Chain>>> memo(lat.nodes.size());
    std::function<const std::vector<Chain>&(NodeId)> chains = [&](NodeId w) -> const std::vector<Chain>& {
        if (memo[w]) return *memo[w];
        std::vector<Chain> out;
        for (ClassId c = 0; c < static_cast<ClassId>(tab.classes().size()); ++c) {
            if (tab.cls(c).src != w) continue;
            NodeId mid = tab.cls(c).dst;
            if (mid == v) out.push_back({c});
            if (mid != v) {
                for (const Chain& tail : chains(mid)) {
                    Chain ch{c};
                    ch.insert(ch.end(), tail.begin(), tail.end());
                    out.push_back(std::move(ch));
                }
            }
        }
        std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        memo[w] = std::move(out);
        return *memo[w];
    };
    return chains(u);
}

}  // namespace wlat
