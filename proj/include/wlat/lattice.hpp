#pragma once

// Finite presented lattices: directed acyclic non-unital categories with a
// weakly initial node, a weakly terminal node, and a unique maximal morphism
// class between them.  Morphisms are congruence classes of composable arrow
// paths; the congruence is generated by the declared parallel-path relations.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wlat {

using NodeId = int;
using ArrowId = int;
using ClassId = int;

// A path is a composable arrow sequence in diagrammatic order: path[0] is
// applied first, path.back() last.  Paths are never empty (non-unital).
using Path = std::vector<ArrowId>;

struct Arrow {
    std::string name;
    NodeId src = -1;
    NodeId dst = -1;
};

// Both sides are parallel paths (same source and target).
struct Relation {
    Path lhs;
    Path rhs;
};

struct Lattice {
    std::string name;
    std::vector<std::string> nodes;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::vector<Path> null_marks;    // composites declared null
    std::vector<int> strict_marks;   // indices into relations
    NodeId init = -1;
    NodeId fin = -1;

    std::optional<NodeId> node_id(std::string_view name) const;
    std::optional<ArrowId> arrow_id(std::string_view name) const;

    // Valid iff nonempty and consecutive arrows compose.
    bool composable(const Path& p) const;
    NodeId path_src(const Path& p) const { return arrows[p.front()].src; }
    NodeId path_dst(const Path& p) const { return arrows[p.back()].dst; }

    // Arrow names joined with '.', diagrammatic order.
    std::string path_label(const Path& p) const;
    std::optional<Path> parse_path(std::string_view dotted) const;
};

struct ValidationReport {
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
    std::string joined() const;
};

// Checks, in order: structure (ids, init/fin present and distinct, at least
// one internal node), acyclicity, reachability from init, co-reachability to
// fin, relation/null/strict well-formedness, and uniqueness of the maximal
// morphism class from init to fin.  Expected failures are values, not
// exceptions.
ValidationReport validate(const Lattice& lat);

struct MorphismClass {
    NodeId src = -1;
    NodeId dst = -1;
    std::vector<Path> paths;  // sorted; paths.front() is the canonical representative
    bool is_null = false;     // factors through a null-marked composite
};

struct PathHash {
    size_t operator()(const Path& p) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (ArrowId a : p) h = h * 1099511628211ull + static_cast<size_t>(a) + 1;
        return h;
    }
};

// The full morphism structure of a valid lattice: every path between every
// node pair, partitioned into congruence classes.  Paths are finite by
// acyclicity, so the congruence is the equivalence closure of single
// relation rewrites over the complete path set.
class MorphismTable {
  public:
    // Pre: validate(lat).ok().  Throws std::invalid_argument otherwise.
    static MorphismTable build(const Lattice& lat);

    const Lattice& lattice() const { return *lat_; }
    const std::vector<MorphismClass>& classes() const { return classes_; }
    const MorphismClass& cls(ClassId c) const { return classes_[c]; }

    ClassId class_of(const Path& p) const;  // throws on unknown path
    // Pre: cls(a).dst == cls(b).src.
    ClassId compose(ClassId a, ClassId b) const;
    bool is_null(ClassId c) const { return classes_[c].is_null; }

    // Classes with the given endpoints, in canonical order.
    std::vector<ClassId> classes_between(NodeId u, NodeId v) const;

    // Canonical representative rendered with '.' separators.
    std::string label(ClassId c) const;

  private:
    const Lattice* lat_ = nullptr;
    std::vector<MorphismClass> classes_;
    std::unordered_map<Path, ClassId, PathHash> class_of_;
};

// Convenience wrapper matching the operation vocabulary.
inline MorphismTable morphism_classes(const Lattice& lat) { return MorphismTable::build(lat); }

// A chain is a composable sequence of morphism classes (length >= 1).
using Chain = std::vector<ClassId>;

// All chains from u to v, sorted by length then lexicographically.
std::vector<Chain> enumerate_chains(const MorphismTable& tab, NodeId u, NodeId v);

}  // namespace wlat
