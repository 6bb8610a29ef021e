#pragma once

// Built-in lattices and the polytope families backing the quotient checks:
// permutohedra with their vertex words, associahedra as bracketings, the
// collapse map between them, and face posets for simplices and cubes.

#include <string>
#include <utility>
#include <vector>

#include "wlat/lattice.hpp"
#include "wlat/poset.hpp"

namespace wlat {

// kinds: chain (n in 2..6), cosimplicial (1..4), powerset (1..4),
// mapping (1..2), toda, whitehead (n ignored for the last two).
// Out-of-range kind or size throws std::invalid_argument.
Lattice make_lattice(const std::string& kind, int n = 0);

FacePoset simplex_faces(int n);  // nonempty subsets of n+1 vertices
FacePoset cube_faces(int n);     // sign vectors over {0,1,*}

// Blocks in build-up order: the first block holds the elements consumed
// first (those with the smallest vertex coordinates).
using OrderedPartition = std::vector<std::vector<int>>;

struct PermutohedronData {
    int n = 0;
    FacePoset poset;                       // labels are subset flags like (012,02,0)
    std::vector<OrderedPartition> faces;   // parallel to poset.elems
    std::vector<std::vector<int>> coords;  // coords[elem][i] for vertices, empty otherwise

    int find(const OrderedPartition& p) const;
};
PermutohedronData permutohedron_faces(int n);

std::string flag_label(const OrderedPartition& p);
// subsets listed outermost first, as in the flag labels
OrderedPartition partition_from_flag(const std::vector<std::vector<int>>& subsets);
// parses "(012,02,0)"; throws std::invalid_argument when the label is not a
// strictly descending subset flag over {0..n}
OrderedPartition partition_from_flag_label(const std::string& label, int n);

// (i0,...,in) with 0 <= i_k <= k, the normal form of a maximal chain of
// coface maps
using DWord = std::vector<int>;

DWord dword_of_vertex(const OrderedPartition& vertex);
std::string dword_name(const DWord& w);

struct VertexLabel {
    DWord word;
    std::vector<int> permutation;  // one-line form reached by the swaps
    bool reduced = true;           // swap count equals the inversion count
};
// swaps act on adjacent word positions (p, p+1), 0 <= p < n
VertexLabel perm_vertex_label(int n, const std::vector<int>& swaps);

// pairwise nested or disjoint intervals of letter positions, never the
// full word, each spanning at least two letters; sorted
using Bracketing = std::vector<std::pair<int, int>>;

struct AssociahedronData {
    int n = 0;
    FacePoset poset;                // labels like ((ab)(cd))
    std::vector<Bracketing> faces;  // parallel to poset.elems

    int find(const Bracketing& b) const;
};
AssociahedronData associahedron_faces(int n);

Bracketing tonks_image(int n, const OrderedPartition& face);

struct TonksMap {
    PermutohedronData pe;
    AssociahedronData assoc;
    std::vector<int> image;      // pe elem id -> assoc elem id
    std::vector<int> collapsed;  // pe elems whose image has lower dimension
};
TonksMap tonks_collapse(int n);

struct FamilyCheckReport {
    std::string kind;
    int n = 0;
    int expected = 0;                               // ground-truth vertex count
    std::vector<std::vector<std::string>> classes;  // vertex labels per class

    bool ok() const { return static_cast<int>(classes.size()) == expected; }
    std::string summary() const;
};
// kind in {simplex, cube, mapping-simplex}; simplex/cube accept n in 1..3,
// mapping-simplex n in 1..2
FamilyCheckReport family_quotient_check(const std::string& kind, int n);

}  // namespace wlat
