#pragma once

// Cubical cell model of the mapping complex W(u, v) of a lattice.
//
// A cell is a chain of m morphism classes plus a break set S inside
// {1, .., m-1}: positions whose interpolation parameter is pinned at 1.
// Dimension is (m - 1) - |S|.  Each free position k contributes two facets:
// the one-face pins k (adds it to S), the zero-face composes the chain at k.
// Vertices are fully pinned chains; the decomposable subcomplex ("basis")
// consists of the cells with S nonempty.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlat/lattice.hpp"
#include "wlat/poset.hpp"

namespace wlat {

struct Cell {
    Chain chain;
    uint32_t breaks = 0;  // bit p set: position p in 1..size-1 pinned at 1

    int dim() const;
    bool operator==(const Cell& other) const = default;
};

struct CellHash {
    size_t operator()(const Cell& c) const {
        size_t h = c.breaks * 0x9e3779b97f4a7c15ull;
        for (ClassId x : c.chain) h = h * 1099511628211ull + static_cast<size_t>(x) + 1;
        return h;
    }
};

// Facets of a cell at one free position.
struct CellFaces {
    int pos = 0;
    int zero = -1;  // cell id of the composed face
    int one = -1;   // cell id of the pinned face
};

class HomComplex {
  public:
    // Pre: tab built from lat; from/to valid nodes.
    static HomComplex build(const Lattice& lat, const MorphismTable& tab, NodeId from, NodeId to);

    const Lattice& lattice() const { return *lat_; }
    const MorphismTable& table() const { return *tab_; }
    NodeId from() const { return from_; }
    NodeId to() const { return to_; }

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(int id) const { return cells_[id]; }
    int index_of(const Cell& c) const;  // -1 if absent

    const std::vector<CellFaces>& faces(int id) const { return faces_[id]; }
    // Sorted ids of the vertices in the closure of a cell.
    const std::vector<int>& vertex_set(int id) const { return vertex_sets_[id]; }

    std::vector<int> f_vector() const;
    long euler() const;

    // Parenthesized parts split at pinned breaks; entries joined with '.'.
    std::string label(int id) const;

    // Cells with nonempty break set (closed under faces).
    HomComplex basis_subcomplex(std::vector<int>* parent_ids = nullptr) const;
    // Cells of dimension <= k.
    HomComplex skeleton(int k, std::vector<int>* parent_ids = nullptr) const;

    // Face poset of the complex; element ids match cell ids.
    FacePoset face_poset() const;

  private:
    HomComplex restrict_to(const std::vector<char>& keep, std::vector<int>* parent_ids) const;
    void finalize();  // faces, vertex sets, dim

    const Lattice* lat_ = nullptr;
    const MorphismTable* tab_ = nullptr;
    NodeId from_ = -1, to_ = -1;
    int dim_ = 0;
    std::vector<Cell> cells_;  // sorted by (dim, chain, breaks)
    std::unordered_map<Cell, int, CellHash> index_;
    std::vector<std::vector<CellFaces>> faces_;
    std::vector<std::vector<int>> vertex_sets_;
};

// All k-cells that qualify as indecomposable: every break part has length
// 1 except at most one, and (for k >= 1) the break set is nonempty so the
// cell lies in the decomposable subcomplex.  k = 0 returns all vertices.
std::vector<int> indecomposable_cubes(const HomComplex& h, int k);

struct ObstructionPair {
    int a = -1;
    int b = -1;
    int meet = -1;  // common face of dimension cube_dim - 1
};

// Unordered pairs of distinct indecomposable cube_dim-cells whose poset
// meet (the unique common face carrying the intersection of their vertex
// sets) has dimension cube_dim - 1.  Sorted by (a, b).
std::vector<ObstructionPair> obstruction_pairs(const HomComplex& h, int cube_dim);

}  // namespace wlat
