#pragma once

// Line-oriented text format for lattice presentations.
//
//   format 1
//   node <id> [<id> ...]
//   init <id>
//   fin <id>
//   arrow <id>: <src> -> <dst>
//   rel <path> = <path>
//   null <path>
//   strict <relation-index> | strict <path> = <path>
//   # comment
//
// Paths are whitespace-separated arrow ids in diagrammatic order (first
// applied first).  Parsing is total: failures come back as diagnostics with
// source spans, never as exceptions.

#include <iosfwd>
#include <string>
#include <vector>

#include "wlat/lattice.hpp"

namespace wlat {

struct SourceSpan {
    int line = 0;  // 1-based
    int col_begin = 0;
    int col_end = 0;  // exclusive, 1-based columns
};

struct Diagnostic {
    SourceSpan span;
    std::string message;
    std::string render(const std::string& filename) const;
};

struct ParseResult {
    Lattice lattice;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

ParseResult parse_lattice(const std::string& text);
ParseResult parse_lattice_file(const std::string& path);

// Canonical rendering; parse(print(lat)) reproduces the lattice.
std::string print_lattice(const Lattice& lat);

}  // namespace wlat
