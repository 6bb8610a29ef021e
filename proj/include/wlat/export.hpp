#pragma once

// Exporters: cell complexes as JSON (with a strict re-ingestion check),
// lattice generator graphs as DOT, and the two 3-dimensional polytope
// realizations as OFF.

#include <string>

#include "json.hpp"
#include "wlat/cells.hpp"
#include "wlat/families.hpp"

namespace wlat {

// {format_version, cells:[{id,dim,chain,breaks}], faces:[{from,to,kind,pos}],
// fvector}; chain entries are canonical class representatives (dotted arrow
// names), which class_of maps back to the class
nlohmann::json complex_to_json(const HomComplex& h);

// Re-ingests j against h's lattice: every chain label is parsed back to a
// class, every cell must land on its own id, and faces/f-vector must match.
// Explains the first mismatch in *why.
bool json_matches_complex(const nlohmann::json& j, const HomComplex& h,
                          std::string* why = nullptr);

// generator graph; one edge per arrow, one annotation line per relation and
// per null mark
std::string lattice_to_dot(const Lattice& lat);

// target "pe" or "assoc"; only n = 3 is a 3-dimensional realization.
// Coordinates project the sum(x)=const hyperplane onto a fixed orthonormal
// basis; associahedron vertices average their collapsed fibers.
std::string off_realization(const std::string& target, int n);

}  // namespace wlat
