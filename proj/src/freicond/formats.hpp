// Text formats for sets, polynomial systems, map tables, solution sets and
// algebraic numbers. Lines starting with '#' and blank lines are ignored on
// input; parse errors carry the 1-based line number.
//
//   set file         one decimal integer per line; serialized sorted ascending
//   system file      header "vars s", then per polynomial either
//                      poly: coeff e1 ... es ; coeff e1 ... es ; ...
//                    or the linear shorthand (constant stored as -b)
//                      linear: c1 ... cs b
//   map file         "key -> value" lines; t_fold keys are comma-separated
//   solutions file   header "arity s", "ground: a1 a2 ...", then
//                    "tuple: i1 ... is" index lines
//   algebraic number "poly: c_d ... c_1 c_0 ; root: i ; minimal: yes|no"
#pragma once

#include <string>

#include "freicond/intset.hpp"
#include "freicond/maptable.hpp"
#include "freicond/polysystem.hpp"
#include "freicond/solutions.hpp"

namespace freicond {

IntSet parse_intset(const std::string& text);
std::string serialize_intset(const IntSet& a);

PolySystem parse_polysystem(const std::string& text);
std::string serialize_polysystem(const PolySystem& p);

MapTable parse_maptable(const std::string& text);
std::string serialize_maptable(const MapTable& m);

SolutionSet parse_solutions(const std::string& text);
std::string serialize_solutions(const SolutionSet& s);

SolutionHypergraph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const SolutionHypergraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace freicond
