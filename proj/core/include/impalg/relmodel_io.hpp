#ifndef IMPALG_RELMODEL_IO_HPP
#define IMPALG_RELMODEL_IO_HPP

#include <iosfwd>
#include <string>

#include "impalg/relmodel.hpp"

namespace impalg {

// Representation text format ('#' starts a comment):
//
//   base <n>
//   top (i,j) (k,l) ...
//   map <element-name> = (i,j) ...      one line per element
//   mode absolute|relative              optional, defaults to relative
//   profile arrow,compose,...           optional, defaults to arrow
//
// Poset format:
//
//   base <n>
//   leq (i,j) ...                       reflexive pairs are implied

Representation parse_representation(std::istream& in, const FiniteAlgebra& alg);
Representation parse_representation_text(const std::string& text, const FiniteAlgebra& alg);
Representation read_representation_file(const std::string& path, const FiniteAlgebra& alg);
std::string format_representation(const FiniteAlgebra& alg, const Representation& rep);

Poset parse_poset(std::istream& in);
Poset parse_poset_text(const std::string& text);
Poset read_poset_file(const std::string& path);

/// "(i,j) (k,l)" to a pair set; empty or blank input is the empty set.
PairSet parse_pair_list(const std::string& text);
std::string format_pair_list(const PairSet& ps);

}  // namespace impalg

#endif
