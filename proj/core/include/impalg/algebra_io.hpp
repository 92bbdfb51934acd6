#ifndef IMPALG_ALGEBRA_IO_HPP
#define IMPALG_ALGEBRA_IO_HPP

#include <iosfwd>
#include <string>

#include "impalg/algebra.hpp"

namespace impalg {

// Line-oriented algebra text format ('#' starts a comment):
//
//   elements <name>+
//   arrow
//   <name>: <name>{n}        one row per element, in declaration order
//   compose                  optional, same shape
//   <name>: <name>{n}
//   const one <name>         each const line optional, at most once
//   const id <name>
//   const zero <name>
//
// Parsing is strict: unknown names, wrong row lengths, rows out of order,
// and duplicate sections or constants are parse errors.

FiniteAlgebra parse_algebra(std::istream& in);
FiniteAlgebra parse_algebra_text(const std::string& text);
FiniteAlgebra read_algebra_file(const std::string& path);

std::string format_algebra(const FiniteAlgebra& alg);

}  // namespace impalg

#endif
