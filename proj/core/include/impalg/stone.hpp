#ifndef IMPALG_STONE_HPP
#define IMPALG_STONE_HPP

#include <vector>

#include "impalg/algebra.hpp"
#include "impalg/filters.hpp"
#include "impalg/relmodel.hpp"

namespace impalg {

/// The set representation of an algebra over its prime filters: element a
/// maps to the positions of the base filters containing a.
struct StoneRepresentation {
  std::vector<Filter> base;           // prime filters in canonical order
  std::vector<std::vector<int>> map;  // element -> sorted base positions
};

/// The prime filters in canonical enumeration order.
std::vector<Filter> stone_base(const FiniteAlgebra& alg);

/// Builds the representation over stone_base and verifies it is an
/// injective arrow-preserving map with the expected top and join images.
/// Injectivity is verified constructively, separating each pair of distinct
/// elements with a discriminating prime filter.
StoneRepresentation stone_represent(const FiniteAlgebra& alg);

/// Lifts the set representation to binary relations.  Relative mode puts
/// the diagonal over the base positions as the top; absolute mode cylinders
/// each image along rows of the full square.
Representation relationalize(const FiniteAlgebra& alg, const StoneRepresentation& sr, RepMode mode);

}  // namespace impalg

#endif
