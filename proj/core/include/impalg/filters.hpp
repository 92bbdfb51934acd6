#ifndef IMPALG_FILTERS_HPP
#define IMPALG_FILTERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "impalg/algebra.hpp"

namespace impalg {

/// An implicative filter candidate: a subset of the carrier, kept sorted.
struct Filter {
  std::vector<int> members;

  bool operator==(const Filter&) const = default;
  bool contains(int x) const;
};

enum class FilterKind { all, proper, prime, irreducible };

std::string_view to_string(FilterKind kind);
std::optional<FilterKind> filter_kind_from_string(std::string_view token);

struct FilterCheck {
  bool ok = false;
  std::string violation;     // "one-missing" or "not-closed"
  std::vector<int> witness;  // offending element / (a, b) pair
};

/// True iff `subset` contains 1 and is closed under modus ponens.  The first
/// violated condition (lexicographic witness) is reported otherwise.
FilterCheck is_filter(const FiniteAlgebra& alg, const std::vector<int>& subset);

/// { x : a -> x in f } — the least filter containing f and a.
Filter generated_filter(const FiniteAlgebra& alg, const Filter& f, int a);

/// All filters of the given kind, sorted by (size, lexicographic members).
std::vector<Filter> enumerate_filters(const FiniteAlgebra& alg, FilterKind kind);

/// The first prime filter (in enumeration order) containing f and omitting
/// `avoid`.  Requires avoid not in f; existence is then guaranteed.
Filter prime_extend(const FiniteAlgebra& alg, const Filter& f, int avoid);

/// A prime filter G with f subset of G, a in G and b not in G, built from
/// the filter generated by f and a.  Requires a -> b not in f.
Filter prime_discriminate(const FiniteAlgebra& alg, const Filter& f, int a, int b);

/// "{a, 1}" rendering in element-name order.
std::string format_filter(const FiniteAlgebra& alg, const Filter& f);

namespace detail {
// Both enumeration strategies, exposed so tests can check they agree.
// Masks use bit i for carrier index i; carriers are capped at 64 elements.
std::vector<uint64_t> filter_masks_by_scan(const FiniteAlgebra& alg);
std::vector<uint64_t> filter_masks_by_closure(const FiniteAlgebra& alg);
}  // namespace detail

}  // namespace impalg

#endif
