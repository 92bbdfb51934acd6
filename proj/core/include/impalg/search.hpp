#ifndef IMPALG_SEARCH_HPP
#define IMPALG_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "impalg/algebra.hpp"
#include "impalg/relmodel.hpp"

namespace impalg {

struct SearchConfig {
  int max_base = 2;
  RepMode mode = RepMode::relative;
  Profile profile;
  bool up_to_iso = false;                 // prune tops by point-permutation symmetry
  std::optional<long long> node_limit;    // search nodes, not wall clock

  SearchConfig() { profile = Profile{true, false, false, false}; }
};

/// found carries a verified representation; exhausted reports the bound it
/// searched to; aborted reports the node limit that stopped it.  Exhaustion
/// never claims non-representability.
struct SearchOutcome {
  enum class Kind { found, exhausted, aborted };
  Kind kind = Kind::exhausted;
  std::optional<Representation> rep;
  int bound = 0;
  long long node_limit = 0;
  long long nodes = 0;
};

/// Backtracking search over base sizes 0..max_base.  Tops are enumerated in
/// lexicographic bit order (all of X*X in absolute mode, transitive tops in
/// relative mode); elements are assigned largest-first with h(1) pinned to
/// the top and arrow/compose images forced as soon as their arguments are
/// placed.  Returns the first verified representation in this order.
SearchOutcome search_representation(const FiniteAlgebra& alg, const SearchConfig& cfg);

/// Independent check at tiny sizes: enumerates every top and every total
/// map without pruning, verifying each, over base sizes 0..base_size.
/// Hard caps: base_size <= 3 and carrier <= 4.
SearchOutcome oracle_enumerate(const FiniteAlgebra& alg, int base_size, RepMode mode,
                               const Profile& profile);

namespace detail {
/// Tops over `base` points as bit masks (bit x*base+y stands for the pair
/// (x,y)), ascending.  Exhaustive filtering up to 3 points, incremental
/// generation beyond; canonical representatives only when up_to_iso.
std::vector<uint64_t> enumerate_tops(int base, bool transitive_only, bool up_to_iso);
std::vector<uint64_t> tops_by_filter(int base, bool transitive_only);
std::vector<uint64_t> tops_incremental(int base, bool transitive_only);
PairSet top_from_mask(uint64_t mask, int base);
}  // namespace detail

}  // namespace impalg

#endif
