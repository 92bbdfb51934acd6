#ifndef IMPALG_RELMODEL_HPP
#define IMPALG_RELMODEL_HPP

#include <string>
#include <utility>
#include <vector>

#include "impalg/algebra.hpp"

namespace impalg {

using Point = int;
using PointPair = std::pair<Point, Point>;

/// A set of ordered point pairs, kept sorted and duplicate-free.
using PairSet = std::vector<PointPair>;

PairSet normalized(PairSet ps);
bool pairset_contains(const PairSet& ps, PointPair p);
bool pairset_subset(const PairSet& a, const PairSet& b);
PairSet pairset_union(const PairSet& a, const PairSet& b);
PairSet pairset_difference(const PairSet& a, const PairSet& b);
PairSet pairset_intersection(const PairSet& a, const PairSet& b);
bool is_transitive(const PairSet& ps);
bool is_reflexive(const PairSet& ps, int base_size);
PairSet full_relation(int base_size);
PairSet diagonal_relation(int base_size);

/// A base set of points 0..base_size-1 with a relation serving as the
/// ambient top.
struct RelContext {
  int base_size = 0;
  PairSet top;
};

enum class RepMode { absolute, relative };

std::string_view to_string(RepMode mode);
std::optional<RepMode> mode_from_string(std::string_view token);

/// Which laws a representation claims to satisfy.
struct Profile {
  bool arrow = true;
  bool compose = false;
  bool strict_identity = false;
  bool zero_empty = false;

  bool operator==(const Profile&) const = default;
};

std::string to_string(const Profile& profile);
Profile profile_from_string(std::string_view csv);  // throws parse on unknown tokens

/// A map from algebra elements to subsets of the context top, with the mode
/// and profile it is claimed to satisfy.  Checked by verify_representation.
struct Representation {
  RelContext context;
  RepMode mode = RepMode::relative;
  Profile profile;
  std::vector<PairSet> map;  // indexed by element
};

/// (top \ a) u b.  Inputs must be subsets of the top.
PairSet rel_arrow(const RelContext& ctx, const PairSet& a, const PairSet& b);

/// { (x,z) : exists y with (x,y) in a and (y,z) in b }.  The context top
/// must be transitive so the result stays inside it.
PairSet rel_compose(const RelContext& ctx, const PairSet& a, const PairSet& b);

struct RepVerdict {
  bool ok = false;
  std::string law;      // first violated law, or empty
  std::string witness;  // rendered witness, deterministic
};

/// Checks the representation laws selected by rep.profile, in a fixed order:
/// containment in top, absolute-top, top-transitivity (compose),
/// top-reflexivity (strict-identity), injectivity, arrow, compose,
/// strict-identity, zero-empty.  Within a law the lexicographically least
/// failing instance is reported.
RepVerdict verify_representation(const FiniteAlgebra& alg, const Representation& rep);

/// Collapses the base by the equivalence h(1') and relabels pairs by class,
/// yielding an absolute representation where 1' becomes the true diagonal.
/// Requires an absolute {arrow, compose} representation; h(1') must be an
/// equivalence relation and membership must be constant on its classes
/// (both are checked directly, not assumed).
Representation quotient_by_identity(const FiniteAlgebra& alg, const Representation& rep);

/// A witness that a is not below b inside a representation: a pair of
/// points lying in h(a) but not in h(b).
struct DiscriminatorPair {
  int a = -1, b = -1;
  Point iota = -1, o = -1;
};

/// The first discriminator pair for every a, b with a not below b, in
/// lexicographic (a, b) order.  The representation must verify for the
/// arrow profile; a missing witness then indicates a broken injection.
std::vector<DiscriminatorPair> discriminator_pairs(const FiniteAlgebra& alg,
                                                   const Representation& rep);

/// Rebuilds the representation as a disjoint union of restrictions, one per
/// discriminator pair, so that the bottom element maps to the empty set.
/// Requires a designated zero that is least and annihilating, and a verified
/// {arrow, compose} representation.  The output base has at most n*n*|X|
/// points.
Representation empty_zero(const FiniteAlgebra& alg, const Representation& rep);

/// A finite poset over points 0..base_size-1.
class Poset {
public:
  Poset(int base_size, std::vector<char> leq);  // validates the poset laws

  int base_size() const { return n_; }
  bool le(int a, int b) const { return leq_[static_cast<size_t>(a) * n_ + b] != 0; }

private:
  int n_ = 0;
  std::vector<char> leq_;
};

/// True iff leq;r;leq stays inside r.
bool weakening_check(const Poset& p, const PairSet& r);

/// { (x,y) : for all x' <= x, y <= y', (x',y') in r implies (x',y') in s }.
/// Both inputs must be weakening relations; the result always is one.
PairSet weakening_arrow(const Poset& p, const PairSet& r, const PairSet& s);

/// The proper structure over the context: carrier = all subsets of top,
/// arrow = relative Boolean implication, compose = relational composition
/// (included only when the top is transitive).  Elements are named e<mask>
/// with bit i of the mask standing for the i-th pair of the top; zero/one
/// designate the empty and full subsets, id the diagonal when the top is
/// reflexive.
FiniteAlgebra powerset_algebra(const RelContext& ctx);

/// The identity self-embedding of powerset_algebra(ctx) into itself.
Representation identity_representation(const RelContext& ctx);

}  // namespace impalg

#endif
