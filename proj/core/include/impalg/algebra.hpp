#ifndef IMPALG_ALGEBRA_HPP
#define IMPALG_ALGEBRA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "impalg/error.hpp"

namespace impalg {

/// The axiom classes the checker knows about.
enum class ClassId { ia, positive_ia, isg, imonoid, bsg };

std::string_view to_string(ClassId cls);
std::optional<ClassId> class_from_string(std::string_view token);

/// A finite algebra given by Cayley tables over an ordered carrier.
///
/// `arrow` is always present. `compose` and the designated constants are
/// optional so one type covers every signature handled by the workbench:
/// plain implication algebras, semigroup expansions, monoids with 1', and
/// Boolean semigroups (whose negation and join are term-defined from the
/// arrow table and the zero constant).
class FiniteAlgebra {
public:
  FiniteAlgebra(std::vector<std::string> elements,
                std::vector<int> arrow,
                std::optional<std::vector<int>> compose = std::nullopt,
                std::optional<int> one = std::nullopt,
                std::optional<int> id = std::nullopt,
                std::optional<int> zero = std::nullopt);

  int size() const { return n_; }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(int i) const { return elements_[static_cast<size_t>(i)]; }
  std::optional<int> find(std::string_view name) const;

  int arrow(int a, int b) const { return arrow_[static_cast<size_t>(a) * n_ + b]; }
  bool has_compose() const { return compose_.has_value(); }
  int compose(int a, int b) const { return (*compose_)[static_cast<size_t>(a) * n_ + b]; }

  std::optional<int> one() const { return one_; }
  std::optional<int> id() const { return id_; }
  std::optional<int> zero() const { return zero_; }

  const std::vector<int>& arrow_table() const { return arrow_; }
  const std::vector<int>* compose_table() const { return compose_ ? &*compose_ : nullptr; }

private:
  int n_ = 0;
  std::vector<std::string> elements_;
  std::vector<int> arrow_;
  std::optional<std::vector<int>> compose_;
  std::optional<int> one_, id_, zero_;
};

/// One falsified axiom: its name, the first failing tuple in lexicographic
/// index order, and how many instances fail in total.
struct Violation {
  std::string axiom;
  std::vector<int> witness;
  long long count = 0;
};

struct ClassReport {
  ClassId cls;
  bool passed = false;
  std::vector<Violation> violations;  // empty iff passed
};

/// Evaluates every axiom instance of `cls` over all element tuples.
/// Throws missing_table / missing_constant when `cls` demands a table or
/// constant the algebra lacks.
ClassReport check_class(const FiniteAlgebra& alg, ClassId cls);

/// The common value of a -> a, verified against b -> 1 = 1 and 1 -> b = b.
/// Throws not_constant / law_violation when the algebra has no such top.
int derived_one(const FiniteAlgebra& alg);

/// Order and join derived from the arrow table: a <= b iff a -> b = 1 and
/// a + b = (a -> b) -> b.  Requires the ia axioms to hold.
struct DerivedOrder {
  int n = 0;
  int one = -1;
  std::vector<char> leq;   // n*n; nonzero iff row <= col
  std::vector<int> join;   // n*n

  bool le(int a, int b) const { return leq[static_cast<size_t>(a) * n + b] != 0; }
  int plus(int a, int b) const { return join[static_cast<size_t>(a) * n + b]; }
};

DerivedOrder derived_order(const FiniteAlgebra& alg);

/// Projects the algebra onto the signature of `target`, deriving constants
/// where they are term-definable (1 as a -> a).  Throws not_definable when
/// no term definition connects the signatures, and a precondition error
/// when the projected algebra fails check_class(target).
FiniteAlgebra reduct(const FiniteAlgebra& alg, ClassId target);

}  // namespace impalg

#endif
