#include "impalg/algebra.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace impalg {

namespace {

const char* kBadNameChars = " \t\r\n:,#{}()=";

void validate_table(const std::vector<int>& t, int n, const char* what) {
  if (static_cast<int>(t.size()) != n * n)
    fail(errc::precondition, std::string(what) + " table has wrong size");
  for (int v : t)
    if (v < 0 || v >= n) fail(errc::precondition, std::string(what) + " table entry out of range");
}

void validate_const(const std::optional<int>& c, int n, const char* what) {
  if (c && (*c < 0 || *c >= n))
    fail(errc::precondition, std::string("designated ") + what + " out of range");
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> elements,
                             std::vector<int> arrow,
                             std::optional<std::vector<int>> compose,
                             std::optional<int> one,
                             std::optional<int> id,
                             std::optional<int> zero)
    : n_(static_cast<int>(elements.size())),
      elements_(std::move(elements)),
      arrow_(std::move(arrow)),
      compose_(std::move(compose)),
      one_(one),
      id_(id),
      zero_(zero) {
  if (n_ < 1) fail(errc::precondition, "carrier must be nonempty");
  std::set<std::string> seen;
  for (const auto& name : elements_) {
    if (name.empty() || name.find_first_of(kBadNameChars) != std::string::npos)
      fail(errc::precondition, "bad element name: '" + name + "'");
    if (!seen.insert(name).second) fail(errc::precondition, "duplicate element name: " + name);
  }
  validate_table(arrow_, n_, "arrow");
  if (compose_) validate_table(*compose_, n_, "compose");
  validate_const(one_, n_, "one");
  validate_const(id_, n_, "id");
  validate_const(zero_, n_, "zero");
}

std::optional<int> FiniteAlgebra::find(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (elements_[static_cast<size_t>(i)] == name) return i;
  return std::nullopt;
}

std::string_view to_string(ClassId cls) {
  switch (cls) {
    case ClassId::ia: return "ia";
    case ClassId::positive_ia: return "positive-ia";
    case ClassId::isg: return "isg";
    case ClassId::imonoid: return "imonoid";
    case ClassId::bsg: return "bsg";
  }
  return "?";
}

std::optional<ClassId> class_from_string(std::string_view token) {
  if (token == "ia") return ClassId::ia;
  if (token == "positive-ia") return ClassId::positive_ia;
  if (token == "isg") return ClassId::isg;
  if (token == "imonoid") return ClassId::imonoid;
  if (token == "bsg") return ClassId::bsg;
  return std::nullopt;
}

namespace {

// Evaluation context shared by all axiom predicates.  Derived tables (neg,
// join, meet) are only populated for the Boolean-semigroup check.
struct Ctx {
  int n = 0;
  const int* arw = nullptr;
  const int* cmp = nullptr;
  int one = -1, id = -1, zero = -1;
  const int* neg = nullptr;
  const int* join = nullptr;
  const int* meet = nullptr;

  int a(int x, int y) const { return arw[static_cast<size_t>(x) * n + y]; }
  int c(int x, int y) const { return cmp[static_cast<size_t>(x) * n + y]; }
  int j(int x, int y) const { return join[static_cast<size_t>(x) * n + y]; }
  int m(int x, int y) const { return meet[static_cast<size_t>(x) * n + y]; }
};

using Pred = bool (*)(const Ctx&, int, int, int);

struct Axiom {
  const char* name;
  int arity;
  Pred holds;
};

// --- implication algebra ---
bool ax_contraction(const Ctx& t, int x, int y, int) { return t.a(t.a(x, y), x) == x; }
bool ax_quasi_comm(const Ctx& t, int x, int y, int) { return t.a(t.a(x, y), y) == t.a(t.a(y, x), x); }
bool ax_exchange(const Ctx& t, int x, int y, int z) { return t.a(x, t.a(y, z)) == t.a(y, t.a(x, z)); }
bool ax_one_desig(const Ctx& t, int x, int, int) { return t.a(x, x) == t.one; }

// --- positive implication algebra ---
bool ax_p1(const Ctx& t, int x, int y, int) { return t.a(x, t.a(y, x)) == t.one; }
bool ax_p2(const Ctx& t, int x, int y, int z) {
  return t.a(t.a(x, t.a(y, z)), t.a(t.a(x, y), t.a(x, z))) == t.one;
}
bool ax_p3(const Ctx& t, int x, int y, int) {
  return !(t.a(x, y) == t.one && t.a(y, x) == t.one && x != y);
}
bool ax_p4(const Ctx& t, int x, int, int) { return t.a(x, t.one) == t.one; }

// --- semigroup expansion ---
bool ax_assoc(const Ctx& t, int x, int y, int z) { return t.c(t.c(x, y), z) == t.c(x, t.c(y, z)); }
bool ax_lqa(const Ctx& t, int x, int y, int z) {
  return t.c(t.a(t.a(x, y), y), z) == t.a(t.a(t.c(x, z), t.c(y, z)), t.c(y, z));
}
bool ax_rqa(const Ctx& t, int x, int y, int z) {
  return t.c(z, t.a(t.a(x, y), y)) == t.a(t.a(t.c(z, x), t.c(z, y)), t.c(z, y));
}
bool ax_id_left(const Ctx& t, int x, int, int) { return t.c(t.id, x) == x; }
bool ax_id_right(const Ctx& t, int x, int, int) { return t.c(x, t.id) == x; }

// --- Boolean semigroup (lattice laws over the derived -, +, .) ---
bool ax_arrow_def(const Ctx& t, int x, int y, int) { return t.a(x, y) == t.j(t.neg[x], y); }
bool ax_join_comm(const Ctx& t, int x, int y, int) { return t.j(x, y) == t.j(y, x); }
bool ax_join_assoc(const Ctx& t, int x, int y, int z) { return t.j(t.j(x, y), z) == t.j(x, t.j(y, z)); }
bool ax_meet_comm(const Ctx& t, int x, int y, int) { return t.m(x, y) == t.m(y, x); }
bool ax_meet_assoc(const Ctx& t, int x, int y, int z) { return t.m(t.m(x, y), z) == t.m(x, t.m(y, z)); }
bool ax_absorb_join(const Ctx& t, int x, int y, int) { return t.j(x, t.m(x, y)) == x; }
bool ax_absorb_meet(const Ctx& t, int x, int y, int) { return t.m(x, t.j(x, y)) == x; }
bool ax_distr_join(const Ctx& t, int x, int y, int z) {
  return t.j(x, t.m(y, z)) == t.m(t.j(x, y), t.j(x, z));
}
bool ax_distr_meet(const Ctx& t, int x, int y, int z) {
  return t.m(x, t.j(y, z)) == t.j(t.m(x, y), t.m(x, z));
}
bool ax_zero_unit(const Ctx& t, int x, int, int) { return t.j(x, t.zero) == x; }
bool ax_one_unit(const Ctx& t, int x, int, int) { return t.m(x, t.one) == x; }
bool ax_compl_join(const Ctx& t, int x, int, int) { return t.j(x, t.neg[x]) == t.one; }
bool ax_compl_meet(const Ctx& t, int x, int, int) { return t.m(x, t.neg[x]) == t.zero; }
bool ax_add_left(const Ctx& t, int x, int y, int z) {
  return t.c(t.j(x, y), z) == t.j(t.c(x, z), t.c(y, z));
}
bool ax_add_right(const Ctx& t, int x, int y, int z) {
  return t.c(z, t.j(x, y)) == t.j(t.c(z, x), t.c(z, y));
}
bool ax_annih_left(const Ctx& t, int x, int, int) { return t.c(t.zero, x) == t.zero; }
bool ax_annih_right(const Ctx& t, int x, int, int) { return t.c(x, t.zero) == t.zero; }

void run_axiom(const Ctx& ctx, const Axiom& ax, std::vector<Violation>& out) {
  long long count = 0;
  std::vector<int> first;
  const int n = ctx.n;
  switch (ax.arity) {
    case 1:
      for (int x = 0; x < n; ++x)
        if (!ax.holds(ctx, x, 0, 0)) {
          if (count++ == 0) first = {x};
        }
      break;
    case 2:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (!ax.holds(ctx, x, y, 0)) {
            if (count++ == 0) first = {x, y};
          }
      break;
    case 3:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (!ax.holds(ctx, x, y, z)) {
              if (count++ == 0) first = {x, y, z};
            }
      break;
    default:
      fail(errc::internal, "bad axiom arity");
  }
  if (count > 0) out.push_back({ax.name, std::move(first), count});
}

void require_compose(const FiniteAlgebra& alg, ClassId cls) {
  if (!alg.has_compose())
    fail(errc::missing_table,
         std::string("class ") + std::string(to_string(cls)) + " requires a compose table");
}

std::vector<Axiom> ia_axioms(bool with_one_designation) {
  std::vector<Axiom> axs = {
      {"Contraction", 2, ax_contraction},
      {"Quasi-commutativity", 2, ax_quasi_comm},
      {"Exchange", 3, ax_exchange},
  };
  if (with_one_designation) axs.push_back({"One-designation", 1, ax_one_desig});
  return axs;
}

}  // namespace

ClassReport check_class(const FiniteAlgebra& alg, ClassId cls) {
  Ctx ctx;
  ctx.n = alg.size();
  ctx.arw = alg.arrow_table().data();
  if (alg.compose_table()) ctx.cmp = alg.compose_table()->data();
  if (alg.one()) ctx.one = *alg.one();
  if (alg.id()) ctx.id = *alg.id();
  if (alg.zero()) ctx.zero = *alg.zero();

  ClassReport report;
  report.cls = cls;

  std::vector<Axiom> axioms;
  std::vector<int> neg, join, meet;

  switch (cls) {
    case ClassId::ia:
      axioms = ia_axioms(alg.one().has_value());
      break;

    case ClassId::positive_ia: {
      // The axioms need a constant 1.  Use the designated one, else the
      // common diagonal value; a non-constant diagonal is itself reported
      // as the failure (the signature cannot omit 1).
      if (!alg.one()) {
        const int v = alg.arrow(0, 0);
        long long bad = 0;
        int first = -1;
        for (int x = 1; x < ctx.n; ++x)
          if (alg.arrow(x, x) != v) {
            if (bad++ == 0) first = x;
          }
        if (bad > 0) {
          report.violations.push_back({"One-constant", {0, first}, bad});
          report.passed = false;
          return report;
        }
        ctx.one = v;
      } else {
        axioms.push_back({"One-designation", 1, ax_one_desig});
      }
      axioms.push_back({"P1", 2, ax_p1});
      axioms.push_back({"P2", 3, ax_p2});
      axioms.push_back({"P3", 2, ax_p3});
      axioms.push_back({"P4", 1, ax_p4});
      break;
    }

    case ClassId::isg:
    case ClassId::imonoid: {
      require_compose(alg, cls);
      if (cls == ClassId::imonoid && !alg.id())
        fail(errc::missing_constant, "class imonoid requires a designated id");
      axioms = ia_axioms(alg.one().has_value());
      axioms.push_back({"Associativity", 3, ax_assoc});
      axioms.push_back({"Left-quasi-additivity", 3, ax_lqa});
      axioms.push_back({"Right-quasi-additivity", 3, ax_rqa});
      if (cls == ClassId::imonoid) {
        axioms.push_back({"Left-identity", 1, ax_id_left});
        axioms.push_back({"Right-identity", 1, ax_id_right});
      }
      break;
    }

    case ClassId::bsg: {
      require_compose(alg, cls);
      if (!alg.zero()) fail(errc::missing_constant, "class bsg requires a designated zero");
      if (!alg.one()) fail(errc::missing_constant, "class bsg requires a designated one");
      const int n = ctx.n;
      neg.resize(static_cast<size_t>(n));
      join.resize(static_cast<size_t>(n) * n);
      meet.resize(static_cast<size_t>(n) * n);
      for (int x = 0; x < n; ++x) neg[static_cast<size_t>(x)] = alg.arrow(x, ctx.zero);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          join[static_cast<size_t>(x) * n + y] = alg.arrow(alg.arrow(x, y), y);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int nx = neg[static_cast<size_t>(x)], ny = neg[static_cast<size_t>(y)];
          meet[static_cast<size_t>(x) * n + y] =
              neg[static_cast<size_t>(join[static_cast<size_t>(nx) * n + ny])];
        }
      ctx.neg = neg.data();
      ctx.join = join.data();
      ctx.meet = meet.data();
      axioms = {
          {"Arrow-definability", 2, ax_arrow_def},
          {"Join-commutativity", 2, ax_join_comm},
          {"Join-associativity", 3, ax_join_assoc},
          {"Meet-commutativity", 2, ax_meet_comm},
          {"Meet-associativity", 3, ax_meet_assoc},
          {"Absorption-join", 2, ax_absorb_join},
          {"Absorption-meet", 2, ax_absorb_meet},
          {"Distributivity-join", 3, ax_distr_join},
          {"Distributivity-meet", 3, ax_distr_meet},
          {"Zero-unit", 1, ax_zero_unit},
          {"One-unit", 1, ax_one_unit},
          {"Complement-join", 1, ax_compl_join},
          {"Complement-meet", 1, ax_compl_meet},
          {"Associativity", 3, ax_assoc},
          {"Additivity-left", 3, ax_add_left},
          {"Additivity-right", 3, ax_add_right},
          {"Annihilation-left", 1, ax_annih_left},
          {"Annihilation-right", 1, ax_annih_right},
      };
      break;
    }
  }

  for (const Axiom& ax : axioms) run_axiom(ctx, ax, report.violations);
  report.passed = report.violations.empty();
  return report;
}

int derived_one(const FiniteAlgebra& alg) {
  const int n = alg.size();
  const int v = alg.arrow(0, 0);
  for (int x = 1; x < n; ++x)
    if (alg.arrow(x, x) != v)
      fail(errc::not_constant, "a -> a is not constant: " + alg.name(0) + " -> " + alg.name(0) +
                                   " = " + alg.name(v) + " but " + alg.name(x) + " -> " +
                                   alg.name(x) + " = " + alg.name(alg.arrow(x, x)));
  for (int b = 0; b < n; ++b) {
    if (alg.arrow(b, v) != v)
      fail(errc::law_violation, alg.name(b) + " -> 1 != 1 for derived one " + alg.name(v));
    if (alg.arrow(v, b) != b)
      fail(errc::law_violation, "1 -> " + alg.name(b) + " != " + alg.name(b) +
                                    " for derived one " + alg.name(v));
  }
  return v;
}

namespace {

void require_class(const FiniteAlgebra& alg, ClassId cls) {
  ClassReport rep = check_class(alg, cls);
  if (rep.passed) return;
  std::ostringstream msg;
  msg << "algebra fails " << to_string(cls) << ": " << rep.violations.front().axiom << " at (";
  const auto& w = rep.violations.front().witness;
  for (size_t i = 0; i < w.size(); ++i) msg << (i ? "," : "") << alg.name(w[i]);
  msg << ")";
  fail(errc::precondition, msg.str());
}

}  // namespace

DerivedOrder derived_order(const FiniteAlgebra& alg) {
  require_class(alg, ClassId::ia);
  DerivedOrder ord;
  ord.n = alg.size();
  ord.one = derived_one(alg);
  const int n = ord.n;
  ord.leq.assign(static_cast<size_t>(n) * n, 0);
  ord.join.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ord.leq[static_cast<size_t>(a) * n + b] = alg.arrow(a, b) == ord.one ? 1 : 0;
      ord.join[static_cast<size_t>(a) * n + b] = alg.arrow(alg.arrow(a, b), b);
    }
  // These follow from the ia axioms; a failure here is a checker bug.
  for (int a = 0; a < n; ++a) {
    if (!ord.le(a, a)) fail(errc::internal, "derived order not reflexive");
    if (!ord.le(a, ord.one)) fail(errc::internal, "derived order has no top");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (ord.le(a, b) && ord.le(b, a) && a != b)
        fail(errc::internal, "derived order not antisymmetric");
      if ((ord.plus(a, b) == b) != ord.le(a, b))
        fail(errc::internal, "derived join does not match the order");
      for (int c = 0; c < n; ++c)
        if (ord.le(a, b) && ord.le(b, c) && !ord.le(a, c))
          fail(errc::internal, "derived order not transitive");
    }
  return ord;
}

FiniteAlgebra reduct(const FiniteAlgebra& alg, ClassId target) {
  std::optional<std::vector<int>> compose;
  std::optional<int> one, id, zero;

  switch (target) {
    case ClassId::ia:
      break;
    case ClassId::positive_ia:
      one = alg.one() ? *alg.one() : derived_one(alg);
      break;
    case ClassId::isg:
      if (!alg.has_compose())
        fail(errc::not_definable, "composition is not term-definable from the arrow table");
      compose = *alg.compose_table();
      break;
    case ClassId::imonoid:
      if (!alg.has_compose())
        fail(errc::not_definable, "composition is not term-definable from the arrow table");
      if (!alg.id()) fail(errc::not_definable, "monoid identity 1' is not term-definable");
      compose = *alg.compose_table();
      id = *alg.id();
      break;
    case ClassId::bsg:
      if (!alg.has_compose())
        fail(errc::not_definable, "composition is not term-definable from the arrow table");
      if (!alg.zero()) fail(errc::not_definable, "bottom 0 is not term-definable");
      compose = *alg.compose_table();
      zero = *alg.zero();
      one = alg.one() ? *alg.one() : derived_one(alg);
      break;
  }

  FiniteAlgebra out(alg.elements(), alg.arrow_table(), std::move(compose), one, id, zero);
  require_class(out, target);
  return out;
}

}  // namespace impalg
