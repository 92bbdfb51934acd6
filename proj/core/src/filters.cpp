#include "impalg/filters.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace impalg {

namespace {

constexpr int kScanLimit = 20;  // full subset scan up to here, closure-driven beyond

void require_class_or_fail(const FiniteAlgebra& alg, ClassId cls, const char* who) {
  ClassReport rep = check_class(alg, cls);
  if (rep.passed) return;
  std::ostringstream msg;
  msg << who << ": algebra fails " << to_string(cls) << " (" << rep.violations.front().axiom << ")";
  fail(errc::precondition, msg.str());
}

void require_carrier_fits(const FiniteAlgebra& alg) {
  if (alg.size() > 64)
    fail(errc::caps_exceeded, "filter enumeration supports carriers up to 64 elements");
}

// After a positive-ia gate the diagonal is constant, so this is total.
int top_of(const FiniteAlgebra& alg) { return alg.one() ? *alg.one() : alg.arrow(0, 0); }

uint64_t bit(int i) { return uint64_t{1} << i; }

uint64_t to_mask(const std::vector<int>& members) {
  uint64_t m = 0;
  for (int x : members) m |= bit(x);
  return m;
}

std::vector<int> to_members(uint64_t mask, int n) {
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (mask & bit(x)) out.push_back(x);
  return out;
}

bool mask_is_filter(const FiniteAlgebra& alg, uint64_t mask, int one) {
  if (!(mask & bit(one))) return false;
  const int n = alg.size();
  for (int a = 0; a < n; ++a) {
    if (!(mask & bit(a))) continue;
    for (int b = 0; b < n; ++b)
      if ((mask & bit(alg.arrow(a, b))) && !(mask & bit(b))) return false;
  }
  return true;
}

uint64_t mp_closure(const FiniteAlgebra& alg, uint64_t mask) {
  const int n = alg.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      if (!(mask & bit(a))) continue;
      for (int b = 0; b < n; ++b)
        if ((mask & bit(alg.arrow(a, b))) && !(mask & bit(b))) {
          mask |= bit(b);
          changed = true;
        }
    }
  }
  return mask;
}

// Canonical order: size ascending, then lexicographic member lists.
bool mask_less(uint64_t a, uint64_t b, int n) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  for (int x = 0; x < n; ++x) {
    bool ia = (a & bit(x)) != 0, ib = (b & bit(x)) != 0;
    if (ia != ib) return ia;  // earlier members first
  }
  return false;
}

std::vector<uint64_t> sorted_masks(std::vector<uint64_t> masks, int n) {
  std::sort(masks.begin(), masks.end(), [n](uint64_t a, uint64_t b) { return mask_less(a, b, n); });
  return masks;
}

std::vector<uint64_t> all_filter_masks(const FiniteAlgebra& alg) {
  require_carrier_fits(alg);
  if (alg.size() <= kScanLimit) return detail::filter_masks_by_scan(alg);
  return detail::filter_masks_by_closure(alg);
}

bool mask_is_prime(const FiniteAlgebra& alg, uint64_t mask, uint64_t full) {
  if (mask == full) return false;
  const int n = alg.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int j = alg.arrow(alg.arrow(a, b), b);
      if ((mask & bit(j)) && !(mask & bit(a)) && !(mask & bit(b))) return false;
    }
  return true;
}

Filter filter_from_mask(uint64_t mask, int n) { return Filter{to_members(mask, n)}; }

}  // namespace

bool Filter::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::string_view to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::all: return "all";
    case FilterKind::proper: return "proper";
    case FilterKind::prime: return "prime";
    case FilterKind::irreducible: return "irreducible";
  }
  return "?";
}

std::optional<FilterKind> filter_kind_from_string(std::string_view token) {
  if (token == "all") return FilterKind::all;
  if (token == "proper") return FilterKind::proper;
  if (token == "prime") return FilterKind::prime;
  if (token == "irreducible") return FilterKind::irreducible;
  return std::nullopt;
}

FilterCheck is_filter(const FiniteAlgebra& alg, const std::vector<int>& subset) {
  require_class_or_fail(alg, ClassId::positive_ia, "is_filter");
  const int n = alg.size();
  for (int x : subset)
    if (x < 0 || x >= n) fail(errc::precondition, "is_filter: element index out of range");
  const uint64_t mask = to_mask(subset);
  const int one = top_of(alg);
  if (!(mask & bit(one))) return {false, "one-missing", {one}};
  for (int a = 0; a < n; ++a) {
    if (!(mask & bit(a))) continue;
    for (int b = 0; b < n; ++b)
      if ((mask & bit(alg.arrow(a, b))) && !(mask & bit(b)))
        return {false, "not-closed", {a, b}};
  }
  return {true, "", {}};
}

namespace {

void require_valid_filter(const FiniteAlgebra& alg, const Filter& f, const char* who) {
  FilterCheck chk = is_filter(alg, f.members);
  if (!chk.ok)
    fail(errc::precondition, std::string(who) + ": not a filter (" + chk.violation + ")");
}

}  // namespace

Filter generated_filter(const FiniteAlgebra& alg, const Filter& f, int a) {
  require_valid_filter(alg, f, "generated_filter");
  if (a < 0 || a >= alg.size()) fail(errc::precondition, "generated_filter: index out of range");
  const uint64_t fm = to_mask(f.members);
  const int n = alg.size();
  Filter out;
  for (int x = 0; x < n; ++x)
    if (fm & bit(alg.arrow(a, x))) out.members.push_back(x);
  // Guaranteed to be the least filter containing f and a; recheck anyway.
  FilterCheck chk = is_filter(alg, out.members);
  if (!chk.ok || !out.contains(a))
    fail(errc::internal, "generated_filter produced a non-filter");
  for (int x : f.members)
    if (!out.contains(x)) fail(errc::internal, "generated_filter lost a member of f");
  return out;
}

namespace detail {

std::vector<uint64_t> filter_masks_by_scan(const FiniteAlgebra& alg) {
  const int n = alg.size();
  if (n > kScanLimit) fail(errc::caps_exceeded, "subset scan limited to 20 elements");
  const int one = top_of(alg);
  std::vector<uint64_t> out;
  const uint64_t end = uint64_t{1} << n;
  for (uint64_t mask = 0; mask < end; ++mask)
    if (mask_is_filter(alg, mask, one)) out.push_back(mask);
  return sorted_masks(std::move(out), n);
}

std::vector<uint64_t> filter_masks_by_closure(const FiniteAlgebra& alg) {
  const int n = alg.size();
  const int one = top_of(alg);
  // Start from the least filter and branch on every element addition; every
  // filter is reachable because closures never leave a containing filter.
  std::set<uint64_t> seen;
  std::vector<uint64_t> work{mp_closure(alg, bit(one))};
  seen.insert(work.front());
  while (!work.empty()) {
    const uint64_t cur = work.back();
    work.pop_back();
    for (int x = 0; x < n; ++x) {
      if (cur & bit(x)) continue;
      const uint64_t next = mp_closure(alg, cur | bit(x));
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  return sorted_masks(std::vector<uint64_t>(seen.begin(), seen.end()), n);
}

}  // namespace detail

std::vector<Filter> enumerate_filters(const FiniteAlgebra& alg, FilterKind kind) {
  require_class_or_fail(alg, ClassId::positive_ia, "enumerate_filters");
  if (kind == FilterKind::prime) require_class_or_fail(alg, ClassId::ia, "enumerate_filters(prime)");
  const int n = alg.size();
  const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  const std::vector<uint64_t> masks = all_filter_masks(alg);

  std::vector<uint64_t> kept;
  switch (kind) {
    case FilterKind::all:
      kept = masks;
      break;
    case FilterKind::proper:
      for (uint64_t m : masks)
        if (m != full) kept.push_back(m);
      break;
    case FilterKind::prime:
      for (uint64_t m : masks)
        if (mask_is_prime(alg, m, full)) kept.push_back(m);
      break;
    case FilterKind::irreducible: {
      std::vector<uint64_t> proper;
      for (uint64_t m : masks)
        if (m != full) proper.push_back(m);
      for (uint64_t m : proper) {
        bool reducible = false;
        for (size_t i = 0; i < proper.size() && !reducible; ++i)
          for (size_t j = 0; j < proper.size() && !reducible; ++j)
            if (proper[i] != m && proper[j] != m && (proper[i] & proper[j]) == m)
              reducible = true;
        if (!reducible) kept.push_back(m);
      }
      break;
    }
  }

  std::vector<Filter> out;
  out.reserve(kept.size());
  for (uint64_t m : kept) out.push_back(filter_from_mask(m, n));
  return out;
}

Filter prime_extend(const FiniteAlgebra& alg, const Filter& f, int avoid) {
  require_class_or_fail(alg, ClassId::ia, "prime_extend");
  require_valid_filter(alg, f, "prime_extend");
  if (avoid < 0 || avoid >= alg.size())
    fail(errc::precondition, "prime_extend: index out of range");
  if (f.contains(avoid))
    fail(errc::precondition, "prime_extend: avoid element " + alg.name(avoid) + " is in the filter");
  const uint64_t fm = to_mask(f.members);
  for (const Filter& g : enumerate_filters(alg, FilterKind::prime)) {
    const uint64_t gm = to_mask(g.members);
    if ((fm & ~gm) == 0 && !(gm & bit(avoid))) return g;
  }
  fail(errc::internal, "no prime extension exists; the extension lemma guarantees one");
}

Filter prime_discriminate(const FiniteAlgebra& alg, const Filter& f, int a, int b) {
  require_class_or_fail(alg, ClassId::ia, "prime_discriminate");
  require_valid_filter(alg, f, "prime_discriminate");
  if (a < 0 || a >= alg.size() || b < 0 || b >= alg.size())
    fail(errc::precondition, "prime_discriminate: index out of range");
  if (f.contains(alg.arrow(a, b)))
    fail(errc::precondition, "prime_discriminate: " + alg.name(a) + " -> " + alg.name(b) +
                                 " is in the filter");
  Filter g = prime_extend(alg, generated_filter(alg, f, a), b);
  if (!g.contains(a) || g.contains(b))
    fail(errc::internal, "prime_discriminate produced a non-discriminating filter");
  return g;
}

std::string format_filter(const FiniteAlgebra& alg, const Filter& f) {
  std::string out = "{";
  for (size_t i = 0; i < f.members.size(); ++i) {
    if (i) out += ", ";
    out += alg.name(f.members[i]);
  }
  out += "}";
  return out;
}

}  // namespace impalg
