#include "impalg/stone.hpp"

#include <algorithm>

namespace impalg {

namespace {

void require_ia(const FiniteAlgebra& alg, const char* who) {
  ClassReport rep = check_class(alg, ClassId::ia);
  if (!rep.passed)
    fail(errc::precondition,
         std::string(who) + ": algebra fails ia (" + rep.violations.front().axiom + ")");
}

std::vector<int> positions_difference(const std::vector<int>& all, const std::vector<int>& sub) {
  std::vector<int> out;
  std::set_difference(all.begin(), all.end(), sub.begin(), sub.end(), std::back_inserter(out));
  return out;
}

std::vector<int> positions_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Filter> stone_base(const FiniteAlgebra& alg) {
  require_ia(alg, "stone_base");
  return enumerate_filters(alg, FilterKind::prime);
}

StoneRepresentation stone_represent(const FiniteAlgebra& alg) {
  require_ia(alg, "stone_represent");
  StoneRepresentation sr;
  sr.base = enumerate_filters(alg, FilterKind::prime);
  const int n = alg.size();
  const int k = static_cast<int>(sr.base.size());
  sr.map.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < k; ++i)
    for (int a : sr.base[static_cast<size_t>(i)].members)
      sr.map[static_cast<size_t>(a)].push_back(i);

  const int one = derived_one(alg);

  // Everything below is guaranteed by the representation theorem; failures
  // indicate a bug in the filter machinery.
  std::vector<int> all(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) all[static_cast<size_t>(i)] = i;
  if (sr.map[static_cast<size_t>(one)] != all)
    fail(errc::internal, "stone_represent: the top is not mapped to the full base");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto want = positions_union(
          positions_difference(all, sr.map[static_cast<size_t>(a)]), sr.map[static_cast<size_t>(b)]);
      if (sr.map[static_cast<size_t>(alg.arrow(a, b))] != want)
        fail(errc::internal, "stone_represent: arrow image mismatch at (" + alg.name(a) + "," +
                                 alg.name(b) + ")");
      const auto join = positions_union(sr.map[static_cast<size_t>(a)], sr.map[static_cast<size_t>(b)]);
      if (sr.map[static_cast<size_t>(alg.arrow(alg.arrow(a, b), b))] != join)
        fail(errc::internal, "stone_represent: join image mismatch at (" + alg.name(a) + "," +
                                 alg.name(b) + ")");
    }

  // Constructive injectivity: separate each pair by a discriminating prime
  // filter; by antisymmetry one of a -> b, b -> a misses the least filter.
  const Filter least{{one}};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const bool ab = alg.arrow(a, b) != one;
      const Filter g = ab ? prime_discriminate(alg, least, a, b) : prime_discriminate(alg, least, b, a);
      const auto pos = std::find(sr.base.begin(), sr.base.end(), g);
      if (pos == sr.base.end())
        fail(errc::internal, "stone_represent: separating filter is not in the base");
      const int in_elem = ab ? a : b, out_elem = ab ? b : a;
      if (!g.contains(in_elem) || g.contains(out_elem))
        fail(errc::internal, "stone_represent: separating filter does not separate");
      if (sr.map[static_cast<size_t>(a)] == sr.map[static_cast<size_t>(b)])
        fail(errc::internal, "stone_represent: map is not injective");
    }

  return sr;
}

Representation relationalize(const FiniteAlgebra& alg, const StoneRepresentation& sr, RepMode mode) {
  const int k = static_cast<int>(sr.base.size());
  const int n = alg.size();
  Representation rep;
  rep.context.base_size = k;
  rep.mode = mode;
  rep.profile = Profile{true, false, false, false};
  rep.map.resize(static_cast<size_t>(n));

  if (mode == RepMode::relative) {
    rep.context.top = diagonal_relation(k);
    for (int a = 0; a < n; ++a) {
      PairSet img;
      for (int i : sr.map[static_cast<size_t>(a)]) img.push_back({i, i});
      rep.map[static_cast<size_t>(a)] = normalized(std::move(img));
    }
  } else {
    rep.context.top = full_relation(k);
    for (int a = 0; a < n; ++a) {
      PairSet img;
      for (int i : sr.map[static_cast<size_t>(a)])
        for (int j = 0; j < k; ++j) img.push_back({i, j});
      rep.map[static_cast<size_t>(a)] = normalized(std::move(img));
    }
  }

  RepVerdict v = verify_representation(alg, rep);
  if (!v.ok) fail(errc::internal, "relationalize output fails " + v.law + " (" + v.witness + ")");
  return rep;
}

}  // namespace impalg
