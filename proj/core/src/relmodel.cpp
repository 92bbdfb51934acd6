#include "impalg/relmodel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace impalg {

namespace {

std::string pair_str(PointPair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

void require_in_top(const RelContext& ctx, const PairSet& a, const char* who) {
  for (PointPair p : a)
    if (!pairset_contains(ctx.top, p))
      fail(errc::out_of_top, std::string(who) + ": pair " + pair_str(p) + " is not in the top");
}

}  // namespace

PairSet normalized(PairSet ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

bool pairset_contains(const PairSet& ps, PointPair p) {
  return std::binary_search(ps.begin(), ps.end(), p);
}

bool pairset_subset(const PairSet& a, const PairSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PairSet pairset_union(const PairSet& a, const PairSet& b) {
  PairSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PairSet pairset_difference(const PairSet& a, const PairSet& b) {
  PairSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PairSet pairset_intersection(const PairSet& a, const PairSet& b) {
  PairSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_transitive(const PairSet& ps) {
  for (PointPair p : ps)
    for (PointPair q : ps)
      if (p.second == q.first && !pairset_contains(ps, {p.first, q.second})) return false;
  return true;
}

bool is_reflexive(const PairSet& ps, int base_size) {
  for (int x = 0; x < base_size; ++x)
    if (!pairset_contains(ps, {x, x})) return false;
  return true;
}

PairSet full_relation(int base_size) {
  PairSet out;
  out.reserve(static_cast<size_t>(base_size) * base_size);
  for (int x = 0; x < base_size; ++x)
    for (int y = 0; y < base_size; ++y) out.push_back({x, y});
  return out;
}

PairSet diagonal_relation(int base_size) {
  PairSet out;
  for (int x = 0; x < base_size; ++x) out.push_back({x, x});
  return out;
}

std::string_view to_string(RepMode mode) {
  return mode == RepMode::absolute ? "absolute" : "relative";
}

std::optional<RepMode> mode_from_string(std::string_view token) {
  if (token == "absolute") return RepMode::absolute;
  if (token == "relative") return RepMode::relative;
  return std::nullopt;
}

std::string to_string(const Profile& profile) {
  std::string out;
  auto add = [&out](const char* tok) {
    if (!out.empty()) out += ",";
    out += tok;
  };
  if (profile.arrow) add("arrow");
  if (profile.compose) add("compose");
  if (profile.strict_identity) add("strict-identity");
  if (profile.zero_empty) add("zero-empty");
  return out;
}

Profile profile_from_string(std::string_view csv) {
  Profile profile;
  profile.arrow = false;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t comma = csv.find(',', start);
    std::string_view tok = csv.substr(start, comma == std::string_view::npos ? csv.size() - start
                                                                             : comma - start);
    if (tok == "arrow")
      profile.arrow = true;
    else if (tok == "compose")
      profile.compose = true;
    else if (tok == "strict-identity")
      profile.strict_identity = true;
    else if (tok == "zero-empty")
      profile.zero_empty = true;
    else if (!tok.empty())
      fail(errc::parse, "unknown profile token '" + std::string(tok) + "'");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return profile;
}

PairSet rel_arrow(const RelContext& ctx, const PairSet& a, const PairSet& b) {
  const PairSet na = normalized(a), nb = normalized(b);
  require_in_top(ctx, na, "rel_arrow");
  require_in_top(ctx, nb, "rel_arrow");
  return pairset_union(pairset_difference(ctx.top, na), nb);
}

PairSet rel_compose(const RelContext& ctx, const PairSet& a, const PairSet& b) {
  const PairSet na = normalized(a), nb = normalized(b);
  require_in_top(ctx, na, "rel_compose");
  require_in_top(ctx, nb, "rel_compose");
  if (!is_transitive(ctx.top))
    fail(errc::intransitive_context, "rel_compose: context top is not transitive");
  PairSet out;
  for (PointPair p : na)
    for (PointPair q : nb)
      if (p.second == q.first) out.push_back({p.first, q.second});
  out = normalized(std::move(out));
  if (!pairset_subset(out, ctx.top)) fail(errc::internal, "composition escaped a transitive top");
  return out;
}

namespace {

PairSet arrow_raw(const PairSet& top, const PairSet& a, const PairSet& b) {
  return pairset_union(pairset_difference(top, a), b);
}

PairSet compose_raw(const PairSet& a, const PairSet& b) {
  PairSet out;
  for (PointPair p : a)
    for (PointPair q : b)
      if (p.second == q.first) out.push_back({p.first, q.second});
  return normalized(std::move(out));
}

PointPair first_difference(const PairSet& got, const PairSet& want) {
  PairSet sym = pairset_union(pairset_difference(got, want), pairset_difference(want, got));
  return sym.front();
}

}  // namespace

RepVerdict verify_representation(const FiniteAlgebra& alg, const Representation& rep_in) {
  Representation rep = rep_in;
  rep.context.top = normalized(std::move(rep.context.top));
  for (PairSet& img : rep.map) img = normalized(std::move(img));

  const int n = alg.size();
  if (static_cast<int>(rep.map.size()) != n)
    fail(errc::precondition, "verify_representation: map size differs from carrier size");
  if (rep.profile.compose && !alg.has_compose())
    fail(errc::missing_table, "profile includes compose but the algebra has none");
  if (rep.profile.strict_identity && !alg.id())
    fail(errc::missing_constant, "profile includes strict-identity but no id is designated");
  if (rep.profile.zero_empty && !alg.zero())
    fail(errc::missing_constant, "profile includes zero-empty but no zero is designated");

  const PairSet& top = rep.context.top;

  for (int a = 0; a < n; ++a)
    for (PointPair p : rep.map[static_cast<size_t>(a)])
      if (!pairset_contains(top, p))
        return {false, "containment", "h(" + alg.name(a) + ") contains " + pair_str(p)};

  if (rep.mode == RepMode::absolute) {
    const PairSet full = full_relation(rep.context.base_size);
    if (top != full) {
      PairSet missing = pairset_difference(full, top);
      std::string w = missing.empty() ? "top exceeds the base" : "missing " + pair_str(missing.front());
      return {false, "absolute-top", w};
    }
  }

  if (rep.profile.compose) {
    for (PointPair p : top)
      for (PointPair q : top)
        if (p.second == q.first && !pairset_contains(top, {p.first, q.second}))
          return {false, "top-transitivity",
                  pair_str(p) + " " + pair_str(q) + " without " + pair_str({p.first, q.second})};
  }

  if (rep.profile.strict_identity) {
    for (int x = 0; x < rep.context.base_size; ++x)
      if (!pairset_contains(top, {x, x}))
        return {false, "top-reflexivity", "missing " + pair_str({x, x})};
  }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rep.map[static_cast<size_t>(a)] == rep.map[static_cast<size_t>(b)])
        return {false, "injectivity", "h(" + alg.name(a) + ") = h(" + alg.name(b) + ")"};

  if (rep.profile.arrow) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const PairSet want = arrow_raw(top, rep.map[static_cast<size_t>(a)], rep.map[static_cast<size_t>(b)]);
        const PairSet& got = rep.map[static_cast<size_t>(alg.arrow(a, b))];
        if (got != want)
          return {false, "arrow",
                  "(" + alg.name(a) + "," + alg.name(b) + ") at " + pair_str(first_difference(got, want))};
      }
  }

  if (rep.profile.compose) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const PairSet want = compose_raw(rep.map[static_cast<size_t>(a)], rep.map[static_cast<size_t>(b)]);
        const PairSet& got = rep.map[static_cast<size_t>(alg.compose(a, b))];
        if (got != want)
          return {false, "compose",
                  "(" + alg.name(a) + "," + alg.name(b) + ") at " + pair_str(first_difference(got, want))};
      }
  }

  if (rep.profile.strict_identity) {
    const PairSet diag = diagonal_relation(rep.context.base_size);
    const PairSet& got = rep.map[static_cast<size_t>(*alg.id())];
    if (got != diag) return {false, "strict-identity", "at " + pair_str(first_difference(got, diag))};
  }

  if (rep.profile.zero_empty) {
    const PairSet& got = rep.map[static_cast<size_t>(*alg.zero())];
    if (!got.empty())
      return {false, "zero-empty", "h(" + alg.name(*alg.zero()) + ") contains " + pair_str(got.front())};
  }

  return {true, "", ""};
}

namespace {

void require_verified(const FiniteAlgebra& alg, const Representation& rep, const char* who) {
  RepVerdict v = verify_representation(alg, rep);
  if (!v.ok)
    fail(errc::precondition,
         std::string(who) + ": representation fails " + v.law + " (" + v.witness + ")");
}

}  // namespace

Representation quotient_by_identity(const FiniteAlgebra& alg, const Representation& rep) {
  if (!alg.id()) fail(errc::missing_constant, "quotient_by_identity: no designated id");
  if (!alg.has_compose()) fail(errc::missing_table, "quotient_by_identity: no compose table");
  if (rep.mode != RepMode::absolute)
    fail(errc::precondition, "quotient_by_identity: representation must be absolute");

  Representation probe = rep;
  probe.profile = Profile{true, true, false, false};
  require_verified(alg, probe, "quotient_by_identity");

  const int nx = rep.context.base_size;
  const PairSet& e = rep.map[static_cast<size_t>(*alg.id())];

  // h(1') must be an equivalence relation on the whole base.
  for (int x = 0; x < nx; ++x)
    if (!pairset_contains(e, {x, x}))
      fail(errc::not_equivalence, "h(1') is not reflexive at point " + std::to_string(x));
  for (PointPair p : e)
    if (!pairset_contains(e, {p.second, p.first}))
      fail(errc::not_equivalence, "h(1') is not symmetric at " + pair_str(p));
  for (PointPair p : e)
    for (PointPair q : e)
      if (p.second == q.first && !pairset_contains(e, {p.first, q.second}))
        fail(errc::not_equivalence, "h(1') is not transitive at " + pair_str(p) + " " + pair_str(q));

  // Class labels, numbered by least member.
  std::vector<int> cls(static_cast<size_t>(nx), -1);
  int classes = 0;
  for (int x = 0; x < nx; ++x) {
    if (cls[static_cast<size_t>(x)] != -1) continue;
    for (int y = x; y < nx; ++y)
      if (pairset_contains(e, {x, y})) cls[static_cast<size_t>(y)] = classes;
    ++classes;
  }

  // Membership must depend only on the classes (label transfer).
  const int n = alg.size();
  for (int a = 0; a < n; ++a) {
    const PairSet& h = rep.map[static_cast<size_t>(a)];
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < nx; ++y) {
        const bool member = pairset_contains(h, {x, y});
        for (int x2 = 0; x2 < nx; ++x2) {
          if (cls[static_cast<size_t>(x2)] != cls[static_cast<size_t>(x)]) continue;
          for (int y2 = 0; y2 < nx; ++y2) {
            if (cls[static_cast<size_t>(y2)] != cls[static_cast<size_t>(y)]) continue;
            if (pairset_contains(h, {x2, y2}) != member)
              fail(errc::not_compatible, "membership of h(" + alg.name(a) +
                                             ") is not constant on classes: " + pair_str({x, y}) +
                                             " vs " + pair_str({x2, y2}));
          }
        }
      }
  }

  Representation out;
  out.context.base_size = classes;
  out.context.top = full_relation(classes);
  out.mode = RepMode::absolute;
  out.profile = Profile{true, true, true, false};
  out.map.resize(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    PairSet img;
    for (PointPair p : rep.map[static_cast<size_t>(a)])
      img.push_back({cls[static_cast<size_t>(p.first)], cls[static_cast<size_t>(p.second)]});
    out.map[static_cast<size_t>(a)] = normalized(std::move(img));
  }

  RepVerdict v = verify_representation(alg, out);
  if (!v.ok) fail(errc::internal, "quotient output fails " + v.law + " (" + v.witness + ")");
  return out;
}

std::vector<DiscriminatorPair> discriminator_pairs(const FiniteAlgebra& alg,
                                                   const Representation& rep) {
  const int one = derived_one(alg);
  const int n = alg.size();
  if (static_cast<int>(rep.map.size()) != n)
    fail(errc::precondition, "discriminator_pairs: map size differs from carrier size");
  std::vector<DiscriminatorPair> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (alg.arrow(a, b) == one) continue;  // a <= b
      const PairSet disc = pairset_difference(normalized(rep.map[static_cast<size_t>(a)]),
                                              normalized(rep.map[static_cast<size_t>(b)]));
      if (disc.empty())
        fail(errc::internal, "no discriminator pair for a verified representation");
      out.push_back({a, b, disc.front().first, disc.front().second});
    }
  return out;
}

Representation empty_zero(const FiniteAlgebra& alg, const Representation& rep) {
  if (!alg.zero()) fail(errc::missing_constant, "empty_zero: no designated zero");
  if (!alg.has_compose()) fail(errc::missing_table, "empty_zero: no compose table");
  const int zero = *alg.zero();
  const int one = derived_one(alg);
  const int n = alg.size();
  for (int a = 0; a < n; ++a) {
    if (alg.arrow(zero, a) != one)
      fail(errc::precondition, "empty_zero: zero is not least (0 -> " + alg.name(a) + " != 1)");
    if (alg.compose(zero, a) != zero || alg.compose(a, zero) != zero)
      fail(errc::precondition, "empty_zero: zero does not annihilate at " + alg.name(a));
  }

  Representation probe = rep;
  probe.profile = Profile{true, true, false, false};
  require_verified(alg, probe, "empty_zero");

  const PairSet& top = rep.context.top;

  // One restricted block per discriminator pair, cut down to the points
  // that reach it through the top.
  struct Block {
    std::vector<int> points;  // ascending original points
    PairSet top;
  };
  std::vector<Block> blocks;
  for (const DiscriminatorPair& d : discriminator_pairs(alg, rep)) {
    Block blk;
    for (int x = 0; x < rep.context.base_size; ++x) {
      const bool from_iota = x == d.iota || pairset_contains(top, {d.iota, x});
      const bool to_o = x == d.o || pairset_contains(top, {x, d.o});
      if (from_iota && to_o) blk.points.push_back(x);
    }
    for (PointPair p : top) {
      const bool in_block = std::binary_search(blk.points.begin(), blk.points.end(), p.first) &&
                            std::binary_search(blk.points.begin(), blk.points.end(), p.second);
      if (in_block) blk.top.push_back(p);
    }
    blk.top = normalized(std::move(blk.top));
    blocks.push_back(std::move(blk));
  }

  // Disjoint union, renumbered densely block by block.
  Representation out;
  out.mode = RepMode::relative;
  out.profile = Profile{true, true, false, true};
  out.map.assign(static_cast<size_t>(n), {});
  int offset = 0;
  for (const Block& blk : blocks) {
    auto renumber = [&](Point x) {
      const auto it = std::lower_bound(blk.points.begin(), blk.points.end(), x);
      return offset + static_cast<int>(it - blk.points.begin());
    };
    for (PointPair p : blk.top) out.context.top.push_back({renumber(p.first), renumber(p.second)});
    for (int c = 0; c < n; ++c)
      for (PointPair p : pairset_intersection(rep.map[static_cast<size_t>(c)], blk.top))
        out.map[static_cast<size_t>(c)].push_back({renumber(p.first), renumber(p.second)});
    offset += static_cast<int>(blk.points.size());
  }
  out.context.base_size = offset;
  out.context.top = normalized(std::move(out.context.top));
  for (PairSet& img : out.map) img = normalized(std::move(img));

  if (offset > n * n * rep.context.base_size)
    fail(errc::internal, "empty_zero exceeded the n^2 * |X| base bound");
  RepVerdict v = verify_representation(alg, out);
  if (!v.ok) fail(errc::internal, "empty_zero output fails " + v.law + " (" + v.witness + ")");
  return out;
}

Poset::Poset(int base_size, std::vector<char> leq) : n_(base_size), leq_(std::move(leq)) {
  if (n_ < 0) fail(errc::precondition, "poset base size must be nonnegative");
  if (static_cast<int>(leq_.size()) != n_ * n_)
    fail(errc::precondition, "poset relation has wrong size");
  for (int x = 0; x < n_; ++x)
    if (!le(x, x)) fail(errc::precondition, "poset relation is not reflexive");
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (le(x, y) && le(y, x) && x != y)
        fail(errc::precondition, "poset relation is not antisymmetric");
      for (int z = 0; z < n_; ++z)
        if (le(x, y) && le(y, z) && !le(x, z))
          fail(errc::precondition, "poset relation is not transitive");
    }
}

bool weakening_check(const Poset& p, const PairSet& r_in) {
  const PairSet r = normalized(r_in);
  const int n = p.base_size();
  for (PointPair pr : r)
    if (pr.first < 0 || pr.first >= n || pr.second < 0 || pr.second >= n)
      fail(errc::out_of_top, "weakening_check: pair " + pair_str(pr) + " outside the poset base");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool in_comp = false;
      for (PointPair pr : r)
        if (p.le(a, pr.first) && p.le(pr.second, b)) {
          in_comp = true;
          break;
        }
      if (in_comp && !pairset_contains(r, {a, b})) return false;
    }
  return true;
}

PairSet weakening_arrow(const Poset& p, const PairSet& r_in, const PairSet& s_in) {
  const PairSet r = normalized(r_in), s = normalized(s_in);
  if (!weakening_check(p, r)) fail(errc::non_weakening, "weakening_arrow: r is not a weakening relation");
  if (!weakening_check(p, s)) fail(errc::non_weakening, "weakening_arrow: s is not a weakening relation");
  const int n = p.base_size();
  PairSet out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool holds = true;
      for (PointPair pr : r)
        if (p.le(pr.first, x) && p.le(y, pr.second) && !pairset_contains(s, pr)) {
          holds = false;
          break;
        }
      if (holds) out.push_back({x, y});
    }
  if (!weakening_check(p, out)) fail(errc::internal, "weakening_arrow output is not a weakening relation");
  return out;
}

FiniteAlgebra powerset_algebra(const RelContext& ctx) {
  const PairSet top = normalized(ctx.top);
  for (PointPair p : top)
    if (p.first < 0 || p.first >= ctx.base_size || p.second < 0 || p.second >= ctx.base_size)
      fail(errc::precondition, "powerset_algebra: top pair outside the base");
  const int k = static_cast<int>(top.size());
  if (k > 10) fail(errc::caps_exceeded, "powerset_algebra supports tops up to 10 pairs");
  const int n = 1 << k;
  const bool transitive = is_transitive(top);

  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) names.push_back("e" + std::to_string(m));

  const int full = n - 1;
  std::vector<int> arrow(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) arrow[static_cast<size_t>(a) * n + b] = (full & ~a) | b;

  std::optional<std::vector<int>> compose;
  if (transitive) {
    // step[i] = mask of top pairs j with top[i].second == top[j].first and
    // (top[i].first, top[j].second) in top; that pair's index gives the bit.
    std::vector<int> pair_index(static_cast<size_t>(ctx.base_size) * ctx.base_size, -1);
    for (int i = 0; i < k; ++i)
      pair_index[static_cast<size_t>(top[static_cast<size_t>(i)].first) * ctx.base_size +
                 top[static_cast<size_t>(i)].second] = i;
    std::vector<int> table(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int result = 0;
        for (int i = 0; i < k; ++i) {
          if (!(a & (1 << i))) continue;
          for (int j = 0; j < k; ++j) {
            if (!(b & (1 << j))) continue;
            if (top[static_cast<size_t>(i)].second != top[static_cast<size_t>(j)].first) continue;
            const int idx = pair_index[static_cast<size_t>(top[static_cast<size_t>(i)].first) *
                                           ctx.base_size +
                                       top[static_cast<size_t>(j)].second];
            result |= 1 << idx;
          }
        }
        table[static_cast<size_t>(a) * n + b] = result;
      }
    compose = std::move(table);
  }

  std::optional<int> id;
  if (is_reflexive(top, ctx.base_size)) {
    int diag = 0;
    for (int i = 0; i < k; ++i)
      if (top[static_cast<size_t>(i)].first == top[static_cast<size_t>(i)].second) diag |= 1 << i;
    id = diag;
  }

  return FiniteAlgebra(std::move(names), std::move(arrow), std::move(compose), full, id, 0);
}

Representation identity_representation(const RelContext& ctx) {
  const PairSet top = normalized(ctx.top);
  Representation rep;
  rep.context.base_size = ctx.base_size;
  rep.context.top = top;
  rep.mode = top == full_relation(ctx.base_size) ? RepMode::absolute : RepMode::relative;
  rep.profile = Profile{true, is_transitive(top), false, false};
  const int k = static_cast<int>(top.size());
  const int n = 1 << k;
  rep.map.resize(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) {
    PairSet img;
    for (int i = 0; i < k; ++i)
      if (m & (1 << i)) img.push_back(top[static_cast<size_t>(i)]);
    rep.map[static_cast<size_t>(m)] = normalized(std::move(img));
  }
  return rep;
}

}  // namespace impalg
