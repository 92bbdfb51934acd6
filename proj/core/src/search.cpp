#include "impalg/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace impalg {

namespace detail {

PairSet top_from_mask(uint64_t mask, int base) {
  PairSet out;
  for (int x = 0; x < base; ++x)
    for (int y = 0; y < base; ++y)
      if (mask & (uint64_t{1} << (x * base + y))) out.push_back({x, y});
  return out;  // already lex sorted
}

namespace {

bool mask_transitive(uint64_t mask, int base) {
  for (int x = 0; x < base; ++x)
    for (int y = 0; y < base; ++y) {
      if (!(mask & (uint64_t{1} << (x * base + y)))) continue;
      for (int z = 0; z < base; ++z)
        if ((mask & (uint64_t{1} << (y * base + z))) &&
            !(mask & (uint64_t{1} << (x * base + z))))
          return false;
    }
  return true;
}

uint64_t permute_mask(uint64_t mask, int base, const std::vector<int>& perm) {
  uint64_t out = 0;
  for (int x = 0; x < base; ++x)
    for (int y = 0; y < base; ++y)
      if (mask & (uint64_t{1} << (x * base + y)))
        out |= uint64_t{1} << (perm[static_cast<size_t>(x)] * base + perm[static_cast<size_t>(y)]);
  return out;
}

bool is_canonical(uint64_t mask, int base) {
  std::vector<int> perm(static_cast<size_t>(base));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (permute_mask(mask, base, perm) < mask) return false;
  return true;
}

// Decide pair ranks from the most significant down, excluding before
// including, so complete masks come out in ascending numeric order.  A
// branch dies as soon as a transitivity triple is fully decided and broken.
// The visitor returns false to stop enumeration.
bool gen_transitive(int base, int rank, uint64_t mask, uint64_t decided,
                    const std::function<bool(uint64_t)>& visit) {
  if (rank < 0) return visit(mask);
  const int x = rank / base, y = rank % base;
  for (int choice = 0; choice < 2; ++choice) {
    const uint64_t new_mask = choice ? mask | (uint64_t{1} << rank) : mask;
    const uint64_t new_decided = decided | (uint64_t{1} << rank);
    bool viable = true;
    // Triples involving (x,y) with both other pairs already decided.
    for (int z = 0; z < base && viable; ++z) {
      const int triples[3][3] = {
          // (x,y) as the left leg: (x,y),(y,z) -> (x,z)
          {rank, y * base + z, x * base + z},
          // (x,y) as the right leg: (z,x),(x,y) -> (z,y)
          {z * base + x, rank, z * base + y},
          // (x,y) as the conclusion: (x,z),(z,y) -> (x,y)
          {x * base + z, z * base + y, rank},
      };
      for (const auto& t : triples) {
        const uint64_t b0 = uint64_t{1} << t[0], b1 = uint64_t{1} << t[1], b2 = uint64_t{1} << t[2];
        if ((new_decided & b0) && (new_decided & b1) && (new_decided & b2) &&
            (new_mask & b0) && (new_mask & b1) && !(new_mask & b2)) {
          viable = false;
          break;
        }
      }
    }
    if (viable && !gen_transitive(base, rank - 1, new_mask, new_decided, visit)) return false;
  }
  return true;
}

// Visits tops in ascending mask order; the visitor returns false to stop.
void for_each_top(int base, bool transitive_only, bool up_to_iso,
                  const std::function<bool(uint64_t)>& visit) {
  auto filtered = [&](uint64_t mask) {
    if (up_to_iso && !is_canonical(mask, base)) return true;
    return visit(mask);
  };
  const int k = base * base;
  if (base <= 3) {
    const uint64_t end = uint64_t{1} << k;
    for (uint64_t mask = 0; mask < end; ++mask) {
      if (transitive_only && !mask_transitive(mask, base)) continue;
      if (!filtered(mask)) return;
    }
    return;
  }
  if (k > 62) fail(errc::caps_exceeded, "bases above 7 points are not supported");
  if (!transitive_only) {
    const uint64_t end = uint64_t{1} << k;
    for (uint64_t mask = 0; mask < end; ++mask)
      if (!filtered(mask)) return;
    return;
  }
  gen_transitive(base, k - 1, 0, 0, filtered);
}

}  // namespace

std::vector<uint64_t> tops_by_filter(int base, bool transitive_only) {
  const int k = base * base;
  if (k > 20) fail(errc::caps_exceeded, "top filtering limited to small bases");
  std::vector<uint64_t> out;
  const uint64_t end = uint64_t{1} << k;
  for (uint64_t mask = 0; mask < end; ++mask)
    if (!transitive_only || mask_transitive(mask, base)) out.push_back(mask);
  return out;
}

std::vector<uint64_t> tops_incremental(int base, bool transitive_only) {
  const int k = base * base;
  if (k > 62) fail(errc::caps_exceeded, "bases above 7 points are not supported");
  if (!transitive_only) return tops_by_filter(base, false);
  std::vector<uint64_t> out;
  gen_transitive(base, k - 1, 0, 0, [&out](uint64_t mask) {
    out.push_back(mask);
    return true;
  });
  return out;
}

std::vector<uint64_t> enumerate_tops(int base, bool transitive_only, bool up_to_iso) {
  std::vector<uint64_t> out;
  for_each_top(base, transitive_only, up_to_iso, [&out](uint64_t mask) {
    out.push_back(mask);
    return true;
  });
  return out;
}

}  // namespace detail

namespace {

ClassId required_class(const Profile& profile) {
  if (profile.strict_identity) return ClassId::imonoid;
  if (profile.compose) return ClassId::isg;
  return ClassId::ia;
}

void gate_preconditions(const FiniteAlgebra& alg, const Profile& profile, const char* who) {
  if (!profile.arrow) fail(errc::precondition, std::string(who) + ": profile must include arrow");
  if (profile.zero_empty && !alg.zero())
    fail(errc::missing_constant, std::string(who) + ": zero-empty profile needs a designated zero");
  const ClassId cls = required_class(profile);
  ClassReport rep = check_class(alg, cls);
  if (!rep.passed)
    fail(errc::precondition, std::string(who) + ": algebra fails " + std::string(to_string(cls)) +
                                 " (" + rep.violations.front().axiom + ")");
}

// Elements ordered largest-first along the derived order; ties go to the
// smaller index.  The top element always comes first.
std::vector<int> descending_sequence(const DerivedOrder& ord) {
  const int n = ord.n;
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<int> seq;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int x = 0; x < n && pick < 0; ++x) {
      if (used[static_cast<size_t>(x)]) continue;
      bool maximal = true;
      for (int y = 0; y < n; ++y)
        if (!used[static_cast<size_t>(y)] && y != x && ord.le(x, y)) {
          maximal = false;
          break;
        }
      if (maximal) pick = x;
    }
    used[static_cast<size_t>(pick)] = 1;
    seq.push_back(pick);
  }
  return seq;
}

struct TopSpace {
  PairSet pairs;
  int base = 0;
  uint64_t full = 0;
  std::vector<int> pair_bit;  // (x,y) -> bit index or -1

  explicit TopSpace(PairSet top, int base_size) : pairs(std::move(top)), base(base_size) {
    full = pairs.empty() ? 0 : (uint64_t{1} << pairs.size()) - 1;
    pair_bit.assign(static_cast<size_t>(base) * base, -1);
    for (size_t i = 0; i < pairs.size(); ++i)
      pair_bit[static_cast<size_t>(pairs[i].first) * base + pairs[i].second] = static_cast<int>(i);
  }

  uint64_t arrow_mask(uint64_t a, uint64_t b) const { return (full & ~a) | b; }

  uint64_t compose_mask(uint64_t a, uint64_t b) const {
    uint64_t out = 0;
    for (uint64_t rest = a; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      for (uint64_t rest2 = b; rest2;) {
        const int j = std::countr_zero(rest2);
        rest2 &= rest2 - 1;
        if (pairs[static_cast<size_t>(i)].second != pairs[static_cast<size_t>(j)].first) continue;
        const int bit = pair_bit[static_cast<size_t>(pairs[static_cast<size_t>(i)].first) * base +
                                 pairs[static_cast<size_t>(j)].second];
        if (bit >= 0) out |= uint64_t{1} << bit;
      }
    }
    return out;
  }

  PairSet to_pairs(uint64_t mask) const {
    PairSet out;
    for (uint64_t rest = mask; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      out.push_back(pairs[static_cast<size_t>(i)]);
    }
    return out;
  }
};

struct Searcher {
  const FiniteAlgebra& alg;
  const SearchConfig& cfg;
  const DerivedOrder ord;
  const std::vector<int> seq;
  long long nodes = 0;

  enum class Step { found, dead, aborted };

  Searcher(const FiniteAlgebra& a, const SearchConfig& c)
      : alg(a), cfg(c), ord(derived_order(a)), seq(descending_sequence(ord)) {}

  bool over_limit() { return cfg.node_limit && nodes > *cfg.node_limit; }

  // A single backtracking state over one top.
  struct State {
    std::vector<uint64_t> img;
    std::vector<char> set;
    std::vector<int> trail;
  };

  bool assign(State& st, int e, uint64_t v, std::vector<int>& queue) {
    if (st.set[static_cast<size_t>(e)]) return st.img[static_cast<size_t>(e)] == v;
    for (int w = 0; w < alg.size(); ++w) {
      if (!st.set[static_cast<size_t>(w)]) continue;
      const uint64_t wv = st.img[static_cast<size_t>(w)];
      if (wv == v) return false;  // injectivity
      if (ord.le(e, w) && (v & ~wv)) return false;
      if (ord.le(w, e) && (wv & ~v)) return false;
    }
    st.img[static_cast<size_t>(e)] = v;
    st.set[static_cast<size_t>(e)] = 1;
    st.trail.push_back(e);
    queue.push_back(e);
    return true;
  }

  bool propagate(const TopSpace& top, State& st, std::vector<int>& queue) {
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      for (int w = 0; w < alg.size(); ++w) {
        if (!st.set[static_cast<size_t>(w)]) continue;
        const int pairs[2][2] = {{x, w}, {w, x}};
        for (const auto& pq : pairs) {
          const int p = pq[0], q = pq[1];
          const uint64_t pa = st.img[static_cast<size_t>(p)], qa = st.img[static_cast<size_t>(q)];
          if (!assign(st, alg.arrow(p, q), top.arrow_mask(pa, qa), queue)) return false;
          if (cfg.profile.compose &&
              !assign(st, alg.compose(p, q), top.compose_mask(pa, qa), queue))
            return false;
          if (p == q) break;  // (x,x) once
        }
      }
    }
    return true;
  }

  void undo(State& st, size_t mark) {
    while (st.trail.size() > mark) {
      st.set[static_cast<size_t>(st.trail.back())] = 0;
      st.trail.pop_back();
    }
  }

  Step dfs(const TopSpace& top, State& st, size_t seq_pos, Representation& out) {
    while (seq_pos < seq.size() && st.set[static_cast<size_t>(seq[seq_pos])]) ++seq_pos;
    if (seq_pos == seq.size()) {
      Representation rep;
      rep.context.base_size = top.base;
      rep.context.top = top.pairs;
      rep.mode = cfg.mode;
      rep.profile = cfg.profile;
      rep.map.resize(static_cast<size_t>(alg.size()));
      for (int a = 0; a < alg.size(); ++a)
        rep.map[static_cast<size_t>(a)] = top.to_pairs(st.img[static_cast<size_t>(a)]);
      if (!verify_representation(alg, rep).ok)
        fail(errc::internal, "search produced a representation that fails verification");
      out = std::move(rep);
      return Step::found;
    }
    const int e = seq[seq_pos];
    for (uint64_t v = 0;; ++v) {
      ++nodes;
      if (over_limit()) return Step::aborted;
      const size_t mark = st.trail.size();
      std::vector<int> queue;
      if (assign(st, e, v, queue) && propagate(top, st, queue)) {
        const Step res = dfs(top, st, seq_pos + 1, out);
        if (res != Step::dead) return res;
      }
      undo(st, mark);
      if (v == top.full) break;
    }
    return Step::dead;
  }

  Step search_top(const TopSpace& top, Representation& out) {
    ++nodes;
    if (over_limit()) return Step::aborted;
    if (cfg.profile.strict_identity) {
      // h(1') must be the full diagonal, so the top must be reflexive.
      for (int x = 0; x < top.base; ++x)
        if (top.pair_bit[static_cast<size_t>(x) * top.base + x] < 0) return Step::dead;
    }
    State st;
    st.img.assign(static_cast<size_t>(alg.size()), 0);
    st.set.assign(static_cast<size_t>(alg.size()), 0);
    std::vector<int> queue;
    bool ok = assign(st, ord.one, top.full, queue);
    if (ok && cfg.profile.zero_empty) ok = assign(st, *alg.zero(), 0, queue);
    if (ok && cfg.profile.strict_identity) {
      uint64_t diag = 0;
      for (int x = 0; x < top.base; ++x)
        diag |= uint64_t{1} << top.pair_bit[static_cast<size_t>(x) * top.base + x];
      ok = assign(st, *alg.id(), diag, queue);
    }
    if (!ok || !propagate(top, st, queue)) return Step::dead;
    return dfs(top, st, 0, out);
  }
};

}  // namespace

SearchOutcome search_representation(const FiniteAlgebra& alg, const SearchConfig& cfg) {
  gate_preconditions(alg, cfg.profile, "search_representation");
  if (cfg.max_base < 0) fail(errc::precondition, "search_representation: max_base must be >= 0");
  if (cfg.max_base > 7) fail(errc::caps_exceeded, "search_representation: bases above 7 points are not supported");

  Searcher searcher(alg, cfg);
  SearchOutcome outcome;
  outcome.kind = SearchOutcome::Kind::exhausted;
  outcome.bound = cfg.max_base;

  for (int base = 0; base <= cfg.max_base; ++base) {
    bool stop = false;
    auto try_top = [&](uint64_t mask) {
      TopSpace top(detail::top_from_mask(mask, base), base);
      Representation rep;
      const Searcher::Step res = searcher.search_top(top, rep);
      if (res == Searcher::Step::found) {
        outcome.kind = SearchOutcome::Kind::found;
        outcome.rep = std::move(rep);
        stop = true;
      } else if (res == Searcher::Step::aborted) {
        outcome.kind = SearchOutcome::Kind::aborted;
        outcome.node_limit = *cfg.node_limit;
        stop = true;
      }
      return !stop;
    };
    if (cfg.mode == RepMode::absolute) {
      try_top((uint64_t{1} << (base * base)) - 1);
    } else {
      detail::for_each_top(base, true, cfg.up_to_iso, try_top);
    }
    if (stop) break;
  }
  outcome.nodes = searcher.nodes;
  return outcome;
}

SearchOutcome oracle_enumerate(const FiniteAlgebra& alg, int base_size, RepMode mode,
                               const Profile& profile) {
  if (base_size < 0 || base_size > 3)
    fail(errc::caps_exceeded, "oracle_enumerate: base_size capped at 3");
  if (alg.size() > 4) fail(errc::caps_exceeded, "oracle_enumerate: carrier capped at 4");
  gate_preconditions(alg, profile, "oracle_enumerate");

  SearchOutcome outcome;
  const int n = alg.size();

  for (int base = 0; base <= base_size; ++base) {
    std::vector<uint64_t> tops;
    if (mode == RepMode::absolute)
      tops.push_back((uint64_t{1} << (base * base)) - 1);
    else
      tops = detail::tops_by_filter(base, false);

    for (uint64_t top_mask : tops) {
      const PairSet top = detail::top_from_mask(top_mask, base);
      const int k = static_cast<int>(top.size());
      const uint64_t images = uint64_t{1} << k;

      Representation rep;
      rep.context.base_size = base;
      rep.context.top = top;
      rep.mode = mode;
      rep.profile = profile;
      rep.map.assign(static_cast<size_t>(n), {});

      std::vector<uint64_t> odo(static_cast<size_t>(n), 0);
      while (true) {
        for (int a = 0; a < n; ++a) {
          PairSet img;
          for (int i = 0; i < k; ++i)
            if (odo[static_cast<size_t>(a)] & (uint64_t{1} << i))
              img.push_back(top[static_cast<size_t>(i)]);
          rep.map[static_cast<size_t>(a)] = std::move(img);
        }
        ++outcome.nodes;
        if (verify_representation(alg, rep).ok) {
          outcome.kind = SearchOutcome::Kind::found;
          outcome.rep = rep;
          return outcome;
        }
        // odometer, last element fastest
        int pos = n - 1;
        while (pos >= 0) {
          if (++odo[static_cast<size_t>(pos)] < images) break;
          odo[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }
  outcome.kind = SearchOutcome::Kind::exhausted;
  outcome.bound = base_size;
  return outcome;
}

}  // namespace impalg
