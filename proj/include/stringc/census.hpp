#pragma once

// Exhaustive enumeration of the C-strings of a small permutation group, up
// to automorphisms of the group and duality.
//
// The search runs on an IndexedGroup. Tuples are built one generator at a
// time and only one tuple per orbit of G acting by simultaneous conjugation
// is visited: s_k must be the least involution in its orbit under the
// centralizer of s_1..s_{k-1}. Prefixes failing the intersection property
// are pruned (every interval of a C-string is one). Surviving tuples that
// generate G are then merged into classes by the Cayley-graph automorphism
// test, including reversal.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "stringc/autodual.hpp"
#include "stringc/cstring.hpp"
#include "stringc/errors.hpp"
#include "stringc/indexed_group.hpp"

namespace stringc {

enum class Equivalence {
  automorphism,  // s_i -> t_i extends to an automorphism of G
  conjugacy,     // t_i = s_i^g for one g in G
};

struct CensusOptions {
  bool allow_degenerate = false;
  std::size_t jobs = 1;
  Equivalence equivalence = Equivalence::automorphism;
  /// Ranks searched; max_rank 0 means floor(log2 |G|).
  std::size_t min_rank = 3;
  std::size_t max_rank = 0;
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Receives progress lines; may be empty.
  std::function<void(const std::string&)> progress;
};

struct CensusRecord {
  GeneratorString representative;
  std::vector<std::uint64_t> schlafli;
  bool self_dual = false;
  bool degenerate = false;
  /// How many conjugacy classes of tuples were merged into this class and
  /// how many of those merges went through the dual.
  std::string note;
};

struct RankSummary {
  std::size_t total = 0;
  std::size_t self_dual = 0;
  std::size_t degenerate = 0;
  std::size_t degenerate_self_dual = 0;
};

struct CensusResult {
  std::uint64_t group_order = 0;
  std::size_t min_rank = 3;
  std::size_t max_rank = 0;
  bool allow_degenerate = false;
  std::map<std::size_t, std::vector<CensusRecord>> by_rank;

  RankSummary summary(std::size_t rank) const {
    RankSummary s;
    auto it = by_rank.find(rank);
    if (it == by_rank.end()) return s;
    for (const auto& r : it->second) {
      ++s.total;
      s.self_dual += r.self_dual;
      s.degenerate += r.degenerate;
      s.degenerate_self_dual += r.degenerate && r.self_dual;
    }
    return s;
  }

  RankSummary total() const {
    RankSummary s;
    for (const auto& [rank, records] : by_rank) {
      auto r = summary(rank);
      s.total += r.total;
      s.self_dual += r.self_dual;
      s.degenerate += r.degenerate;
      s.degenerate_self_dual += r.degenerate_self_dual;
    }
    return s;
  }

  /// Largest rank with a C-string, 0 if none.
  std::size_t highest_rank() const {
    std::size_t best = 0;
    for (const auto& [rank, records] : by_rank)
      if (!records.empty()) best = std::max(best, rank);
    return best;
  }
};

/// floor(log2 |G|): an independent generating set of G has at most this many
/// elements, and the generators of a C-string are independent.
inline std::size_t census_rank_bound(std::uint64_t order) {
  return order <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(order) - 1);
}

namespace detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t and_count(const Bitset& other) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
    return c;
  }
  Bitset& operator&=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (auto w = words_[k]; w != 0; w &= w - 1)
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

 private:
  std::vector<std::uint64_t> words_;
};

using Ordinal = std::uint16_t;
using Tuple = std::vector<Ordinal>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : t) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

struct Closure {
  Bitset bits;
  std::size_t size = 0;
};

/// Shared, read-mostly data for one census: the involutions of G in
/// lexicographic order, their commuting sets and their right-multiplication
/// columns (built on first use).
class CensusContext {
 public:
  CensusContext(const PermutationGroup& g, std::uint64_t cap) : ig_(g, cap) {
    for (std::size_t i = 0; i < ig_.size(); ++i)
      if (is_involution(ig_.element(static_cast<ElementIndex>(i))))
        involutions_.push_back(static_cast<ElementIndex>(i));
    std::sort(involutions_.begin(), involutions_.end(),
              [&](ElementIndex a, ElementIndex b) { return ig_.element(a) < ig_.element(b); });
    if (involutions_.size() > 0xffff)
      throw CapExceeded("census involutions", involutions_.size(), 0xffff);
    ordinal_.assign(ig_.size(), -1);
    for (std::size_t k = 0; k < involutions_.size(); ++k)
      ordinal_[involutions_[k]] = static_cast<std::int32_t>(k);
    const std::size_t m = involutions_.size();
    commute_.assign(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b)
        if (commute(involution(a), involution(b))) {
          commute_[a].set(b);
          commute_[b].set(a);
        }
    columns_.resize(m);
    column_once_ = std::make_unique<std::once_flag[]>(m);
    for (const auto& x : g.generators()) generators_.push_back(x);
  }

  const IndexedGroup& group() const { return ig_; }
  std::size_t involution_count() const { return involutions_.size(); }
  const Permutation& involution(std::size_t k) const { return ig_.element(involutions_[k]); }
  ElementIndex involution_index(std::size_t k) const { return involutions_[k]; }
  std::int32_t ordinal(ElementIndex i) const { return ordinal_[i]; }
  const Bitset& commuting(std::size_t k) const { return commute_[k]; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const std::vector<ElementIndex>& column(std::size_t k) const {
    std::call_once(column_once_[k],
                   [&] { columns_[k] = right_multiplication(ig_, involution(k)); });
    return columns_[k];
  }

  Closure closure(const Tuple& t) const {
    Closure c{Bitset(ig_.size()), 0};
    std::vector<const std::vector<ElementIndex>*> cols;
    for (auto k : t) cols.push_back(&column(k));
    std::vector<ElementIndex> queue{ig_.identity_index()};
    c.bits.set(queue[0]);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto* col : cols) {
        ElementIndex y = (*col)[queue[q]];
        if (c.bits.test(y)) continue;
        c.bits.set(y);
        queue.push_back(y);
      }
    c.size = queue.size();
    return c;
  }

  /// Cayley-graph automorphism test between two ordinal tuples.
  bool equivalent(const Tuple& s, const Tuple& t) const {
    if (s.size() != t.size()) return false;
    std::vector<const std::vector<ElementIndex>*> sc, tc;
    for (auto k : s) sc.push_back(&column(k));
    for (auto k : t) tc.push_back(&column(k));
    return cayley_map(ig_, sc, tc).has_value();
  }

  /// Is there one g with s_i^g = t_i for all i?
  bool conjugate_tuples(const Tuple& s, const Tuple& t) const {
    if (s.size() != t.size()) return false;
    for (const auto& g : ig_.elements()) {
      bool ok = true;
      for (std::size_t i = 0; i < s.size() && ok; ++i)
        ok = conjugate(involution(s[i]), g) == involution(t[i]);
      if (ok) return true;
    }
    return false;
  }

  GeneratorString to_string(const Tuple& t) const {
    std::vector<Permutation> gens;
    for (auto k : t) gens.push_back(involution(k));
    return GeneratorString(ig_.degree(), std::move(gens));
  }

 private:
  IndexedGroup ig_;
  std::vector<ElementIndex> involutions_;
  std::vector<std::int32_t> ordinal_;
  std::vector<Bitset> commute_;
  std::vector<Permutation> generators_;
  mutable std::vector<std::vector<ElementIndex>> columns_;
  std::unique_ptr<std::once_flag[]> column_once_;
};

/// Per-worker search state: the memo of which ordinal tuples are C-strings.
class CensusSearch {
 public:
  struct Verdict {
    bool ok = false;
    std::uint64_t order = 0;
  };

  CensusSearch(const CensusContext& ctx, const CensusOptions& opts, std::size_t max_rank)
      : ctx_(ctx), opts_(opts), max_rank_(max_rank) {}

  /// Is t a C-string (of the group it generates), with |<t>|. The string
  /// property is assumed.
  Verdict cstring(const Tuple& t) {
    if (t.size() <= 1) return {true, t.empty() ? 1u : 2u};
    if (t.size() == 2) {
      if (t[0] == t[1]) return {false, 2};
      return {true, 2 * order(ctx_.involution(t[0]) * ctx_.involution(t[1]))};
    }
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    Verdict v;
    Tuple head(t.begin(), t.end() - 1), tail(t.begin() + 1, t.end());
    Tuple middle(t.begin() + 1, t.end() - 1);
    if (cstring(head).ok && cstring(tail).ok) {
      auto a = ctx_.closure(head);
      auto b = ctx_.closure(tail);
      v.ok = a.bits.and_count(b.bits) == cstring(middle).order;
      if (v.ok) v.order = ctx_.closure(t).size;
    }
    memo_.emplace(t, v);
    return v;
  }

  /// Depth-first search below the prefix (s_1, s_2), appending every
  /// generating C-string of rank in [min_rank, max_rank] to out.
  void run(const Tuple& prefix, std::vector<Tuple>& out) {
    Node root;
    root.tuple = prefix;
    root.closure = ctx_.closure(prefix);
    root.centralizer = centralizer_of(prefix);
    root.commuting = ctx_.commuting(prefix[0]);
    extend(root, out);
  }

  /// Elements of G commuting with every involution in t.
  std::vector<ElementIndex> centralizer_of(const Tuple& t) const {
    std::vector<ElementIndex> out;
    const auto& ig = ctx_.group();
    for (std::size_t i = 0; i < ig.size(); ++i) {
      const auto& g = ig.element(static_cast<ElementIndex>(i));
      bool ok = true;
      for (auto k : t)
        if (!(ok = commute(g, ctx_.involution(k)))) break;
      if (ok) out.push_back(static_cast<ElementIndex>(i));
    }
    return out;
  }

  /// For each ordinal in `candidates`, whether it is the least ordinal of
  /// its orbit under conjugation by the subgroup with these elements.
  std::vector<bool> orbit_minima(const std::vector<ElementIndex>& subgroup,
                                 const std::vector<Ordinal>& candidates) const {
    const auto& ig = ctx_.group();
    std::vector<Permutation> gens = generating_subset(subgroup);
    std::vector<bool> minimal(ctx_.involution_count(), false);
    for (auto c : candidates) minimal[c] = true;
    if (gens.empty()) return minimal;
    std::vector<Permutation> inverses;
    for (const auto& g : gens) inverses.push_back(g.inverse());
    // Union-find over ordinals; the root is kept as the least member.
    std::vector<std::int32_t> parent(ctx_.involution_count(), -1);
    std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t x) {
      while (parent[x] >= 0 && parent[x] != x) {
        if (parent[parent[x]] >= 0) parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (auto c : candidates) parent[c] = c;
    for (auto c : candidates)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        auto img = inverses[k] * ctx_.involution(c) * gens[k];
        auto d = ctx_.ordinal(ig.index_of(img));
        auto a = find(c), b = find(static_cast<std::int32_t>(d));
        if (a == b) continue;
        if (a < b) parent[b] = a;
        else parent[a] = b;
      }
    for (auto c : candidates) minimal[c] = find(c) == c;
    return minimal;
  }

 private:
  struct Node {
    Tuple tuple;
    Closure closure;
    std::vector<ElementIndex> centralizer;  // of tuple[0..k-2]
    Bitset commuting;                       // involutions commuting with tuple[0..k-2]
  };

  /// A generating set of the subgroup, chosen greedily; empty when every
  /// element is central in G (such elements act trivially).
  std::vector<Permutation> generating_subset(const std::vector<ElementIndex>& subgroup) const {
    const auto& ig = ctx_.group();
    std::vector<Permutation> gens;
    Bitset have(ig.size());
    std::vector<ElementIndex> members{ig.identity_index()};
    have.set(members[0]);
    for (auto x : subgroup) {
      if (have.test(x)) continue;
      const auto& p = ig.element(x);
      bool central = true;
      for (const auto& g : ctx_.generators())
        if (!(central = commute(p, g))) break;
      gens.push_back(p);
      // Extend the closure by the new generator.
      for (std::size_t q = 0; q < members.size(); ++q)
        for (const auto& g : gens) {
          auto y = ig.product(members[q], g);
          if (have.test(y)) continue;
          have.set(y);
          members.push_back(y);
        }
      if (central) gens.pop_back();
      if (members.size() == subgroup.size()) break;
    }
    return gens;
  }

  void extend(const Node& node, std::vector<Tuple>& out) {
    const std::size_t k = node.tuple.size();  // next generator is s_{k+1}
    if (k >= max_rank_) return;
    const Ordinal last = node.tuple.back();
    const auto& ig = ctx_.group();
    std::vector<ElementIndex> centralizer;  // of A = <s_1..s_k>
    for (auto x : node.centralizer)
      if (commute(ig.element(x), ctx_.involution(last))) centralizer.push_back(x);
    // A degenerate next step makes A a direct factor, G = A x B with
    // B <= C_G(A). Then C_G(A) = Z(A) x B, so |A| |C_G(A)| = |Z(A)| |G|.
    bool may_split = opts_.allow_degenerate;
    if (may_split) {
      std::size_t centre = 0;
      for (auto x : centralizer) centre += node.closure.bits.test(x);
      may_split = static_cast<std::uint64_t>(node.closure.size) * centralizer.size() ==
                  static_cast<std::uint64_t>(centre) * ig.size();
    }
    // Candidates commute with s_1..s_{k-1}.
    std::vector<Ordinal> candidates;
    node.commuting.for_each([&](std::size_t c) {
      if (c == last) return;
      if (!may_split && ctx_.commuting(last).test(c)) return;
      if (node.closure.bits.test(ctx_.involution_index(c))) return;
      candidates.push_back(static_cast<Ordinal>(c));
    });
    if (candidates.empty()) return;
    auto minimal = orbit_minima(centralizer, candidates);
    for (auto c : candidates) {
      if (!minimal[c]) continue;
      Tuple t = node.tuple;
      t.push_back(c);
      Tuple tail(t.begin() + 1, t.end());
      if (!cstring(tail).ok) continue;
      Tuple middle(t.begin() + 1, t.end() - 1);
      auto b = ctx_.closure(tail);
      if (node.closure.bits.and_count(b.bits) != cstring(middle).order) continue;
      Node child;
      child.tuple = std::move(t);
      child.closure = ctx_.closure(child.tuple);
      if (child.closure.size == ig.size()) {
        if (child.tuple.size() >= opts_.min_rank) out.push_back(child.tuple);
        continue;
      }
      child.centralizer = centralizer;
      child.commuting = node.commuting;
      child.commuting &= ctx_.commuting(last);
      extend(child, out);
    }
  }

  const CensusContext& ctx_;
  const CensusOptions& opts_;
  std::size_t max_rank_;
  std::unordered_map<Tuple, Verdict, TupleHash> memo_;
};

struct RankWindow {
  std::size_t min_rank = 3;
  std::size_t max_rank = 0;
};

inline RankWindow rank_window(const PermutationGroup& g, const CensusOptions& opts) {
  RankWindow w;
  w.min_rank = std::max<std::size_t>(opts.min_rank, 3);
  const std::size_t bound = census_rank_bound(g.order());
  w.max_rank = opts.max_rank == 0 ? bound : std::min(opts.max_rank, bound);
  return w;
}

/// One tuple per conjugacy class of generating C-strings with rank in the
/// window, in deterministic order.
inline std::vector<Tuple> search(const CensusContext& ctx, const CensusOptions& opts,
                                 RankWindow window) {
  auto say = [&](const std::string& line) {
    if (opts.progress) opts.progress(line);
  };
  CensusOptions search_opts = opts;
  search_opts.min_rank = window.min_rank;

  // Tasks: canonical (s_1, s_2) pairs. s_1 runs over class representatives,
  // s_2 over orbit minima under the centralizer of s_1.
  std::vector<Tuple> tasks;
  {
    CensusSearch planner(ctx, search_opts, window.max_rank);
    std::vector<Ordinal> all(ctx.involution_count());
    std::iota(all.begin(), all.end(), Ordinal{0});
    std::vector<ElementIndex> everything(ctx.group().size());
    std::iota(everything.begin(), everything.end(), ElementIndex{0});
    auto reps = planner.orbit_minima(everything, all);
    for (Ordinal a = 0; a < all.size(); ++a) {
      if (!reps[a]) continue;
      auto centralizer = planner.centralizer_of({a});
      // p_1 = 2 splits off <s_1> as a direct factor, so s_1 is central.
      const bool may_split = opts.allow_degenerate && centralizer.size() == ctx.group().size();
      std::vector<Ordinal> second;
      for (Ordinal b = 0; b < all.size(); ++b) {
        if (b == a) continue;
        if (!may_split && ctx.commuting(a).test(b)) continue;
        second.push_back(b);
      }
      auto minimal = planner.orbit_minima(centralizer, second);
      for (auto b : second)
        if (minimal[b]) tasks.push_back({a, b});
    }
  }
  say(std::to_string(tasks.size()) + " search partitions");

  std::vector<std::vector<Tuple>> found(tasks.size());
  std::atomic<std::size_t> next{0}, done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    CensusSearch search(ctx, search_opts, window.max_rank);
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      search.run(tasks[i], found[i]);
      auto d = ++done;
      if (opts.progress && (d % 256 == 0 || d == tasks.size())) {
        std::lock_guard lock(progress_mutex);
        say("searched " + std::to_string(d) + "/" + std::to_string(tasks.size()) + " partitions");
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<Tuple> out;
  for (auto& list : found)
    for (auto& t : list) out.push_back(std::move(t));
  return out;
}

}  // namespace detail

/// One C-string per class under simultaneous conjugation, before the
/// automorphism and duality merge. Ranks as in census().
inline std::vector<GeneratorString> census_candidates(const PermutationGroup& g,
                                                      const CensusOptions& opts = {}) {
  auto window = detail::rank_window(g, opts);
  if (window.max_rank < window.min_rank) return {};
  detail::CensusContext ctx(g, opts.cap);
  std::vector<GeneratorString> out;
  for (const auto& t : detail::search(ctx, opts, window)) out.push_back(ctx.to_string(t));
  return out;
}

/// Enumerates the C-strings of g of every rank in [opts.min_rank, max_rank]
/// up to automorphisms of g (or conjugacy) and duality.
inline CensusResult census(const PermutationGroup& g, const CensusOptions& opts = {}) {
  using detail::Tuple;
  auto say = [&](const std::string& line) {
    if (opts.progress) opts.progress(line);
  };
  CensusResult result;
  result.group_order = g.order();
  result.allow_degenerate = opts.allow_degenerate;
  auto window = detail::rank_window(g, opts);
  result.min_rank = window.min_rank;
  result.max_rank = window.max_rank;
  for (std::size_t r = result.min_rank; r <= result.max_rank; ++r) result.by_rank[r];
  if (result.max_rank < result.min_rank) return result;

  detail::CensusContext ctx(g, opts.cap);
  say("group order " + std::to_string(g.order()) + ", " +
      std::to_string(ctx.involution_count()) + " involutions, ranks " +
      std::to_string(result.min_rank) + ".." + std::to_string(result.max_rank));
  auto found = detail::search(ctx, opts, window);

  // Dedupe in search order: fingerprint bucket, then the Cayley-graph test
  // against each earlier representative and its dual.
  struct Class {
    Tuple rep;
    std::size_t merged = 1;
    std::size_t via_dual = 0;
  };
  std::map<std::size_t, std::vector<Class>> classes;
  std::map<std::pair<std::size_t, Fingerprint>, std::vector<std::size_t>> buckets;
  detail::CensusSearch sizes(ctx, opts, result.max_rank);
  auto equivalent = [&](const Tuple& a, const Tuple& b) {
    return opts.equivalence == Equivalence::automorphism ? ctx.equivalent(a, b)
                                                         : ctx.conjugate_tuples(a, b);
  };
  for (const auto& t : found) {
    auto gens = ctx.to_string(t).gens();
    auto fp = make_fingerprint(std::span<const Permutation>(gens), [&](std::size_t i, std::size_t j) {
      return sizes.cstring(Tuple(t.begin() + static_cast<std::ptrdiff_t>(i),
                                 t.begin() + static_cast<std::ptrdiff_t>(j) + 1))
          .order;
    });
    Tuple reversed(t.rbegin(), t.rend());
    auto& bucket = buckets[{t.size(), fp}];
    auto& list = classes[t.size()];
    bool merged = false;
    for (auto id : bucket) {
      auto& c = list[id];
      const bool direct = equivalent(c.rep, t);
      if (direct || equivalent(c.rep, reversed)) {
        c.via_dual += !direct;
        ++c.merged;
        merged = true;
        break;
      }
    }
    if (!merged) {
      bucket.push_back(list.size());
      list.push_back({t});
    }
  }
  say(std::to_string(found.size()) + " conjugacy classes of C-strings found");

  for (auto& [rank, list] : classes) {
    if (rank < result.min_rank || rank > result.max_rank) continue;
    auto& out = result.by_rank[rank];
    for (const auto& c : list) {
      CensusRecord rec;
      rec.representative = ctx.to_string(c.rep);
      rec.schlafli = schlafli(rec.representative);
      rec.degenerate = is_degenerate(rec.representative);
      Tuple reversed(c.rep.rbegin(), c.rep.rend());
      rec.self_dual = is_palindrome(rec.schlafli) && equivalent(c.rep, reversed);
      rec.note = "merged " + std::to_string(c.merged) + " conjugacy class" +
                 (c.merged == 1 ? "" : "es") + ", " + std::to_string(c.via_dual) + " via dual";
      if (!is_cstring_of(rec.representative, g, opts.cap))
        throw InvariantViolation("census representative failed re-verification");
      out.push_back(std::move(rec));
    }
  }
  return result;
}

/// The classes of rank exactly r.
inline std::vector<CensusRecord> enumerate_rank(const PermutationGroup& g, std::size_t r,
                                                bool allow_degenerate = false,
                                                CensusOptions opts = {}) {
  if (r < 3) throw InvalidArgument("census ranks start at 3");
  opts.allow_degenerate = allow_degenerate;
  opts.min_rank = opts.max_rank = r;
  auto res = census(g, opts);
  auto it = res.by_rank.find(r);
  return it == res.by_rank.end() ? std::vector<CensusRecord>{} : it->second;
}

/// All ranks from 3 to floor(log2 |G|).
inline CensusResult census_table(const PermutationGroup& g, CensusOptions opts = {}) {
  opts.min_rank = 3;
  opts.max_rank = 0;
  return census(g, opts);
}

/// Largest rank of a C-string of g, 0 if there is none. Rank 2 is not
/// searched.
inline std::size_t rmax_search(const PermutationGroup& g, CensusOptions opts = {}) {
  return census_table(g, std::move(opts)).highest_rank();
}

}  // namespace stringc
