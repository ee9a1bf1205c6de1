#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <vector>

#include "stringc/errors.hpp"
#include "stringc/perm.hpp"
#include "stringc/stabilizer_chain.hpp"

namespace stringc {

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and shared between copies; build it (e.g. call order()) before
/// handing the group to other threads.
class PermutationGroup {
 public:
  PermutationGroup() : PermutationGroup(0, {}) {}

  PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
      : degree_(degree),
        generators_(std::move(generators)),
        lazy_(std::make_shared<Lazy>()) {
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }

  const StabilizerChain& chain() const {
    std::call_once(lazy_->once, [this] {
      lazy_->chain = StabilizerChain::build(degree_, generators_);
    });
    return lazy_->chain;
  }

  std::uint64_t order() const { return chain().order(); }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) throw DegreeMismatch(degree_, p.degree());
    return chain().contains(p);
  }

 private:
  struct Lazy {
    std::once_flag once;
    StabilizerChain chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;
};

inline std::uint64_t group_order(const PermutationGroup& g) { return g.order(); }

inline bool contains(const PermutationGroup& g, const Permutation& p) {
  return g.contains(p);
}

inline void check_cap(const PermutationGroup& g, std::uint64_t cap,
                      const char* what) {
  if (g.order() > cap) throw CapExceeded(what, g.order(), cap);
}

/// Streams every element exactly once (as products of transversal
/// representatives) to visit(const Permutation&).
template <class Visit>
void for_each_element(const PermutationGroup& g, Visit&& visit,
                      std::uint64_t cap = kDefaultEnumerationCap) {
  check_cap(g, cap, "element enumeration");
  g.chain().for_each_element(
      [&](const Permutation& p, std::uint64_t) { visit(p); });
}

inline std::vector<Permutation> elements(
    const PermutationGroup& g, std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Permutation> out;
  check_cap(g, cap, "element enumeration");
  out.reserve(static_cast<std::size_t>(g.order()));
  for_each_element(g, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

/// |A n B|: enumerates the smaller group and sifts through the larger.
inline std::uint64_t intersection_order(
    const PermutationGroup& a, const PermutationGroup& b,
    std::uint64_t cap = kDefaultEnumerationCap) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  const PermutationGroup& small = a.order() <= b.order() ? a : b;
  const PermutationGroup& large = a.order() <= b.order() ? b : a;
  check_cap(small, cap, "intersection enumeration");
  const auto& chain = large.chain();
  std::uint64_t count = 0;
  small.chain().for_each_element([&](const Permutation& p, std::uint64_t) {
    if (chain.contains(p)) ++count;
  });
  return count;
}

/// All elements of order exactly 2, sorted by image sequence.
inline std::vector<Permutation> involutions(
    const PermutationGroup& g, std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Permutation> out;
  for_each_element(
      g, [&](const Permutation& p) {
        if (is_involution(p)) out.push_back(p);
      },
      cap);
  std::sort(out.begin(), out.end());
  return out;
}

struct InvolutionClass {
  Permutation representative;  // least member by image sequence
  std::size_t size = 0;
  std::vector<Permutation> members;    // sorted
  std::vector<Permutation> witnesses;  // representative^witness == member
};

/// Conjugacy classes of involutions, via orbits under conjugation by the
/// generators. Classes are ordered by representative.
inline std::vector<InvolutionClass> involution_classes(
    const PermutationGroup& g, std::uint64_t cap = kDefaultEnumerationCap) {
  auto invs = involutions(g, cap);
  std::vector<bool> done(invs.size(), false);
  auto index_of = [&](const Permutation& p) {
    auto it = std::lower_bound(invs.begin(), invs.end(), p);
    return static_cast<std::size_t>(it - invs.begin());
  };
  std::vector<Permutation> gen_inverses;
  for (const auto& x : g.generators()) gen_inverses.push_back(x.inverse());

  std::vector<InvolutionClass> classes;
  for (std::size_t start = 0; start < invs.size(); ++start) {
    if (done[start]) continue;
    // invs is sorted, so the first unclassified involution is the least
    // member of its class.
    InvolutionClass cls;
    cls.representative = invs[start];
    std::vector<std::pair<std::size_t, Permutation>> orbit{
        {start, Permutation(g.degree())}};
    done[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (std::size_t x = 0; x < g.generators().size(); ++x) {
        Permutation image =
            gen_inverses[x] * invs[orbit[k].first] * g.generators()[x];
        std::size_t pos = index_of(image);
        if (done[pos]) continue;
        done[pos] = true;
        orbit.emplace_back(pos, orbit[k].second * g.generators()[x]);
      }
    }
    std::sort(orbit.begin(), orbit.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& [pos, witness] : orbit) {
      cls.members.push_back(invs[pos]);
      cls.witnesses.push_back(std::move(witness));
    }
    cls.size = cls.members.size();
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Involutions of g commuting with s (s itself included when it lies in g).
inline std::vector<Permutation> commuting_involutions(
    const PermutationGroup& g, const Permutation& s,
    std::uint64_t cap = kDefaultEnumerationCap) {
  if (s.degree() != g.degree()) throw DegreeMismatch(g.degree(), s.degree());
  std::vector<Permutation> out;
  for (auto& t : involutions(g, cap))
    if (commute(s, t)) out.push_back(std::move(t));
  return out;
}

/// Orbits of the group on points, each sorted, ordered by least point
/// (1-based).
inline std::vector<std::vector<Point>> orbits(const PermutationGroup& g) {
  std::vector<std::size_t> parent(g.degree());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : g.generators())
    for (std::size_t i = 0; i < g.degree(); ++i) {
      auto a = find(i), b = find(gen.data()[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Point>> out;
  std::vector<std::int64_t> slot(g.degree(), -1);
  for (std::size_t i = 0; i < g.degree(); ++i) {
    auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(static_cast<Point>(i + 1));
  }
  return out;
}

inline bool is_transitive(const PermutationGroup& g) {
  return g.degree() <= 1 || orbits(g).size() == 1;
}

}  // namespace stringc
