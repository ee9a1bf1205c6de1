#pragma once

// Base and strong generating set built by deterministic Schreier-Sims.
//
// Level i holds base point b_i, the strong generators fixing b_0..b_{i-1},
// the orbit of b_i under them and an explicit transversal: u_beta with
// b_i^{u_beta} = beta. Every group element factors uniquely as
//   g = u^{(k-1)} ... u^{(1)} u^{(0)}
// and its rank is the mixed-radix number of the transversal indices with
// level 0 least significant.

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "stringc/errors.hpp"
#include "stringc/perm.hpp"

namespace stringc {

struct ChainLevel {
  Point base = 0;  // 0-based
  std::vector<Permutation> generators;
  std::vector<Point> orbit;           // 0-based points, BFS order
  std::vector<std::int32_t> position;  // point -> index in orbit, or -1
  std::vector<Permutation> transversal;
  std::vector<Permutation> inverse_transversal;

  bool in_orbit(Point p) const { return position[p] >= 0; }
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw Error("group order overflows 64 bits");
  return a * b;
}

inline void rebuild_orbit(ChainLevel& level, std::size_t degree) {
  level.orbit.assign(1, level.base);
  level.position.assign(degree, -1);
  level.position[level.base] = 0;
  level.transversal.assign(1, Permutation(degree));
  level.inverse_transversal.assign(1, Permutation(degree));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point beta = level.orbit[k];
    for (const auto& x : level.generators) {
      Point gamma = x.data()[beta];
      if (level.position[gamma] >= 0) continue;
      level.position[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      Permutation u = level.transversal[k] * x;
      level.inverse_transversal.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

}  // namespace detail

class StabilizerChain {
 public:
  StabilizerChain() = default;

  static StabilizerChain build(std::size_t degree,
                               std::span<const Permutation> generators) {
    StabilizerChain chain;
    chain.degree_ = degree;
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
      if (g.degree() != degree) throw DegreeMismatch(degree, g.degree());
      if (!g.is_identity()) gens.push_back(g);
    }
    auto& levels = chain.levels_;
    for (const auto& g : gens) {
      bool fixes_base = true;
      for (const auto& lv : levels)
        if (g.data()[lv.base] != lv.base) {
          fixes_base = false;
          break;
        }
      if (fixes_base) {
        ChainLevel lv;
        lv.base = static_cast<Point>(g.first_moved_point());
        levels.push_back(std::move(lv));
      }
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (const auto& g : gens) {
        bool fixes = true;
        for (std::size_t j = 0; j < i; ++j)
          if (g.data()[levels[j].base] != levels[j].base) {
            fixes = false;
            break;
          }
        if (fixes) levels[i].generators.push_back(g);
      }
      detail::rebuild_orbit(levels[i], degree);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
    while (i >= 0) {
      bool extended = false;
      auto& lv = levels[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; !extended && k < lv.orbit.size(); ++k) {
        for (std::size_t x = 0; x < lv.generators.size(); ++x) {
          Point image = lv.generators[x].data()[lv.orbit[k]];
          auto pos = static_cast<std::size_t>(lv.position[image]);
          Permutation h = lv.transversal[k] * lv.generators[x] *
                          lv.inverse_transversal[pos];
          if (h.is_identity()) continue;
          auto [residue, j] =
              chain.strip_from(std::move(h), static_cast<std::size_t>(i) + 1);
          if (j == levels.size() && residue.is_identity()) continue;
          if (j == levels.size()) {
            ChainLevel fresh;
            fresh.base = static_cast<Point>(residue.first_moved_point());
            levels.push_back(std::move(fresh));
          }
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
            levels[l].generators.push_back(residue);
            detail::rebuild_orbit(levels[l], degree);
          }
          i = static_cast<std::ptrdiff_t>(j);
          extended = true;
          break;
        }
      }
      if (!extended) --i;
    }
    chain.finish();
    return chain;
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& lv : levels_) b.push_back(lv.base);
    return b;
  }

  std::uint64_t order() const noexcept { return order_; }

  /// Mixed-radix weight of each level's transversal index.
  std::span<const std::uint64_t> strides() const noexcept { return strides_; }

  /// Sifts g starting at the given level. Returns the residue and the index
  /// of the level where sifting stopped (levels().size() if it went through).
  std::pair<Permutation, std::size_t> strip_from(Permutation g,
                                                 std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      const auto& lv = levels_[l];
      Point beta = g.data()[lv.base];
      if (lv.position[beta] < 0) return {std::move(g), l};
      g = g * lv.inverse_transversal[static_cast<std::size_t>(lv.position[beta])];
    }
    return {std::move(g), levels_.size()};
  }

  std::pair<Permutation, std::size_t> strip(Permutation g) const {
    return strip_from(std::move(g), 0);
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    auto [residue, level] = strip(g);
    return level == levels_.size() && residue.is_identity();
  }

  /// Rank of a member element; throws InvalidArgument for non-members.
  std::uint64_t rank(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    std::uint64_t r = 0;
    Permutation h = g;
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      const auto& lv = levels_[l];
      auto pos = lv.position[h.data()[lv.base]];
      if (pos < 0) throw InvalidArgument("element is not in the group");
      r += static_cast<std::uint64_t>(pos) * strides_[l];
      h = h * lv.inverse_transversal[static_cast<std::size_t>(pos)];
    }
    if (!h.is_identity()) throw InvalidArgument("element is not in the group");
    return r;
  }

  /// Element of the given rank.
  Permutation unrank(std::uint64_t r) const {
    if (r >= order_) throw InvalidArgument("rank out of range");
    Permutation g(degree_);
    for (std::size_t l = levels_.size(); l-- > 0;) {
      auto idx = static_cast<std::size_t>((r / strides_[l]) %
                                          levels_[l].orbit.size());
      g = g * levels_[l].transversal[idx];
    }
    return g;
  }

  /// Calls visit(element, rank) for every element, in rank order.
  template <class Visit>
  void for_each_element(Visit&& visit) const {
    const std::size_t k = levels_.size();
    // partial[l] = u^{(k-1)} ... u^{(l)}; level 0 varies fastest.
    std::vector<std::size_t> idx(k, 0);
    std::vector<Permutation> partial(k + 1, Permutation(degree_));
    for (std::size_t l = k; l-- > 0;)
      partial[l] = partial[l + 1] * levels_[l].transversal[0];
    std::uint64_t r = 0;
    while (true) {
      visit(partial[0], r);
      ++r;
      std::size_t l = 0;
      while (l < k && ++idx[l] == levels_[l].orbit.size()) idx[l++] = 0;
      if (l == k) return;
      for (std::size_t m = l + 1; m-- > 0;)
        partial[m] = partial[m + 1] * levels_[m].transversal[idx[m]];
    }
  }

 private:
  void finish() {
    order_ = 1;
    strides_.assign(levels_.size(), 1);
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      strides_[l] = order_;
      order_ = detail::checked_mul(order_, levels_[l].orbit.size());
    }
  }

  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

}  // namespace stringc
