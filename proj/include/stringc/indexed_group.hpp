#pragma once

// Every element of a (small) group stored explicitly and numbered by its
// stabilizer-chain rank. An element is determined by its base images, so the
// index of a product g*q needs only the base images of g pushed through q
// and one pass down the chain: O(b^2) for base length b, independent of the
// degree. Subgroups are handled as bitsets over these indices.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stringc/errors.hpp"
#include "stringc/perm.hpp"
#include "stringc/permgroup.hpp"

namespace stringc {

using ElementIndex = std::uint32_t;

class IndexedGroup {
 public:
  explicit IndexedGroup(PermutationGroup group,
                        std::uint64_t cap = kDefaultEnumerationCap)
      : group_(std::move(group)) {
    check_cap(group_, cap, "indexed group");
    if (group_.order() > 0xffffffffull)
      throw CapExceeded("indexed group", group_.order(), 0xffffffffull);
    const auto& chain = group_.chain();
    base_ = chain.base();
    size_ = static_cast<std::size_t>(chain.order());
    elements_.reserve(size_);
    base_images_.resize(size_ * base_.size());
    chain.for_each_element([&](const Permutation& p, std::uint64_t r) {
      for (std::size_t l = 0; l < base_.size(); ++l)
        base_images_[r * base_.size() + l] = p.data()[base_[l]];
      elements_.push_back(p);
    });
  }

  const PermutationGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t degree() const noexcept { return group_.degree(); }
  std::size_t base_length() const noexcept { return base_.size(); }

  const Permutation& element(ElementIndex i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  ElementIndex identity_index() const {
    std::vector<Point> images(base_.begin(), base_.end());
    return from_base_images(images);
  }

  /// Index of a member of the group, nullopt for non-members.
  std::optional<ElementIndex> find(const Permutation& p) const {
    if (p.degree() != degree()) throw DegreeMismatch(degree(), p.degree());
    std::vector<Point> images(base_.size());
    for (std::size_t l = 0; l < base_.size(); ++l)
      images[l] = p.data()[base_[l]];
    auto r = try_from_base_images(images);
    if (!r || elements_[*r] != p) return std::nullopt;
    return r;
  }

  ElementIndex index_of(const Permutation& p) const {
    auto r = find(p);
    if (!r) throw InvalidArgument("permutation is not in the group");
    return *r;
  }

  /// Index of element(i) * q. q must lie in the group.
  ElementIndex product(ElementIndex i, const Permutation& q) const {
    Point buffer[kMaxInlineBase];
    std::vector<Point> heap;
    std::span<Point> images = scratch(buffer, heap);
    const Point* src = &base_images_[static_cast<std::size_t>(i) * base_.size()];
    auto qd = q.data();
    for (std::size_t l = 0; l < base_.size(); ++l) images[l] = qd[src[l]];
    return from_base_images(images);
  }

  ElementIndex product(ElementIndex i, ElementIndex j) const {
    return product(i, elements_[j]);
  }

  ElementIndex inverse(ElementIndex i) const {
    return index_of(elements_[i].inverse());
  }

  /// Rank from the images of the base points (consumed as scratch space).
  ElementIndex from_base_images(std::span<Point> images) const {
    auto r = try_from_base_images(images);
    if (!r) throw InvalidArgument("base images do not belong to the group");
    return *r;
  }

 private:
  static constexpr std::size_t kMaxInlineBase = 64;

  std::span<Point> scratch(Point* buffer, std::vector<Point>& heap) const {
    if (base_.size() <= kMaxInlineBase) return {buffer, base_.size()};
    heap.resize(base_.size());
    return heap;
  }

  std::optional<ElementIndex> try_from_base_images(std::span<Point> im) const {
    const auto& levels = group_.chain().levels();
    const auto strides = group_.chain().strides();
    std::uint64_t r = 0;
    for (std::size_t l = 0; l < levels.size(); ++l) {
      auto pos = levels[l].position[im[l]];
      if (pos < 0) return std::nullopt;
      r += static_cast<std::uint64_t>(pos) * strides[l];
      auto inv = levels[l].inverse_transversal[static_cast<std::size_t>(pos)].data();
      for (std::size_t m = l + 1; m < levels.size(); ++m) im[m] = inv[im[m]];
    }
    return static_cast<ElementIndex>(r);
  }

  PermutationGroup group_;
  std::vector<Point> base_;
  std::size_t size_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Point> base_images_;
};

/// A subgroup of an IndexedGroup as a membership bitset.
struct Subgroup {
  std::vector<std::uint64_t> bits;
  std::size_t size = 0;

  bool contains(ElementIndex i) const {
    return (bits[i >> 6] >> (i & 63)) & 1u;
  }
};

/// Closure of the given generators by breadth-first search over right
/// multiplication. Stops early (returning a partial set) once the size
/// exceeds `limit`.
inline Subgroup closure(const IndexedGroup& g,
                        std::span<const Permutation> generators,
                        std::size_t limit = static_cast<std::size_t>(-1)) {
  Subgroup h;
  h.bits.assign((g.size() + 63) / 64, 0);
  std::vector<ElementIndex> queue;
  queue.reserve(64);
  ElementIndex e = g.identity_index();
  h.bits[e >> 6] |= std::uint64_t{1} << (e & 63);
  queue.push_back(e);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& x : generators) {
      ElementIndex y = g.product(queue[k], x);
      auto& word = h.bits[y >> 6];
      auto mask = std::uint64_t{1} << (y & 63);
      if (word & mask) continue;
      word |= mask;
      queue.push_back(y);
      if (queue.size() > limit) {
        h.size = queue.size();
        return h;
      }
    }
  }
  h.size = queue.size();
  return h;
}

/// Elements of the closure in discovery order (identity first).
inline std::vector<ElementIndex> closure_elements(
    const IndexedGroup& g, std::span<const Permutation> generators) {
  std::vector<bool> seen(g.size(), false);
  std::vector<ElementIndex> queue{g.identity_index()};
  seen[queue[0]] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& x : generators) {
      ElementIndex y = g.product(queue[k], x);
      if (seen[y]) continue;
      seen[y] = true;
      queue.push_back(y);
    }
  return queue;
}

}  // namespace stringc
