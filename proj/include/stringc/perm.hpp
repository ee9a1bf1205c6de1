#pragma once

// Permutations of {1, ..., m}.
//
// Points are 1-based at every public entry point (cycle notation, image()).
// Internally images are stored 0-based; data() exposes that raw table for
// the group algorithms.
//
// Action is on the right: x^(pq) = (x^p)^q, so compose(p, q) applies p first.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stringc/errors.hpp"

namespace stringc {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// From a 0-based image table; throws InvalidArgument unless bijective.
  static Permutation from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point p : images) {
      if (p >= images.size() || seen[p])
        throw InvalidArgument("image table is not a bijection");
      seen[p] = true;
    }
    Permutation result;
    result.images_ = std::move(images);
    return result;
  }

  std::size_t degree() const noexcept { return images_.size(); }

  /// Image of a 1-based point.
  Point image(Point point) const {
    if (point == 0 || point > images_.size())
      throw InvalidArgument("point " + std::to_string(point) + " out of range");
    return images_[point - 1] + 1;
  }

  /// Raw 0-based image table.
  std::span<const Point> data() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Smallest moved point (0-based), or degree() for the identity.
  std::size_t first_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return i;
    return images_.size();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (auto c = a.images_.size() <=> b.images_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
  }

  /// Apply this, then q.
  Permutation operator*(const Permutation& q) const {
    if (degree() != q.degree()) throw DegreeMismatch(degree(), q.degree());
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[i] = q.images_[images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

 private:
  std::vector<Point> images_;
};

inline Permutation identity(std::size_t degree) { return Permutation(degree); }

inline Permutation compose(const Permutation& p, const Permutation& q) {
  return p * q;
}

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

/// g^-1 x g, i.e. x conjugated by g in right-action notation x^g.
inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  return g.inverse() * x * g;
}

inline Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result(p.degree());
  Permutation base = p;
  while (k != 0) {
    if (k & 1u) result = result * base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

/// Builds a permutation from disjoint cycles of 1-based points.
inline Permutation from_cycles(const std::vector<std::vector<Point>>& cycles,
                               std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point p : cycle) {
      if (p == 0 || p > degree)
        throw InvalidArgument("point " + std::to_string(p) +
                              " out of range 1.." + std::to_string(degree));
      if (used[p - 1])
        throw InvalidArgument("point " + std::to_string(p) +
                              " repeated across cycles");
      used[p - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return Permutation::from_images(std::move(images));
}

/// Canonical disjoint cycles: fixed points omitted, each cycle led by its
/// least point, cycles sorted by leader.
inline std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> result;
  auto img = p.data();
  std::vector<bool> seen(img.size(), false);
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (seen[start] || img[start] == start) continue;
    std::vector<Point> cycle;
    for (std::size_t x = start; !seen[x]; x = img[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x + 1));
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

/// Least k >= 1 with p^k = 1: lcm of the cycle lengths.
inline std::uint64_t order(const Permutation& p) {
  std::uint64_t result = 1;
  auto img = p.data();
  std::vector<bool> seen(img.size(), false);
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = img[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

inline bool is_involution(const Permutation& p) {
  auto img = p.data();
  bool moved = false;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[img[i]] != i) return false;
    moved = moved || img[i] != i;
  }
  return moved;
}

inline bool commute(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  auto x = a.data();
  auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[x[i]] != x[y[i]]) return false;
  return true;
}

/// "(1,6)(2,7)"; the identity prints as "()".
inline std::string to_cycle_string(const Permutation& p) {
  auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_cycle_string(p);
}

/// Parses cycle notation. Whitespace is ignored; "()" and "" are the
/// identity. The degree is carried separately.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string& why) {
    throw InvalidArgument("bad cycle notation \"" + std::string(text) +
                          "\": " + why);
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      std::uint64_t value = 0;
      std::size_t digits = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 0xffffffffu) fail("point too large");
        ++i;
        ++digits;
      }
      if (digits == 0) fail("expected a point");
      cycle.push_back(static_cast<Point>(value));
      skip_ws();
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      fail("expected ',' or ')'");
    }
    cs.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(cs, degree);
}

}  // namespace stringc

template <>
struct std::hash<stringc::Permutation> {
  std::size_t operator()(const stringc::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : p.data()) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};
