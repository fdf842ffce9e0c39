// Copyright 2026 The tsreconf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSRECONF_VERTEX_SET_HPP_
#define TSRECONF_VERTEX_SET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tsr {

using Vertex = std::uint32_t;

// Subsets of a universe of at most 64 vertices, one bit per vertex id.
using Mask = std::uint64_t;
inline constexpr std::size_t kMaskBits = 64;

// An immutable-by-convention set of vertex ids, stored sorted and
// duplicate-free so that equal sets compare and serialize identically.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  // Sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet from_mask(Mask mask);
  // All ids in [first, last).
  static VertexSet range(Vertex first, Vertex last);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  // Largest id plus one; 0 for the empty set.
  Vertex bound() const noexcept { return ids_.empty() ? 0 : ids_.back() + 1; }

  std::span<const Vertex> ids() const noexcept { return ids_; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  VertexSet with(Vertex v) const;
  VertexSet without(Vertex v) const;
  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  // Number of elements in the symmetric difference.
  std::size_t distance(const VertexSet& other) const;

  // Throws InvalidInput if some id does not fit in a Mask.
  Mask to_mask() const;

  // 1-based ids separated by single spaces; the VertexSet file format.
  std::string encode() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Lexicographic over the sorted id lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<Vertex> ids_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

// Reads the VertexSet file format: whitespace-separated 1-based ids, each at
// most `n`. Duplicates are rejected.
VertexSet parse_vertex_set(std::istream& in, std::size_t n);
VertexSet parse_vertex_set(const std::string& text, std::size_t n);

inline int popcount(Mask m) noexcept { return __builtin_popcountll(m); }

}  // namespace tsr

#endif  // TSRECONF_VERTEX_SET_HPP_
