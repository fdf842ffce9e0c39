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

#include "tsreconf/vertex_set.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <sstream>

#include "tsreconf/errors.hpp"

namespace tsr {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_mask(Mask mask) {
  VertexSet s;
  s.ids_.reserve(popcount(mask));
  while (mask != 0) {
    s.ids_.push_back(static_cast<Vertex>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return s;
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  VertexSet s;
  for (Vertex v = first; v < last; ++v) s.ids_.push_back(v);
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

VertexSet VertexSet::with(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
  if (it == s.ids_.end() || *it != v) s.ids_.insert(it, v);
  return s;
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
  if (it != s.ids_.end() && *it == v) s.ids_.erase(it);
  return s;
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet s;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(s.ids_));
  return s;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet s;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(s.ids_));
  return s;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet s;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(s.ids_));
  return s;
}

std::size_t VertexSet::distance(const VertexSet& other) const {
  std::vector<Vertex> diff;
  std::set_symmetric_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                                other.ids_.end(), std::back_inserter(diff));
  return diff.size();
}

Mask VertexSet::to_mask() const {
  Mask m = 0;
  for (Vertex v : ids_) {
    if (v >= kMaskBits) {
      throw InvalidInput("vertex " + std::to_string(v + 1) +
                         " does not fit a 64-bit subset encoding");
    }
    m |= Mask{1} << v;
  }
  return m;
}

std::string VertexSet::encode() const {
  std::string out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(ids_[i] + 1);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  return os << '{' << s.encode() << '}';
}

VertexSet parse_vertex_set(std::istream& in, std::size_t n) {
  std::vector<Vertex> ids;
  std::string token;
  while (in >> token) {
    std::size_t consumed = 0;
    unsigned long long id = 0;
    try {
      id = std::stoull(token, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != token.size() || token.front() == '-' || token.front() == '+') {
      throw ParseError(0, "vertex set: '" + token + "' is not a vertex id");
    }
    if (id < 1 || id > n) {
      throw InvalidInput("vertex set: id " + token + " outside 1.." + std::to_string(n));
    }
    ids.push_back(static_cast<Vertex>(id - 1));
  }
  VertexSet s(ids);
  if (s.size() != ids.size()) throw InvalidInput("vertex set: duplicate id");
  return s;
}

VertexSet parse_vertex_set(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  return parse_vertex_set(in, n);
}

}  // namespace tsr
