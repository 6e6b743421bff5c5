/*
 *   Copyright 2026 The rml-rough Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RML_ELEMENT_SET_HPP
#define RML_ELEMENT_SET_HPP

#include <bit>
#include <cstdint>
#include <iterator>
#include <initializer_list>
#include <vector>

namespace rml {

/// Index of an element inside a FinitePoset (declaration order).
using Element = std::uint32_t;

/// Maximum number of elements a poset may carry.
inline constexpr std::size_t max_elements = 64;

/**
 * A subset of the elements of a poset with at most 64 elements.
 *
 * Stored as a bitmask, so iteration always yields indices in increasing
 * (declaration) order without duplicates.
 */
class ElementSet {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<Element> elems) {
    for (Element e : elems) insert(e);
  }

  /// The set {0, ..., n-1}.
  static constexpr ElementSet all(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(Element e) { return ElementSet(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Element e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }

  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

  /// Smallest index in the set; the set must be nonempty.
  constexpr Element front() const { return static_cast<Element>(std::countr_zero(bits_)); }

  constexpr bool subset_of(const ElementSet& other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> indices() const { return {begin(), end()}; }

  constexpr ElementSet operator|(const ElementSet& o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(const ElementSet& o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(const ElementSet& o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElementSet&) const = default;

private:
  std::uint64_t bits_ = 0;
};

/// Calls `fn(subset)` for every nonempty subset of `universe`, in increasing bitmask order.
template <class Fn>
void for_each_nonempty_subset(ElementSet universe, Fn&& fn) {
  const std::uint64_t u = universe.bits();
  for (std::uint64_t s = (u & (~u + 1)); s != 0; s = (s - u) & u) {
    fn(ElementSet(s));
  }
}

}  // namespace rml

#endif  // RML_ELEMENT_SET_HPP
