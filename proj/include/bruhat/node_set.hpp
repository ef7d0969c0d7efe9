#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

// A subset of the Dynkin nodes {0, 1, ..., n}; node 0 is the affine node. Subsets of
// I_n = {1..n} simply never contain 0.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}
  static NodeSet of(std::initializer_list<int> nodes);
  // {1, ..., n}
  static constexpr NodeSet full(int n) { return NodeSet(((std::uint32_t{1} << n) - 1) << 1); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr NodeSet with(int i) const { return NodeSet(bits_ | (std::uint32_t{1} << i)); }
  constexpr NodeSet without(int i) const { return NodeSet(bits_ & ~(std::uint32_t{1} << i)); }
  constexpr bool is_subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> elements() const;

  // "[1,3]"; the empty set is "[]".
  std::string to_string() const;
  // Accepts "[1,3]", "1,3", "" and "[]".
  static NodeSet parse(std::string_view text);

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  friend constexpr auto operator<=>(NodeSet, NodeSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// All subsets of {1..n} in increasing bit order.
std::vector<NodeSet> subsets_of(int n);

}  // namespace bruhat
