#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracelab {

/// Index of a ground-set element. Elements are 0-based everywhere in this
/// library; serialized formats document the same convention.
using ElementId = int;

/// Maximum ground-set size supported by SetMask.
inline constexpr int kMaxGroundSize = 64;

/// One subset of a ground set of up to 64 elements, stored as a bitmask.
/// Bit i set means element i is in the set. The numeric value of the mask
/// equals the colexicographic rank of the set, which is why families keep
/// their edges sorted by raw mask value.
class SetMask {
public:
  constexpr SetMask() = default;
  constexpr explicit SetMask(std::uint64_t bits) : bits_(bits) {}

  SetMask(std::initializer_list<ElementId> elems) {
    for (ElementId e : elems) {
      check_element(e);
      bits_ |= std::uint64_t{1} << e;
    }
  }

  static SetMask from_elements(const std::vector<ElementId>& elems) {
    SetMask m;
    for (ElementId e : elems) {
      check_element(e);
      m.bits_ |= std::uint64_t{1} << e;
    }
    return m;
  }

  /// Full set {0, ..., n-1}.
  static SetMask full(int n) {
    if (n < 0 || n > kMaxGroundSize) throw std::length_error("SetMask: ground size out of range");
    if (n == kMaxGroundSize) return SetMask(~std::uint64_t{0});
    return SetMask((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(ElementId e) const { return e >= 0 && e < kMaxGroundSize && (bits_ >> e & 1); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool subset_of(SetMask other) const { return (bits_ & ~other.bits_) == 0; }

  SetMask with(ElementId e) const {
    check_element(e);
    return SetMask(bits_ | (std::uint64_t{1} << e));
  }
  SetMask without(ElementId e) const {
    check_element(e);
    return SetMask(bits_ & ~(std::uint64_t{1} << e));
  }

  constexpr SetMask operator&(SetMask o) const { return SetMask(bits_ & o.bits_); }
  constexpr SetMask operator|(SetMask o) const { return SetMask(bits_ | o.bits_); }
  constexpr SetMask operator^(SetMask o) const { return SetMask(bits_ ^ o.bits_); }
  constexpr SetMask minus(SetMask o) const { return SetMask(bits_ & ~o.bits_); }

  std::vector<ElementId> elements() const {
    std::vector<ElementId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Smallest ground size this set fits in (1 + max element, 0 for the empty set).
  int min_ground_size() const { return bits_ == 0 ? 0 : kMaxGroundSize - std::countl_zero(bits_); }

  friend constexpr bool operator==(SetMask, SetMask) = default;
  friend constexpr std::strong_ordering operator<=>(SetMask a, SetMask b) { return a.bits_ <=> b.bits_; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (ElementId e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    }
    s += '}';
    return s;
  }

private:
  static void check_element(ElementId e) {
    if (e < 0 || e >= kMaxGroundSize) throw std::domain_error("SetMask: element out of range");
  }

  std::uint64_t bits_ = 0;
};

}  // namespace tracelab
