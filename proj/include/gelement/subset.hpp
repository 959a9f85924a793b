#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gelement {

/// Largest ground set (or vertex set) the library accepts. Every subset is a
/// 32-bit mask and several routines build tables indexed by all 2^n subsets.
inline constexpr int kMaxElements = 16;

/// A subset of {0, ..., kMaxElements-1} stored as a bit mask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset range(int n) { return Subset(n >= 32 ? ~0U : ((1U << n) - 1U)); }
  static constexpr Subset single(int e) { return Subset(1U << e); }
  static Subset of(std::initializer_list<int> elements) { return from(std::span(elements.begin(), elements.size())); }
  static Subset from(std::span<const int> elements) {
    Subset s;
    for (int e : elements) s.bits_ |= 1U << e;
    return s;
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int e) const noexcept { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr int min() const noexcept { return std::countr_zero(bits_); }
  constexpr int max() const noexcept { return 31 - std::countl_zero(bits_); }

  constexpr Subset with(int e) const noexcept { return Subset(bits_ | (1U << e)); }
  constexpr Subset without(int e) const noexcept { return Subset(bits_ & ~(1U << e)); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) noexcept { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists, e.g. {0,1,5} < {0,2} < {1}.
inline bool lex_less(Subset a, Subset b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return ea < eb;
}

/// Calls f(sub) for every subset of `set`, including the empty set and `set` itself.
template <class F>
void for_each_subset(Subset set, F&& f) {
  std::uint32_t sub = set.bits();
  for (;;) {
    f(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & set.bits();
  }
}

}  // namespace gelement
