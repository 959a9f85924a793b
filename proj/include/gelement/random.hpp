#pragma once

#include <cstdint>
#include <random>

namespace gelement {

/// Seeded generator used for every randomized choice in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Ranges are mapped by rejection sampling on the raw 64-bit output
/// (not std::uniform_int_distribution, whose algorithm is unspecified), so a
/// seed reproduces the same draws on every conforming implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Uniform prime in [2^(bits-1), 2^bits), bits in [3, 62].
  std::uint64_t prime(unsigned bits);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gelement
