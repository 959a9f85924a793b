#include "gelement/random.hpp"

#include <limits>
#include <stdexcept>

#include "gelement/linalg.hpp"

namespace gelement {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

std::uint64_t Rng::prime(unsigned bits) {
  if (bits < 3 || bits > 62) throw std::invalid_argument("Rng::prime: bits must be in [3, 62]");
  const std::int64_t lo = std::int64_t{1} << (bits - 1);
  const std::int64_t hi = (std::int64_t{1} << bits) - 1;
  for (;;) {
    const auto candidate = static_cast<std::uint64_t>(uniform(lo, hi)) | 1U;
    if (linalg::is_prime(candidate)) return candidate;
  }
}

}  // namespace gelement
