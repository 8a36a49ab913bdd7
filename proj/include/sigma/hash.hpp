#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace sigma {

// 64-bit FNV-1a. Stable across platforms; used for cache keys and checksums.
inline std::uint64_t fnv1a64(std::span<const unsigned char> bytes,
                             std::uint64_t seed = 14695981039346656037ULL) noexcept {
  std::uint64_t h = seed;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string to_hex(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

}  // namespace sigma
