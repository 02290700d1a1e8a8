// Copyright 2026 the hstheta authors
#ifndef HSTHETA_DIGEST_HPP
#define HSTHETA_DIGEST_HPP

#include <cstdint>
#include <string>

namespace hstheta {

// FNV-1a over the canonical serialization of an object. Used for cache keys
// and ring fingerprints; not cryptographic.
inline uint64_t fnv1a(const std::string& data, uint64_t seed = 1469598103934665603ull) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string digest_hex(uint64_t h) {
  static const char* hexd = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[size_t(i)] = hexd[h & 0xF];
    h >>= 4;
  }
  return s;
}

inline std::string digest_of(const std::string& data) { return digest_hex(fnv1a(data)); }

}  // namespace hstheta

#endif
