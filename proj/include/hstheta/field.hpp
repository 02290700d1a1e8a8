// Copyright 2026 the hstheta authors
#ifndef HSTHETA_FIELD_HPP
#define HSTHETA_FIELD_HPP

#include <cstdint>
#include <string>

#include "hstheta/errors.hpp"

namespace hstheta {

// Arithmetic in F_p for an odd prime p < 2^31. Elements are stored as least
// non-negative residues (plain uint32_t); all reductions go through this
// class so that every coefficient in the system is exact.
class PrimeField {
 public:
  PrimeField() : p_(0) {}
  explicit PrimeField(uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p)) {
      throw ParseError("field characteristic must be a prime >= 3, got " +
                       std::to_string(p));
    }
  }

  uint32_t p() const { return p_; }

  uint32_t reduce_i64(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    uint32_t base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const {
    if (a % p_ == 0) throw EngineError("division by zero in F_p");
    return pow(a, p_ - 2);
  }
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

}  // namespace hstheta

#endif
