// Copyright 2026 the hstheta authors
#ifndef HSTHETA_MONOMIAL_HPP
#define HSTHETA_MONOMIAL_HPP

#include <array>
#include <cstdint>

namespace hstheta {

// The ambient polynomial ring always has exactly four variables; the whole
// dimension bookkeeping of the library is specialized to that.
inline constexpr int kNumVars = 4;

using Exponents = std::array<int32_t, kNumVars>;
using Weights = std::array<int64_t, kNumVars>;

struct Monomial {
  Exponents e{0, 0, 0, 0};

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }

  int64_t total_degree() const {
    return int64_t(e[0]) + e[1] + e[2] + e[3];
  }
  int64_t weighted_degree(const Weights& w) const {
    return int64_t(e[0]) * w[0] + int64_t(e[1]) * w[1] + int64_t(e[2]) * w[2] +
           int64_t(e[3]) * w[3];
  }

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, int32_t exp = 1) {
    Monomial m;
    m.e[i] = exp;
    return m;
  }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

// b / a, assuming divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = b.e[i] - a.e[i];
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return r;
}

inline bool support_subset_of(const Monomial& m, const std::array<bool, kNumVars>& set) {
  for (int i = 0; i < kNumVars; ++i)
    if (m.e[i] > 0 && !set[i]) return false;
  return true;
}

// Weighted graded reverse lexicographic order: higher weighted degree first;
// on a tie the monomial whose last differing exponent is smaller wins.
// 1 is minimal and the order is multiplicative, for any positive weights.
inline int grevlex_cmp(const Monomial& a, const Monomial& b, const Weights& w) {
  int64_t da = a.weighted_degree(w), db = b.weighted_degree(w);
  if (da != db) return da < db ? -1 : 1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

inline bool grevlex_less(const Monomial& a, const Monomial& b, const Weights& w) {
  return grevlex_cmp(a, b, w) < 0;
}

}  // namespace hstheta

#endif
