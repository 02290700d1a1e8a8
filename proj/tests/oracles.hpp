// Copyright 2026 the hstheta authors
//
// Independent oracles for the test suites. Everything here recomputes values
// by a route different from the implementation under test: plain cofactor
// recursion for determinants, a hand-rolled division loop for confluence
// re-checks, degree-by-degree counting for dimension growth.
#ifndef HSTHETA_TESTS_ORACLES_HPP
#define HSTHETA_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "hstheta/groebner.hpp"

namespace oracles {

using namespace hstheta;

// First-row cofactor expansion, no memoization, no pivot heuristics.
inline Polynomial naive_det(const PolyMatrix& m, const PolyRing& ring) {
  int n = m.rows();
  if (n == 0) return Polynomial::constant(1, ring);
  if (n == 1) return m.at(0, 0);
  Polynomial acc;
  for (int j = 0; j < n; ++j) {
    PolyMatrix sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Polynomial term = poly_mul(m.at(0, j), naive_det(sub, ring), ring);
    if (j % 2 == 1) term = poly_neg(term, ring);
    acc = poly_add(acc, term, ring);
  }
  return acc;
}

// Straight-line reduction loop, deliberately not sharing code with the
// engine's reducer: scans basis elements in order and cancels lead terms
// until stuck.
inline VecPoly naive_reduce(VecPoly v, const std::vector<VecPoly>& basis,
                            const PolyRing& ring) {
  bool progress = true;
  while (progress) {
    progress = false;
    VecLead lt = vec_lead(v);
    if (lt.comp < 0) break;
    for (const VecPoly& g : basis) {
      VecLead lg = vec_lead(g);
      if (lg.comp != lt.comp) continue;
      if (!divides(lg.mono, lt.mono)) continue;
      uint32_t s = ring.fp.div(lt.coeff, lg.coeff);
      v = vec_sub(v, vec_mul_term(g, quotient(lt.mono, lg.mono), s, ring), ring);
      progress = true;
      break;
    }
  }
  return v;
}

// Lead-term-only reduction to zero test: returns true iff v reduces to 0.
inline bool naive_reduces_to_zero(const VecPoly& v, const std::vector<VecPoly>& basis,
                                  const PolyRing& ring) {
  VecPoly work = v;
  while (true) {
    VecLead lt = vec_lead(work);
    if (lt.comp < 0) return true;
    bool hit = false;
    for (const VecPoly& g : basis) {
      VecLead lg = vec_lead(g);
      if (lg.comp != lt.comp || !divides(lg.mono, lt.mono)) continue;
      uint32_t s = ring.fp.div(lt.coeff, lg.coeff);
      work = vec_sub(work, vec_mul_term(g, quotient(lt.mono, lg.mono), s, ring), ring);
      hit = true;
      break;
    }
    if (!hit) return false;
  }
}

// Counts standard monomials of each total degree (all weights must be 1) and
// fits the growth: the Krull dimension is the number of finite differences
// needed to flatten the tail to zero.
inline int growth_dimension(const std::vector<Monomial>& gens, int max_degree = 12) {
  std::vector<int64_t> counts;
  for (int d = 0; d <= max_degree; ++d) {
    int64_t c = 0;
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b)
        for (int e = 0; a + b + e <= d; ++e) {
          Monomial m;
          m.e = {a, b, e, d - a - b - e};
          bool standard = true;
          for (const Monomial& g : gens)
            if (divides(g, m)) {
              standard = false;
              break;
            }
          if (standard) ++c;
        }
    counts.push_back(c);
  }
  for (int k = 0; k <= 4; ++k) {
    bool tail_zero = true;
    for (size_t i = counts.size() - 4; i < counts.size(); ++i)
      if (counts[i] != 0) tail_zero = false;
    if (tail_zero) return k == 0 ? (counts[4] == 0 ? -1 : 0) : k;
    std::vector<int64_t> next;
    for (size_t i = 1; i < counts.size(); ++i) next.push_back(counts[i] - counts[i - 1]);
    counts = std::move(next);
  }
  return 4;
}

struct PolyGen {
  std::mt19937_64 rng;
  const PolyRing& ring;

  explicit PolyGen(const PolyRing& r, uint64_t seed = 0x5eed) : rng(seed), ring(r) {}

  Polynomial homogeneous(int64_t degree) {
    std::vector<Term> terms;
    std::uniform_int_distribution<uint32_t> coeff(0, ring.fp.p() - 1);
    detail::enumerate_weighted_degree(degree, ring.weights, [&](const Monomial& m) {
      uint32_t c = coeff(rng);
      if (c) terms.push_back(Term{m, c});
    });
    return canonicalize(std::move(terms), ring);
  }

  Polynomial any(int64_t max_degree) {
    std::uniform_int_distribution<int64_t> deg(0, max_degree);
    Polynomial p = homogeneous(deg(rng));
    if (std::uniform_int_distribution<int>(0, 1)(rng))
      p = poly_add(p, homogeneous(deg(rng)), ring);
    return p;
  }

  Monomial monomial(int max_exp = 3) {
    std::uniform_int_distribution<int32_t> e(0, max_exp);
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[size_t(i)] = e(rng);
    return m;
  }
};

}  // namespace oracles

#endif
