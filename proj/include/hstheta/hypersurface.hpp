// Copyright 2026 the hstheta authors
#ifndef HSTHETA_HYPERSURFACE_HPP
#define HSTHETA_HYPERSURFACE_HPP

#include <string>
#include <vector>

#include "hstheta/groebner.hpp"

namespace hstheta {

struct SingularityProfile {
  bool isolated = false;
  int jacobian_dim = 0;
  std::vector<std::string> warnings;  // characteristic-p derivative caveats
};

inline Polynomial partial_derivative(const Polynomial& p, int var, const PolyRing& ring) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    int32_t e = t.mono.e[size_t(var)];
    if (e == 0) continue;
    uint32_t c = ring.fp.mul(t.coeff, ring.fp.reduce_i64(e));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.e[size_t(var)] -= 1;
    out.push_back(Term{m, c});
  }
  return canonicalize(std::move(out), ring);
}

// The singular locus of R = S/(f) through the Jacobian criterion: R has an
// isolated singularity iff (f, all partials) is zero-dimensional. Formal
// derivatives in characteristic p can drop terms whose exponent p divides;
// such rings get a warning, not a guess.
inline SingularityProfile singularity_profile(const RingPtr& ring,
                                              const GBOptions& opts = GBOptions{}) {
  SingularityProfile prof;
  for (const Term& t : ring->f.terms()) {
    for (int v = 0; v < kNumVars; ++v) {
      int32_t e = t.mono.e[size_t(v)];
      if (e > 0 && e % static_cast<int32_t>(ring->fp().p()) == 0) {
        prof.warnings.push_back("exponent " + std::to_string(e) + " of variable " +
                                ring->base.vars[size_t(v)] +
                                " is divisible by p; the Jacobian criterion may misreport");
      }
    }
  }
  std::vector<VecPoly> gens;
  gens.push_back(VecPoly{ring->f});
  for (int v = 0; v < kNumVars; ++v)
    gens.push_back(VecPoly{partial_derivative(ring->f, v, ring->base)});
  GroebnerBasis gb = buchberger(gens, ring, 1, {0}, Mode::S, opts);
  prof.jacobian_dim = lt_dimension(gb);
  if (prof.jacobian_dim < 0) prof.jacobian_dim = 0;  // empty singular locus
  prof.isolated = prof.jacobian_dim <= 0;
  return prof;
}

}  // namespace hstheta

#endif
