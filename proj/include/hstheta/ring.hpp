// Copyright 2026 the hstheta authors
#ifndef HSTHETA_RING_HPP
#define HSTHETA_RING_HPP

#include <memory>
#include <sstream>
#include <string>

#include "hstheta/digest.hpp"
#include "hstheta/matrix.hpp"
#include "hstheta/polynomial.hpp"

namespace hstheta {

enum class Mode { S, R };

inline const char* mode_name(Mode m) { return m == Mode::S ? "S" : "R"; }

// Ambient data for all computations: S = F_p[x1..x4] with a weighted grading
// and the hypersurface equation f cutting out R = S/(f), a singular ring of
// Krull dimension 3. Immutable and freely shared.
struct RingContext {
  PolyRing base;
  Polynomial f;        // as given, canonical
  Polynomial f_monic;  // f scaled to lead coefficient 1; the (f)-reducer
  int64_t f_degree = 0;
  bool domain_asserted = true;  // irreducibility of f is an input assumption

  const PrimeField& fp() const { return base.fp; }
  const Weights& weights() const { return base.weights; }

  std::string fingerprint() const {
    std::ostringstream os;
    os << base.fp.p();
    for (int i = 0; i < kNumVars; ++i)
      os << "|" << base.vars[i] << ":" << base.weights[i];
    os << "|" << poly_to_string(f, base) << "|" << (domain_asserted ? "d" : "-");
    return digest_of(os.str());
  }
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(uint32_t p, const std::array<std::string, kNumVars>& vars,
                         const Weights& weights, const std::string& f_text,
                         bool domain_asserted = true) {
  auto ctx = std::make_shared<RingContext>();
  ctx->base.fp = PrimeField(p);
  ctx->base.vars = vars;
  for (int i = 0; i < kNumVars; ++i) {
    if (vars[i].empty()) throw ParseError("empty variable name");
    for (int j = 0; j < i; ++j)
      if (vars[i] == vars[j]) throw ParseError("duplicate variable name '" + vars[i] + "'");
    if (weights[i] < 1) throw ParseError("weights must be positive integers");
  }
  ctx->base.weights = weights;
  ctx->f = parse_polynomial(f_text, ctx->base);
  if (ctx->f.is_zero()) throw ParseError("hypersurface equation f must be nonzero");
  auto deg = ctx->f.homogeneous_degree(weights);
  if (!deg)
    throw ParseError("hypersurface equation is not weighted-homogeneous: " + f_text);
  if (*deg < 2) throw ParseError("hypersurface equation must have weighted degree >= 2");
  for (const Term& t : ctx->f.terms()) {
    if (t.mono.total_degree() < 2)
      throw ParseError(
          "hypersurface equation has a term outside the square of the maximal ideal; "
          "the quotient would be regular");
  }
  ctx->f_degree = *deg;
  ctx->f_monic = poly_scale(ctx->f, ctx->base.fp.inv(ctx->f.lead().coeff), ctx->base);
  ctx->domain_asserted = domain_asserted;
  return ctx;
}

// Canonical representative of a ring element of R = S/(f): full normal form
// with respect to {f}. A single-element basis is its own reduced Groebner
// basis, so this is the canonical form.
inline Polynomial reduce_mod_f(const Polynomial& a, const RingContext& ring) {
  const Monomial& lf = ring.f_monic.lead().mono;
  Polynomial rem;
  Polynomial work = a;
  while (!work.is_zero()) {
    const Term& lt = work.lead();
    if (divides(lf, lt.mono)) {
      Monomial q = quotient(lt.mono, lf);
      work = poly_sub(work, poly_mul_term(ring.f_monic, q, lt.coeff, ring.base), ring.base);
    } else {
      // move the irreducible lead term over to the remainder
      std::vector<Term> rt(rem.terms());
      rt.push_back(lt);
      rem = Polynomial(std::move(rt));
      std::vector<Term> wt(work.terms().begin() + 1, work.terms().end());
      work = Polynomial(std::move(wt));
    }
  }
  return rem;
}

inline PolyMatrix reduce_matrix_mod_f(const PolyMatrix& m, const RingContext& ring) {
  PolyMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = reduce_mod_f(m.at(i, j), ring);
  return r;
}

// Entries of a matrix of canonical R-representatives are already f-reduced
// polynomials; lifting to S is a reinterpretation. Reducing first makes the
// operation idempotent.
inline PolyMatrix lift_matrix(const PolyMatrix& m, const RingContext& ring) {
  return reduce_matrix_mod_f(m, ring);
}

}  // namespace hstheta

#endif
