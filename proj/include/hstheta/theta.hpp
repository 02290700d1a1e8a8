// Copyright 2026 the hstheta authors
#ifndef HSTHETA_THETA_HPP
#define HSTHETA_THETA_HPP

#include <map>
#include <string>

#include "hstheta/hypersurface.hpp"
#include "hstheta/resolve.hpp"

namespace hstheta {

// theta(M, N) = len Tor_{2e+2} - len Tor_{2e+1} with e = 2, the least e with
// 2e >= dim R = 3. The verification window extends the computed lengths to
// index 6 + window so stabilization (the period-2 tail) is witnessed, not
// assumed.
struct ThetaReport {
  std::string left;
  std::string right;
  std::map<int, uint64_t> tor_lengths;  // indices 4 .. 6 + window
  int64_t theta = 0;
  bool stabilized = false;
  int e_used = 2;
};

struct ThetaOptions {
  int window = 2;        // extra indices past 2e+2
  int step_ceiling = 10;
  GBOptions gb;
};

// Pairing eligibility: M must have finite projective dimension locally on the
// punctured spectrum. An isolated singularity covers every module; otherwise
// the Fitting-ideal test on M itself must pass.
inline void ensure_theta_eligible(const FPModule& m, const ThetaOptions& opts = ThetaOptions{}) {
  SingularityProfile prof = singularity_profile(m.ring, opts.gb);
  if (prof.isolated) return;
  if (is_zero_module(m, opts.gb)) return;
  LocallyFreeVerdict lf = is_locally_free_on_punctured(m, opts.gb);
  if (!lf.locally_free)
    throw IneligibleError(
        "theta pairing ineligible: the ring is not an isolated singularity and the "
        "left module is not locally free on the punctured spectrum");
}

inline ThetaReport theta_pairing(const FPModule& m, const FPModule& n,
                                 const std::string& left_name = "left",
                                 const std::string& right_name = "right",
                                 const ThetaOptions& opts = ThetaOptions{}) {
  if (m.mode != Mode::R || n.mode != Mode::R)
    throw IneligibleError("theta expects R-modules");
  if (opts.window < 2)
    throw ParseError("theta verification window must be at least 2");
  ensure_theta_eligible(m, opts);

  int hi = 6 + opts.window;
  ResolutionData res =
      resolve_over_R(m, hi + 1, std::max(opts.step_ceiling, hi + 1), opts.gb);
  ThetaReport rep;
  rep.left = left_name;
  rep.right = right_name;
  for (int i = 4; i <= hi; ++i) {
    HomologyReport h = tor_from_resolution(res, n, i, opts.gb);
    if (!h.len.finite)
      throw IneligibleError("Tor_" + std::to_string(i) +
                            " has infinite length; theta undefined for this pair");
    rep.tor_lengths[i] = h.len.value;
  }
  rep.theta = static_cast<int64_t>(rep.tor_lengths[6]) -
              static_cast<int64_t>(rep.tor_lengths[5]);
  rep.stabilized = true;
  for (int i = 5; i + 2 <= hi; ++i)
    if (rep.tor_lengths[i] != rep.tor_lengths[i + 2]) rep.stabilized = false;
  if (!rep.stabilized)
    throw IneligibleError(
        "Tor lengths did not stabilize with period 2 inside the window; "
        "ineligible input or engine bug");
  return rep;
}

// Prop 2.4(1) as an executable identity: on a finite-length pair the theta
// value and the Serre intersection number over S must agree exactly.
struct ThetaChiVerdict {
  int64_t theta = 0;
  int64_t chi = 0;
  bool equal = false;
};

inline ThetaChiVerdict theta_equals_chi_check(const FPModule& m, const FPModule& n,
                                              const ThetaOptions& opts = ThetaOptions{}) {
  ThetaChiVerdict v;
  v.chi = serre_chi_S(m, n, opts.gb);  // checks the finite-length precondition
  v.theta = theta_pairing(m, n, "left", "right", opts).theta;
  v.equal = v.theta == v.chi;
  if (!v.equal)
    throw ViolationError("theta = " + std::to_string(v.theta) +
                         " differs from chi = " + std::to_string(v.chi) +
                         " on a finite-length pair");
  return v;
}

// ---------------------------------------------------------------------------
// Short exact sequences and bi-additivity.
// ---------------------------------------------------------------------------

struct ShortExactSequence {
  ModuleMap inj;   // A -> B
  ModuleMap surj;  // B -> C
};

// Injectivity, surjectivity and exactness at the middle, all through
// membership tests over R.
inline void verify_ses(const ShortExactSequence& s, const GBOptions& opts = GBOptions{}) {
  const FPModule& a = s.inj.source;
  const FPModule& b = s.inj.target;
  const FPModule& c = s.surj.target;
  const PolyRing& base = a.ring->base;
  if (!map_well_defined(s.inj, opts) || !map_well_defined(s.surj, opts))
    throw IneligibleError("short exact sequence maps are not well-defined");

  // surjectivity: every generator of C is reached
  {
    std::vector<VecPoly> span = matrix_columns(s.surj.matrix);
    for (const VecPoly& col : matrix_columns(c.presentation)) span.push_back(col);
    GroebnerBasis gb = buchberger(span, c.ring, c.ngens(), c.gen_degrees, c.mode, opts);
    for (int k = 0; k < c.ngens(); ++k) {
      VecPoly e = vec_zero(c.ngens());
      e[size_t(k)] = Polynomial::constant(1, base);
      if (!in_submodule(e, gb))
        throw IneligibleError("sequence is not exact: the second map is not onto");
    }
  }
  // injectivity: preimage of the relations of B lies in the relations of A
  {
    std::vector<VecPoly> ker = preimage_gens(s.inj.matrix, a.gen_degrees, b.presentation,
                                             b.gen_degrees, a.ring, a.mode, opts);
    GroebnerBasis rel_a = relations_gb(a, opts);
    for (const VecPoly& v : ker)
      if (!in_submodule(v, rel_a))
        throw IneligibleError("sequence is not exact: the first map has a kernel");
  }
  // composite is zero
  {
    GroebnerBasis rel_c = relations_gb(c, opts);
    PolyMatrix comp = mat_mul(s.surj.matrix, s.inj.matrix, base);
    for (int j = 0; j < comp.cols(); ++j)
      if (!in_submodule(comp.column(j), rel_c))
        throw IneligibleError("sequence is not exact: the composite map is nonzero");
  }
  // ker(surj) inside im(inj)
  {
    std::vector<VecPoly> ker = preimage_gens(s.surj.matrix, b.gen_degrees, c.presentation,
                                             c.gen_degrees, b.ring, b.mode, opts);
    std::vector<VecPoly> span = matrix_columns(s.inj.matrix);
    for (const VecPoly& col : matrix_columns(b.presentation)) span.push_back(col);
    GroebnerBasis gb = buchberger(span, b.ring, b.ngens(), b.gen_degrees, b.mode, opts);
    for (const VecPoly& v : ker)
      if (!in_submodule(v, gb))
        throw IneligibleError("sequence is not exact at the middle term");
  }
}

struct AdditivityVerdict {
  int64_t theta_sub = 0;
  int64_t theta_mid = 0;
  int64_t theta_quot = 0;
  bool additive = false;
};

inline AdditivityVerdict theta_additivity_check(const FPModule& m,
                                                const ShortExactSequence& s,
                                                const ThetaOptions& opts = ThetaOptions{}) {
  verify_ses(s, opts.gb);
  AdditivityVerdict v;
  v.theta_sub = theta_pairing(m, s.inj.source, "M", "sub", opts).theta;
  v.theta_mid = theta_pairing(m, s.inj.target, "M", "mid", opts).theta;
  v.theta_quot = theta_pairing(m, s.surj.target, "M", "quot", opts).theta;
  v.additive = v.theta_mid == v.theta_sub + v.theta_quot;
  if (!v.additive)
    throw ViolationError("theta is not additive on a verified short exact sequence: " +
                         std::to_string(v.theta_mid) + " != " +
                         std::to_string(v.theta_sub) + " + " +
                         std::to_string(v.theta_quot));
  return v;
}

// Prop 3.1 instance: the class of R/(g) is principal, so theta(M, R/(g)) = 0.
inline int64_t theta_principal_vanishing(const FPModule& m, const Polynomial& g,
                                         const ThetaOptions& opts = ThetaOptions{}) {
  if (!m.ring->domain_asserted)
    throw IneligibleError("principal-class vanishing needs the domain assertion");
  if (reduce_mod_f(g, *m.ring).is_zero())
    throw IneligibleError("element is zero in R; not a nonzerodivisor");
  FPModule quot = cyclic_quotient(m.ring, Mode::R, {reduce_mod_f(g, *m.ring)});
  int64_t value = theta_pairing(m, quot, "M", "R/(g)", opts).theta;
  if (value != 0)
    throw ViolationError("theta(M, R/(g)) = " + std::to_string(value) +
                         " on a principal class; expected 0");
  return value;
}

// The four-term sequence of the rigidity proof, with Ext^1(M, R) = 0 for MCM
// M, collapses to len Ext^1(M, N) = len Tor_1(M_1, N) where M_1 is the
// cokernel of the transposed second differential.
struct BridgeVerdict {
  uint64_t ext1_len = 0;
  uint64_t tor1_len = 0;
  bool equal = false;
};

inline FPModule dual_syzygy_cokernel(const FPModule& m, const ThetaOptions& opts = ThetaOptions{}) {
  if (!is_mcm(m, opts.gb))
    throw IneligibleError("dual-syzygy module needs a maximal Cohen-Macaulay input");
  ResolutionData res = resolve_over_R(m, 2, opts.step_ceiling, opts.gb);
  if (res.length() < 2)
    throw IneligibleError("module is free or has finite projective dimension; "
                          "no stabilized differential pair");
  const PolyMatrix& d2 = res.diffs[1];
  std::vector<int64_t> degs;
  for (int64_t t : res.twists[2]) degs.push_back(-t);
  PolyMatrix pres = transpose(d2);
  if (m.mode == Mode::R) pres = reduce_matrix_mod_f(pres, *m.ring);
  return make_module(m.ring, m.mode, degs, pres);
}

inline BridgeVerdict ext1_tor1_bridge_check(const FPModule& m, const FPModule& n,
                                            const ThetaOptions& opts = ThetaOptions{}) {
  FPModule mp = minimal_presentation(m, opts.gb);
  if (mp.nrels() != 0 && mp.ngens() != mp.nrels())
    throw IneligibleError("bridge check needs an MCM module without free summands");
  FPModule m1 = dual_syzygy_cokernel(m, opts);
  HomologyReport ext1 = ext_module(m, n, 1, opts.step_ceiling, opts.gb);
  HomologyReport tor1 = tor_module(m1, n, 1, opts.step_ceiling, opts.gb);
  if (!ext1.len.finite || !tor1.len.finite)
    throw IneligibleError("bridge check needs finite lengths on both sides");
  BridgeVerdict v{ext1.len.value, tor1.len.value, ext1.len.value == tor1.len.value};
  if (!v.equal)
    throw ViolationError("len Ext^1(M,N) = " + std::to_string(v.ext1_len) +
                         " differs from len Tor_1(M_1,N) = " + std::to_string(v.tor1_len));
  return v;
}

}  // namespace hstheta

#endif
