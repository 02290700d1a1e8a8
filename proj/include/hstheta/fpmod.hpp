// Copyright 2026 the hstheta authors
#ifndef HSTHETA_FPMOD_HPP
#define HSTHETA_FPMOD_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hstheta/groebner.hpp"
#include "hstheta/matrix.hpp"

namespace hstheta {

// Finitely presented graded module over S or R: the cokernel of the
// presentation matrix, whose rows index generators and whose columns are the
// relations. The zero module has no generators. Everything the theorem
// checkers consume (Hom, Ext, Tor, duals, Fitting ideals, ranks, lengths) is
// derived from this one representation.
struct FPModule {
  RingPtr ring;
  Mode mode = Mode::R;
  std::vector<int64_t> gen_degrees;
  PolyMatrix presentation;

  int ngens() const { return static_cast<int>(gen_degrees.size()); }
  int nrels() const { return presentation.cols(); }
};

// Degrees of the columns of a graded matrix, given the row twists. Throws
// when an entry breaks homogeneity of its column.
inline std::vector<int64_t> column_degrees(const PolyMatrix& m,
                                           const std::vector<int64_t>& row_twists,
                                           const PolyRing& ring) {
  std::vector<int64_t> degs(size_t(m.cols()), 0);
  for (int j = 0; j < m.cols(); ++j) {
    bool seen = false;
    for (int i = 0; i < m.rows(); ++i) {
      const Polynomial& e = m.at(i, j);
      if (e.is_zero()) continue;
      auto d = e.homogeneous_degree(ring.weights);
      if (!d)
        throw ParseError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not homogeneous: " + poly_to_string(e, ring));
      int64_t full = *d + row_twists[size_t(i)];
      if (seen && full != degs[size_t(j)])
        throw ParseError("matrix column " + std::to_string(j) +
                         " mixes degrees; entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") breaks homogeneity");
      degs[size_t(j)] = full;
      seen = true;
    }
  }
  return degs;
}

inline FPModule make_module(RingPtr ring, Mode mode, std::vector<int64_t> gen_degrees,
                            PolyMatrix presentation) {
  if (presentation.rows() != static_cast<int>(gen_degrees.size()))
    throw ParseError("presentation row count differs from generator count");
  column_degrees(presentation, gen_degrees, ring->base);  // homogeneity check
  return FPModule{std::move(ring), mode, std::move(gen_degrees), std::move(presentation)};
}

inline FPModule free_module(RingPtr ring, Mode mode, std::vector<int64_t> degrees) {
  PolyMatrix none(static_cast<int>(degrees.size()), 0);
  return FPModule{std::move(ring), mode, std::move(degrees), std::move(none)};
}

inline FPModule zero_module(RingPtr ring, Mode mode) {
  return free_module(std::move(ring), mode, {});
}

// R/(g_1..g_k) as a cyclic module.
inline FPModule cyclic_quotient(RingPtr ring, Mode mode,
                                const std::vector<Polynomial>& gens) {
  PolyMatrix rels(1, static_cast<int>(gens.size()));
  for (int j = 0; j < rels.cols(); ++j) rels.at(0, j) = gens[size_t(j)];
  return make_module(std::move(ring), mode, {0}, std::move(rels));
}

inline FPModule direct_sum(const FPModule& a, const FPModule& b) {
  if (a.ring->fingerprint() != b.ring->fingerprint() || a.mode != b.mode)
    throw IneligibleError("direct sum of modules over different rings");
  std::vector<int64_t> degs = a.gen_degrees;
  degs.insert(degs.end(), b.gen_degrees.begin(), b.gen_degrees.end());
  PolyMatrix p(a.ngens() + b.ngens(), a.nrels() + b.nrels());
  for (int i = 0; i < a.ngens(); ++i)
    for (int j = 0; j < a.nrels(); ++j) p.at(i, j) = a.presentation.at(i, j);
  for (int i = 0; i < b.ngens(); ++i)
    for (int j = 0; j < b.nrels(); ++j)
      p.at(a.ngens() + i, a.nrels() + j) = b.presentation.at(i, j);
  return FPModule{a.ring, a.mode, std::move(degs), std::move(p)};
}

inline std::vector<VecPoly> matrix_columns(const PolyMatrix& m) {
  std::vector<VecPoly> cols;
  cols.reserve(size_t(m.cols()));
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

// Groebner basis of the relation submodule, with the quotient relations
// appended in mode R. Normal forms against it are canonical representatives
// of elements of the module.
inline GroebnerBasis relations_gb(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  return buchberger(matrix_columns(m.presentation), m.ring, m.ngens(), m.gen_degrees,
                    m.mode, opts);
}

inline Polynomial reduce_entry(const Polynomial& p, const FPModule& m) {
  return m.mode == Mode::R ? reduce_mod_f(p, *m.ring) : p;
}

// ---------------------------------------------------------------------------
// Minimal presentations. Unit entries are pivoted away (first unit in
// row-major scan), zero relation columns dropped, and the surviving columns
// filtered to a minimal generating set of the relation module by the graded
// Nakayama argument: ascending degree, keep a column iff it is outside the
// span of the columns kept before it.
// ---------------------------------------------------------------------------

inline FPModule minimal_presentation(const FPModule& m_in, const GBOptions& opts = GBOptions{}) {
  const PolyRing& base = m_in.ring->base;
  std::vector<int64_t> degs = m_in.gen_degrees;
  PolyMatrix p = m_in.mode == Mode::R ? reduce_matrix_mod_f(m_in.presentation, *m_in.ring)
                                      : m_in.presentation;

  auto drop_zero_columns = [&]() {
    std::vector<int> keep;
    for (int j = 0; j < p.cols(); ++j) {
      bool zero = true;
      for (int i = 0; i < p.rows(); ++i)
        if (!p.at(i, j).is_zero()) {
          zero = false;
          break;
        }
      if (!zero) keep.push_back(j);
    }
    if (static_cast<int>(keep.size()) == p.cols()) return;
    PolyMatrix q(p.rows(), static_cast<int>(keep.size()));
    for (int j = 0; j < q.cols(); ++j)
      for (int i = 0; i < p.rows(); ++i) q.at(i, j) = p.at(i, keep[size_t(j)]);
    p = std::move(q);
  };

  // pivot loop
  while (true) {
    drop_zero_columns();
    int pi = -1, pj = -1;
    for (int i = 0; i < p.rows() && pi < 0; ++i)
      for (int j = 0; j < p.cols(); ++j)
        if (p.at(i, j).is_unit()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    uint32_t cinv = base.fp.inv(p.at(pi, pj).lead().coeff);
    // clear the pivot row across other columns
    for (int j = 0; j < p.cols(); ++j) {
      if (j == pj || p.at(pi, j).is_zero()) continue;
      Polynomial q = poly_scale(p.at(pi, j), cinv, base);
      for (int i = 0; i < p.rows(); ++i)
        p.at(i, j) = poly_sub(p.at(i, j), poly_mul(q, p.at(i, pj), base), base);
    }
    // clear the pivot column across other rows (substituting the generator out)
    for (int i = 0; i < p.rows(); ++i) {
      if (i == pi || p.at(i, pj).is_zero()) continue;
      Polynomial q = poly_scale(p.at(i, pj), cinv, base);
      for (int j = 0; j < p.cols(); ++j)
        p.at(i, j) = poly_sub(p.at(i, j), poly_mul(q, p.at(pi, j), base), base);
    }
    // delete generator pi and relation pj
    PolyMatrix q(p.rows() - 1, p.cols() - 1);
    for (int i = 0, ii = 0; i < p.rows(); ++i) {
      if (i == pi) continue;
      for (int j = 0, jj = 0; j < p.cols(); ++j) {
        if (j == pj) continue;
        q.at(ii, jj) = m_in.mode == Mode::R ? reduce_mod_f(p.at(i, j), *m_in.ring)
                                            : p.at(i, j);
        ++jj;
      }
      ++ii;
    }
    degs.erase(degs.begin() + pi);
    p = std::move(q);
  }
  drop_zero_columns();

  // minimal generating set of the relation module
  std::vector<int64_t> coldegs = column_degrees(p, degs, base);
  std::vector<int> order(size_t(p.cols()));
  for (int j = 0; j < p.cols(); ++j) order[size_t(j)] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return coldegs[size_t(a)] < coldegs[size_t(b)]; });
  std::vector<VecPoly> kept;
  std::vector<int64_t> kept_degs;
  for (int j : order) {
    VecPoly col = p.column(j);
    GroebnerBasis gb = buchberger(kept, m_in.ring, p.rows(), degs, m_in.mode, opts);
    if (!in_submodule(col, gb)) {
      kept.push_back(std::move(col));
      kept_degs.push_back(coldegs[size_t(j)]);
    }
  }
  PolyMatrix final_p = PolyMatrix::from_columns(p.rows(), kept);
  return FPModule{m_in.ring, m_in.mode, std::move(degs), std::move(final_p)};
}

struct FreeVerdict {
  bool free = false;
  int rank = 0;
};

inline FreeVerdict is_free(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  FPModule mp = minimal_presentation(m, opts);
  return FreeVerdict{mp.nrels() == 0, mp.ngens()};
}

inline bool is_zero_module(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  return minimal_presentation(m, opts).ngens() == 0;
}

// ---------------------------------------------------------------------------
// Length, dimension, annihilator.
// ---------------------------------------------------------------------------

inline Length length(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  if (m.ngens() == 0) return Length::of(0);
  return std_monomial_count(relations_gb(m, opts));
}

struct Ideal {
  RingPtr ring;
  Mode mode = Mode::R;
  std::vector<Polynomial> gens;

  bool is_unit_ideal() const {
    for (const Polynomial& g : gens)
      if (g.is_unit()) return true;
    return false;
  }
};

inline Ideal normalize_ideal(Ideal ideal) {
  const PolyRing& base = ideal.ring->base;
  std::vector<Polynomial> out;
  for (Polynomial g : ideal.gens) {
    if (ideal.mode == Mode::R) g = reduce_mod_f(g, *ideal.ring);
    if (g.is_zero()) continue;
    g = poly_scale(g, base.fp.inv(g.lead().coeff), base);
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return grevlex_less(a.lead().mono, b.lead().mono, base.weights);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  ideal.gens = std::move(out);
  return ideal;
}

inline GroebnerBasis ideal_gb(const Ideal& ideal, const GBOptions& opts = GBOptions{}) {
  std::vector<VecPoly> gens;
  for (const Polynomial& g : ideal.gens) gens.push_back(VecPoly{g});
  return buchberger(std::move(gens), ideal.ring, 1, {0}, ideal.mode, opts);
}

inline bool ideal_contains(const Ideal& ideal, const Polynomial& p,
                           const GBOptions& opts = GBOptions{}) {
  return normal_form_poly(p, ideal_gb(ideal, opts)).is_zero();
}

namespace detail {

inline std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& a,
                                                  const std::vector<Polynomial>& b,
                                                  RingPtr ring, Mode mode,
                                                  const GBOptions& opts) {
  std::vector<VecPoly> gens;
  std::vector<int64_t> degs;
  for (const Polynomial& g : a) {
    gens.push_back(VecPoly{g});
    degs.push_back(g.is_zero() ? 0 : *g.homogeneous_degree(ring->base.weights));
  }
  for (const Polynomial& g : b) {
    gens.push_back(VecPoly{g});
    degs.push_back(g.is_zero() ? 0 : *g.homogeneous_degree(ring->base.weights));
  }
  SyzygyResult syz = syzygies(gens, ring, 1, {0}, mode, opts);
  std::vector<Polynomial> out;
  for (const VecPoly& s : syz.gens) {
    Polynomial h;
    for (size_t k = 0; k < a.size(); ++k)
      h = poly_add(h, poly_mul(s[k], a[k], ring->base), ring->base);
    if (mode == Mode::R) h = reduce_mod_f(h, *ring);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace detail

// ann(M) as the intersection over generators of the colon ideals
// (relations : gen_i); verified downstream by ann . gens lying in the
// relation span.
inline Ideal annihilator(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  if (m.ngens() == 0)
    return normalize_ideal(
        Ideal{m.ring, m.mode, {Polynomial::constant(1, m.ring->base)}});
  std::vector<Polynomial> acc;
  bool first = true;
  for (int i = 0; i < m.ngens(); ++i) {
    // colon (relation span : e_i): first coordinates of the syzygies of
    // [e_i | relations]
    std::vector<VecPoly> gens;
    std::vector<int64_t> degs;
    VecPoly ei = vec_zero(m.ngens());
    ei[size_t(i)] = Polynomial::constant(1, m.ring->base);
    gens.push_back(ei);
    degs.push_back(m.gen_degrees[size_t(i)]);
    std::vector<int64_t> coldegs =
        column_degrees(m.presentation, m.gen_degrees, m.ring->base);
    for (int j = 0; j < m.nrels(); ++j) {
      gens.push_back(m.presentation.column(j));
      degs.push_back(coldegs[size_t(j)]);
    }
    SyzygyResult syz = syzygies(gens, m.ring, m.ngens(), m.gen_degrees, m.mode, opts);
    std::vector<Polynomial> colon;
    for (const VecPoly& s : syz.gens) {
      Polynomial c = m.mode == Mode::R ? reduce_mod_f(s[0], *m.ring) : s[0];
      if (!c.is_zero()) colon.push_back(std::move(c));
    }
    if (first) {
      acc = std::move(colon);
      first = false;
    } else {
      acc = detail::ideal_intersection(acc, colon, m.ring, m.mode, opts);
    }
    if (acc.empty()) break;  // zero annihilator already
  }
  return normalize_ideal(Ideal{m.ring, m.mode, std::move(acc)});
}

// dim Supp(M) over R, computed from the lead terms of ann(M) + (f) over S.
// Returns -1 for the zero module.
inline int krull_dim(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  if (m.mode != Mode::R) throw IneligibleError("krull_dim expects an R-module");
  Ideal ann = annihilator(m, opts);
  std::vector<VecPoly> gens;
  for (const Polynomial& g : ann.gens) gens.push_back(VecPoly{g});
  gens.push_back(VecPoly{m.ring->f_monic});
  GroebnerBasis gb = buchberger(std::move(gens), m.ring, 1, {0}, Mode::S, opts);
  return lt_dimension(gb);
}

// ---------------------------------------------------------------------------
// Rank, Fitting ideals, local freeness off the closed point.
// ---------------------------------------------------------------------------

inline int generic_rank(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  (void)opts;
  if (m.mode != Mode::R) throw IneligibleError("generic_rank expects an R-module");
  if (!m.ring->domain_asserted)
    throw IneligibleError("generic_rank needs the domain assertion on the ring");
  if (m.ngens() == 0) return 0;
  PolyMatrix p = reduce_matrix_mod_f(m.presentation, *m.ring);
  int maxt = std::min(p.rows(), p.cols());
  for (int t = maxt; t >= 1; --t) {
    std::vector<std::vector<int>> rsets, csets;
    detail::index_subsets(p.rows(), t, rsets);
    detail::index_subsets(p.cols(), t, csets);
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        Polynomial d = detail::det_expand(p, rs, cs, m.ring->base);
        if (!reduce_mod_f(d, *m.ring).is_zero()) return m.ngens() - t;
      }
  }
  return m.ngens();
}

// Fitt_j(M): ideal of (ngens - j)-minors of the presentation; the unit ideal
// once ngens - j <= 0 and the zero ideal when the minors outrun the matrix.
inline Ideal fitting_ideal(const FPModule& m, int j, const GBOptions& opts = GBOptions{}) {
  (void)opts;
  if (j < 0) throw ParseError("fitting index must be >= 0");
  int t = m.ngens() - j;
  if (t <= 0)
    return normalize_ideal(Ideal{m.ring, m.mode, {Polynomial::constant(1, m.ring->base)}});
  if (t > std::min(m.presentation.rows(), m.presentation.cols()))
    return Ideal{m.ring, m.mode, {}};
  std::vector<Polynomial> gens = minors(m.presentation, t, m.ring->base);
  return normalize_ideal(Ideal{m.ring, m.mode, std::move(gens)});
}

struct LocallyFreeVerdict {
  bool locally_free = false;
  int rank = 0;
};

// Fitting characterization over the domain R: M is locally free of rank r on
// the punctured spectrum iff Fitt_{r-1}(M) vanishes in R and V(Fitt_r(M)) is
// contained in the closed point.
inline LocallyFreeVerdict is_locally_free_on_punctured(const FPModule& m,
                                                       const GBOptions& opts = GBOptions{}) {
  if (m.mode != Mode::R) throw IneligibleError("locally-free test expects an R-module");
  if (!m.ring->domain_asserted)
    throw IneligibleError("locally-free test needs the domain assertion on the ring");
  if (is_zero_module(m, opts))
    throw IneligibleError("locally-free test is undefined for the zero module");
  int r = generic_rank(m, opts);
  Ideal lower = fitting_ideal(m, r - 1, opts);
  for (const Polynomial& g : lower.gens) {
    if (!reduce_mod_f(g, *m.ring).is_zero()) return LocallyFreeVerdict{false, r};
  }
  Ideal at_rank = fitting_ideal(m, r, opts);
  if (at_rank.is_unit_ideal()) return LocallyFreeVerdict{true, r};
  std::vector<VecPoly> gens;
  for (const Polynomial& g : at_rank.gens) gens.push_back(VecPoly{g});
  gens.push_back(VecPoly{m.ring->f_monic});
  GroebnerBasis gb = buchberger(std::move(gens), m.ring, 1, {0}, Mode::S, opts);
  return LocallyFreeVerdict{lt_dimension(gb) <= 0, r};
}

// ---------------------------------------------------------------------------
// Maps, Hom, tensor, duals, biduality.
// ---------------------------------------------------------------------------

struct ModuleMap {
  FPModule source;
  FPModule target;
  PolyMatrix matrix;  // target.ngens x source.ngens
};

inline bool map_well_defined(const ModuleMap& f, const GBOptions& opts = GBOptions{}) {
  if (f.matrix.rows() != f.target.ngens() || f.matrix.cols() != f.source.ngens())
    return false;
  if (f.source.nrels() == 0) return true;
  GroebnerBasis gb = relations_gb(f.target, opts);
  PolyMatrix image = mat_mul(f.matrix, f.source.presentation, f.source.ring->base);
  for (int j = 0; j < image.cols(); ++j)
    if (!in_submodule(image.column(j), gb)) return false;
  return true;
}

// Generators of the preimage {v : phi(v) in span(target relations)}, as
// columns in the ambient of the source. phi columns must carry the source
// ambient twists.
inline std::vector<VecPoly> preimage_gens(const PolyMatrix& phi,
                                          const std::vector<int64_t>& source_twists,
                                          const PolyMatrix& target_rels,
                                          const std::vector<int64_t>& target_twists,
                                          RingPtr ring, Mode mode,
                                          const GBOptions& opts = GBOptions{}) {
  int target_rank = phi.rows();
  std::vector<VecPoly> gens;
  std::vector<int64_t> degs;
  for (int j = 0; j < phi.cols(); ++j) {
    gens.push_back(phi.column(j));
    degs.push_back(source_twists[size_t(j)]);
  }
  std::vector<int64_t> reldegs = column_degrees(target_rels, target_twists, ring->base);
  for (int j = 0; j < target_rels.cols(); ++j) {
    gens.push_back(target_rels.column(j));
    degs.push_back(reldegs[size_t(j)]);
  }
  SyzygyResult syz = syzygies_with_degrees(gens, degs, ring, target_rank, target_twists,
                                           mode, opts);
  std::vector<VecPoly> out;
  for (const VecPoly& s : syz.gens) {
    VecPoly v(s.begin(), s.begin() + phi.cols());
    if (mode == Mode::R)
      for (Polynomial& e : v) e = reduce_mod_f(e, *ring);
    if (!vec_is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

// Presentation of the subquotient (span(gens) + span(rels)) / span(rels) on
// the given generators: the relation of coefficient vectors c with
// sum c_k gens_k inside span(rels).
inline FPModule subquotient_presentation(const std::vector<VecPoly>& gens,
                                         const std::vector<int64_t>& gen_degs,
                                         const std::vector<VecPoly>& rels,
                                         const std::vector<int64_t>& rel_degs,
                                         RingPtr ring, int ambient_rank,
                                         const std::vector<int64_t>& ambient_twists,
                                         Mode mode, const GBOptions& opts = GBOptions{}) {
  std::vector<VecPoly> all = gens;
  all.insert(all.end(), rels.begin(), rels.end());
  std::vector<int64_t> degs = gen_degs;
  degs.insert(degs.end(), rel_degs.begin(), rel_degs.end());
  SyzygyResult syz =
      syzygies_with_degrees(all, degs, ring, ambient_rank, ambient_twists, mode, opts);
  std::vector<VecPoly> cols;
  for (const VecPoly& s : syz.gens) {
    VecPoly c(s.begin(), s.begin() + static_cast<long>(gens.size()));
    if (mode == Mode::R)
      for (Polynomial& e : c) e = reduce_mod_f(e, *ring);
    if (!vec_is_zero(c)) cols.push_back(std::move(c));
  }
  PolyMatrix pres = PolyMatrix::from_columns(static_cast<int>(gens.size()), cols);
  return FPModule{ring, mode, gen_degs, std::move(pres)};
}

// Hom_R(M, N) presented on explicit homomorphism vectors: a generator k is a
// column of `vectors`, an element of the ambient of N^(gens of M) whose
// block i lists the image of gen_i(M) in the ambient of N. decode() turns a
// generator into a checked ModuleMap.
struct HomModule {
  FPModule mod;
  FPModule source;
  FPModule target;
  PolyMatrix vectors;  // (target.ngens * source.ngens) x mod.ngens

  ModuleMap decode(int k, const GBOptions& opts = GBOptions{}) const {
    int a = source.ngens(), n = target.ngens();
    PolyMatrix mat(n, a);
    for (int i = 0; i < a; ++i)
      for (int t = 0; t < n; ++t) mat.at(t, i) = vectors.at(i * n + t, k);
    ModuleMap f{source, target, std::move(mat)};
    if (!map_well_defined(f, opts))
      throw EngineError("decoded Hom generator is not a well-defined map");
    return f;
  }
};

inline HomModule hom_module(const FPModule& m, const FPModule& n,
                            const GBOptions& opts = GBOptions{}) {
  if (m.mode != n.mode || m.ring->fingerprint() != n.ring->fingerprint())
    throw IneligibleError("Hom of modules over different rings");
  const PolyRing& base = m.ring->base;
  int a = m.ngens(), r = m.nrels(), nn = n.ngens();

  if (a == 0 || nn == 0) {
    HomModule h{zero_module(m.ring, m.mode), m, n, PolyMatrix(a * nn, 0)};
    return h;
  }

  // ambient of N^a, block i twisted by -deg(gen_i(M))
  std::vector<int64_t> src_twists(size_t(a) * size_t(nn));
  for (int i = 0; i < a; ++i)
    for (int t = 0; t < nn; ++t)
      src_twists[size_t(i * nn + t)] = n.gen_degrees[size_t(t)] - m.gen_degrees[size_t(i)];
  PolyMatrix src_rels = identity_kron(a, n.presentation, base);

  std::vector<VecPoly> hom_gens;
  std::vector<int64_t> hom_degs;
  if (r == 0) {
    // Hom(free, N) = N^a
    for (int i = 0; i < a * nn; ++i) {
      VecPoly e = vec_zero(a * nn);
      e[size_t(i)] = Polynomial::constant(1, base);
      hom_gens.push_back(std::move(e));
      hom_degs.push_back(src_twists[size_t(i)]);
    }
  } else {
    // target: N^r, block j twisted by -deg(relation j)
    std::vector<int64_t> coldegs = column_degrees(m.presentation, m.gen_degrees, base);
    std::vector<int64_t> tgt_twists(size_t(r) * size_t(nn));
    for (int j = 0; j < r; ++j)
      for (int t = 0; t < nn; ++t)
        tgt_twists[size_t(j * nn + t)] = n.gen_degrees[size_t(t)] - coldegs[size_t(j)];
    PolyMatrix tgt_rels = identity_kron(r, n.presentation, base);
    PolyMatrix phi = kron_with_identity(transpose(m.presentation), nn, base);
    std::vector<VecPoly> lifted =
        preimage_gens(phi, src_twists, tgt_rels, tgt_twists, m.ring, m.mode, opts);
    GroebnerBasis amb_gb = buchberger(matrix_columns(src_rels), m.ring, a * nn,
                                      src_twists, m.mode, opts);
    for (VecPoly& v : lifted) {
      VecPoly red = normal_form(v, amb_gb);
      if (vec_is_zero(red)) continue;
      hom_degs.push_back(vec_degree(red, src_twists, base.weights));
      hom_gens.push_back(std::move(red));
    }
  }

  FPModule hom = subquotient_presentation(
      hom_gens, hom_degs, matrix_columns(src_rels),
      column_degrees(src_rels, src_twists, base), m.ring, a * nn, src_twists, m.mode, opts);
  HomModule out{std::move(hom), m, n, PolyMatrix::from_columns(a * nn, hom_gens)};
  return out;
}

inline HomModule dual(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  return hom_module(m, free_module(m.ring, m.mode, {0}), opts);
}

inline FPModule tensor(const FPModule& m, const FPModule& n,
                       const GBOptions& opts = GBOptions{}) {
  (void)opts;
  if (m.mode != n.mode || m.ring->fingerprint() != n.ring->fingerprint())
    throw IneligibleError("tensor of modules over different rings");
  const PolyRing& base = m.ring->base;
  int a = m.ngens(), b = n.ngens();
  std::vector<int64_t> degs(size_t(a) * size_t(b));
  for (int i = 0; i < a; ++i)
    for (int k = 0; k < b; ++k)
      degs[size_t(i * b + k)] = m.gen_degrees[size_t(i)] + n.gen_degrees[size_t(k)];
  PolyMatrix left = kron_with_identity(m.presentation, b, base);
  PolyMatrix right = identity_kron(a, n.presentation, base);
  PolyMatrix p(a * b, left.cols() + right.cols());
  for (int i = 0; i < a * b; ++i) {
    for (int j = 0; j < left.cols(); ++j) p.at(i, j) = left.at(i, j);
    for (int j = 0; j < right.cols(); ++j) p.at(i, left.cols() + j) = right.at(i, j);
  }
  return FPModule{m.ring, m.mode, std::move(degs), std::move(p)};
}

struct BidualityDefect {
  bool kernel_zero = false;
  bool cokernel_zero = false;
  bool reflexive() const { return kernel_zero && cokernel_zero; }
};

// Builds the natural map M -> M** through decoded evaluation homs and tests
// injectivity and surjectivity. M is reflexive iff both hold.
inline BidualityDefect biduality_defect(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  if (m.mode != Mode::R) throw IneligibleError("biduality test expects an R-module");
  const PolyRing& base = m.ring->base;
  HomModule star = dual(m, opts);
  HomModule dstar = dual(star.mod, opts);
  int a = m.ngens();
  int astar = star.mod.ngens();
  int adstar = dstar.mod.ngens();

  // eta(gen_i) evaluates the dual generators at gen_i; as a vector over the
  // ambient of Hom(M*, R) = R^astar, twisted by the negated dual generator
  // degrees, its k-th entry is vectors(i, k).
  PolyMatrix eta(adstar, a);
  std::vector<int64_t> dd_ambient;
  dd_ambient.reserve(size_t(astar));
  for (int k = 0; k < astar; ++k) dd_ambient.push_back(-star.mod.gen_degrees[size_t(k)]);
  for (int i = 0; i < a; ++i) {
    VecPoly ev = vec_zero(astar);
    for (int k = 0; k < astar; ++k) ev[size_t(k)] = star.vectors.at(i, k);
    if (astar == 0 || vec_is_zero(ev)) continue;
    auto cert = lift_through(ev, matrix_columns(dstar.vectors), m.ring, astar,
                             dd_ambient, m.mode, opts);
    if (!cert)
      throw EngineError("evaluation map failed to lift through the bidual generators");
    for (int k = 0; k < adstar; ++k) eta.at(k, i) = reduce_mod_f((*cert)[size_t(k)], *m.ring);
  }

  BidualityDefect out;
  // kernel: preimage of span(P_M**) under eta, inside span(P_M)?
  GroebnerBasis rel_m = relations_gb(m, opts);
  std::vector<VecPoly> ker = preimage_gens(
      eta, m.gen_degrees, dstar.mod.presentation, dstar.mod.gen_degrees, m.ring, m.mode, opts);
  out.kernel_zero = true;
  for (const VecPoly& v : ker)
    if (!in_submodule(v, rel_m)) {
      out.kernel_zero = false;
      break;
    }
  // cokernel: every generator of M** reached by eta columns + relations
  std::vector<VecPoly> span_cols = matrix_columns(eta);
  for (const VecPoly& c : matrix_columns(dstar.mod.presentation)) span_cols.push_back(c);
  GroebnerBasis span_gb = buchberger(span_cols, m.ring, adstar, dstar.mod.gen_degrees,
                                     m.mode, opts);
  out.cokernel_zero = true;
  for (int k = 0; k < adstar; ++k) {
    VecPoly e = vec_zero(adstar);
    e[size_t(k)] = Polynomial::constant(1, base);
    if (!in_submodule(e, span_gb)) {
      out.cokernel_zero = false;
      break;
    }
  }
  return out;
}

}  // namespace hstheta

#endif
