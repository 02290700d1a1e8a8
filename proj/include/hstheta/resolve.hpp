// Copyright 2026 the hstheta authors
#ifndef HSTHETA_RESOLVE_HPP
#define HSTHETA_RESOLVE_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hstheta/cache.hpp"
#include "hstheta/fpmod.hpp"

namespace hstheta {

// Minimal free resolution prefix: d_i maps F_i to F_{i-1}, d_1 is the minimal
// presentation, every differential is unit-free and d.d = 0 exactly. Over S
// the resolution always finishes within four steps; over R only a prefix is
// computed and the tail is eventually two-periodic.
struct ResolutionData {
  RingPtr ring;
  Mode mode = Mode::R;
  FPModule minimal;                          // minimized input module
  std::vector<PolyMatrix> diffs;             // d_1 .. d_k
  std::vector<std::vector<int64_t>> twists;  // basis degrees of F_0 .. F_k
  std::vector<int> betti;                    // ranks of F_0 .. F_k
  bool complete = false;

  int length() const { return static_cast<int>(diffs.size()); }
};

inline FPModule as_s_module(const FPModule& m) {
  if (m.mode == Mode::S) return m;
  const PolyRing& base = m.ring->base;
  int n = m.ngens();
  PolyMatrix p(n, m.nrels() + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m.nrels(); ++j) p.at(i, j) = m.presentation.at(i, j);
    p.at(i, m.nrels() + i) = m.ring->f;
  }
  (void)base;
  return FPModule{m.ring, Mode::S, m.gen_degrees, std::move(p)};
}

namespace detail {

// One syzygy step: minimal generators of ker(d) for the last differential.
inline void extend_resolution(ResolutionData& res, int steps, const GBOptions& opts) {
  const PolyRing& base = res.ring->base;
  while (!res.complete && res.length() < steps) {
    const PolyMatrix& d = res.diffs.back();
    const std::vector<int64_t>& ambient = res.twists[size_t(res.length()) - 1];
    SyzygyResult syz = syzygies(matrix_columns(d), res.ring, d.rows(), ambient,
                                res.mode, opts);
    std::vector<VecPoly> cands;
    std::vector<int64_t> cand_degs;
    for (const VecPoly& s : syz.gens) {
      VecPoly v = s;
      if (res.mode == Mode::R)
        for (Polynomial& e : v) e = reduce_mod_f(e, *res.ring);
      if (vec_is_zero(v)) continue;
      cand_degs.push_back(vec_degree(v, res.twists.back(), base.weights));
      cands.push_back(std::move(v));
    }
    // Graded Nakayama: ascending degree, keep what the earlier picks miss.
    std::vector<int> order(cands.size());
    for (size_t t = 0; t < cands.size(); ++t) order[t] = static_cast<int>(t);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return cand_degs[size_t(x)] < cand_degs[size_t(y)]; });
    std::vector<VecPoly> kept;
    std::vector<int64_t> kept_degs;
    for (int idx : order) {
      GroebnerBasis gb = buchberger(kept, res.ring, d.cols(), res.twists.back(),
                                    res.mode, opts);
      if (!in_submodule(cands[size_t(idx)], gb)) {
        kept.push_back(cands[size_t(idx)]);
        kept_degs.push_back(cand_degs[size_t(idx)]);
      }
    }
    if (kept.empty()) {
      res.complete = true;
      return;
    }
    PolyMatrix next = PolyMatrix::from_columns(d.cols(), kept);
    for (int i = 0; i < next.rows(); ++i)
      for (int j = 0; j < next.cols(); ++j)
        if (next.at(i, j).is_unit())
          throw EngineError("resolution step produced a unit entry; minimality broken");
    PolyMatrix prod = mat_mul(d, next, base);
    if (res.mode == Mode::R) prod = reduce_matrix_mod_f(prod, *res.ring);
    if (!prod.is_zero()) throw EngineError("d.d != 0 in resolution; engine bug");
    res.diffs.push_back(std::move(next));
    res.twists.push_back(std::move(kept_degs));
    res.betti.push_back(static_cast<int>(kept.size()));
  }
}

inline ResolutionData start_resolution(const FPModule& m, const GBOptions& opts) {
  FPModule mp = minimal_presentation(m, opts);
  ResolutionData res;
  res.ring = mp.ring;
  res.mode = mp.mode;
  res.minimal = mp;
  res.twists.push_back(mp.gen_degrees);
  res.betti.push_back(mp.ngens());
  if (mp.ngens() == 0 || mp.nrels() == 0) {
    res.complete = true;
    return res;
  }
  res.diffs.push_back(mp.presentation);
  res.twists.push_back(column_degrees(mp.presentation, mp.gen_degrees, mp.ring->base));
  res.betti.push_back(mp.nrels());
  return res;
}

}  // namespace detail

// Finite minimal S-resolution; termination within four steps is Hilbert's
// syzygy theorem for the four-variable ring, so running past it is a bug.
inline ResolutionData resolve_over_S(const FPModule& m, int max_steps = 5,
                                     const GBOptions& opts = GBOptions{}) {
  ResolutionData res = detail::start_resolution(as_s_module(m), opts);
  detail::extend_resolution(res, max_steps, opts);
  if (!res.complete)
    throw EngineError("S-resolution failed to terminate by step " +
                      std::to_string(max_steps) + "; engine bug");
  return res;
}

inline int pd_over_S(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  return resolve_over_S(m, 5, opts).length();
}

// depth via Auslander-Buchsbaum over the ambient regular ring: depth M =
// 4 - pd_S M, between 0 and 3 for every nonzero R-module.
inline int depth(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  if (m.mode != Mode::R) throw IneligibleError("depth expects an R-module");
  if (is_zero_module(m, opts)) throw IneligibleError("depth of the zero module");
  int pd = pd_over_S(m, opts);
  int d = 4 - pd;
  if (d < 0 || d > 3) throw EngineError("depth outside [0,3]; engine bug");
  return d;
}

inline bool is_mcm(const FPModule& m, const GBOptions& opts = GBOptions{}) {
  return depth(m, opts) == 3;
}

// ---------------------------------------------------------------------------
// R-resolutions with prefix reuse. Keyed by ring, mode and the canonical
// presentation text; the in-memory table holds the longest prefix computed so
// far and the optional disk layer shares it across processes.
// ---------------------------------------------------------------------------

inline std::string module_key(const FPModule& m) {
  std::ostringstream os;
  os << m.ring->fingerprint() << "|" << mode_name(m.mode) << "|";
  for (int64_t d : m.gen_degrees) os << d << ",";
  os << "|";
  for (int i = 0; i < m.presentation.rows(); ++i)
    for (int j = 0; j < m.presentation.cols(); ++j)
      os << poly_to_string(m.presentation.at(i, j), m.ring->base) << ";";
  return digest_of(os.str());
}

namespace detail {

inline nlohmann::json matrix_to_json(const PolyMatrix& m, const PolyRing& ring) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(poly_to_string(m.at(i, j), ring));
    rows.push_back(row);
  }
  nlohmann::json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = rows;
  return out;
}

inline PolyMatrix matrix_from_json(const nlohmann::json& j, const PolyRing& ring) {
  PolyMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& rows = j.at("entries");
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) {
      std::string text = rows[size_t(i)][size_t(c)].get<std::string>();
      if (text != "0") m.at(i, c) = parse_polynomial(text, ring);
    }
  return m;
}

inline nlohmann::json resolution_to_json(const ResolutionData& res) {
  nlohmann::json j;
  j["mode"] = mode_name(res.mode);
  j["betti"] = res.betti;
  j["twists"] = res.twists;
  j["complete"] = res.complete;
  j["min_degrees"] = res.minimal.gen_degrees;
  j["min_pres"] = matrix_to_json(res.minimal.presentation, res.ring->base);
  nlohmann::json diffs = nlohmann::json::array();
  for (const PolyMatrix& d : res.diffs) diffs.push_back(matrix_to_json(d, res.ring->base));
  j["diffs"] = diffs;
  return j;
}

inline ResolutionData resolution_from_json(const nlohmann::json& j, RingPtr ring) {
  ResolutionData res;
  res.ring = ring;
  res.mode = j.at("mode").get<std::string>() == "R" ? Mode::R : Mode::S;
  res.betti = j.at("betti").get<std::vector<int>>();
  res.twists = j.at("twists").get<std::vector<std::vector<int64_t>>>();
  res.complete = j.at("complete").get<bool>();
  PolyMatrix mp = matrix_from_json(j.at("min_pres"), ring->base);
  res.minimal = FPModule{ring, res.mode, j.at("min_degrees").get<std::vector<int64_t>>(), mp};
  for (const auto& d : j.at("diffs")) res.diffs.push_back(matrix_from_json(d, ring->base));
  return res;
}

}  // namespace detail

class ResolutionCache {
 public:
  static ResolutionCache& instance() {
    static ResolutionCache cache;
    return cache;
  }

  void set_disk_dir(const std::string& dir) { disk_ = DiskCache(dir); }
  void clear_memory() { mem_.clear(); }

  ResolutionData resolve(const FPModule& m, int steps, const GBOptions& opts) {
    std::string key = module_key(m);
    auto it = mem_.find(key);
    if (it == mem_.end() && disk_.enabled()) {
      if (auto payload = disk_.load(key)) {
        try {
          ResolutionData res = detail::resolution_from_json(*payload, m.ring);
          it = mem_.emplace(key, std::move(res)).first;
        } catch (...) {
          // corrupt or stale entry: recompute
        }
      }
    }
    if (it == mem_.end()) {
      ResolutionData res = detail::start_resolution(m, opts);
      it = mem_.emplace(key, std::move(res)).first;
    }
    ResolutionData& stored = it->second;
    if (!stored.complete && stored.length() < steps) {
      detail::extend_resolution(stored, steps, opts);
      if (disk_.enabled()) disk_.store(key, detail::resolution_to_json(stored));
    } else if (disk_.enabled() && !disk_.load(key)) {
      disk_.store(key, detail::resolution_to_json(stored));
    }
    return slice(stored, steps);
  }

  static ResolutionData slice(const ResolutionData& res, int steps) {
    if (res.length() <= steps) return res;
    ResolutionData out = res;
    out.diffs.resize(size_t(steps));
    out.twists.resize(size_t(steps) + 1);
    out.betti.resize(size_t(steps) + 1);
    out.complete = false;
    return out;
  }

 private:
  std::map<std::string, ResolutionData> mem_;
  DiskCache disk_;
};

inline ResolutionData resolve_over_R(const FPModule& m, int steps, int step_ceiling = 10,
                                     const GBOptions& opts = GBOptions{}) {
  if (m.mode != Mode::R) throw IneligibleError("resolve_over_R expects an R-module");
  if (steps > step_ceiling)
    throw ResourceError("resolution prefix " + std::to_string(steps) +
                        " exceeds the ceiling " + std::to_string(step_ceiling));
  return ResolutionCache::instance().resolve(m, steps, opts);
}

// ---------------------------------------------------------------------------
// Periodicity detection: the least index from which the betti numbers and
// the degree labels repeat with period two, the labels shifted by deg f.
// ---------------------------------------------------------------------------

inline int detect_periodicity(const ResolutionData& res) {
  if (res.mode != Mode::R) throw IneligibleError("periodicity applies to R-resolutions");
  int64_t fdeg = res.ring->f_degree;
  int L = res.length();
  auto betti_at = [&](int j) -> int {
    if (j <= L) return res.betti[size_t(j)];
    return res.complete ? 0 : -1;  // -1 = unknown
  };
  auto twists_at = [&](int j) -> std::vector<int64_t> {
    if (j <= L) {
      std::vector<int64_t> t = res.twists[size_t(j)];
      std::sort(t.begin(), t.end());
      return t;
    }
    return {};
  };
  int max_candidate = res.complete ? L + 1 : L - 2;
  for (int i = 0; i <= max_candidate; ++i) {
    bool ok = true;
    int last_j = res.complete ? L : L - 2;
    for (int j = i; j <= last_j && ok; ++j) {
      int b0 = betti_at(j), b2 = betti_at(j + 2);
      if (b0 < 0 || b2 < 0 || b0 != b2) {
        ok = false;
        break;
      }
      std::vector<int64_t> t0 = twists_at(j);
      std::vector<int64_t> t2 = twists_at(j + 2);
      for (int64_t& v : t0) v += fdeg;
      if (t0 != t2) ok = false;
    }
    if (ok && (res.complete || i <= L - 2)) return i;
  }
  throw IneligibleError(
      "resolution prefix too short to certify two-periodicity; lengthen the prefix");
}

// ---------------------------------------------------------------------------
// Matrix factorizations. For an MCM module with no free summand the minimal
// presentation A is square and f.I lifts through its columns over S; the
// partner matrix B is the solved lift and both products are verified exactly.
// ---------------------------------------------------------------------------

struct MatrixFactorization {
  PolyMatrix a;
  PolyMatrix b;
  std::string note;
};

inline MatrixFactorization matrix_factorization(const FPModule& m,
                                                const GBOptions& opts = GBOptions{}) {
  if (m.mode != Mode::R)
    throw IneligibleError("matrix factorization expects an R-module");
  if (!is_mcm(m, opts))
    throw IneligibleError("matrix factorization needs a maximal Cohen-Macaulay module");
  FPModule mp = minimal_presentation(m, opts);
  if (mp.nrels() == 0)
    throw IneligibleError("free module: no reduced matrix factorization (free summand)");
  if (mp.ngens() != mp.nrels())
    throw IneligibleError("minimal presentation is not square; a free summand is present");
  const PolyRing& base = m.ring->base;
  int n = mp.ngens();
  PolyMatrix a = lift_matrix(mp.presentation, *m.ring);
  std::vector<VecPoly> acols = matrix_columns(a);
  PolyMatrix b(n, n);
  for (int j = 0; j < n; ++j) {
    VecPoly target = vec_zero(n);
    target[size_t(j)] = m.ring->f;
    auto cert = lift_through(target, acols, m.ring, n, mp.gen_degrees, Mode::S, opts);
    if (!cert)
      throw EngineError("f.e_j failed to lift through the presentation; engine bug");
    for (int i = 0; i < n; ++i) b.at(i, j) = (*cert)[size_t(i)];
  }
  PolyMatrix f_id = mat_scale(PolyMatrix::identity(n, base), m.ring->f, base);
  if (!mat_sub(mat_mul(a, b, base), f_id, base).is_zero() ||
      !mat_sub(mat_mul(b, a, base), f_id, base).is_zero())
    throw EngineError("matrix factorization identity A.B = B.A = f.I failed; engine bug");

  // coker(A) is the minimized module itself; record its betti prefix as the
  // iso-witness the caller can compare against the stable part.
  ResolutionData res = resolve_over_R(mp, 4, 10, opts);
  std::ostringstream note;
  note << "coker(A) betti prefix:";
  for (int bn : res.betti) note << " " << bn;
  return MatrixFactorization{std::move(a), std::move(b), note.str()};
}

// ---------------------------------------------------------------------------
// Homology: Tor and Ext as finitely presented modules with lengths.
// ---------------------------------------------------------------------------

struct HomologyReport {
  int index = 0;
  FPModule module;
  Length len;
};

namespace detail {

inline std::vector<int64_t> vec_degrees_of(const std::vector<VecPoly>& vs,
                                           const std::vector<int64_t>& twists,
                                           const Weights& w) {
  std::vector<int64_t> out;
  out.reserve(vs.size());
  for (const VecPoly& v : vs)
    out.push_back(vec_is_zero(v) ? 0 : vec_degree(v, twists, w));
  return out;
}

}  // namespace detail

// Tor_i(M, N) from a resolution of M: homology of F_{i+1} x N -> F_i x N ->
// F_{i-1} x N presented on the kernel generators of the middle map.
inline HomologyReport tor_from_resolution(const ResolutionData& res, const FPModule& n,
                                          int i, const GBOptions& opts = GBOptions{}) {
  const PolyRing& base = res.ring->base;
  Mode mode = res.mode;
  if (i == 0) {
    FPModule t = tensor(res.minimal, n, opts);
    return HomologyReport{0, t, length(t, opts)};
  }
  int nn = n.ngens();
  if (nn == 0 || res.betti.empty() || i > res.length()) {
    FPModule z = zero_module(res.ring, mode);
    return HomologyReport{i, z, Length::of(0)};
  }
  const PolyMatrix& d_i = res.diffs[size_t(i) - 1];
  int ci = res.betti[size_t(i)];
  int cim1 = res.betti[size_t(i) - 1];
  std::vector<int64_t> src_twists(size_t(ci) * size_t(nn));
  for (int t = 0; t < ci; ++t)
    for (int j = 0; j < nn; ++j)
      src_twists[size_t(t * nn + j)] = res.twists[size_t(i)][size_t(t)] +
                                       n.gen_degrees[size_t(j)];
  std::vector<int64_t> tgt_twists(size_t(cim1) * size_t(nn));
  for (int t = 0; t < cim1; ++t)
    for (int j = 0; j < nn; ++j)
      tgt_twists[size_t(t * nn + j)] = res.twists[size_t(i) - 1][size_t(t)] +
                                       n.gen_degrees[size_t(j)];
  PolyMatrix phi = kron_with_identity(d_i, nn, base);
  PolyMatrix tgt_rels = identity_kron(cim1, n.presentation, base);
  std::vector<VecPoly> kernel =
      preimage_gens(phi, src_twists, tgt_rels, tgt_twists, res.ring, mode, opts);

  std::vector<VecPoly> rels;
  if (i < res.length()) {
    PolyMatrix img = kron_with_identity(res.diffs[size_t(i)], nn, base);
    for (const VecPoly& c : matrix_columns(img)) rels.push_back(c);
  }
  PolyMatrix amb = identity_kron(ci, n.presentation, base);
  for (const VecPoly& c : matrix_columns(amb)) rels.push_back(c);

  FPModule h = subquotient_presentation(
      kernel, detail::vec_degrees_of(kernel, src_twists, base.weights), rels,
      detail::vec_degrees_of(rels, src_twists, base.weights), res.ring, ci * nn,
      src_twists, mode, opts);
  return HomologyReport{i, h, length(h, opts)};
}

// Ext^i(M, N): homology of Hom(F_{i-1}, N) -> Hom(F_i, N) -> Hom(F_{i+1}, N).
inline HomologyReport ext_from_resolution(const ResolutionData& res, const FPModule& n,
                                          int i, const GBOptions& opts = GBOptions{}) {
  const PolyRing& base = res.ring->base;
  Mode mode = res.mode;
  int nn = n.ngens();
  if (nn == 0 || res.betti.empty() || i > res.length() ||
      i >= static_cast<int>(res.betti.size())) {
    FPModule z = zero_module(res.ring, mode);
    return HomologyReport{i, z, Length::of(0)};
  }
  int ci = res.betti[size_t(i)];
  std::vector<int64_t> mid_twists(size_t(ci) * size_t(nn));
  for (int t = 0; t < ci; ++t)
    for (int j = 0; j < nn; ++j)
      mid_twists[size_t(t * nn + j)] = n.gen_degrees[size_t(j)] -
                                       res.twists[size_t(i)][size_t(t)];

  std::vector<VecPoly> kernel;
  if (i < res.length()) {
    const PolyMatrix& d_next = res.diffs[size_t(i)];
    int cnext = res.betti[size_t(i) + 1];
    std::vector<int64_t> up_twists(size_t(cnext) * size_t(nn));
    for (int t = 0; t < cnext; ++t)
      for (int j = 0; j < nn; ++j)
        up_twists[size_t(t * nn + j)] = n.gen_degrees[size_t(j)] -
                                        res.twists[size_t(i) + 1][size_t(t)];
    PolyMatrix delta = kron_with_identity(transpose(d_next), nn, base);
    PolyMatrix tgt_rels = identity_kron(cnext, n.presentation, base);
    kernel = preimage_gens(delta, mid_twists, tgt_rels, up_twists, res.ring, mode, opts);
  } else {
    // the map out of Hom(F_i, N) is zero; the kernel is everything
    for (int t = 0; t < ci * nn; ++t) {
      VecPoly e = vec_zero(ci * nn);
      e[size_t(t)] = Polynomial::constant(1, base);
      kernel.push_back(std::move(e));
    }
  }

  std::vector<VecPoly> rels;
  if (i >= 1) {
    PolyMatrix img = kron_with_identity(transpose(res.diffs[size_t(i) - 1]), nn, base);
    for (const VecPoly& c : matrix_columns(img)) rels.push_back(c);
  }
  PolyMatrix amb = identity_kron(ci, n.presentation, base);
  for (const VecPoly& c : matrix_columns(amb)) rels.push_back(c);

  FPModule h = subquotient_presentation(
      kernel, detail::vec_degrees_of(kernel, mid_twists, base.weights), rels,
      detail::vec_degrees_of(rels, mid_twists, base.weights), res.ring, ci * nn,
      mid_twists, mode, opts);
  return HomologyReport{i, h, length(h, opts)};
}

inline HomologyReport tor_module(const FPModule& m, const FPModule& n, int i,
                                 int step_ceiling = 10, const GBOptions& opts = GBOptions{}) {
  if (i < 0) throw ParseError("Tor index must be >= 0");
  if (m.mode != n.mode || m.ring->fingerprint() != n.ring->fingerprint())
    throw IneligibleError("Tor of modules over different rings");
  if (i == 0) {
    FPModule t = tensor(m, n, opts);
    return HomologyReport{0, t, length(t, opts)};
  }
  ResolutionData res = m.mode == Mode::R
                           ? resolve_over_R(m, i + 1, std::max(step_ceiling, i + 1), opts)
                           : resolve_over_S(m, 5, opts);
  return tor_from_resolution(res, n, i, opts);
}

inline HomologyReport ext_module(const FPModule& m, const FPModule& n, int i,
                                 int step_ceiling = 10, const GBOptions& opts = GBOptions{}) {
  if (i < 0) throw ParseError("Ext index must be >= 0");
  if (m.mode != n.mode || m.ring->fingerprint() != n.ring->fingerprint())
    throw IneligibleError("Ext of modules over different rings");
  ResolutionData res = m.mode == Mode::R
                           ? resolve_over_R(m, i + 1, std::max(step_ceiling, i + 1), opts)
                           : resolve_over_S(m, 5, opts);
  return ext_from_resolution(res, n, i, opts);
}

// Serre's intersection number over the ambient regular ring: the alternating
// sum of the S-Tor lengths along the finite S-resolution. Requires the tensor
// product to have finite length; all the Tor lengths are then finite too.
inline int64_t serre_chi_S(const FPModule& m, const FPModule& n,
                           const GBOptions& opts = GBOptions{}) {
  FPModule t = tensor(m, n, opts);
  Length lt = length(t, opts);
  if (!lt.finite)
    throw IneligibleError("chi requires the tensor product to have finite length");
  FPModule ms = as_s_module(m);
  FPModule ns = as_s_module(n);
  ResolutionData res = resolve_over_S(ms, 5, opts);
  int64_t chi = 0;
  for (int i = 0; i <= res.length(); ++i) {
    HomologyReport rep = tor_from_resolution(res, ns, i, opts);
    if (!rep.len.finite)
      throw EngineError("S-Tor of a finite-length pair is infinite; engine bug");
    int64_t term = static_cast<int64_t>(rep.len.value);
    chi += (i % 2 == 0) ? term : -term;
  }
  return chi;
}

}  // namespace hstheta

#endif
