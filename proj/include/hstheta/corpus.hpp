// Copyright 2026 the hstheta authors
#ifndef HSTHETA_CORPUS_HPP
#define HSTHETA_CORPUS_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hstheta/input.hpp"
#include "hstheta/theorems.hpp"

namespace hstheta {

// One evaluated expectation: what the ledger demanded, what the engine
// measured, and whether they agree. A corpus run passes only when every
// expectation matches and no checker reports VIOLATION.
struct ExpectationResult {
  ExpectSpec spec;
  nlohmann::json measured;
  bool matched = false;
  std::string note;
};

struct FileReport {
  std::string name;
  std::string ring_fingerprint;
  std::vector<ExpectationResult> results;
  int mismatches = 0;
};

struct CorpusReport {
  std::vector<FileReport> files;
  int total_expectations = 0;
  int mismatches = 0;
  bool pass = false;
  std::string note;
};

namespace detail {

inline std::string length_text(const Length& l) {
  return l.finite ? std::to_string(l.value) : "infinite";
}

inline bool value_is(const ExpectSpec& e, const std::string& s) { return e.value == s; }

inline int64_t expect_int(const ExpectSpec& e) {
  std::vector<int64_t> v = parse_int_list(e.value, e.line);
  if (v.size() != 1)
    throw ParseError("expectation at line " + std::to_string(e.line) +
                     " needs a single integer value");
  return v[0];
}

inline bool expect_bool(const ExpectSpec& e) {
  if (e.value == "yes") return true;
  if (e.value == "no") return false;
  throw ParseError("expectation at line " + std::to_string(e.line) +
                   " needs yes or no, got '" + e.value + "'");
}

}  // namespace detail

inline ExpectationResult evaluate_expectation(const ParsedInput& in, const ExpectSpec& e,
                                              uint64_t seed,
                                              const ThetaOptions& opts = ThetaOptions{}) {
  ExpectationResult res;
  res.spec = e;
  auto module_of = [&](const std::string& name) -> const FPModule& {
    return in.module_named(name);
  };
  auto pair_of = [&](const std::string& name) {
    const PairSpec& p = in.pair_named(name);
    return std::pair<const FPModule*, const FPModule*>{&module_of(p.left),
                                                       &module_of(p.right)};
  };
  try {
    const std::string& op = e.op;
    if (op == "theta") {
      auto [l, r] = pair_of(e.on);
      ThetaReport t = theta_pairing(*l, *r, in.pair_named(e.on).left,
                                    in.pair_named(e.on).right, opts);
      res.measured = t.theta;
      res.matched = t.theta == detail::expect_int(e);
    } else if (op == "chi") {
      auto [l, r] = pair_of(e.on);
      int64_t chi = serre_chi_S(*l, *r, opts.gb);
      res.measured = chi;
      res.matched = chi == detail::expect_int(e);
    } else if (op == "theta_eq_chi") {
      auto [l, r] = pair_of(e.on);
      ThetaChiVerdict v = theta_equals_chi_check(*l, *r, opts);
      res.measured = nlohmann::json{{"theta", v.theta}, {"chi", v.chi}};
      res.matched = v.equal && v.theta == detail::expect_int(e);
    } else if (op == "stabilized") {
      auto [l, r] = pair_of(e.on);
      ThetaReport t = theta_pairing(*l, *r, "left", "right", opts);
      res.measured = t.stabilized;
      res.matched = t.stabilized == detail::expect_bool(e);
    } else if (op == "tor_len" || op == "ext_len") {
      if (!e.index)
        throw ParseError("expectation at line " + std::to_string(e.line) +
                         " needs an index");
      auto [l, r] = pair_of(e.on);
      HomologyReport h = op == "tor_len"
                             ? tor_module(*l, *r, *e.index, opts.step_ceiling, opts.gb)
                             : ext_module(*l, *r, *e.index, opts.step_ceiling, opts.gb);
      res.measured = detail::length_text(h.len);
      res.matched = detail::length_text(h.len) == e.value;
    } else if (op == "depth") {
      int d = depth(module_of(e.on), opts.gb);
      res.measured = d;
      res.matched = d == detail::expect_int(e);
    } else if (op == "pd_s") {
      int d = pd_over_S(module_of(e.on), opts.gb);
      res.measured = d;
      res.matched = d == detail::expect_int(e);
    } else if (op == "krulldim") {
      int d = krull_dim(module_of(e.on), opts.gb);
      res.measured = d;
      res.matched = d == detail::expect_int(e);
    } else if (op == "rank") {
      int r = generic_rank(module_of(e.on), opts.gb);
      res.measured = r;
      res.matched = r == detail::expect_int(e);
    } else if (op == "length") {
      Length l = length(module_of(e.on), opts.gb);
      res.measured = detail::length_text(l);
      res.matched = detail::length_text(l) == e.value;
    } else if (op == "free") {
      FreeVerdict v = is_free(module_of(e.on), opts.gb);
      res.measured = v.free;
      res.matched = v.free == detail::expect_bool(e);
    } else if (op == "mcm") {
      bool v = is_mcm(module_of(e.on), opts.gb);
      res.measured = v;
      res.matched = v == detail::expect_bool(e);
    } else if (op == "reflexive") {
      BidualityDefect bd = biduality_defect(module_of(e.on), opts.gb);
      res.measured = bd.reflexive();
      res.matched = bd.reflexive() == detail::expect_bool(e);
    } else if (op == "locally_free") {
      LocallyFreeVerdict v = is_locally_free_on_punctured(module_of(e.on), opts.gb);
      res.measured = v.locally_free;
      res.matched = v.locally_free == detail::expect_bool(e);
    } else if (op == "betti_r" || op == "betti_s") {
      std::vector<int64_t> want = detail::parse_int_list(e.value, e.line);
      ResolutionData r =
          op == "betti_r"
              ? resolve_over_R(module_of(e.on), static_cast<int>(want.size()) - 1,
                               opts.step_ceiling, opts.gb)
              : resolve_over_S(module_of(e.on), 5, opts.gb);
      std::vector<int64_t> got(r.betti.begin(), r.betti.end());
      while (got.size() < want.size()) got.push_back(0);  // finished resolution
      got.resize(want.size());
      res.measured = got;
      res.matched = got == want;
    } else if (op == "periodicity") {
      ResolutionData r = resolve_over_R(module_of(e.on), 6, opts.step_ceiling, opts.gb);
      int idx = detect_periodicity(r);
      res.measured = idx;
      res.matched = idx == detail::expect_int(e);
    } else if (op == "mf") {
      MatrixFactorization mf = matrix_factorization(module_of(e.on), opts.gb);
      res.measured = mf.note;
      res.matched = detail::value_is(e, "ok");
    } else if (op == "bourbaki") {
      BourbakiResult b = bourbaki(module_of(e.on), {}, seed, opts);
      res.measured = nlohmann::json{{"attempts", b.attempts}, {"note", b.note}};
      res.matched = detail::value_is(e, "ok");
    } else if (op == "principal") {
      if (e.element.empty())
        throw ParseError("principal expectation needs an element (line " +
                         std::to_string(e.line) + ")");
      Polynomial g = parse_polynomial(e.element, in.ring->base);
      int64_t v = theta_principal_vanishing(module_of(e.on), g, opts);
      res.measured = v;
      res.matched = v == detail::expect_int(e);
    } else if (op == "endo") {
      TheoremReport t = check_endo_mcm(module_of(e.on), e.on, opts);
      res.measured = t.measured;
      res.measured["verdict"] = verdict_name(t.verdict);
      res.matched = e.value == verdict_name(t.verdict);
    } else if (op == "rigidity") {
      const PairSpec& p = in.pair_named(e.on);
      TheoremReport t =
          check_rigidity(module_of(p.left), module_of(p.right), p.left, p.right, opts);
      res.measured = t.measured;
      res.measured["verdict"] = verdict_name(t.verdict);
      res.matched = e.value == verdict_name(t.verdict);
    } else if (op == "lemma25") {
      const PairSpec& p = in.pair_named(e.on);
      TheoremReport t = check_lemma25_instance(module_of(p.left), module_of(p.right),
                                               p.left, p.right, opts);
      res.measured = t.measured;
      res.measured["verdict"] = verdict_name(t.verdict);
      res.matched = e.value == verdict_name(t.verdict);
    } else if (op == "bridge") {
      auto [l, r] = pair_of(e.on);
      BridgeVerdict v = ext1_tor1_bridge_check(*l, *r, opts);
      res.measured = nlohmann::json{{"ext1_len", v.ext1_len}, {"tor1_len", v.tor1_len}};
      res.matched = v.equal && detail::value_is(e, "ok");
    } else if (op == "additivity") {
      if (e.with_mod.empty())
        throw ParseError("additivity expectation needs with = <module> (line " +
                         std::to_string(e.line) + ")");
      ShortExactSequence s = build_ses(in, in.ses_named(e.on));
      AdditivityVerdict v = theta_additivity_check(module_of(e.with_mod), s, opts);
      res.measured = nlohmann::json{{"sub", v.theta_sub},
                                    {"mid", v.theta_mid},
                                    {"quot", v.theta_quot}};
      res.matched = v.additive && detail::value_is(e, "PASS");
    } else if (op == "ufd_probe") {
      std::vector<std::pair<const FPModule*, const FPModule*>> pairs;
      std::vector<std::pair<std::string, std::string>> names;
      for (const PairSpec& p : in.pairs) {
        pairs.emplace_back(&module_of(p.left), &module_of(p.right));
        names.emplace_back(p.left, p.right);
      }
      UfdProbeReport u = ufd_theta_probe(pairs, names, in.ring, opts);
      res.measured = nlohmann::json{{"any_nonzero", u.any_nonzero},
                                    {"conclusion", u.conclusion}};
      res.matched = (e.value == "not_ufd" && u.any_nonzero) ||
                    (e.value == "consistent" && !u.any_nonzero);
    } else if (op == "isolated") {
      SingularityProfile prof = singularity_profile(in.ring, opts.gb);
      res.measured = prof.isolated;
      res.matched = prof.isolated == detail::expect_bool(e);
    } else {
      throw ParseError("unknown expectation op '" + op + "' at line " +
                       std::to_string(e.line));
    }
  } catch (const IneligibleError& err) {
    res.measured = std::string("INELIGIBLE: ") + err.what();
    res.matched = e.value == "INELIGIBLE";
    res.note = err.what();
  } catch (const ViolationError& err) {
    res.measured = std::string("VIOLATION: ") + err.what();
    res.matched = false;
    res.note = err.what();
  }
  return res;
}

inline FileReport run_file(const ParsedInput& in, const std::string& name, uint64_t seed,
                           const ThetaOptions& opts = ThetaOptions{}) {
  FileReport rep;
  rep.name = name;
  rep.ring_fingerprint = in.ring->fingerprint();
  for (const ExpectSpec& e : in.expects) {
    ExpectationResult r = evaluate_expectation(in, e, seed, opts);
    if (!r.matched) ++rep.mismatches;
    rep.results.push_back(std::move(r));
  }
  return rep;
}

// Walks *.ring files under a directory, evaluates every declared expectation
// and aggregates. PASS demands zero mismatches; an empty corpus passes
// vacuously with a warning note.
inline CorpusReport run_corpus(const std::string& dir, uint64_t seed,
                               const ThetaOptions& opts = ThetaOptions{}) {
  namespace fs = std::filesystem;
  CorpusReport rep;
  std::vector<fs::path> paths;
  if (!fs::exists(dir)) throw ParseError("corpus directory does not exist: " + dir);
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".ring") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const fs::path& p : paths) {
    std::ifstream inf(p);
    std::stringstream buffer;
    buffer << inf.rdbuf();
    ParsedInput in;
    try {
      in = parse_input(buffer.str());
    } catch (const Error& err) {
      throw ParseError("corpus file " + p.filename().string() + ": " + err.what());
    }
    FileReport fr = run_file(in, p.filename().string(), seed, opts);
    rep.total_expectations += static_cast<int>(fr.results.size());
    rep.mismatches += fr.mismatches;
    rep.files.push_back(std::move(fr));
  }
  rep.pass = rep.mismatches == 0;
  if (rep.files.empty()) rep.note = "warning: empty corpus, vacuous pass";
  return rep;
}

}  // namespace hstheta

#endif
