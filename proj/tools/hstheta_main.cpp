// Copyright 2026 the hstheta authors
//
// Command-line front end: parse a fixture file, dispatch one operation, and
// emit a single report. Exit codes: 0 computed/PASS, 1 usage or parse error,
// 2 ineligible input, 3 violation, 4 resource ceiling.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hstheta/corpus.hpp"
#include "hstheta/report.hpp"

namespace {

using namespace hstheta;

struct CliConfig {
  std::string input;
  std::string format = "text";
  int steps = 8;
  int window = 2;
  uint64_t seed = 3405691582ull;
  std::string cache_dir;
  int max_basis = 20000;
  int64_t max_degree = 64;
  bool deterministic = false;
};

ThetaOptions theta_options(const CliConfig& cfg) {
  ThetaOptions opts;
  opts.window = cfg.window;
  opts.gb.max_basis = cfg.max_basis;
  opts.gb.max_total_degree = cfg.max_degree;
  opts.step_ceiling = std::max(10, cfg.steps + 1);
  return opts;
}

ParsedInput load_input(const CliConfig& cfg) {
  if (cfg.input.empty()) throw ParseError("this command needs --input FILE");
  std::ifstream in(cfg.input);
  if (!in) throw ParseError("cannot open input file: " + cfg.input);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

nlohmann::json flags_json(const CliConfig& cfg) {
  nlohmann::json j;
  j["steps"] = cfg.steps;
  j["window"] = cfg.window;
  j["format"] = cfg.format;
  j["max_basis"] = cfg.max_basis;
  j["max_degree"] = cfg.max_degree;
  j["deterministic"] = cfg.deterministic;
  if (!cfg.cache_dir.empty()) j["cache_dir"] = cfg.cache_dir;
  if (!cfg.input.empty()) j["input"] = cfg.input;
  return j;
}

void emit(Report& rep, const CliConfig& cfg,
          std::chrono::steady_clock::time_point start) {
  if (!cfg.deterministic) {
    auto end = std::chrono::steady_clock::now();
    rep.timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  }
  if (cfg.format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::PASS:
      return 0;
    case Verdict::INELIGIBLE:
      return 2;
    default:
      return 3;
  }
}

nlohmann::json theta_json(const ThetaReport& t) {
  nlohmann::json j;
  j["op"] = "theta";
  j["left"] = t.left;
  j["right"] = t.right;
  j["theta"] = t.theta;
  j["stabilized"] = t.stabilized;
  j["e"] = t.e_used;
  nlohmann::json lens = nlohmann::json::object();
  for (const auto& [i, l] : t.tor_lengths) lens[std::to_string(i)] = l;
  j["tor_lengths"] = lens;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"workbench for matrix factorizations and the theta pairing over "
               "dimension-3 hypersurface rings"};
  app.require_subcommand(1);
  app.add_option("--input", cfg.input, "fixture file (ring/module/pair/ses/expect)");
  app.add_option("--format", cfg.format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--steps", cfg.steps, "resolution prefix length (default 8)");
  app.add_option("--window", cfg.window, "theta stabilization window (default 2)");
  app.add_option("--seed", cfg.seed, "seed for randomized constructions");
  app.add_option("--cache-dir", cfg.cache_dir, "on-disk resolution cache directory");
  app.add_option("--max-basis", cfg.max_basis, "basis size ceiling (default 20000)");
  app.add_option("--max-degree", cfg.max_degree,
                 "monomial total-degree ceiling (default 64)");
  app.add_flag("--deterministic", cfg.deterministic,
               "omit timing fields for byte-stable reports");

  std::string left, right, module_name, ring_mode = "R", ses_name, with_name, element;
  std::vector<std::string> avoid_texts;
  std::string corpus_dir;

  CLI::App* cmd_theta = app.add_subcommand("theta", "theta pairing of a module pair");
  cmd_theta->add_option("--left", left)->required();
  cmd_theta->add_option("--right", right)->required();

  CLI::App* cmd_chi = app.add_subcommand("chi", "Serre chi over S, with the theta identity");
  cmd_chi->add_option("--left", left)->required();
  cmd_chi->add_option("--right", right)->required();

  CLI::App* cmd_resolve = app.add_subcommand("resolve", "minimal free resolution prefix");
  cmd_resolve->add_option("--module", module_name)->required();
  cmd_resolve->add_option("--ring", ring_mode, "R or S")
      ->check(CLI::IsMember({"R", "S"}));

  CLI::App* cmd_depth = app.add_subcommand("depth", "depth and related invariants");
  cmd_depth->add_option("--module", module_name)->required();

  CLI::App* cmd_mf = app.add_subcommand("mf", "matrix factorization of an MCM module");
  cmd_mf->add_option("--module", module_name)->required();

  CLI::App* cmd_bourbaki =
      app.add_subcommand("bourbaki", "randomized Bourbaki sequence with avoidance");
  cmd_bourbaki->add_option("--module", module_name)->required();
  cmd_bourbaki->add_option("--avoid", avoid_texts,
                           "ideal to avoid, comma-separated generators (repeatable)");

  CLI::App* cmd_check = app.add_subcommand("check", "theorem checkers");
  cmd_check->require_subcommand(1);
  CLI::App* chk_endo = cmd_check->add_subcommand("endo", "endomorphism MCM criterion");
  chk_endo->add_option("--module", module_name)->required();
  CLI::App* chk_rig = cmd_check->add_subcommand("rigidity", "rigidity consequence");
  chk_rig->add_option("--left", left)->required();
  chk_rig->add_option("--right", right)->required();
  CLI::App* chk_lem = cmd_check->add_subcommand("lemma25", "Hom-MCM forces Ext vanishing");
  chk_lem->add_option("--left", left)->required();
  chk_lem->add_option("--right", right)->required();
  CLI::App* chk_add = cmd_check->add_subcommand("additivity", "theta bi-additivity on a ses");
  chk_add->add_option("--ses", ses_name)->required();
  chk_add->add_option("--with", with_name)->required();
  CLI::App* chk_prin =
      cmd_check->add_subcommand("principal", "theta vanishing on a principal class");
  chk_prin->add_option("--module", module_name)->required();
  chk_prin->add_option("--element", element)->required();
  CLI::App* chk_bridge =
      cmd_check->add_subcommand("bridge", "Ext1/Tor1 length bridge for MCM modules");
  chk_bridge->add_option("--left", left)->required();
  chk_bridge->add_option("--right", right)->required();
  CLI::App* chk_ufd = cmd_check->add_subcommand("ufd", "theta probe over all pairs");

  CLI::App* cmd_corpus = app.add_subcommand("corpus", "run every *.ring fixture in a directory");
  cmd_corpus->add_option("dir", corpus_dir, "corpus directory")->required();

  CLI::App* cmd_print = app.add_subcommand("print", "canonical reprint of the input file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.seed = cfg.seed;
  rep.flags = flags_json(cfg);
  ThetaOptions opts = theta_options(cfg);
  if (!cfg.cache_dir.empty()) ResolutionCache::instance().set_disk_dir(cfg.cache_dir);

  try {
    if (cmd_corpus->parsed()) {
      rep.command = "corpus " + corpus_dir;
      CorpusReport cr = run_corpus(corpus_dir, cfg.seed, opts);
      for (const FileReport& fr : cr.files) {
        for (const ExpectationResult& r : fr.results) {
          nlohmann::json j;
          j["op"] = r.spec.op;
          j["file"] = fr.name;
          if (!r.spec.on.empty()) j["on"] = r.spec.on;
          if (!r.spec.provenance.empty()) j["provenance"] = r.spec.provenance;
          j["expected"] = r.spec.value;
          j["measured"] = r.measured;
          j["matched"] = r.matched;
          rep.results.push_back(std::move(j));
        }
      }
      nlohmann::json summary;
      summary["op"] = "summary";
      summary["files"] = cr.files.size();
      summary["expectations"] = cr.total_expectations;
      summary["mismatches"] = cr.mismatches;
      if (!cr.note.empty()) summary["note"] = cr.note;
      rep.results.push_back(std::move(summary));
      rep.verdict = cr.pass ? "PASS" : "VIOLATION";
      emit(rep, cfg, start);
      return cr.pass ? 0 : 3;
    }

    ParsedInput in = load_input(cfg);
    rep.ring_fingerprint = in.ring->fingerprint();

    if (cmd_print->parsed()) {
      rep.command = "print";
      std::cout << print_input(in);
      return 0;
    }

    if (cmd_theta->parsed()) {
      rep.command = "theta " + left + " " + right;
      ThetaReport t = theta_pairing(in.module_named(left), in.module_named(right), left,
                                    right, opts);
      rep.results.push_back(theta_json(t));
      emit(rep, cfg, start);
      return 0;
    }
    if (cmd_chi->parsed()) {
      rep.command = "chi " + left + " " + right;
      ThetaChiVerdict v =
          theta_equals_chi_check(in.module_named(left), in.module_named(right), opts);
      nlohmann::json j;
      j["op"] = "chi";
      j["chi"] = v.chi;
      j["theta"] = v.theta;
      j["equal"] = v.equal;
      rep.results.push_back(std::move(j));
      emit(rep, cfg, start);
      return 0;
    }
    if (cmd_resolve->parsed()) {
      rep.command = "resolve " + module_name + " over " + ring_mode;
      const FPModule& m = in.module_named(module_name);
      ResolutionData res = ring_mode == "S"
                               ? resolve_over_S(m, 5, opts.gb)
                               : resolve_over_R(m, cfg.steps,
                                                std::max(opts.step_ceiling, cfg.steps),
                                                opts.gb);
      nlohmann::json j;
      j["op"] = "resolve";
      j["module"] = module_name;
      j["mode"] = ring_mode;
      j["betti"] = res.betti;
      j["twists"] = res.twists;
      j["complete"] = res.complete;
      if (ring_mode == "R") {
        try {
          j["periodicity_index"] = detect_periodicity(res);
        } catch (const IneligibleError&) {
          j["periodicity_index"] = "unresolved";
        }
      }
      rep.results.push_back(std::move(j));
      emit(rep, cfg, start);
      return 0;
    }
    if (cmd_depth->parsed()) {
      rep.command = "depth " + module_name;
      const FPModule& m = in.module_named(module_name);
      nlohmann::json j;
      j["op"] = "depth";
      j["module"] = module_name;
      j["depth"] = depth(m, opts.gb);
      j["pd_S"] = pd_over_S(m, opts.gb);
      j["mcm"] = is_mcm(m, opts.gb);
      j["krull_dim"] = krull_dim(m, opts.gb);
      rep.results.push_back(std::move(j));
      emit(rep, cfg, start);
      return 0;
    }
    if (cmd_mf->parsed()) {
      rep.command = "mf " + module_name;
      MatrixFactorization mf = matrix_factorization(in.module_named(module_name), opts.gb);
      auto mat_json = [&](const PolyMatrix& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.rows(); ++i) {
          nlohmann::json row = nlohmann::json::array();
          for (int j = 0; j < m.cols(); ++j)
            row.push_back(poly_to_string(m.at(i, j), in.ring->base));
          rows.push_back(row);
        }
        return rows;
      };
      nlohmann::json j;
      j["op"] = "mf";
      j["module"] = module_name;
      j["A"] = mat_json(mf.a);
      j["B"] = mat_json(mf.b);
      j["note"] = mf.note;
      j["size"] = mf.a.rows();
      rep.results.push_back(std::move(j));
      emit(rep, cfg, start);
      return 0;
    }
    if (cmd_bourbaki->parsed()) {
      rep.command = "bourbaki " + module_name;
      std::vector<Ideal> avoid;
      for (const std::string& text : avoid_texts) {
        Ideal p{in.ring, Mode::R, {}};
        std::istringstream is(text);
        std::string gen;
        while (std::getline(is, gen, ','))
          p.gens.push_back(parse_polynomial(gen, in.ring->base));
        avoid.push_back(std::move(p));
      }
      BourbakiResult b = bourbaki(in.module_named(module_name), avoid, cfg.seed, opts);
      nlohmann::json j;
      j["op"] = "bourbaki";
      j["module"] = module_name;
      j["seed"] = b.seed;
      j["attempts"] = b.attempts;
      j["quotient_gens"] = b.quotient.ngens();
      nlohmann::json emb = nlohmann::json::array();
      for (const Polynomial& e : b.embedding)
        emb.push_back(poly_to_string(e, in.ring->base));
      j["embedding"] = emb;
      j["note"] = b.note;
      rep.results.push_back(std::move(j));
      emit(rep, cfg, start);
      return 0;
    }
    if (cmd_check->parsed()) {
      TheoremReport t;
      if (chk_endo->parsed()) {
        rep.command = "check endo " + module_name;
        t = check_endo_mcm(in.module_named(module_name), module_name, opts);
      } else if (chk_rig->parsed()) {
        rep.command = "check rigidity " + left + " " + right;
        t = check_rigidity(in.module_named(left), in.module_named(right), left, right,
                           opts);
      } else if (chk_lem->parsed()) {
        rep.command = "check lemma25 " + left + " " + right;
        t = check_lemma25_instance(in.module_named(left), in.module_named(right), left,
                                   right, opts);
      } else if (chk_add->parsed()) {
        rep.command = "check additivity " + ses_name + " with " + with_name;
        ShortExactSequence s = build_ses(in, in.ses_named(ses_name));
        AdditivityVerdict v = theta_additivity_check(in.module_named(with_name), s, opts);
        t.id = "additivity";
        t.measured = nlohmann::json{
            {"sub", v.theta_sub}, {"mid", v.theta_mid}, {"quot", v.theta_quot}};
        t.verdict = Verdict::PASS;
      } else if (chk_prin->parsed()) {
        rep.command = "check principal " + module_name + " element " + element;
        Polynomial g = parse_polynomial(element, in.ring->base);
        int64_t v = theta_principal_vanishing(in.module_named(module_name), g, opts);
        t.id = "principal";
        t.measured = nlohmann::json{{"theta", v}};
        t.verdict = Verdict::PASS;
      } else if (chk_bridge->parsed()) {
        rep.command = "check bridge " + left + " " + right;
        BridgeVerdict v =
            ext1_tor1_bridge_check(in.module_named(left), in.module_named(right), opts);
        t.id = "bridge";
        t.measured =
            nlohmann::json{{"ext1_len", v.ext1_len}, {"tor1_len", v.tor1_len}};
        t.verdict = Verdict::PASS;
      } else if (chk_ufd->parsed()) {
        rep.command = "check ufd";
        std::vector<std::pair<const FPModule*, const FPModule*>> pairs;
        std::vector<std::pair<std::string, std::string>> names;
        for (const PairSpec& p : in.pairs) {
          pairs.emplace_back(&in.module_named(p.left), &in.module_named(p.right));
          names.emplace_back(p.left, p.right);
        }
        UfdProbeReport u = ufd_theta_probe(pairs, names, in.ring, opts);
        t.id = "ufd_probe";
        t.measured = nlohmann::json{{"pairs", u.pair_results},
                                    {"any_nonzero", u.any_nonzero},
                                    {"conclusion", u.conclusion}};
        t.verdict = Verdict::PASS;
      }
      nlohmann::json j = t.measured;
      j["op"] = "check " + t.id;
      j["verdict"] = verdict_name(t.verdict);
      if (!t.detail.empty()) j["detail"] = t.detail;
      rep.results.push_back(std::move(j));
      rep.verdict = verdict_name(t.verdict);
      emit(rep, cfg, start);
      return verdict_exit(t.verdict);
    }
  } catch (const Error& e) {
    rep.verdict = e.exit_code() == ExitCode::Ineligible
                      ? "INELIGIBLE"
                      : e.exit_code() == ExitCode::Violation ? "VIOLATION" : "ERROR";
    nlohmann::json j;
    j["op"] = "error";
    j["message"] = e.what();
    rep.results.push_back(std::move(j));
    emit(rep, cfg, start);
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    rep.verdict = "ERROR";
    nlohmann::json j;
    j["op"] = "error";
    j["message"] = e.what();
    rep.results.push_back(std::move(j));
    emit(rep, cfg, start);
    return 1;
  }
  std::cerr << "no subcommand dispatched\n";
  return 1;
}
