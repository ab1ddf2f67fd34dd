#include "flagj/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "flagj/classify.hpp"
#include "flagj/errors.hpp"
#include "flagj/nijenhuis.hpp"
#include "flagj/twisted.hpp"

namespace flagj {

namespace {

RegularElement regular_element(const RunConfig& cfg, const RootSystem& rs) {
  return cfg.H ? *cfg.H : RegularElement::ones(rs.rank());
}

BruteForceOptions oracle_options(const CliOptions& opts) { return {opts.max_rank, false}; }

Json header(const std::string& command, const RootSystem& rs) {
  return Json{{"command", command}, {"algebra", rs.spec().name()}};
}

Json root_names(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  Json out = Json::array();
  for (std::size_t r : roots) out.push_back(rs.name(r));
  return out;
}

Json simple_names(const RootSystem& rs, const std::vector<std::size_t>& positions) {
  Json out = Json::array();
  for (std::size_t i : positions) out.push_back(rs.name(rs.simple_index(i)));
  return out;
}

Json signed_names(const RootSystem& rs, const std::vector<SignedRoot>& roots) {
  Json out = Json::array();
  for (const SignedRoot& r : roots) out.push_back(rs.name(r));
  return out;
}

std::string join(const Json& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n.get<std::string>();
  return "{" + out + "}";
}

Json verdict_json(const RootSystem& rs, const Triple& t, const TripleVerdict& v) {
  Json out{{"triple", rs.triple_name(t)}, {"status", v.integrable ? "integrable" : "obstructed"}, {"reason", v.reason}};
  if (v.residuals) out["residuals"] = Json::array({(*v.residuals)[0].str(), (*v.residuals)[1].str()});
  return out;
}

Json witness_json(const RootSystem& rs, const std::vector<GeneralizedVector>& vs, const BruteForceResult& r) {
  Json out{{"integrable", r.integrable}, {"evaluated", r.evaluated}};
  if (r.witness) {
    out["witness"] = Json{{"vectors", Json::array({vs[r.witness->i].str(rs), vs[r.witness->j].str(rs),
                                                   vs[r.witness->k].str(rs)})},
                          {"value", r.witness->value.str()}};
  }
  return out;
}

void oracle_mismatch(CommandResult& res, const std::string& what) {
  res.exit_code = exit_code::oracle_mismatch;
  res.report["oracle_disagreement"] = what;
  res.text += "ORACLE DISAGREEMENT: " + what + "\n";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

}  // namespace

CommandResult cmd_check(const RunConfig& cfg, const CliOptions& opts) {
  if (!cfg.structure) throw InputError("check needs a \"structure\" in the config");
  const RootSystem rs = build_root_system(cfg.algebra);
  const Structure& s = *cfg.structure;
  const IntegrabilityReport report = is_integrable(s, rs);

  CommandResult res;
  res.report = header("check", rs);
  res.report["integrable"] = report.integrable;
  Json triples = Json::array();
  std::ostringstream text;
  text << "algebra " << rs.spec().name() << "\n";
  std::size_t width = 8;
  for (const Triple& t : rs.triples()) width = std::max(width, rs.triple_name(t).size() + 2);
  for (const Triple& t : rs.triples()) {
    const TripleVerdict v = triple_status(s.blocks[t.a], s.blocks[t.b], s.blocks[t.sum]);
    triples.push_back(verdict_json(rs, t, v));
    text << pad(rs.triple_name(t), width) << pad(v.integrable ? "ok" : "obstructed", 12) << v.reason;
    if (v.residuals) text << "  residuals " << (*v.residuals)[0] << ", " << (*v.residuals)[1];
    text << "\n";
  }
  res.report["triples"] = triples;
  res.report["failing_triples"] = report.failures.size();
  if (report.integrable) {
    const ThetaData theta = extract_theta(s, rs);
    res.report["theta"] = signed_names(rs, theta.theta);
    res.report["simple_system"] = signed_names(rs, theta.simple_system);
    res.report["noncomplex_roots"] = root_names(rs, theta.noncomplex);
    res.report["positive_system"] = signed_selection_to_json(positive_system(s, rs), rs);
    text << "verdict: integrable, Theta = " << join(res.report["theta"]) << "\n";
    text << "positive system: " << join(res.report["positive_system"]) << "\n";
    text << "simple roots: " << join(res.report["simple_system"]) << "\n";
  } else {
    res.exit_code = exit_code::negative;
    text << "verdict: obstructed (" << report.failures.size() << " failing triple"
         << (report.failures.size() == 1 ? "" : "s") << ")\n";
  }
  res.text = text.str();

  if (opts.oracle) {
    const StructureConstants m = chevalley_constants(rs);
    const auto vs = global_eigenbasis(s);
    const BruteForceResult bf = is_integrable_bruteforce(s, m, regular_element(cfg, rs), oracle_options(opts));
    res.report["oracle"] = witness_json(rs, vs, bf);
    res.text += std::string("oracle: ") + (bf.integrable ? "integrable" : "obstructed") + " (" +
                std::to_string(bf.evaluated) + " triples evaluated)\n";
    if (bf.integrable != report.integrable) oracle_mismatch(res, "brute-force verdict differs from the triple table");
  }
  return res;
}

CommandResult cmd_construct(const RunConfig& cfg, const CliOptions& opts) {
  if (!cfg.theta) throw InputError("construct needs \"theta\" in the config");
  const RootSystem rs = build_root_system(cfg.algebra);
  CommandResult res;
  res.report = header("construct", rs);
  res.report["theta"] = simple_names(rs, *cfg.theta);
  Structure s;
  try {
    s = construct_from_theta(rs, *cfg.theta, cfg.seeds, cfg.signs);
  } catch (const ConstructionError& e) {
    res.exit_code = exit_code::negative;
    res.report["error"] = e.what();
    res.text = std::string("construction failed: ") + e.what() + "\n";
    return res;
  }
  const bool propagation_agrees = propagate(rs, *cfg.theta, cfg.seeds, cfg.signs) == s;
  if (!propagation_agrees) throw InternalError("closed forms and height induction disagree");
  res.report["structure"] = structure_to_json(s, rs);
  res.report["integrable"] = is_integrable(s, rs).integrable;
  res.report["propagation_agrees"] = propagation_agrees;

  std::ostringstream text;
  text << "algebra " << rs.spec().name() << ", Theta = " << join(res.report["theta"]) << "\n";
  std::size_t width = 6;
  for (std::size_t r = 0; r < rs.size(); ++r) width = std::max(width, rs.name(r).size() + 2);
  for (std::size_t r = 0; r < rs.size(); ++r) text << pad(rs.name(r), width) << describe(s.blocks[r]) << "\n";
  text << "integrable: yes\n";
  res.text = text.str();

  if (opts.oracle) {
    const StructureConstants m = chevalley_constants(rs);
    const auto vs = global_eigenbasis(s);
    const BruteForceResult bf = is_integrable_bruteforce(s, m, regular_element(cfg, rs), oracle_options(opts));
    res.report["oracle"] = witness_json(rs, vs, bf);
    res.text += std::string("oracle: ") + (bf.integrable ? "integrable" : "obstructed") + "\n";
    if (!bf.integrable) oracle_mismatch(res, "constructed structure fails the brute-force check");
  }
  return res;
}

CommandResult cmd_twist(const RunConfig& cfg, const CliOptions& opts) {
  if (!cfg.structure) throw InputError("twist needs a \"structure\" in the config");
  if (!cfg.omega && !opts.solve) throw InputError("twist needs an \"omega\" in the config or --solve");
  const RootSystem rs = build_root_system(cfg.algebra);
  const StructureConstants m = chevalley_constants(rs);
  const Structure& s = *cfg.structure;
  const RegularElement h = regular_element(cfg, rs);
  CommandResult res;
  res.report = header("twist", rs);
  std::ostringstream text;
  text << "algebra " << rs.spec().name() << "\n";

  const auto twisted_oracle = [&](const InvariantThreeForm& om) {
    check_rank_cap(rs, oracle_options(opts));
    const auto vs = global_eigenbasis(s);
    const BruteForceResult bf =
        vanishes_on(vs, [&](const auto& x, const auto& y, const auto& z) { return nij_twisted(x, y, z, om, m, h); });
    return std::pair{bf, witness_json(rs, vs, bf)};
  };

  if (cfg.omega) {
    const InvariantThreeForm om = d_omega(*cfg.omega, m);
    const OmegaReport rep = is_omega_integrable(s, om, m);
    Json failures = Json::array();
    for (const auto& f : rep.failures) {
      Json jf{{"triple", rs.triple_name(f.triple)}, {"reason", f.reason}};
      if (f.required) jf["required"] = f.required->str();
      if (f.actual) jf["actual"] = f.actual->str();
      failures.push_back(jf);
    }
    res.report["given"] = Json{{"omega", two_form_to_json(*cfg.omega, rs)},
                               {"Omega", three_form_to_json(om, rs)},
                               {"omega_integrable", rep.integrable},
                               {"failures", failures}};
    text << "given omega: " << (rep.integrable ? "Omega-integrable" : "not Omega-integrable") << "\n";
    for (const auto& f : rep.failures) {
      text << "  " << rs.triple_name(f.triple) << "  " << f.reason;
      if (f.required) text << "  required " << *f.required << ", got " << *f.actual;
      text << "\n";
    }
    res.exit_code = rep.integrable ? exit_code::positive : exit_code::negative;
    if (opts.oracle) {
      auto [bf, js] = twisted_oracle(om);
      res.report["given"]["oracle"] = js;
      res.text += std::string("oracle (given omega): ") + (bf.integrable ? "integrable" : "obstructed") + "\n";
      if (bf.integrable != rep.integrable) oracle_mismatch(res, "twisted brute force differs for the given omega");
    }
  }

  if (opts.solve) {
    const SolveOmegaResult sol = solve_omega(s, m);
    Json js{{"feasible", sol.solution.has_value()}};
    if (sol.solution) {
      js["Omega"] = three_form_to_json(sol.solution->om, rs);
      js["Omega_is_zero"] = sol.solution->om.is_zero();
      if (sol.solution->w) js["omega"] = two_form_to_json(*sol.solution->w, rs);
      text << "solve: feasible\n";
      for (std::size_t k = 0; k < rs.triples().size(); ++k) {
        text << "  Omega(" << rs.triple_name(rs.triples()[k]) << ") = " << sol.solution->om.vals[k] << "\n";
      }
      if (sol.solution->w) {
        for (std::size_t r = 0; r < rs.size(); ++r) text << "  omega(" << rs.name(r) << ") = " << sol.solution->w->diag[r] << "\n";
      }
    } else {
      js["reason"] = sol.reason;
      js["blocking_triple"] = rs.triple_name(*sol.blocking);
      text << "solve: infeasible, " << sol.reason << " (" << rs.triple_name(*sol.blocking) << ")\n";
    }
    res.report["solve"] = js;
    if (!cfg.omega) res.exit_code = sol.solution ? exit_code::positive : exit_code::negative;
    if (opts.oracle) {
      // The infeasible case is probed with the Omega the solver would have emitted.
      const InvariantThreeForm om = sol.solution ? sol.solution->om : candidate_omega(s, m).om;
      auto [bf, jo] = twisted_oracle(om);
      res.report["solve"]["oracle"] = jo;
      res.text += std::string("oracle (solved Omega): ") + (bf.integrable ? "integrable" : "obstructed") + "\n";
      if (bf.integrable != sol.solution.has_value()) oracle_mismatch(res, "twisted brute force differs for the solved Omega");
    }
  }
  res.text = text.str() + res.text;
  return res;
}

SeedMap survey_seeds(const std::vector<std::size_t>& theta) {
  SeedMap seeds;
  for (std::size_t i : theta) seeds[i] = Seed{Rational(1, static_cast<long>(i) + 2), Rational(static_cast<long>(i) + 1)};
  return seeds;
}

std::size_t enumerate_sign_patterns(const RootSystem& rs, const std::vector<std::size_t>& theta,
                                    const std::function<void(const Structure&)>& visit) {
  Structure s = construct_from_theta(rs, theta, survey_seeds(theta));
  std::vector<bool> in_closure(rs.size(), false);
  for (std::size_t r : theta_closure(rs, theta)) in_closure[r] = true;
  // Every triple is checked once its sum, the member with the largest index, is assigned.
  const auto consistent = [&](std::size_t r) {
    for (std::size_t t : rs.triples_through(r)) {
      const Triple& tr = rs.triples()[t];
      if (tr.sum == r && !triple_status(s.blocks[tr.a], s.blocks[tr.b], s.blocks[tr.sum]).integrable) return false;
    }
    return true;
  };
  std::size_t count = 0;
  const std::function<void(std::size_t)> dfs = [&](std::size_t r) {
    if (r == rs.size()) {
      ++count;
      if (visit) visit(s);
      return;
    }
    if (in_closure[r]) {
      if (consistent(r)) dfs(r + 1);
      return;
    }
    for (int sign : {1, -1}) {
      s.blocks[r] = Complex{sign};
      if (consistent(r)) dfs(r + 1);
    }
  };
  dfs(0);
  return count;
}

CommandResult cmd_survey(const RunConfig& cfg, const CliOptions& opts) {
  const RootSystem rs = build_root_system(cfg.algebra);
  if (static_cast<int>(rs.rank()) > opts.max_rank) {
    throw InputError("survey is capped at rank " + std::to_string(opts.max_rank) + "; pass --max-rank to raise it");
  }
  std::optional<StructureConstants> m;
  if (opts.oracle) m = chevalley_constants(rs);
  const RegularElement h = regular_element(cfg, rs);

  CommandResult res;
  res.report = header("survey", rs);
  Json rows = Json::array();
  std::ostringstream text;
  text << "algebra " << rs.spec().name() << "\n";
  std::size_t total = 0;
  bool oracle_ok = true;
  const std::size_t subsets = std::size_t{1} << rs.rank();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::size_t> theta;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (mask & (std::size_t{1} << i)) theta.push_back(i);
    }
    std::size_t verified = 0;
    std::function<void(const Structure&)> visit;
    if (m) {
      visit = [&](const Structure& s) {
        if (is_integrable_bruteforce(s, *m, h, {opts.max_rank, false}).integrable) {
          ++verified;
        } else {
          oracle_ok = false;
        }
      };
    }
    const std::size_t patterns = enumerate_sign_patterns(rs, theta, visit);
    total += patterns;
    Json row{{"theta", simple_names(rs, theta)},
             {"closure_size", theta_closure(rs, theta).size()},
             {"sign_patterns", patterns}};
    if (m) row["oracle_verified"] = verified;
    rows.push_back(row);
    text << pad(join(row["theta"]), 24) << "closure " << pad(std::to_string(theta_closure(rs, theta).size()), 5)
         << "patterns " << patterns << "\n";
  }
  res.report["thetas"] = rows;
  res.report["total_patterns"] = total;
  text << "total admissible patterns: " << total << "\n";
  res.text = text.str();
  if (m && !oracle_ok) oracle_mismatch(res, "an admissible pattern fails the brute-force check");
  return res;
}

CommandResult cmd_rootsys(const RunConfig& cfg, const CliOptions&) {
  const RootSystem rs = build_root_system(cfg.algebra);
  const StructureConstants m = chevalley_constants(rs);
  CommandResult res;
  res.report = header("rootsys", rs);
  Json cartan = Json::array();
  for (Eigen::Index i = 0; i < rs.cartan().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < rs.cartan().cols(); ++j) row.push_back(rs.cartan()(i, j));
    cartan.push_back(row);
  }
  res.report["cartan"] = cartan;
  Json roots = Json::array();
  std::ostringstream text;
  text << "algebra " << rs.spec().name() << ", " << rs.size() << " positive roots, " << rs.triples().size()
       << " zero-sum triples\n";
  std::size_t width = 6;
  for (std::size_t r = 0; r < rs.size(); ++r) width = std::max(width, rs.name(r).size() + 2);
  for (std::size_t r = 0; r < rs.size(); ++r) {
    roots.push_back(Json{{"root", rs.name(r)}, {"height", rs.root(r).height()}, {"norm2", rs.norm2(r)}});
    text << pad(rs.name(r), width) << "height " << rs.root(r).height() << "  (r,r) = " << rs.norm2(r) << "\n";
  }
  res.report["positive_roots"] = roots;
  Json triples = Json::array();
  for (const Triple& t : rs.triples()) {
    const int n = m.chevalley({t.a, 1}, {t.b, 1});
    triples.push_back(Json{{"triple", rs.triple_name(t)}, {"N", n}, {"m", m.m({t.a, 1}, {t.b, 1}).str()}});
    text << pad(rs.triple_name(t), 30) << "N = " << n << "  m = " << m.m({t.a, 1}, {t.b, 1}) << "\n";
  }
  res.report["triples"] = triples;
  res.text = text.str();
  return res;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integrability checks for generalized almost complex structures on full flags"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string algebra;
  std::string config;
  std::string json_path;
  CliOptions opts;
  app.add_option("--algebra", algebra, "Lie algebra, e.g. A3, G2");
  app.add_option("--config", config, "JSON config file");
  app.add_flag("--oracle", opts.oracle, "cross-check with the brute-force Nijenhuis oracle");
  app.add_flag("--solve", opts.solve, "twist: solve for the twisting form");
  app.add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  app.add_option("--max-rank", opts.max_rank, "rank cap for brute force and survey")->check(CLI::PositiveNumber);

  using Command = CommandResult (*)(const RunConfig&, const CliOptions&);
  const std::vector<std::tuple<std::string, std::string, Command>> commands{
      {"check", "decide integrability of a structure", cmd_check},
      {"construct", "build the integrable structure attached to Theta and seeds", cmd_construct},
      {"twist", "Omega-twisted integrability", cmd_twist},
      {"survey", "count admissible sign patterns for every Theta", cmd_survey},
      {"rootsys", "dump the root system and structure constants", cmd_rootsys},
  };
  for (const auto& [name, help, fn] : commands) app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::positive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input_error;
  }

  try {
    RunConfig cfg;
    std::optional<AlgebraSpec> spec;
    if (!algebra.empty()) spec = AlgebraSpec::parse(algebra);
    if (!config.empty()) {
      cfg = parse_config(load_json_file(config), spec);
    } else if (spec) {
      cfg.algebra = *spec;
    } else {
      throw InputError("no algebra given (use --algebra or --config)");
    }
    CommandResult res;
    for (const auto& [name, help, fn] : commands) {
      if (app.got_subcommand(name)) res = fn(cfg, opts);
    }
    if (json_path == "-") {
      out << res.report.dump(2) << "\n";
    } else {
      out << res.text;
      if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw InputError("cannot write report to '" + json_path + "'");
        f << res.report.dump(2) << "\n";
      }
    }
    return res.exit_code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::input_error;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::internal_error;
  }
}

}  // namespace flagj
