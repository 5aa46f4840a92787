#include "qcoh/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/divergence.hpp"
#include "qcoh/io.hpp"
#include "qcoh/verify.hpp"

namespace qcoh {

namespace {

Variant parse_variant(const std::string& s) { return s == "hat" ? Variant::hat : Variant::plain; }

const char* variant_str(Variant v) { return v == Variant::plain ? "plain" : "hat"; }

std::uint64_t default_seed() {
  const char* env = std::getenv("QCOH_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size()) throw InvalidConfig("");
    return v;
  } catch (const std::exception&) {
    throw InvalidConfig(std::string("QCOH_SEED is not an unsigned integer: ") + env);
  }
}

void require_same_dim(int a, int b, const std::string& what) {
  if (a != b) {
    throw DimensionMismatch(what + ": dimensions " + std::to_string(a) + " and " +
                            std::to_string(b) + " differ");
  }
}

Json state_json(const DensityMatrix& rho) {
  Json j;
  j["dim"] = rho.dim();
  j["matrix"] = matrix_to_json(rho.matrix());
  return j;
}

struct Outcome {
  std::string text;  // JSON document or JSON lines, newline terminated
  int code = kExitOk;
};

Outcome single(const Json& j) { return {j.dump() + "\n", kExitOk}; }

Outcome cmd_coherence(const std::string& path, const std::string& f_spec, Variant v) {
  const DensityMatrix rho = load_state(path);
  const GeneratorFunction f = parse_generator(f_spec);
  const CoherenceResult r = coherence(rho, f, v);
  Json j;
  j["f"] = r.f_name;
  j["variant"] = variant_str(r.variant);
  j["dim"] = rho.dim();
  j["value"] = r.value;
  j["eigenvalues"] = r.eigenvalues;
  j["diagonal"] = r.diagonal;
  return single(j);
}

Outcome cmd_entropy(const std::string& path, const std::string& f_spec, Variant v) {
  const DensityMatrix rho = load_state(path);
  const GeneratorFunction f = parse_generator(f_spec);
  Json j;
  j["f"] = f.name();
  j["variant"] = variant_str(v);
  j["dim"] = rho.dim();
  j["value"] = f_entropy(rho, f, v);
  return single(j);
}

Outcome cmd_divergence(const std::string& a_path, const std::string& b_path,
                       const std::string& f_spec) {
  const DensityMatrix a = load_state(a_path);
  const DensityMatrix b = load_state(b_path);
  const GeneratorFunction f = parse_generator(f_spec);
  require_same_dim(a.dim(), b.dim(), "divergence");
  Json j;
  j["f"] = f.name();
  j["value"] = to_json(quasi_relative_entropy(a, b, f));
  return single(j);
}

Outcome cmd_channel(const std::string& channel_spec, const std::string& state_path,
                    bool selective) {
  const KrausChannel ch = load_channel(channel_spec);
  const DensityMatrix rho = load_state(state_path);
  require_same_dim(ch.dim(), rho.dim(), "channel");
  Json j;
  j["channel"] = ch.label();
  if (!selective) {
    j["state"] = state_json(ch.apply(rho));
    return single(j);
  }
  Json outs = Json::array();
  for (const auto& o : selective_outcomes(ch, rho)) {
    Json e;
    e["index"] = o.index;
    e["probability"] = o.probability;
    e["state"] = o.post_state ? state_json(*o.post_state) : Json(nullptr);
    outs.push_back(std::move(e));
  }
  j["outcomes"] = std::move(outs);
  return single(j);
}

Outcome cmd_verify(const std::string& suite, const TrialConfig& cfg) {
  cfg.validate();
  std::vector<VerificationReport> reports;
  if (suite == "all") {
    reports = run_all(cfg);
  } else {
    reports.push_back(run_suite(suite, cfg));
  }
  Outcome o;
  for (const auto& r : reports) {
    o.text += to_json(r).dump() + "\n";
    if (!r.pass) o.code = kExitSuiteFailed;
  }
  return o;
}

Json check(const std::string& name, bool pass) {
  Json c;
  c["check"] = name;
  c["pass"] = pass;
  return c;
}

Outcome finish_demo(Json j, const Json& checks) {
  bool pass = true;
  for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
  j["checks"] = checks;
  j["pass"] = pass;
  return {j.dump() + "\n", pass ? kExitOk : kExitSuiteFailed};
}

Outcome demo_log_chain(std::uint64_t seed, int d) {
  const DensityMatrix rho = random_density(d, d, seed);
  const GeneratorFunction f = builtin_neg_log();
  const double entropy_gap = relative_entropy_coherence(rho);
  const double hat = coherence(rho, f, Variant::hat).value;
  const double rel = quasi_relative_entropy(rho, dephase(rho), f).value();
  Json j;
  j["demo"] = "log-chain";
  j["dim"] = d;
  j["seed"] = seed;
  j["entropy_gap"] = entropy_gap;
  j["coherence_hat_neg_log"] = hat;
  j["relative_entropy_to_dephased"] = rel;
  const double spread = std::max({entropy_gap, hat, rel}) - std::min({entropy_gap, hat, rel});
  j["spread"] = spread;
  return finish_demo(std::move(j), Json::array({check("all three agree within 1e-8", spread <= 1e-8)}));
}

Outcome demo_max_coherent(int d) {
  const DensityMatrix rho = max_coherent_state(d).as_density();
  Json rows = Json::array();
  Json checks = Json::array();
  for (const auto& spec : default_generator_specs()) {
    const GeneratorFunction f = parse_generator(spec);
    Json row;
    row["f"] = f.name();
    if (!f.monotone_decreasing() || !f.finite_at_zero_weight()) {
      row["applicable"] = false;
      rows.push_back(std::move(row));
      continue;
    }
    const double plain = coherence(rho, f, Variant::plain).value;
    const double hat = coherence(rho, f, Variant::hat).value;
    row["applicable"] = true;
    row["plain"] = plain;
    row["plain_bound"] = f(1.0 / d);
    row["hat"] = hat;
    row["hat_bound"] = -f(double(d));
    rows.push_back(std::move(row));
    checks.push_back(check(f.name() + " attains both bounds",
                           std::abs(plain - f(1.0 / d)) <= 1e-10 &&
                               std::abs(hat + f(double(d))) <= 1e-10));
  }
  Json j;
  j["demo"] = "max-coherent";
  j["dim"] = d;
  j["rows"] = std::move(rows);
  return finish_demo(std::move(j), checks);
}

Json gap_json(const SioVariantGap& g) {
  Json j;
  j["with_mixed"] = g.lhs;
  j["with_zero"] = g.rhs;
  j["gap"] = g.gap;
  return j;
}

Outcome demo_sio_separation(int d) {
  Json rows = Json::array();
  Json checks = Json::array();
  for (const auto& spec : default_generator_specs()) {
    const GeneratorFunction f = parse_generator(spec);
    Json row;
    row["f"] = f.name();
    SioCounterexample r;
    try {
      r = sio_counterexample_report(f, d);
    } catch (const UnsupportedLimit&) {
      row["applicable"] = false;
      rows.push_back(std::move(row));
      continue;
    }
    row["applicable"] = true;
    row["plain"] = gap_json(r.plain);
    row["hat"] = gap_json(r.hat);
    row["gap"] = r.gap;
    rows.push_back(std::move(row));
    if (f.name() == "neg_log") {
      checks.push_back(check("neg_log gap <= 1e-10", r.gap <= 1e-10));
    } else {
      checks.push_back(check(f.name() + " gap > 0.01", r.gap > 0.01));
    }
  }
  Json j;
  j["demo"] = "sio-separation";
  j["dim"] = d;
  j["rows"] = std::move(rows);
  return finish_demo(std::move(j), checks);
}

int report_error(std::ostream& err, int code, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"f-coherence and quasi-relative entropy toolkit", "qcoh"};
  app.require_subcommand(1, 1);

  std::string out_path;
  std::string f_spec = "neg_log";
  std::string variant = "plain";
  std::string state_a, state_b, channel_spec;
  bool selective = false;
  std::string suite = "all";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int trials = 1000;
  std::vector<int> dims;
  std::vector<std::string> f_list;
  std::string demo_name;
  int demo_dim = 0;

  const std::vector<std::string> variants{"plain", "hat"};
  auto add_out = [&](CLI::App* s) { s->add_option("--out", out_path, "write output to a file"); };

  auto* coh = app.add_subcommand("coherence", "f-coherence of a state file");
  coh->add_option("state", state_a, "state file")->required();
  coh->add_option("--f", f_spec, "generator spec")->capture_default_str();
  coh->add_option("--variant", variant)->check(CLI::IsMember(variants))->capture_default_str();
  add_out(coh);

  auto* ent = app.add_subcommand("entropy", "f-entropy of a state file");
  ent->add_option("state", state_a, "state file")->required();
  ent->add_option("--f", f_spec, "generator spec")->capture_default_str();
  ent->add_option("--variant", variant)->check(CLI::IsMember(variants))->capture_default_str();
  add_out(ent);

  auto* div = app.add_subcommand("divergence", "quasi-relative entropy S_f(A||B)");
  div->add_option("a", state_a, "state file A")->required();
  div->add_option("b", state_b, "state file B")->required();
  div->add_option("--f", f_spec, "generator spec")->capture_default_str();
  add_out(div);

  auto* chn = app.add_subcommand("channel", "apply a channel to a state");
  chn->add_option("channel", channel_spec, "channel file or depol-ext:d / erase-ext:d / dephase:d")
      ->required();
  chn->add_option("state", state_a, "state file")->required();
  chn->add_flag("--selective", selective, "list (p_n, rho_n) per Kraus operator");
  add_out(chn);

  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite)->check(CLI::IsMember(suites))->capture_default_str();
  ver->add_option("--seed", seed, "master seed (default: $QCOH_SEED or 1)")
      ->each([&](const std::string&) { seed_given = true; });
  ver->add_option("--trials", trials, "trials per case")->capture_default_str();
  ver->add_option("--dims", dims, "comma-separated dimensions")->delimiter(',');
  ver->add_option("--f", f_list, "comma-separated generator specs")->delimiter(',');
  add_out(ver);

  auto* dem = app.add_subcommand("demo", "bundled walkthroughs");
  dem->add_option("name", demo_name, "log-chain | sio-separation | max-coherent")
      ->required()
      ->check(CLI::IsMember({"log-chain", "sio-separation", "max-coherent"}));
  dem->add_option("--seed", seed, "seed for random states (default: $QCOH_SEED or 1)")
      ->each([&](const std::string&) { seed_given = true; });
  dem->add_option("--dim", demo_dim, "dimension")->check(CLI::Range(2, 8));
  add_out(dem);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Outcome result;
  try {
    if (!seed_given) seed = default_seed();
    if (*coh) {
      result = cmd_coherence(state_a, f_spec, parse_variant(variant));
    } else if (*ent) {
      result = cmd_entropy(state_a, f_spec, parse_variant(variant));
    } else if (*div) {
      result = cmd_divergence(state_a, state_b, f_spec);
    } else if (*chn) {
      result = cmd_channel(channel_spec, state_a, selective);
    } else if (*ver) {
      TrialConfig cfg;
      cfg.seed = seed;
      cfg.trials_per_case = trials;
      if (!dims.empty()) cfg.dims = dims;
      if (!f_list.empty()) cfg.f_list = f_list;
      result = cmd_verify(suite, cfg);
    } else if (*dem) {
      if (demo_name == "log-chain") {
        result = demo_log_chain(seed, demo_dim > 0 ? demo_dim : 3);
      } else if (demo_name == "max-coherent") {
        result = demo_max_coherent(demo_dim > 0 ? demo_dim : 4);
      } else {
        result = demo_sio_separation(demo_dim > 0 ? demo_dim : 2);
      }
    }
  } catch (const ParseError& e) {
    return report_error(err, kExitUsage, e);
  } catch (const InvalidConfig& e) {
    return report_error(err, kExitUsage, e);
  } catch (const ValidationError& e) {
    return report_error(err, kExitValidation, e);
  } catch (const UnsupportedLimit& e) {
    return report_error(err, kExitValidation, e);
  } catch (const SingularState& e) {
    return report_error(err, kExitValidation, e);
  } catch (const UnknownGenerator& e) {
    return report_error(err, kExitUnknownF, e);
  } catch (const ParamOutOfRange& e) {
    return report_error(err, kExitUnknownF, e);
  } catch (const DimensionMismatch& e) {
    return report_error(err, kExitDimension, e);
  } catch (const std::exception& e) {
    return report_error(err, kExitInternal, e);
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    f << result.text;
  } else {
    out << result.text;
  }
  if (result.code == kExitSuiteFailed) err << "error: one or more checks failed\n";
  return result.code;
}

}  // namespace qcoh
