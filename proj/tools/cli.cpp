#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include <typent/typent.hpp>

namespace typent::cli {

namespace {

struct Output {
  std::string path;
  std::string format = "json";
  unsigned threads = 0;
};

struct Outcome {
  Json result;
  bool pass = true;
  std::optional<Histogram> histogram;
};

Composite make_composite(const std::string& theory, int na, int nb) {
  if (theory == "quantum") {
    return compose(build_quantum(na), build_quantum(nb));
  }
  if (theory == "classical") {
    return compose(build_classical(na), build_classical(nb));
  }
  if (theory == "real-quantum") {
    return compose(build_real_quantum(na), build_real_quantum(nb));
  }
  throw Error(Errc::unsupported_composite, "unknown theory '" + theory + "'");
}

Face make_face(const std::string& which, int n, int nb) {
  if (which == "sym") {
    return sym_face(n);
  }
  if (which == "antisym") {
    return antisym_face(n);
  }
  if (which == "full") {
    return full_face(n, nb);
  }
  throw Error(Errc::range_error, "unknown face '" + which + "'");
}

int face_sign(const std::string& which) {
  if (which == "sym") {
    return 1;
  }
  if (which == "antisym") {
    return -1;
  }
  throw Error(Errc::range_error, "face must be sym or antisym");
}

Json with_sigma(const McReport& report) {
  Json j = report_json(report);
  if (report.prediction) {
    j["deviation_sigma"] = report.deviation_in_sigma();
    j["within_3_sigma"] = report.deviation_in_sigma() <= 3.0;
  }
  return j;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expected subsystem purity in probabilistic theories", "typent"};
  app.require_subcommand(1);
  app.fallthrough();
  Output output;
  app.add_option("--output,-o", output.path, "Write the report to this file instead of stdout");
  app.add_option("--format", output.format, "json, or csv for histograms")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", output.threads, "Worker threads (0: $" + std::string(kThreadsEnv) + " or all cores)");

  Json params = Json::object();
  std::function<Outcome()> action;

  // predict
  auto* predict = app.add_subcommand("predict", "Closed-form expected local purity");
  predict->require_subcommand(1);
  predict->fallthrough();

  struct {
    int ka = 0, kb = 0, na = 0, nb = 0, r = 0, kab = 0, n = 0, gram_samples = 20000;
    double p0 = 1.0, p_phi_mu = 0.0, mu_c = 0.0, tr = 1.0;
    std::string theory, face = "sym", gram = "analytic";
    std::uint64_t seed = 1;
  } pa;

  auto* p_main = predict->add_subcommand("main", "(K_A-1)/(K_A K_B-1) (N_A N_B-1)/(N_A-1) P0");
  p_main->add_option("--ka", pa.ka)->required();
  p_main->add_option("--kb", pa.kb)->required();
  p_main->add_option("--na", pa.na)->required();
  p_main->add_option("--nb", pa.nb)->required();
  p_main->add_option("--p0", pa.p0)->required();
  p_main->callback([&] {
    params = {{"ka", pa.ka}, {"kb", pa.kb}, {"na", pa.na}, {"nb", pa.nb}, {"p0", pa.p0}};
    action = [&] { return Outcome{prediction_json(predict_main(pa.ka, pa.kb, pa.na, pa.nb, pa.p0))}; };
  });

  auto* p_general = predict->add_subcommand("general", "Prediction through the joint invariant inner product");
  p_general->add_option("--theory", pa.theory)->required()->check(CLI::IsMember({"quantum", "classical"}));
  p_general->add_option("--na", pa.na)->required();
  p_general->add_option("--nb", pa.nb)->required();
  p_general->add_option("--p0", pa.p0)->required();
  p_general->add_option("--gram", pa.gram, "analytic or mc")->check(CLI::IsMember({"analytic", "mc"}));
  p_general->add_option("--gram-samples", pa.gram_samples);
  p_general->add_option("--seed", pa.seed);
  p_general->callback([&] {
    params = {{"theory", pa.theory}, {"na", pa.na}, {"nb", pa.nb}, {"p0", pa.p0}, {"gram", pa.gram}};
    if (pa.gram == "mc") {
      params["gram_samples"] = pa.gram_samples;
      params["seed"] = pa.seed;
    }
    action = [&] {
      const Composite comp = make_composite(pa.theory, pa.na, pa.nb);
      const Gram g = pa.gram == "mc"
                         ? invariant_gram(comp.joint(), GramOptions{pa.gram_samples, pa.seed, std::nullopt, 4000})
                         : analytic_gram(comp.joint());
      return Outcome{prediction_json(predict_general(comp, g, pa.p0))};
    };
  });

  auto* p_power = predict->add_subcommand("power-law", "predict main with K = N^r");
  p_power->add_option("--r", pa.r)->required();
  p_power->add_option("--na", pa.na)->required();
  p_power->add_option("--nb", pa.nb)->required();
  p_power->add_option("--p0", pa.p0)->required();
  p_power->callback([&] {
    params = {{"r", pa.r}, {"na", pa.na}, {"nb", pa.nb}, {"p0", pa.p0}};
    action = [&] { return Outcome{prediction_json(predict_power_law(pa.r, pa.na, pa.nb, pa.p0))}; };
  });

  auto* p_nlt = predict->add_subcommand("nonlocaltomo", "Composites with K_AB > K_A K_B");
  p_nlt->add_option("--theory", pa.theory, "real-quantum: derive the inputs")->check(CLI::IsMember({"real-quantum"}));
  p_nlt->add_option("--na", pa.na);
  p_nlt->add_option("--nb", pa.nb);
  p_nlt->add_option("--ka", pa.ka);
  p_nlt->add_option("--kab", pa.kab);
  p_nlt->add_option("--p-phi-mu", pa.p_phi_mu);
  p_nlt->add_option("--mu-c-norm-sq", pa.mu_c);
  p_nlt->add_option("--p0", pa.p0)->required();
  p_nlt->callback([&] {
    if (!pa.theory.empty()) {
      if (pa.na == 0 || pa.nb == 0) {
        throw CLI::ValidationError("--theory needs --na and --nb");
      }
      params = {{"theory", pa.theory}, {"na", pa.na}, {"nb", pa.nb}, {"p0", pa.p0}};
    } else {
      if (pa.ka == 0 || pa.kab == 0) {
        throw CLI::ValidationError("give --theory, or --ka, --kab, --p-phi-mu and --mu-c-norm-sq");
      }
      params = {{"ka", pa.ka}, {"kab", pa.kab}, {"p0", pa.p0}, {"p_phi_mu", pa.p_phi_mu}, {"mu_c_norm_sq", pa.mu_c}};
    }
    action = [&] {
      if (!pa.theory.empty()) {
        const Composite comp = make_composite(pa.theory, pa.na, pa.nb);
        const auto in = nonlocaltomo_inputs(comp, analytic_gram(comp.joint()));
        const Prediction p = predict_nonlocaltomo(in.ka, in.kab, pa.p0, in.p_phi_mu, in.mu_c_norm_sq);
        Json j = prediction_json(p);
        j["tr_purity_a"] = tr_from_purity(p.value, pa.na);
        return Outcome{j};
      }
      return Outcome{prediction_json(predict_nonlocaltomo(pa.ka, pa.kab, pa.p0, pa.p_phi_mu, pa.mu_c))};
    };
  });

  auto* p_symm = predict->add_subcommand("symm", "(1 + Tr w^2)(n +- 1)/(n^2 +- n + 2)");
  p_symm->add_option("--n", pa.n)->required();
  p_symm->add_option("--face", pa.face, "sym or antisym")->check(CLI::IsMember({"sym", "antisym"}));
  p_symm->add_option("--tr-purity", pa.tr)->required();
  p_symm->callback([&] {
    params = {{"n", pa.n}, {"face", pa.face}, {"tr_purity", pa.tr}};
    action = [&] { return Outcome{prediction_json(predict_symm(pa.n, face_sign(pa.face), pa.tr))}; };
  });

  auto* p_qface = predict->add_subcommand("qface", "Quantum face formula with the default probe");
  p_qface->add_option("--n", pa.n)->required();
  p_qface->add_option("--nb", pa.nb, "B levels for --face full");
  p_qface->add_option("--face", pa.face, "sym, antisym or full")->check(CLI::IsMember({"sym", "antisym", "full"}));
  p_qface->add_option("--tr-purity", pa.tr)->required();
  p_qface->callback([&] {
    params = {{"n", pa.n}, {"face", pa.face}, {"tr_purity", pa.tr}};
    if (pa.face == "full") {
      params["nb"] = pa.nb;
    }
    action = [&] {
      const Face face = make_face(pa.face, pa.n, pa.nb);
      return Outcome{prediction_json(predict_qface(face, default_probe(pa.n), pa.tr))};
    };
  });

  // estimate
  struct {
    std::string theory, face;
    int na = 0, nb = 0, n = 0, samples = kDefaultSamples;
    double p0 = 1.0, tr = 1.0;
    std::uint64_t seed = 0;
  } ea;
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo expected local purity");
  estimate->fallthrough();
  auto* e_theory = estimate->add_option("--theory", ea.theory)->check(
      CLI::IsMember({"quantum", "classical", "real-quantum"}));
  auto* e_face = estimate->add_option("--face", ea.face)->check(CLI::IsMember({"sym", "antisym"}));
  e_theory->excludes(e_face);
  estimate->add_option("--na", ea.na);
  estimate->add_option("--nb", ea.nb);
  estimate->add_option("--p0", ea.p0);
  estimate->add_option("--n", ea.n);
  estimate->add_option("--tr-purity", ea.tr);
  estimate->add_option("--samples", ea.samples);
  estimate->add_option("--seed", ea.seed)->required();
  estimate->callback([&] {
    if (ea.theory.empty() == ea.face.empty()) {
      throw CLI::ValidationError("give exactly one of --theory or --face");
    }
    if (!ea.theory.empty() && (ea.na == 0 || ea.nb == 0)) {
      throw CLI::ValidationError("--theory needs --na and --nb");
    }
    if (!ea.face.empty() && ea.n == 0) {
      throw CLI::ValidationError("--face needs --n");
    }
    if (!ea.theory.empty()) {
      params = {{"theory", ea.theory}, {"na", ea.na}, {"nb", ea.nb}, {"p0", ea.p0}};
    } else {
      params = {{"face", ea.face}, {"n", ea.n}, {"tr_purity", ea.tr}};
    }
    params["samples"] = ea.samples;
    params["seed"] = ea.seed;
    action = [&] {
      const EstimateOptions opts{ea.samples, ea.seed, output.threads, true};
      McReport report;
      if (!ea.theory.empty()) {
        const Composite comp = make_composite(ea.theory, ea.na, ea.nb);
        const Gram ga = analytic_gram(comp.a());
        const Gram gab = analytic_gram(comp.joint());
        report = estimate_expected_local_purity(comp, ga, gab, ea.p0, opts);
        Prediction p;
        if (comp.kind() == CompositeKind::tomographic) {
          p = predict_general(comp, gab, ea.p0);
        } else {
          const auto in = nonlocaltomo_inputs(comp, gab);
          p = predict_nonlocaltomo(in.ka, in.kab, ea.p0, in.p_phi_mu, in.mu_c_norm_sq);
        }
        report.formula_id = p.formula_id;
        report.prediction = p.value;
      } else {
        const Face face = make_face(ea.face, ea.n, ea.n);
        report = estimate_face_local_purity(face, ea.tr, opts);
        const Prediction p = predict_symm(ea.n, face_sign(ea.face), ea.tr);
        report.formula_id = p.formula_id;
        report.prediction = p.value;
      }
      return Outcome{with_sigma(report), true, report.histogram};
    };
  });

  // verify
  VerifyOptions vo;
  struct {
    std::string theory = "quantum", xs = "2,5,10";
    int na = 2, nb = 8;
    double p0 = 1.0;
  } ma;
  auto* verify = app.add_subcommand("verify", "Numerical checks of the identities");
  verify->require_subcommand(1);
  verify->fallthrough();
  verify->add_option("--seed", vo.seed);
  verify->add_option("--samples", vo.samples);
  auto add_verify = [&](const std::string& name, const std::string& help, std::function<Json(const VerifyOptions&)> f) {
    auto* sub = verify->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&, f, name] {
      params = {{"check", name}, {"seed", vo.seed}, {"samples", vo.samples}};
      action = [&, f] {
        vo.threads = output.threads;
        Json r = f(vo);
        const bool pass = r.at("pass").get<bool>();
        return Outcome{r, pass};
      };
    });
    return sub;
  };
  auto* v_pauli = add_verify("pauli-identities", "Complete-set, group-average and collision identities",
                             verify_pauli_identities);
  v_pauli->add_option("--states", vo.states);
  add_verify("gram-invariance", "Invariant inner products and irreducibility diagnostics", verify_gram_invariance);
  add_verify("classical-subsystem", "Centered classical subsystems and P(phi x mu)", verify_classical_subsystem);
  add_verify("boxworld", "PR-box purity and the normalization obstruction", verify_boxworld);
  auto* v_markov = verify->add_subcommand("markov-tail", "Markov bound on the local purity tail");
  v_markov->fallthrough();
  v_markov->add_option("--theory", ma.theory)->check(CLI::IsMember({"quantum", "classical", "real-quantum"}));
  v_markov->add_option("--na", ma.na);
  v_markov->add_option("--nb", ma.nb);
  v_markov->add_option("--p0", ma.p0);
  v_markov->add_option("--x", ma.xs, "Comma-separated x values");
  v_markov->callback([&] {
    params = {{"check", "markov-tail"}, {"theory", ma.theory}, {"na", ma.na}, {"nb", ma.nb},
              {"p0", ma.p0},           {"x", ma.xs},          {"seed", vo.seed}, {"samples", vo.samples}};
    action = [&] {
      const Composite comp = make_composite(ma.theory, ma.na, ma.nb);
      const McReport report = estimate_expected_local_purity(comp, analytic_gram(comp.a()),
                                                             analytic_gram(comp.joint()), ma.p0,
                                                             EstimateOptions{vo.samples, vo.seed, output.threads, true});
      Json checks = Json::array();
      bool pass = true;
      for (double x : parse_list(ma.xs)) {
        const MarkovTail m = markov_tail_check(report, x);
        pass = pass && m.pass;
        checks.push_back({{"x", m.x},
                          {"threshold", m.threshold},
                          {"empirical", m.empirical},
                          {"bound", m.bound},
                          {"slack", m.slack},
                          {"pass", m.pass}});
      }
      Json r;
      r["pass"] = pass;
      r["mean"] = report.mean;
      r["stderr"] = report.std_error;
      r["checks"] = checks;
      return Outcome{r, pass, report.histogram};
    };
  });

  // two-design
  int design_k = 1;
  auto* two = app.add_subcommand("two-design", "Clifford twirl against the projector formula");
  two->fallthrough();
  two->add_option("--k", design_k, "Qubit count (1, or 2)")->check(CLI::IsMember({1, 2}));
  two->callback([&] {
    params = {{"k", design_k}};
    action = [&] {
      const double dev = two_design_check(design_k);
      const double tol = 1e-12;
      Json r;
      r["k"] = design_k;
      r["max_deviation"] = dev;
      r["tolerance"] = tol;
      r["pass"] = dev <= tol;
      return Outcome{r, dev <= tol};
    };
  });

  // coin-record
  struct {
    int s0 = 1, samples = kDefaultSamples;
    std::uint64_t seed = 0;
  } ca;
  auto* coin = app.add_subcommand("coin-record", "Coin randomized by an environment holding a record");
  coin->fallthrough();
  coin->add_option("--s0", ca.s0)->required();
  coin->add_option("--samples", ca.samples);
  coin->add_option("--seed", ca.seed)->required();
  coin->callback([&] {
    params = {{"s0", ca.s0}, {"samples", ca.samples}, {"seed", ca.seed}};
    action = [&] {
      const auto res = coin_with_record(ca.s0, EstimateOptions{ca.samples, ca.seed, output.threads, true});
      Json r = with_sigma(res.report);
      r["face_purity"] = res.face_purity.value;
      return Outcome{r, true, res.report.histogram};
    };
  });

  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const auto& a : argv) {
    cargv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const Error& e) {
    err << "typent: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "typent: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string command;
  for (const auto* sub = app.get_subcommands().front(); sub != nullptr;) {
    command += (command.empty() ? "" : " ") + sub->get_name();
    const auto subs = sub->get_subcommands();
    sub = subs.empty() ? nullptr : subs.front();
  }

  std::ofstream file;
  if (!output.path.empty()) {
    file.open(output.path);
    if (!file) {
      err << "typent: cannot open " << output.path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = output.path.empty() ? out : file;

  if (output.format == "csv") {
    if (!outcome.histogram) {
      err << "typent: csv output is available for histograms only\n";
      return kExitUsage;
    }
    write_histogram_csv(sink, *outcome.histogram);
  } else {
    Json report;
    report["command"] = command;
    report["config"] = {{"argv", std::vector<std::string>(argv.begin() + 1, argv.end())}, {"parameters", params}};
    report["result"] = outcome.result;
    sink << report.dump(2) << '\n';
  }
  return outcome.pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace typent::cli
