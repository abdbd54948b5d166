#include "judicious/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "judicious/lemma_verify.hpp"

namespace judicious::cli {

namespace fs = std::filesystem;

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  return f;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

struct VerifyOptions {
  std::string epsilon;
  std::string systems;
  int jobs = 1;
  std::string out_dir;
};

int cmd_verify_lemma(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  verify::ReportOptions ro;
  ro.jobs = opt.jobs;
  if (!opt.epsilon.empty()) {
    Rational eps;
    try {
      eps = Rational::parse(opt.epsilon);
    } catch (const std::exception&) {
      err << "error: bad --epsilon '" << opt.epsilon << "'\n";
      return kUsage;
    }
    if (eps.sign() <= 0) {
      err << "error: --epsilon must be positive\n";
      return kUsage;
    }
    ro.epsilon = eps;
  }
  if (!opt.systems.empty()) {
    std::stringstream ss(opt.systems);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto id = verify::parse_system_name(name);
      if (!id || *id == verify::SystemId::k1fPrime || *id == verify::SystemId::k2) {
        err << "error: unknown system '" << name << "' (expected 1a..1f)\n";
        return kUsage;
      }
      ro.systems.push_back(*id);
    }
  }

  const verify::CertificationReport report = verify::full_report(ro);
  if (opt.out_dir.empty()) {
    verify::write_text(out, report);
  } else {
    const fs::path dir(opt.out_dir);
    ensure_dir(dir);
    auto csv = open_output(dir / "report.csv");
    verify::write_csv(csv, report);
    auto txt = open_output(dir / "report.txt");
    verify::write_text(txt, report);
    out << "cases_computed=" << report.computed.size() << '\n'
        << "cases_analytic=" << report.analytic.size() << '\n'
        << "spot_checks=" << report.spot_checks.size() << '\n';
  }

  bool ok = true;
  for (const auto* f : report.failures()) {
    err << "FAILED " << verify::system_name(f->spec.system) << " [" << f->spec.label() << "] bound "
        << num(f->bound) << " at epsilon " << f->epsilon.str() << '\n';
    ok = false;
  }
  for (const auto& s : report.spot_checks) {
    if (s.passed) continue;
    err << "FAILED spot check " << s.name << " margin " << num(s.margin) << '\n';
    ok = false;
  }
  out << "status=" << (ok ? "certified" : "failed") << '\n';
  return ok ? kOk : kVerificationFailed;
}

struct PartitionOptions {
  std::string input;
  PartitionConfig config;
  std::string out_dir;
  std::string json;
};

int cmd_partition(const PartitionOptions& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << opt.input << '\n';
    return kIoError;
  }
  Hypergraph h;
  try {
    h = parse_hypergraph(in);
  } catch (const ParseError& e) {
    err << "error: " << opt.input << ": " << e.what() << '\n';
    return kIoError;
  }
  if (h.num_edges() == 0) {
    err << "error: m = 0, nothing to partition\n";
    return kUsage;
  }

  const PartitionRun run = run_partition(h, opt.config);
  write_summary(out, h, opt.config, run);
  if (!opt.out_dir.empty()) {
    const fs::path dir(opt.out_dir);
    ensure_dir(dir);
    auto part = open_output(dir / "partition.txt");
    write_partition(part, run.best);
    auto summary = open_output(dir / "summary.txt");
    write_summary(summary, h, opt.config, run);
  }
  if (!opt.json.empty()) {
    auto js = open_output(opt.json);
    js << summary_json(h, opt.config, run) << '\n';
  }
  return kOk;
}

struct GenOptions {
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string out_file;
};

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  Hypergraph h;
  try {
    if (opt.kind == "complete") {
      h = gen_complete(opt.n);
    } else if (opt.kind == "paircore") {
      h = gen_pair_core(opt.k);
    } else {
      h = gen_random(opt.n, opt.m, opt.seed);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (opt.out_file.empty()) {
    write_hypergraph(out, h);
  } else {
    auto f = open_output(opt.out_file);
    write_hypergraph(f, h);
  }
  return kOk;
}

}  // namespace

PartitionRun run_partition(const Hypergraph& h, const PartitionConfig& config) {
  PartitionRun run;
  run.split = split_high_low(h, config.alpha);
  const HighMultigraph g = build_multigraph(h, run.split);
  run.high = local_search_partition(g, config.seed);
  place_isolated_high(h, run.split, g, run.high);
  run.profile = compute_profile(h, run.split, run.high);
  try {
    run.q = solve_q(normalize(run.profile));
  } catch (const DegenerateInstance&) {
    // every edge is already placed; low vertices (if any) are isolated
    run.degenerate = true;
    run.q.q = {1, 1, 0};
    run.q.qtilde = {1, 1, 1};
  }
  run.best = run_trials(h, run.split, run.high, run.q, config.trials, config.seed, config.jobs);
  run.concentration = concentration_report(h, run.split);
  return run;
}

void write_partition(std::ostream& out, const FullPartition& p) {
  for (std::size_t v = 0; v < p.assignment.size(); ++v) out << v << ' ' << p.assignment[v] + 1 << '\n';
}

void write_summary(std::ostream& out, const Hypergraph& h, const PartitionConfig& config, const PartitionRun& run) {
  const auto& prof = run.profile;
  const auto& conc = run.concentration;
  out << "n=" << h.num_vertices() << '\n'
      << "m=" << h.num_edges() << '\n'
      << "alpha=" << num(config.alpha) << '\n'
      << "t=" << run.split.t << '\n'
      << "e3=" << prof.e3 << '\n'
      << "c=" << prof.c << '\n';
  for (std::size_t i = 0; i < kParts; ++i) out << 'x' << i + 1 << '=' << prof.x[i] << '\n';
  out << "b23=" << prof.b[0] << "\nb13=" << prof.b[1] << "\nb12=" << prof.b[2] << '\n';
  for (std::size_t i = 0; i < kParts; ++i) out << 'a' << i + 1 << '=' << prof.a[i] << '\n';
  out << "degenerate=" << (run.degenerate ? 1 : 0) << '\n';
  for (std::size_t i = 0; i < kParts; ++i) out << "qtilde" << i + 1 << '=' << num(run.q.qtilde[i]) << '\n';
  for (std::size_t i = 0; i < kParts; ++i) out << 'q' << i + 1 << '=' << num(run.q.q[i]) << '\n';
  const auto p = run.q.p();
  for (std::size_t i = 0; i < kParts; ++i) out << 'p' << i + 1 << '=' << num(p[i]) << '\n';
  out << "trials=" << config.trials << '\n' << "seed=" << config.seed << '\n' << "best_trial=" << run.best.trial << '\n';
  for (std::size_t i = 0; i < kParts; ++i) out << "coverage" << i + 1 << '=' << run.best.coverage[i] << '\n';
  out << "min_coverage=" << run.best.min_coverage() << '\n'
      << "reference=" << num(19.0 / 27.0 * static_cast<double>(h.num_edges())) << '\n'
      << "expectation_floor=" << num(19.0 / 27.0 * static_cast<double>(prof.m - prof.e3)) << '\n'
      << "z=" << num(conc.z) << '\n'
      << "target=" << num(conc.target) << '\n'
      << "vacuous=" << (conc.vacuous ? 1 : 0) << '\n'
      << "low_degree_square_sum=" << num(conc.low_degree_square_sum) << '\n'
      << "low_degree_square_bound=" << num(conc.low_degree_square_bound) << '\n';
}

std::string summary_json(const Hypergraph& h, const PartitionConfig& config, const PartitionRun& run) {
  using nlohmann::json;
  const auto& prof = run.profile;
  json j;
  j["n"] = h.num_vertices();
  j["m"] = h.num_edges();
  j["alpha"] = config.alpha;
  j["t"] = run.split.t;
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["profile"] = {{"x", prof.x}, {"b23", prof.b[0]}, {"b13", prof.b[1]}, {"b12", prof.b[2]},
                  {"a", prof.a}, {"c", prof.c}, {"e3", prof.e3}};
  j["degenerate"] = run.degenerate;
  j["qtilde"] = run.q.qtilde;
  j["q"] = run.q.q;
  j["p"] = run.q.p();
  j["best_trial"] = run.best.trial;
  j["coverage"] = run.best.coverage;
  j["min_coverage"] = run.best.min_coverage();
  j["reference"] = 19.0 / 27.0 * static_cast<double>(h.num_edges());
  j["concentration"] = {{"z", run.concentration.z},
                        {"target", run.concentration.target},
                        {"vacuous", run.concentration.vacuous},
                        {"low_degree_square_sum", run.concentration.low_degree_square_sum},
                        {"low_degree_square_bound", run.concentration.low_degree_square_bound}};
  return j.dump(2);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"judicious 3-partitions of 3-uniform hypergraphs"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify-lemma", "certify the case tables of the key lemma");
  verify_cmd->add_option("--epsilon", vopt.epsilon, "box side for every computed case (default: per-table)");
  verify_cmd->add_option("--systems", vopt.systems, "comma-separated subset of 1a,1b,1c,1d,1e,1f");
  verify_cmd->add_option("--jobs", vopt.jobs, "threads (0 = all)")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--out", vopt.out_dir, "write report.csv and report.txt here");

  PartitionOptions popt;
  auto* part_cmd = app.add_subcommand("partition", "partition a hypergraph file");
  part_cmd->add_option("file", popt.input, "hypergraph in \"n m\" + edge-line format")->required();
  part_cmd->add_option("--alpha", popt.config.alpha, "high/low exponent, in (0, 1/3)");
  part_cmd->add_option("--trials", popt.config.trials, "random rounding trials")->check(CLI::PositiveNumber);
  part_cmd->add_option("--seed", popt.config.seed, "base seed");
  part_cmd->add_option("--jobs", popt.config.jobs, "threads (0 = all)")->check(CLI::NonNegativeNumber);
  part_cmd->add_option("--out", popt.out_dir, "write partition.txt and summary.txt here");
  part_cmd->add_option("--json", popt.json, "also write the summary as JSON");

  GenOptions gopt;
  auto* gen_cmd = app.add_subcommand("gen", "generate a hypergraph");
  gen_cmd->add_option("kind", gopt.kind, "complete | paircore | random")
      ->required()
      ->check(CLI::IsMember({"complete", "paircore", "random"}));
  gen_cmd->add_option("--n", gopt.n, "vertices (complete, random)");
  gen_cmd->add_option("--m", gopt.m, "edges (random)");
  gen_cmd->add_option("--k", gopt.k, "edges (paircore)");
  gen_cmd->add_option("--seed", gopt.seed, "seed (random)");
  gen_cmd->add_option("--out", gopt.out_file, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify_lemma(vopt, out, err);
    if (*part_cmd) {
      if (!(popt.config.alpha > 0 && popt.config.alpha < 1.0 / 3.0)) {
        err << "error: --alpha must lie in (0, 1/3)\n";
        return kUsage;
      }
      return cmd_partition(popt, out, err);
    }
    return cmd_gen(gopt, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace judicious::cli
