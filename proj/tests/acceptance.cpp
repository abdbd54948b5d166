// One line per acceptance criterion. Exit status is nonzero when any
// criterion fails, except for the known System1c rows of criterion 1, which
// are reported as FAIL but expected (their true minima are <= 2).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "judicious/assign.hpp"
#include "judicious/cli.hpp"
#include "judicious/highlow.hpp"
#include "judicious/lemma_solve.hpp"
#include "judicious/lemma_verify.hpp"

using namespace judicious;
namespace fs = std::filesystem;

namespace {

constexpr double kCertifyRuntime = 300;     // seconds, single-threaded full run
constexpr double kTableTolerance = 0.08;    // informational
constexpr double kSumSlack = 1e-9;          // sum q~ >= 2 - slack
constexpr double kPostCheckSlack = 1e-12;   // L_i(q_i) <= 8/27 + slack
constexpr double kOracleRuntime = 30;       // seconds
constexpr int kOracleInstances = 100000;
constexpr double kSystem2Tolerance = 1e-9;
constexpr double kJensenTolerance = 1e-12;
constexpr int kRandomMultigraphs = 1000;
constexpr std::uint64_t kPairCoreSeeds = 100;
constexpr std::uint64_t kK30Threshold = 2700;

int unexpected_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail, bool expected_fail = false) {
  std::cout << "criterion " << id << " " << name << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << '\n';
  if (!pass && !expected_fail) ++unexpected_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

void lemma_certification() {
  const auto t0 = std::chrono::steady_clock::now();
  verify::ReportOptions opt;
  opt.jobs = 1;
  opt.spot_checks = false;
  const auto rep = verify::full_report(opt);
  const double secs = seconds_since(t0);

  std::size_t certified = 0, near_table = 0, with_table = 0;
  std::set<std::size_t> failed_1c_rows;
  bool other_failures = false;
  for (const auto& b : rep.computed) {
    if (b.certified) ++certified;
    if (b.spec.table_bound) {
      ++with_table;
      if (std::abs(b.bound - *b.spec.table_bound) <= kTableTolerance) ++near_table;
    }
    if (!b.certified) {
      if (b.spec.system == verify::SystemId::k1c) {
        failed_1c_rows.insert(b.spec.row);
      } else {
        other_failures = true;
      }
    }
  }
  std::set<std::size_t> known;
  for (std::size_t r = 11; r <= 20; ++r) known.insert(r);
  const bool pass = certified == rep.computed.size() && secs <= kCertifyRuntime;
  const bool expected = !other_failures && failed_1c_rows == known && secs <= kCertifyRuntime;

  std::ostringstream d;
  d << certified << "/" << rep.computed.size() << " computed cases certified (bound > 2)";
  if (!failed_1c_rows.empty()) {
    d << "; failing: System1c rows";
    for (auto r : failed_1c_rows) d << ' ' << r;
    d << " (printed 1c domain admits points with sum q~ <= 2)";
  }
  d << "; " << near_table << "/" << with_table << " within " << kTableTolerance << " of table (informational)";
  d << "; " << fmt(secs, 3) << " s <= " << kCertifyRuntime << " s";
  report(1, "lemma certification", pass, d.str(), expected);
}

// Uniform composition of D into the ten profile counts, rejected until the
// nine b-constraints hold.
std::array<std::uint64_t, 10> sample_valid(std::mt19937_64& gen, std::uint64_t D) {
  std::uniform_int_distribution<std::uint64_t> cut(0, D);
  for (;;) {
    std::array<std::uint64_t, 11> cuts{};
    cuts[10] = D;
    for (int i = 1; i < 10; ++i) cuts[i] = cut(gen);
    std::sort(cuts.begin(), cuts.end());
    std::array<std::uint64_t, 10> v{};
    for (int i = 0; i < 10; ++i) v[i] = cuts[i + 1] - cuts[i];
    bool ok = true;
    constexpr std::size_t others[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto i = others[k][0], j = others[k][1];
      const auto b = v[3 + k];
      if (b < 2 * v[i] || b < 2 * v[j] || 2 * b < v[k]) ok = false;
    }
    if (ok) return v;
  }
}

void lemma_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(20240601);
  int failures = 0;
  double worst_sum = 3, worst_post = -1;
  for (int it = 0; it < kOracleInstances; ++it) {
    const auto v = sample_valid(gen, 1000000);
    EdgeProfile p;
    p.x = {v[0], v[1], v[2]};
    p.b = {v[3], v[4], v[5]};
    p.a = {v[6], v[7], v[8]};
    p.c = v[9];
    p.m = 1000000;
    try {
      const auto inst = normalize(p);
      const auto t = solve_q(inst);
      const double s = t.qtilde[0] + t.qtilde[1] + t.qtilde[2];
      worst_sum = std::min(worst_sum, s);
      if (s < 2 - kSumSlack) ++failures;
      for (std::size_t i = 0; i < kParts; ++i) {
        const double excess = eval_L(inst, i, t.q[i]) - 8.0 / 27.0;
        worst_post = std::max(worst_post, excess);
        if (excess > kPostCheckSlack) ++failures;
      }
    } catch (const std::exception&) {
      ++failures;
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = failures == 0 && secs <= kOracleRuntime;
  report(2, "lemma oracle", pass,
         std::to_string(kOracleInstances) + " instances, " + std::to_string(failures) + " failures; min sum q~ " +
             fmt(worst_sum, 12) + "; max L_i - 8/27 " + fmt(worst_post, 3) + " <= " + fmt(kPostCheckSlack) + "; " +
             fmt(secs, 3) + " s <= " + fmt(kOracleRuntime) + " s");
}

void analytic_spot_checks() {
  const auto s2 = verify::spot_check_analytic("system2");
  double x1 = -1;
  for (std::size_t i = 0; i < s2.coords.size(); ++i) {
    if (s2.coords[i] == "x1") x1 = s2.worst_point[i];
  }
  const bool s2_ok = std::abs(s2.margin - 7.0 / 81.0) <= kSystem2Tolerance && std::abs(x1 - 2.0 / 11.0) <= kSystem2Tolerance;

  const bool anchors = verify::lagrange_anchor_value() == Rational(23, 9) &&
                       verify::residual_anchor_value() == Rational(256, 2187) &&
                       verify::system2_chain_minimum() == Rational(88, 81);

  // a1 = a2 = a3 = 1/3 with every B_i = 0
  const auto& s = verify::builtin_system(verify::SystemId::k1a);
  const auto rc = verify::reduce(s, std::array<std::size_t, 3>{0, 1, 2});
  std::vector<Rational> point(rc.dims(), Rational(1, 3));
  double jensen = 0;
  for (std::size_t i = 0; i < kParts; ++i) {
    jensen += qtilde(rc.linear[i].eval(std::span<const Rational>(point)).to_double(),
                     rc.quadratic[i].eval(std::span<const Rational>(point)).to_double(), 0);
  }
  const bool jensen_ok = std::abs(jensen - 2) <= kJensenTolerance;

  std::size_t passed = 0;
  const auto names = verify::analytic_case_names();
  for (const auto& n : names) passed += verify::spot_check_analytic(n).passed ? 1 : 0;

  report(3, "analytic spot checks", s2_ok && anchors && jensen_ok && passed == names.size(),
         "System2 margin " + fmt(s2.margin, 12) + " vs 7/81 at x1 = " + fmt(x1, 12) + " (tol " +
             fmt(kSystem2Tolerance) + "); anchors 23/9, 256/2187, 88/81 " + (anchors ? "exact" : "WRONG") +
             "; Jensen sum q~ " + fmt(jensen, 15) + " (tol " + fmt(kJensenTolerance) + "); " + std::to_string(passed) +
             "/" + std::to_string(names.size()) + " spot checks hold");
}

PartitionCounts brute_counts(const HighMultigraph& g, const std::vector<PartId>& part) {
  PartitionCounts c;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (part[u] == part[v]) {
        c.x[part[u]] += g.weight(u, v);
      } else {
        c.b[3 - part[u] - part[v]] += g.weight(u, v);
      }
    }
  }
  return c;
}

void partitioner_certificates() {
  std::mt19937_64 gen(2024);
  std::size_t random_violations = 0;
  for (int it = 0; it < kRandomMultigraphs; ++it) {
    const std::size_t n = 1 + gen() % 12;
    HighMultigraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) g.add(u, v, gen() % 61);
    const auto p = local_search_partition(g, it);
    if (!check_partition_inequalities(p.counts).all_nonnegative()) ++random_violations;
  }

  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) slots.emplace_back(u, v);
  std::size_t graphs = 0, exhaustive_bad = 0;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    if (__builtin_popcount(mask) > 8) continue;
    HighMultigraph g(6);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1u) g.add(slots[s].first, slots[s].second);
    ++graphs;
    std::uint64_t best = 0;
    std::vector<PartId> part(6), best_part(6);
    for (int code = 0; code < 729; ++code) {
      int c = code;
      for (auto& x : part) x = static_cast<PartId>(c % 3), c /= 3;
      const auto obj = brute_counts(g, part).objective();
      if (obj > best) best = obj, best_part = part;
    }
    const auto p = local_search_partition(g, mask);
    if (p.objective() > best) ++exhaustive_bad;
    if (!check_partition_inequalities(p.counts).all_nonnegative()) ++exhaustive_bad;
    if (!check_partition_inequalities(brute_counts(g, best_part)).all_nonnegative()) ++exhaustive_bad;
  }
  report(4, "partitioner certificates", random_violations == 0 && exhaustive_bad == 0,
         std::to_string(random_violations) + " violations on " + std::to_string(kRandomMultigraphs) +
             " random multigraphs; " + std::to_string(exhaustive_bad) + " bad of " + std::to_string(graphs) +
             " exhaustive 6-vertex graphs");
}

void pair_core() {
  const auto h = gen_pair_core(200);
  std::uint64_t worst = h.num_edges();
  for (std::uint64_t seed = 0; seed < kPairCoreSeeds; ++seed) {
    cli::PartitionConfig cfg;
    cfg.seed = seed;
    worst = std::min<std::uint64_t>(worst, cli::run_partition(h, cfg).best.min_coverage());
  }
  report(5, "pair-core(200)", worst == 200 && h.num_edges() == 200,
         "min coverage over seeds 0.." + std::to_string(kPairCoreSeeds - 1) + " = " + std::to_string(worst) +
             " (m = " + std::to_string(h.num_edges()) + ")");
}

void complete_k30() {
  const auto h = gen_complete(30);
  const auto run = cli::run_partition(h, cli::PartitionConfig{});
  const auto inst = normalize(run.profile);
  double expect = 1e18;
  for (std::size_t i = 0; i < kParts; ++i) expect = std::min(expect, expected_coverage(inst, run.profile, run.q, i));
  const double floor = 19.0 / 27.0 * static_cast<double>(run.profile.m - run.profile.e3);
  const auto got = run.best.min_coverage();
  report(6, "K30 best of 100", got >= kK30Threshold && expect >= floor,
         "min coverage " + std::to_string(got) + " >= " + std::to_string(kK30Threshold) + " (m = " +
             std::to_string(h.num_edges()) + ", min expected " + fmt(expect) + " >= 19/27 (m - e3) = " + fmt(floor) +
             ")");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Runs a command and returns everything it wrote: stdout, stderr and every
// file below `dir`.
std::string capture(std::vector<std::string> args, const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  args.insert(args.begin(), "judicious");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  std::string all = std::to_string(code) + '\n' + out.str() + '\n' + err.str();
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(fs::relative(e.path(), dir));
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) all += "\n--- " + f.string() + "\n" + slurp(dir / f);
  return all;
}

void reproducibility() {
  const fs::path root = fs::temp_directory_path() / ("judicious_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(root);
  const fs::path graph = root / "random.txt";
  capture({"gen", "random", "--n", "60", "--m", "2000", "--seed", "9", "--out", graph.string()}, root / "g");

  const std::vector<std::vector<std::string>> commands = {
      {"gen", "random", "--n", "60", "--m", "2000", "--seed", "9"},
      {"gen", "complete", "--n", "12"},
      {"gen", "paircore", "--k", "50"},
      {"partition", graph.string(), "--seed", "4", "--trials", "200", "--jobs", "0", "--out", "@/p", "--json", "@/p.json"},
      {"verify-lemma", "--systems", "1a,1e", "--jobs", "0", "--out", "@/v"},
      {"verify-lemma", "--systems", "1a", "--epsilon", "0.1"},
  };
  std::size_t identical = 0;
  for (const auto& cmd : commands) {
    std::array<std::string, 2> outputs;
    for (int r = 0; r < 2; ++r) {
      const fs::path dir = root / ("run" + std::to_string(r));
      auto args = cmd;
      for (auto& a : args) {
        if (a.starts_with("@")) a = (dir / a.substr(2)).string();
      }
      outputs[r] = capture(args, dir);
      // paths differ between runs; compare with them masked
      const std::string d = dir.string();
      for (std::size_t pos; (pos = outputs[r].find(d)) != std::string::npos;) outputs[r].replace(pos, d.size(), "@");
    }
    if (outputs[0] == outputs[1]) ++identical;
  }
  fs::remove_all(root);
  report(7, "reproducibility", identical == commands.size(),
         std::to_string(identical) + "/" + std::to_string(commands.size()) +
             " commands byte-identical across two runs (stdout, stderr, exit code, output files)");
}

}  // namespace

int main() {
  lemma_certification();
  lemma_oracle();
  analytic_spot_checks();
  partitioner_certificates();
  pair_core();
  complete_k30();
  reproducibility();
  return unexpected_failures == 0 ? 0 : 1;
}
