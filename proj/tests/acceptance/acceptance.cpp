// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Run with a criterion number (e.g. `cffa_acceptance 2`) to run only that one.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cffa/color_coding.hpp"
#include "cffa/error.hpp"
#include "cffa/graph_classes.hpp"
#include "cffa/io.hpp"
#include "cffa/near_complete.hpp"
#include "cffa/oracle.hpp"
#include "cffa/reductions.hpp"
#include "cffa/sbmwis.hpp"
#include "cffa/structured.hpp"
#include "cffa/subset_convolution.hpp"
#include "oracles.hpp"

namespace {

using namespace cffa;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few mismatches and a running tally.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_ - failures_) + "/" + std::to_string(checks_) + " checks";
    if (!first_.empty()) s += " [" + first_ + "]";
    return s;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double millis(const std::function<void()>& run) {
  const auto start = Clock::now();
  run();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Best of up to three runs; runs over a second are timed once.
double best_millis(const std::function<void()>& run) {
  double best = millis(run);
  for (int i = 1; i < 3 && best < 1000.0; ++i) best = std::min(best, millis(run));
  return best;
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << x;
  return out.str();
}

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// A yes verdict must carry a certificate that passes both the library check
// and the definitional one.
bool certificate_ok(const Instance& inst, const SolveReport& r) {
  if (!r.feasible) return true;
  return r.certificate && verify_allocation(inst, *r.certificate) && testing::definitional_verify(inst, *r.certificate);
}

Outcome c1_oracle_equivalence() {
  const auto start = Clock::now();
  Rng rng(1001);
  Tally tally;
  const double probs[] = {0.2, 0.5, 0.8};
  int yes = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const int m = 1 + static_cast<int>(rng.below(8));
    const int n = static_cast<int>(rng.below(4));
    std::optional<int> cap;
    if (rng.chance(0.3)) cap = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    const auto inst =
        testing::random_instance_on(rng, testing::random_test_graph(rng, m, probs[iter % 3]), n, 10, 20, cap);
    const auto brute = brute_force_cffa(inst);
    const auto dp = subset_dp_cffa(inst);
    const auto fpt = solve_fpt_items(inst);
    const auto tag = "#" + std::to_string(iter);
    tally.check(brute.feasible == dp.feasible && dp.feasible == fpt.feasible, tag + " verdicts differ");
    tally.check(certificate_ok(inst, brute) && certificate_ok(inst, dp) && certificate_ok(inst, fpt),
                tag + " bad certificate");
    yes += brute.feasible;
  }
  const double elapsed = seconds_since(start);
  tally.check(elapsed < 60.0, "over 60 s");
  return {tally.ok(), "500 instances, " + std::to_string(yes) + " yes, " + fixed(elapsed) + " s, " + tally.summary()};
}

// Least-squares slope of log2(time) against m.
double fitted_exponent(const std::vector<int>& ms, const std::vector<double>& times) {
  const double k = static_cast<double>(ms.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const double x = ms[i], y = std::log2(times[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

// One shared utility row and eta above a third of the row total: three
// disjoint bundles can never all qualify, so every instance is a no-instance
// and neither solver can stop early.
Instance scaling_instance(int m, std::uint64_t seed) {
  GeneratorOptions options;
  options.agents = 3;
  options.u_max = 10;
  options.uniform = true;
  options.seed = seed;
  auto inst = gen_random(m, 0.3, options);
  Utility total = 0;
  for (int x = 0; x < m; ++x) total += inst.utility(0, x);
  return Instance(inst.agents(), inst.jobs(), inst.utilities(), inst.conflict(), total / 3 + 1);
}

Outcome c2_scaling() {
  const auto start = Clock::now();
  const std::vector<int> ms = {14, 16, 18, 20};
  constexpr int kPerSize = 5;
  std::vector<double> fpt_median, dp_median;
  Tally tally;
  for (int m : ms) {
    std::vector<double> fpt_times, dp_times;
    for (int rep = 0; rep < kPerSize; ++rep) {
      const auto inst = scaling_instance(m, 2000 + static_cast<std::uint64_t>(m * 10 + rep));
      SolveReport fpt, dp;
      fpt_times.push_back(best_millis([&] { fpt = solve_fpt_items(inst); }));
      dp_times.push_back(best_millis([&] { dp = subset_dp_cffa(inst); }));
      tally.check(!fpt.feasible && !dp.feasible, "m=" + std::to_string(m) + " unexpected yes");
    }
    fpt_median.push_back(median(fpt_times));
    dp_median.push_back(median(dp_times));
  }
  const double c_fpt = fitted_exponent(ms, fpt_median);
  const double c_dp = fitted_exponent(ms, dp_median);
  tally.check(c_fpt >= 0.8 && c_fpt <= 1.2, "fpt exponent out of range");
  tally.check(c_dp >= 1.4 && c_dp <= 1.8, "dp exponent out of range");
  const double elapsed = seconds_since(start);
  tally.check(elapsed < 600.0, "over 10 min");
  std::string medians;
  for (std::size_t i = 0; i < ms.size(); ++i)
    medians += " m=" + std::to_string(ms[i]) + ":" + fixed(fpt_median[i], 1) + "/" + fixed(dp_median[i], 1) + "ms";
  return {tally.ok(), "c_fpt=" + fixed(c_fpt, 3) + " c_dp=" + fixed(c_dp, 3) + " medians(fpt/dp)" + medians + ", " +
                          fixed(elapsed) + " s, " + tally.summary()};
}

Outcome c3_color_coding() {
  const auto start = Clock::now();
  Rng rng(1003);
  Tally tally;
  int yes = 0;
  std::uint64_t false_negatives = 0, false_positives = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const int m = 1 + static_cast<int>(rng.below(6));
    const int n = 1 + static_cast<int>(rng.below(2));
    const int s = std::min(m, 1 + static_cast<int>(rng.below(2)));
    const auto inst = testing::random_instance_on(rng, testing::random_test_graph(rng, m, rng.unit()), n, 10, 15, s);
    const bool expected = brute_force_cffa(inst).feasible;
    yes += expected;
    const auto tag = "#" + std::to_string(iter);

    const auto exhaustive = solve_exhaustive_colorings(inst);
    tally.check(exhaustive.feasible == expected, tag + " exhaustive colorings disagree");
    tally.check(certificate_ok(inst, exhaustive), tag + " bad exhaustive certificate");

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      ColorCodingOptions options;
      options.seed = seed * 7919 + static_cast<std::uint64_t>(iter);
      const auto r = solve_color_coding(inst, options);
      tally.check(!r.counters.count("budget_clipped") || r.counters.at("budget_clipped") == 0, tag + " budget clipped");
      tally.check(certificate_ok(inst, r), tag + " bad color-coding certificate");
      if (r.feasible && !expected) ++false_positives;
      if (!r.feasible && expected) ++false_negatives;
    }
  }
  tally.check(false_positives == 0, "false positives");
  tally.check(false_negatives == 0, "false negatives");
  const double elapsed = seconds_since(start);
  tally.check(elapsed < 300.0, "over 5 min");
  return {tally.ok(), "200 instances x 5 seeds, " + std::to_string(yes) + " yes, false+=" +
                          std::to_string(false_positives) + " false-=" + std::to_string(false_negatives) + ", " +
                          fixed(elapsed) + " s, " + tally.summary()};
}

Outcome c4_sbmwis_round_trip() {
  Rng rng(1004);
  Tally tally;
  int yes = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const int v = 1 + static_cast<int>(rng.below(12));
    auto src = testing::random_sbmwis(rng, testing::random_test_graph(rng, v, 0.2 + 0.6 * rng.unit()), 5, 9);
    src.target = std::max<std::int64_t>(src.target, 1);
    const auto expected = brute_force_sbmwis(src);
    const auto image = from_sbmwis(src);
    const auto r = brute_force_cffa(image);
    yes += expected.feasible;
    tally.check(r.feasible == expected.feasible, "#" + std::to_string(iter) + " verdicts differ");
    tally.check(certificate_ok(image, r), "#" + std::to_string(iter) + " bad certificate");
  }
  return {tally.ok(), "200 sources, " + std::to_string(yes) + " yes, " + tally.summary()};
}

bool witness_ok(const SbMwisInstance& inst, const SbMwisResult& r) {
  if (!r.feasible) return true;
  if (!r.witness || static_cast<int>(r.witness->size()) > inst.size_cap) return false;
  if (!testing::edge_scan_independent(inst.graph, *r.witness)) return false;
  std::int64_t w = 0;
  for (int x : *r.witness) w += static_cast<std::int64_t>(inst.weights[x]);
  return w >= inst.target;
}

Outcome c5_branching() {
  Rng rng(1005);
  Tally tally;
  std::uint64_t max_nodes = 0;
  auto run = [&](const SbMwisInstance& inst, const IndependenceFriendlyProfile& profile, const std::string& tag) {
    const auto r = solve_ifc_branching(inst, profile);
    tally.check(r.feasible == brute_force_sbmwis(inst).feasible, tag + " verdicts differ");
    tally.check(witness_ok(inst, r), tag + " bad witness");
    tally.check(r.nodes <= power(profile.f_inverse_at(inst.size_cap), inst.size_cap), tag + " node bound");
    max_nodes = std::max(max_nodes, r.nodes);
  };
  for (int iter = 0; iter < 300; ++iter) {
    const int v = 1 + static_cast<int>(rng.below(14));
    const auto inst = testing::random_sbmwis(rng, random_bipartite_graph(v, 0.2 + 0.5 * rng.unit(), rng.next()), 5, 12);
    run(inst, IndependenceFriendlyProfile::bipartite(), "bipartite #" + std::to_string(iter));
  }
  for (int iter = 0; iter < 300; ++iter) {
    const int v = 1 + static_cast<int>(rng.below(14));
    const auto g = random_degenerate_graph(v, 3, rng.next());
    if (degeneracy_order(g).degeneracy > 3) {
      tally.check(false, "generator left the class");
      continue;
    }
    run(testing::random_sbmwis(rng, g, 5, 12), IndependenceFriendlyProfile::degenerate(3),
        "3-degenerate #" + std::to_string(iter));
  }
  return {tally.ok(), "600 graphs, max nodes " + std::to_string(max_nodes) + ", " + tally.summary()};
}

Outcome c6_cluster() {
  Rng rng(1006);
  Tally tally;
  for (int iter = 0; iter < 300; ++iter) {
    const int v = 1 + static_cast<int>(rng.below(12));
    std::vector<std::vector<int>> cliques;
    auto g = testing::random_cluster_graph(rng, v, &cliques);
    const auto inst = testing::random_sbmwis(rng, std::move(g), 5, 10);
    const auto r = solve_sbmwis_cluster(inst, cliques);
    tally.check(r.feasible == brute_force_sbmwis(inst).feasible, "#" + std::to_string(iter) + " verdicts differ");
    tally.check(witness_ok(inst, r), "#" + std::to_string(iter) + " bad witness");
  }
  return {tally.ok(), "300 graphs, " + tally.summary()};
}

Outcome c7_structured() {
  Rng rng(1007);
  Tally tally;
  auto uniform_on = [&](ConflictGraph g) {
    const int n = 1 + static_cast<int>(rng.below(4));
    return testing::random_instance_on(rng, std::move(g), n, 8, 12, std::nullopt, true);
  };
  auto compare = [&](const Instance& inst, const SolveReport& r, const std::string& tag) {
    tally.check(r.feasible == brute_force_cffa(inst).feasible, tag + " verdicts differ");
    tally.check(certificate_ok(inst, r), tag + " bad certificate");
  };
  for (int iter = 0; iter < 300; ++iter) {
    const int m = 1 + static_cast<int>(rng.below(8));
    const int n = static_cast<int>(rng.below(5));
    const auto inst = testing::random_instance_on(rng, ConflictGraph::complete(m), n, 10, 10, std::nullopt);
    compare(inst, solve_complete_graph(inst), "complete #" + std::to_string(iter));
  }
  for (int iter = 0; iter < 300; ++iter) {
    const int m = 2 + static_cast<int>(rng.below(9));
    const int left = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
    const auto inst = uniform_on(gen_cluster({left, m - left}, {}).instance.conflict());
    compare(inst, solve_cluster_two_cliques_uniform(inst), "two-cliques #" + std::to_string(iter));
  }
  for (int iter = 0; iter < 200; ++iter) {
    GeneratorOptions options;
    options.seed = rng.next();
    const auto inst = uniform_on(gen_near_complete_regular(4 + 2 * static_cast<int>(rng.below(3)), options).conflict());
    compare(inst, solve_near_complete_uniform(inst), "(m-2)-regular #" + std::to_string(iter));
  }

  GeneratorOptions big;
  big.agents = 60;
  big.uniform = true;
  big.eta = 5;
  big.seed = 1007;
  const auto complete = gen_near_complete(200, 0, big);
  const auto two = gen_cluster({90, 110}, big).instance;
  const auto regular = gen_near_complete_regular(200, big);
  const double t1 = millis([&] { solve_complete_graph(complete); });
  const double t2 = millis([&] { solve_cluster_two_cliques_uniform(two); });
  const double t3 = millis([&] { solve_near_complete_uniform(regular); });
  tally.check(t1 < 1000.0, "complete graph over 1 s");
  tally.check(t2 < 1000.0, "two cliques over 1 s");
  tally.check(t3 < 1000.0, "(m-2)-regular over 1 s");
  return {tally.ok(), "300/300/200 instances, m=200 times " + fixed(t1) + "/" + fixed(t2) + "/" + fixed(t3) +
                          " ms, " + tally.summary()};
}

Outcome c8_counting() {
  Rng rng(1008);
  Tally tally;
  int enumerated = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const int m = 2 + static_cast<int>(rng.below(17));
    const std::uint64_t t = rng.below(std::min<std::uint64_t>(12, static_cast<std::uint64_t>(m) * (m - 1) / 2) + 1);
    const auto g = testing::graph_with_missing_edges(rng, m, t);
    const auto tag = "#" + std::to_string(iter);
    tally.check(g.missing_edge_count() == t, tag + " wrong t");
    const auto listed = enumerate_nontrivial_independent_sets(g);
    const double bound = 2.0 * static_cast<double>(t) * std::pow(2.0, 2 * ceil_sqrt(t));
    tally.check(static_cast<double>(listed.size()) <= bound, tag + " counting bound");
    tally.check(complement_view(g).degeneracy <= ceil_sqrt(4 * t), tag + " degeneracy bound");
    if (m <= 12) {
      ++enumerated;
      std::set<std::vector<int>> got;
      for (auto set : listed) {
        std::sort(set.begin(), set.end());
        got.insert(std::move(set));
      }
      tally.check(got.size() == listed.size() && got == testing::independent_sets_min2(g), tag + " set mismatch");
    }
  }
  return {tally.ok(), "500 graphs, " + std::to_string(enumerated) + " enumerated exhaustively, " + tally.summary()};
}

Instance random_near_complete(Rng& rng, std::uint64_t max_t) {
  const int m = 2 + static_cast<int>(rng.below(7));
  const std::uint64_t t = rng.below(std::min<std::uint64_t>(max_t, static_cast<std::uint64_t>(m) * (m - 1) / 2) + 1);
  const int n = static_cast<int>(rng.below(4));
  std::optional<int> cap;
  if (rng.chance(0.3)) cap = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
  return testing::random_instance_on(rng, testing::graph_with_missing_edges(rng, m, t), n, 8, 12, cap);
}

Outcome c9_near_complete() {
  Rng rng(1009);
  Tally tally;
  for (int iter = 0; iter < 300; ++iter) {
    const auto inst = random_near_complete(rng, 6);
    const auto r = solve_guess_per_agent(inst);
    tally.check(r.feasible == brute_force_cffa(inst).feasible, "guess #" + std::to_string(iter) + " verdicts differ");
    tally.check(certificate_ok(inst, r), "guess #" + std::to_string(iter) + " bad certificate");
  }
  for (int iter = 0; iter < 300; ++iter) {
    const auto inst = random_near_complete(rng, 5);
    const auto r = solve_partition_contract(inst);
    tally.check(r.feasible == brute_force_cffa(inst).feasible, "partition #" + std::to_string(iter) + " verdicts differ");
    tally.check(certificate_ok(inst, r), "partition #" + std::to_string(iter) + " bad certificate");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const auto inst = random_near_complete(rng, 5);
    tally.check(solve_guess_per_agent(inst).feasible == solve_partition_contract(inst).feasible,
                "overlap #" + std::to_string(iter) + " solvers disagree");
  }
  return {tally.ok(), "300+300 instances, 200 overlap, " + tally.summary()};
}

Outcome c10_reductions() {
  Tally tally;
  const auto partitions = testing::three_partition_corpus(16);
  for (const auto& src : partitions)
    tally.check(brute_force_cffa(from_3partition(src)).feasible == testing::three_partition_exhaustive(src),
                "3-Partition source differs");
  const auto matchings = testing::numerical_3dm_corpus(5);
  for (const auto& src : matchings)
    tally.check(brute_force_cffa(from_numerical_3dm(src)).feasible == testing::numerical_3dm_exhaustive(src),
                "N3DM source differs");
  Rng rng(1010);
  for (int iter = 0; iter < 200; ++iter) {
    const int m = 1 + static_cast<int>(rng.below(10));
    const auto g = testing::random_test_graph(rng, m, rng.unit());
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    tally.check(brute_force_cffa(from_independent_set(g, k)).feasible == testing::has_independent_set_of_size(g, k),
                "IS #" + std::to_string(iter) + " differs");
  }
  return {tally.ok(), std::to_string(partitions.size()) + " 3-Partition, " + std::to_string(matchings.size()) +
                          " N3DM, 200 IS sources, " + tally.summary()};
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string command = std::string(CFFA_CLI_PATH) + " " + args + " 2>&1";
  CliRun result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

// Blanks the elapsed field in JSON reports and the timing column in bench CSV.
std::string strip_elapsed(const std::string& text) {
  static const std::regex json_field(R"re("elapsed_ms"\s*:\s*[-+0-9.eE]+)re");
  std::string out = std::regex_replace(text, json_field, "\"elapsed_ms\": _");
  const auto header_end = out.find('\n');
  if (out.rfind("generator,", 0) != 0 || header_end == std::string::npos) return out;
  std::size_t column = 0;
  {
    std::istringstream header(out.substr(0, header_end));
    std::string cell;
    while (std::getline(header, cell, ',') && cell != "elapsed_ms_median") ++column;
  }
  std::istringstream lines(out);
  std::string line, rebuilt;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      if (ch == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += ch;
      }
    }
    cells.push_back(cell);
    if (column < cells.size()) cells[column] = "_";
    for (std::size_t i = 0; i < cells.size(); ++i) rebuilt += (i ? "," : "") + cells[i];
    rebuilt += '\n';
  }
  return rebuilt;
}

Outcome c11_determinism() {
  const auto dir = fs::temp_directory_path() / ("cffa_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto file = [&](const std::string& name) { return (dir / name).string(); };
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(file(name)) << text;
    return file(name);
  };

  const auto random = cli("gen random --jobs 9 --agents 3 --edge-prob 0.4 --eta 8 --seed 11");
  const auto capped = cli("gen random --jobs 7 --agents 2 --edge-prob 0.3 --eta 6 --cap 2 --seed 12");
  const auto near = cli("gen near-complete --jobs 8 --t 4 --agents 2 --eta 6 --seed 13");
  write("random.json", random.out);
  write("capped.json", capped.out);
  write("near.json", near.out);
  cli("solve --in " + file("random.json") + " --out " + file("cert.json"));
  write("3part.json", R"({"sizes":[4,4,4,4,4,4],"bound":12})");
  write("n3dm.json", R"({"x":[1,3],"y":[1,3],"z":[2,2],"bound":6})");
  write("is.json", R"({"vertices":5,"edges":[[0,1],[1,2],[2,3],[3,4]],"k":3})");
  write("sbmwis.json", R"({"vertices":4,"edges":[[0,1],[2,3]],"weights":[3,5,2,7],"k":2,"rho":10})");
  write("bench.json", R"({"rows":[{"generator":"random","jobs":8,"agents":2,"solver":"auto","seed":3},)"
                      R"({"generator":"cluster","clique_sizes":[3,4],"agents":2,"uniform":true,"solver":"cluster2u"},)"
                      R"({"generator":"near-complete","jobs":8,"t":3,"agents":2,"solver":"guess_tn"},)"
                      R"({"generator":"random","jobs":6,"agents":2,"bundle_cap":2,"solver":"color","solver_seed":5}]})");

  const std::vector<std::string> commands = {
      "gen random --jobs 9 --agents 3 --edge-prob 0.4 --eta 8 --seed 11",
      "gen cluster --sizes 3,4 --agents 2 --uniform --seed 14",
      "gen near-complete --jobs 8 --t 4 --agents 2 --eta 6 --seed 13",
      "gen regular --jobs 8 --agents 3 --seed 15",
      "solve --in " + file("random.json"),
      "solve --alg brute --in " + file("random.json"),
      "solve --alg subsetdp --in " + file("random.json"),
      "solve --alg subsetconv --in " + file("random.json"),
      "solve --alg color --seed 9 --in " + file("capped.json"),
      "solve --alg color --exhaustive --in " + file("capped.json"),
      "solve --alg guess_tn --in " + file("near.json"),
      "solve --alg partition_t --in " + file("near.json"),
      "solve --maximize --in " + file("random.json"),
      "verify --in " + file("random.json") + " --cert " + file("cert.json"),
      "reduce 3partition --in " + file("3part.json"),
      "reduce n3dm --in " + file("n3dm.json"),
      "reduce is --in " + file("is.json"),
      "reduce sbmwis --in " + file("sbmwis.json"),
      "bench --spec " + file("bench.json"),
  };
  Tally tally;
  tally.check(random.status == 0 && capped.status == 0 && near.status == 0, "generators failed");
  for (const auto& command : commands) {
    const auto first = cli(command);
    const auto second = cli(command);
    const auto name = command.substr(0, command.find(" --in"));
    tally.check(first.status == second.status, name + ": exit codes differ");
    tally.check(first.status <= 1, name + ": exit " + std::to_string(first.status));
    tally.check(!first.out.empty(), name + ": no output");
    tally.check(strip_elapsed(first.out) == strip_elapsed(second.out), name + ": output differs");
  }
  fs::remove_all(dir);
  return {tally.ok(), std::to_string(commands.size()) + " commands run twice, " + tally.summary()};
}

struct Criterion {
  int number;
  const char* name;
  Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", c1_oracle_equivalence},
      {2, "subset convolution scaling", c2_scaling},
      {3, "color coding vs brute force", c3_color_coding},
      {4, "Sb-MWIS embedding round trip", c4_sbmwis_round_trip},
      {5, "independence-friendly branching", c5_branching},
      {6, "cluster Sb-MWIS", c6_cluster},
      {7, "structured polynomial solvers", c7_structured},
      {8, "near-complete counting bounds", c8_counting},
      {9, "near-complete solvers", c9_near_complete},
      {10, "reduction fixtures", c10_reductions},
      {11, "CLI determinism", c11_determinism},
  };
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += !outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " C" << c.number << " " << c.name << ": " << outcome.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
