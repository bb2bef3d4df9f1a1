// cffa: solve, verify, generate and benchmark conflict-free allocation instances.
//
// Exit codes: 0 yes / valid, 1 no / invalid, 2 input error, 3 capacity or
// budget error, 4 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cffa/bench.hpp"
#include "cffa/dispatch.hpp"
#include "cffa/error.hpp"
#include "cffa/io.hpp"
#include "cffa/reductions.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kYes = 0, kNo = 1, kInputError = 2, kCapacityError = 3, kInternalError = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) cffa::fail(cffa::ErrorKind::Parse, "IO", "cannot read '" + path + "'", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) cffa::fail(cffa::ErrorKind::Parse, "IO", "cannot write '" + out_path + "'", out_path);
  out << text;
}

int report_error(const cffa::Error& e) {
  json doc;
  doc["error"] = e.code();
  doc["kind"] = cffa::to_string(e.kind());
  doc["message"] = e.what();
  doc["where"] = e.where();
  std::cerr << doc.dump() << "\n";
  switch (e.kind()) {
    case cffa::ErrorKind::Capacity: return kCapacityError;
    case cffa::ErrorKind::Internal: return kInternalError;
    default: return kInputError;
  }
}

struct SolveArgs {
  std::string alg = "auto";
  std::string in, out;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> reps, budget;
  bool exhaustive = false;
  bool maximize = false;
};

int run_solve(const SolveArgs& args) {
  const auto inst = cffa::parse_instance(read_file(args.in));
  const auto algorithm = cffa::parse_algorithm(args.alg);
  if (!algorithm) cffa::fail(cffa::ErrorKind::Routing, "UNKNOWN_SOLVER", "unknown solver '" + args.alg + "'", "--alg");
  cffa::SolverChoice choice;
  choice.algorithm = *algorithm;
  choice.seed = args.seed;
  choice.repetitions = args.reps;
  choice.budget = args.budget;
  choice.exhaustive_colorings = args.exhaustive;

  if (!args.maximize) {
    const auto report = cffa::dispatch(inst, choice);
    emit(cffa::serialize_report(inst, report), args.out);
    return report.feasible ? kYes : kNo;
  }
  const auto best = cffa::maximize_eta(inst, choice);
  if (!best) {
    cffa::SolveReport none;
    none.algorithm = std::string(cffa::to_string(*algorithm));
    emit(cffa::serialize_report(inst, none), args.out);
    return kNo;
  }
  auto doc = json::parse(cffa::serialize_report(inst, best->second));
  doc["eta"] = best->first;
  emit(doc.dump(2) + "\n", args.out);
  return kYes;
}

int run_verify(const std::string& in, const std::string& cert_path, const std::string& out) {
  const auto inst = cffa::parse_instance(read_file(in));
  const auto cert = cffa::parse_certificate(read_file(cert_path), inst);
  json doc;
  if (!cert.allocation) {
    doc["valid"] = false;
    doc["reason"] = "certificate claims infeasibility; nothing to check";
    emit(doc.dump(2) + "\n", out);
    return kNo;
  }
  const bool valid = cffa::verify_allocation(inst, *cert.allocation);
  doc["valid"] = valid;
  json utilities = json::object();
  for (int a = 0; a < inst.agent_count(); ++a)
    utilities[inst.agents()[a]] = cffa::bundle_utility(inst, a, std::span<const int>(cert.allocation->bundles[a]));
  doc["utilities"] = std::move(utilities);
  emit(doc.dump(2) + "\n", out);
  return valid ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-free fair allocation solver"};
  app.require_subcommand(1);
  int code = kYes;

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance and print a report");
  solve_cmd->add_option("--alg", solve.alg, "auto, brute, subsetdp, subsetconv, color, complete, cluster2u, "
                                            "nearcomplete_u, guess_tn, partition_t")
      ->capture_default_str();
  solve_cmd->add_option("--in", solve.in, "Instance JSON")->required();
  solve_cmd->add_option("--out", solve.out, "Write the report here instead of stdout");
  solve_cmd->add_option("--seed", solve.seed, "Color coding seed")->capture_default_str();
  solve_cmd->add_option("--reps", solve.reps, "Color coding repetitions");
  solve_cmd->add_option("--budget", solve.budget, "Repetition or guess budget");
  solve_cmd->add_flag("--exhaustive", solve.exhaustive, "Color coding: try every coloring");
  solve_cmd->add_flag("--maximize", solve.maximize, "Binary-search the largest feasible eta");

  std::string verify_in, verify_cert, verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
  verify_cmd->add_option("--in", verify_in, "Instance JSON")->required();
  verify_cmd->add_option("--cert", verify_cert, "Certificate or report JSON")->required();
  verify_cmd->add_option("--out", verify_out, "Output file");

  cffa::GeneratorOptions gen;
  int gen_jobs = 8;
  double gen_prob = 0.5;
  std::uint64_t gen_t = 0;
  std::vector<int> gen_sizes;
  std::optional<int> gen_cap;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->require_subcommand(1);
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--agents", gen.agents, "Agent count")->capture_default_str();
    sub->add_option("--u-max", gen.u_max, "Largest utility")->capture_default_str();
    sub->add_option("--eta", gen.eta, "Threshold")->capture_default_str();
    sub->add_option("--cap", gen_cap, "Bundle size cap");
    sub->add_flag("--uniform", gen.uniform, "All agents share one utility row");
    sub->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
    sub->add_option("--out", gen_out, "Output file");
  };
  auto* gen_random = gen_cmd->add_subcommand("random", "G(m, p) conflict graph");
  gen_random->add_option("--jobs", gen_jobs, "Job count")->capture_default_str();
  gen_random->add_option("--edge-prob", gen_prob, "Edge probability")->capture_default_str();
  common(gen_random);
  auto* gen_cluster = gen_cmd->add_subcommand("cluster", "Disjoint cliques");
  gen_cluster->add_option("--sizes", gen_sizes, "Clique sizes")->delimiter(',')->required();
  common(gen_cluster);
  auto* gen_near = gen_cmd->add_subcommand("near-complete", "K_m minus t random edges");
  gen_near->add_option("--jobs", gen_jobs, "Job count")->capture_default_str();
  gen_near->add_option("--t", gen_t, "Missing edges")->capture_default_str();
  common(gen_near);
  auto* gen_regular = gen_cmd->add_subcommand("regular", "K_m minus a perfect matching");
  gen_regular->add_option("--jobs", gen_jobs, "Even job count")->capture_default_str();
  common(gen_regular);

  std::string reduce_in, reduce_out;
  bool lenient = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Encode a source problem as an allocation instance");
  reduce_cmd->require_subcommand(1);
  std::vector<CLI::App*> reduce_kinds;
  for (const char* kind : {"3partition", "n3dm", "is", "sbmwis"}) {
    auto* sub = reduce_cmd->add_subcommand(kind, std::string("Reduce from ") + kind);
    sub->add_option("--in", reduce_in, "Source JSON")->required();
    sub->add_option("--out", reduce_out, "Output file");
    reduce_kinds.push_back(sub);
  }
  reduce_kinds.back()->add_flag("--lenient", lenient, "Raise a target below 1 to 1 instead of failing");

  std::string bench_spec, bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark spec and print CSV");
  bench_cmd->add_option("--spec", bench_spec, "Bench spec JSON")->required();
  bench_cmd->add_option("--out", bench_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kYes : kInputError;
  }

  try {
    if (*solve_cmd) {
      code = run_solve(solve);
    } else if (*verify_cmd) {
      code = run_verify(verify_in, verify_cert, verify_out);
    } else if (*gen_cmd) {
      gen.bundle_cap = gen_cap;
      cffa::Instance inst = [&] {
        if (*gen_random) return cffa::gen_random(gen_jobs, gen_prob, gen);
        if (*gen_cluster) return cffa::gen_cluster(gen_sizes, gen).instance;
        if (*gen_near) return cffa::gen_near_complete(gen_jobs, gen_t, gen);
        return cffa::gen_near_complete_regular(gen_jobs, gen);
      }();
      emit(cffa::serialize_instance(inst), gen_out);
    } else if (*reduce_cmd) {
      const std::string text = read_file(reduce_in);
      std::vector<std::string> warnings;
      cffa::Instance inst = [&] {
        if (*reduce_kinds[0]) return cffa::from_3partition(cffa::parse_three_partition(text));
        if (*reduce_kinds[1]) return cffa::from_numerical_3dm(cffa::parse_numerical_3dm(text));
        if (*reduce_kinds[2]) {
          const auto [graph, k] = cffa::parse_graph_with_k(text);
          return cffa::from_independent_set(graph, k);
        }
        return cffa::from_sbmwis(cffa::parse_sbmwis(text),
                                 lenient ? cffa::EtaPolicy::Lenient : cffa::EtaPolicy::Strict, &warnings);
      }();
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      emit(cffa::serialize_instance(inst), reduce_out);
    } else if (*bench_cmd) {
      emit(cffa::run_bench(read_file(bench_spec)).to_csv(), bench_out);
    }
  } catch (const cffa::Error& e) {
    return report_error(e);
  } catch (const std::bad_alloc&) {
    std::cerr << R"({"error":"OUT_OF_MEMORY","kind":"capacity"})" << "\n";
    return kCapacityError;
  }
  return code;
}
