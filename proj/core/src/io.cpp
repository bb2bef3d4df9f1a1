#include "cffa/io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "cffa/error.hpp"

namespace cffa {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& code, const std::string& message, const std::string& where) {
  fail(ErrorKind::Parse, code, message, where);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    parse_fail("JSON_SYNTAX", e.what(), std::to_string(line) + ":" + std::to_string(column));
  }
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) parse_fail("FIELD_TYPE", "document must be a JSON object", "");
  auto it = doc.find(name);
  if (it == doc.end()) parse_fail("MISSING_FIELD", std::string("missing field '") + name + "'", std::string("/") + name);
  return *it;
}

std::int64_t integer(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) parse_fail("INT_RANGE", "integer too large", where);
    return static_cast<std::int64_t>(u);
  }
  if (!v.is_number_integer()) parse_fail("FIELD_TYPE", "expected an integer", where);
  return v.get<std::int64_t>();
}

const json& array(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail("FIELD_TYPE", "expected an array", where);
  return v;
}

std::vector<std::string> names(const json& v, const std::string& where) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::size_t i = 0;
  for (const auto& item : array(v, where)) {
    const std::string at = where + "/" + std::to_string(i++);
    if (!item.is_string()) parse_fail("FIELD_TYPE", "identifiers must be strings", at);
    auto name = item.get<std::string>();
    if (!seen.insert(name).second) parse_fail("DUPLICATE_ID", "duplicate identifier '" + name + "'", at);
    out.push_back(std::move(name));
  }
  return out;
}

std::vector<std::pair<int, int>> edge_list(const json& v, int vertices, const std::string& where) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  std::size_t i = 0;
  for (const auto& item : array(v, where)) {
    const std::string at = where + "/" + std::to_string(i++);
    if (!item.is_array() || item.size() != 2) parse_fail("FIELD_TYPE", "edges are [i, j] pairs", at);
    const auto a = integer(item[0], at + "/0");
    const auto b = integer(item[1], at + "/1");
    if (a < 0 || b < 0 || a >= vertices || b >= vertices) parse_fail("EDGE_RANGE", "edge endpoint out of range", at);
    if (a == b) parse_fail("SELF_LOOP", "self-loop", at);
    if (a > b) parse_fail("EDGE_ORDER", "edges must be listed as [i, j] with i < j", at);
    if (!seen.emplace(a, b).second) parse_fail("DUPLICATE_EDGE", "duplicate edge", at);
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return edges;
}

std::vector<Utility> non_negative_list(const json& v, const std::string& where) {
  std::vector<Utility> out;
  std::size_t i = 0;
  for (const auto& item : array(v, where)) {
    const std::string at = where + "/" + std::to_string(i++);
    const auto value = integer(item, at);
    if (value < 0 || static_cast<Utility>(value) > kMaxUtility)
      parse_fail("UTILITY_RANGE", "values must lie in [0, 2^40]", at);
    out.push_back(static_cast<Utility>(value));
  }
  return out;
}

// Re-raises model validation failures as parse errors.
template <typename F>
auto as_parse_error(F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Contract) parse_fail(e.code(), e.what(), e.where());
    throw;
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  auto agents = names(field(doc, "agents"), "/agents");
  auto jobs = names(field(doc, "jobs"), "/jobs");

  const auto eta = integer(field(doc, "eta"), "/eta");
  if (eta < 1 || static_cast<Utility>(eta) > kMaxUtility) parse_fail("ETA_RANGE", "eta must lie in [1, 2^40]", "/eta");

  const auto& rows = array(field(doc, "utilities"), "/utilities");
  if (rows.size() != agents.size())
    parse_fail("DIM_MISMATCH", "utilities must have one row per agent", "/utilities");
  std::vector<std::vector<Utility>> utilities;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const std::string at = "/utilities/" + std::to_string(a);
    auto row = non_negative_list(rows[a], at);
    if (row.size() != jobs.size()) parse_fail("DIM_MISMATCH", "utility row must have one entry per job", at);
    utilities.push_back(std::move(row));
  }

  const int m = static_cast<int>(jobs.size());
  auto edges = edge_list(field(doc, "edges"), m, "/edges");

  std::optional<int> cap;
  if (auto it = doc.find("bundle_cap"); it != doc.end() && !it->is_null()) {
    const auto value = integer(*it, "/bundle_cap");
    if (value < 1 || value > m) parse_fail("CAP_RANGE", "bundle_cap must lie in [1, job count]", "/bundle_cap");
    cap = static_cast<int>(value);
  }

  return as_parse_error([&] {
    return Instance(std::move(agents), std::move(jobs), std::move(utilities), ConflictGraph(m, std::move(edges)),
                    static_cast<Utility>(eta), cap);
  });
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["agents"] = inst.agents();
  doc["jobs"] = inst.jobs();
  doc["utilities"] = inst.utilities();
  json edges = json::array();
  for (auto [u, v] : inst.conflict().edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  doc["eta"] = inst.eta();
  doc["bundle_cap"] = inst.bundle_cap() ? json(*inst.bundle_cap()) : json(nullptr);
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text, const Instance& inst) {
  const json doc = parse_document(text);
  const auto& flag = field(doc, "feasible");
  if (!flag.is_boolean()) parse_fail("FIELD_TYPE", "feasible must be a boolean", "/feasible");

  Certificate cert;
  cert.feasible = flag.get<bool>();
  auto it = doc.find("assignment");
  if (it == doc.end() || it->is_null()) {
    if (cert.feasible) parse_fail("MISSING_FIELD", "a feasible certificate needs an assignment", "/assignment");
    return cert;
  }
  if (!it->is_object()) parse_fail("FIELD_TYPE", "assignment must be an object", "/assignment");

  Allocation alloc;
  alloc.bundles.resize(static_cast<std::size_t>(inst.agent_count()));
  std::vector<char> seen(static_cast<std::size_t>(inst.agent_count()), 0);
  for (const auto& [agent, jobs] : it->items()) {
    const std::string at = "/assignment/" + agent;
    const auto a = inst.agent_index(agent);
    if (!a) fail(ErrorKind::MalformedCertificate, "UNKNOWN_AGENT", "unknown agent '" + agent + "'", at);
    seen[*a] = 1;
    std::size_t i = 0;
    for (const auto& job : array(jobs, at)) {
      const std::string job_at = at + "/" + std::to_string(i++);
      if (!job.is_string()) parse_fail("FIELD_TYPE", "jobs must be named by string", job_at);
      const auto x = inst.job_index(job.get<std::string>());
      if (!x) fail(ErrorKind::MalformedCertificate, "UNKNOWN_JOB", "unknown job '" + job.get<std::string>() + "'", job_at);
      alloc.bundles[*a].push_back(*x);
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    fail(ErrorKind::MalformedCertificate, "AGENT_COUNT", "assignment must list every agent", "/assignment");
  cert.allocation = std::move(alloc);
  return cert;
}

std::string serialize_report(const Instance& inst, const SolveReport& report, bool with_elapsed) {
  json doc;
  doc["feasible"] = report.feasible;
  if (report.certificate) {
    json assignment = json::object();
    for (std::size_t a = 0; a < report.certificate->bundles.size(); ++a) {
      auto bundle = report.certificate->bundles[a];
      std::sort(bundle.begin(), bundle.end());
      json jobs = json::array();
      for (int x : bundle) jobs.push_back(inst.jobs().at(static_cast<std::size_t>(x)));
      assignment[inst.agents().at(a)] = std::move(jobs);
    }
    doc["assignment"] = std::move(assignment);
  } else {
    doc["assignment"] = nullptr;
  }
  doc["algorithm"] = report.algorithm;
  json counters = json::object();
  for (const auto& [name, value] : report.counters) counters[name] = value;
  doc["counters"] = std::move(counters);
  if (with_elapsed) doc["elapsed_ms"] = report.elapsed_ms;
  return doc.dump(2) + "\n";
}

ThreePartitionInstance parse_three_partition(std::string_view text) {
  const json doc = parse_document(text);
  ThreePartitionInstance src;
  src.sizes = non_negative_list(field(doc, "sizes"), "/sizes");
  src.bound = static_cast<Utility>(std::max<std::int64_t>(0, integer(field(doc, "bound"), "/bound")));
  as_parse_error([&] { src.validate(); return 0; });
  return src;
}

Numerical3DMInstance parse_numerical_3dm(std::string_view text) {
  const json doc = parse_document(text);
  Numerical3DMInstance src;
  src.sizes_x = non_negative_list(field(doc, "x"), "/x");
  src.sizes_y = non_negative_list(field(doc, "y"), "/y");
  src.sizes_z = non_negative_list(field(doc, "z"), "/z");
  src.bound = static_cast<Utility>(std::max<std::int64_t>(0, integer(field(doc, "bound"), "/bound")));
  as_parse_error([&] { src.validate(); return 0; });
  return src;
}

namespace {

ConflictGraph parse_graph(const json& doc) {
  const auto vertices = integer(field(doc, "vertices"), "/vertices");
  if (vertices < 0 || vertices > 4096) parse_fail("VERTEX_COUNT", "vertex count must lie in [0, 4096]", "/vertices");
  auto edges = edge_list(field(doc, "edges"), static_cast<int>(vertices), "/edges");
  return ConflictGraph(static_cast<int>(vertices), std::move(edges));
}

}  // namespace

std::pair<ConflictGraph, int> parse_graph_with_k(std::string_view text) {
  const json doc = parse_document(text);
  auto graph = parse_graph(doc);
  const auto k = integer(field(doc, "k"), "/k");
  if (k < 1 || k > graph.vertex_count()) parse_fail("CAP_RANGE", "k must lie in [1, vertex count]", "/k");
  return {std::move(graph), static_cast<int>(k)};
}

SbMwisInstance parse_sbmwis(std::string_view text) {
  const json doc = parse_document(text);
  SbMwisInstance src;
  src.graph = parse_graph(doc);
  src.weights = non_negative_list(field(doc, "weights"), "/weights");
  const auto k = integer(field(doc, "k"), "/k");
  if (k < 1 || k > std::max(1, src.graph.vertex_count())) parse_fail("CAP_RANGE", "k must lie in [1, vertex count]", "/k");
  src.size_cap = static_cast<int>(k);
  src.target = integer(field(doc, "rho"), "/rho");
  as_parse_error([&] { src.validate(); return 0; });
  return src;
}

}  // namespace cffa
