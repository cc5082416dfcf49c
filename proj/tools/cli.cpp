#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "relfact/algebra.hpp"
#include "relfact/errors.hpp"
#include "relfact/json_io.hpp"
#include "relfact/random_cluster.hpp"
#include "relfact/reliability.hpp"

namespace relfact::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

// A graph or decomposition document, whichever the input file holds.
struct Input {
  std::optional<CutDecomposition> decomposition;
  StochasticGraph graph;  // the union when a decomposition was given
};

Input load_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  const Json doc = read_json_file(cfg.input);
  Input in;
  if (is_decomposition(doc)) {
    in.decomposition = decomposition_from_json(doc);
    in.graph = union_graph(*in.decomposition);
  } else {
    in.graph = graph_from_json(doc);
  }
  return in;
}

const CutDecomposition& need_decomposition(const Input& in, const std::string& what) {
  if (!in.decomposition) throw UsageError(what + " needs a decomposition document (g1, g2, boundary)");
  return *in.decomposition;
}

std::vector<std::string> connectivity_warnings(const StochasticGraph& g) {
  if (is_k_connected(g)) return {};
  return {"Hypothesis 2 violated: the terminals are not all connected even with every edge operative; "
          "reliability is 0"};
}

Json side_table(const std::vector<Partition>& states, const std::vector<Rational>& values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < states.size() && i < values.size(); ++i) out[states[i].to_string()] = to_wire(values[i]);
  return out;
}

FactorOptions factor_options(const RunConfig& cfg) { return FactorOptions{cfg.order, cfg.jobs}; }

void add_warnings(Json& doc, const std::vector<std::string>& warnings, std::ostream& err) {
  if (warnings.empty()) return;
  doc["warnings"] = warnings;
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

Json cmd_reliability(const RunConfig& cfg, std::ostream& err) {
  const Input in = load_input(cfg);
  const std::string route = cfg.route.empty() ? (in.decomposition ? "factorized" : "factoring") : cfg.route;
  Json doc;
  std::vector<std::string> warnings = connectivity_warnings(in.graph);

  if (route == "bruteforce") {
    doc["reliability"] = to_wire(reliability_bruteforce(in.graph, cfg.enumeration_bound));
  } else if (route == "factoring") {
    doc["reliability"] = to_wire(reliability_factoring(in.graph));
  } else if (route == "factorized") {
    const auto& d = need_decomposition(in, "route 'factorized'");
    const auto r = factorized_reliability(d, factor_options(cfg));
    doc["reliability"] = to_wire(r.reliability);
    warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
    doc["side_reliabilities"] = Json{{"g1", side_table(r.states, r.side1)}, {"g2", side_table(r.states, r.side2)}};
  } else if (route == "joint") {
    const auto& d = need_decomposition(in, "route 'joint'");
    doc["reliability"] = to_wire(joint_reliability(state_distribution(d.g1, d.boundary, cfg.enumeration_bound),
                                                   state_distribution(d.g2, d.boundary, cfg.enumeration_bound)));
  } else if (route == "n2") {
    doc["reliability"] = to_wire(n2_closed_form(need_decomposition(in, "route 'n2'")));
  } else {
    throw UsageError("unknown route '" + route + "'");
  }
  doc["route"] = route;
  if (in.decomposition) doc["n"] = in.decomposition->n();
  std::sort(warnings.begin(), warnings.end());
  warnings.erase(std::unique(warnings.begin(), warnings.end()), warnings.end());
  add_warnings(doc, warnings, err);
  return doc;
}

Json cmd_factor(const RunConfig& cfg, std::ostream& err) {
  const Input in = load_input(cfg);
  const auto& d = need_decomposition(in, "factor");
  const auto r = factorized_reliability(d, factor_options(cfg));

  Json doc;
  doc["reliability"] = to_wire(r.reliability);
  doc["route"] = "factorized";
  doc["n"] = d.n();
  if (!r.states.empty()) {
    doc["order"] = partitions_to_json(r.states);
    doc["b"] = rational_matrix_to_json(connectivity_bundle(d.n(), cfg.order)->A_inv);
    doc["side_reliabilities"] = Json{{"g1", side_table(r.states, r.side1)}, {"g2", side_table(r.states, r.side2)}};
  }
  add_warnings(doc, r.warnings, err);
  if (cfg.verify) {
    const Rational brute = reliability_bruteforce(in.graph, cfg.enumeration_bound);
    doc["bruteforce"] = to_wire(brute);
    if (brute != r.reliability) {
      throw VerificationFailure("factorized value " + to_wire(r.reliability) + " differs from brute force " +
                                to_wire(brute));
    }
    doc["verified"] = true;
  }
  return doc;
}

Json cmd_conmatrix(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxBoundary) {
    throw UsageError("--n must lie in [1, " + std::to_string(kMaxBoundary) + "]");
  }
  const auto bundle = connectivity_bundle(cfg.n, cfg.order);
  return conmatrix_to_json(*bundle, abs(determinant(bundle->A)), smith_normal_form(bundle->A));
}

Json cmd_polynomial(const RunConfig& cfg) {
  const Input in = load_input(cfg);
  const auto poly = reliability_polynomial(in.graph, cfg.enumeration_bound);
  Json doc;
  doc["edges"] = poly.edge_count();
  doc["coefficients"] = Json::array();
  for (const auto& c : poly.coefficients) doc["coefficients"].push_back(to_string(c));
  doc["power_basis"] = Json::array();
  for (const auto& c : poly.power_basis()) doc["power_basis"].push_back(to_string(c));
  return doc;
}

Json cmd_distribution(const RunConfig& cfg) {
  const Input in = load_input(cfg);
  Json doc;
  if (in.decomposition) {
    const auto& d = *in.decomposition;
    const auto order = CoherentOrder(d.n(), cfg.order).states();
    const auto d1 = state_distribution(d.g1, d.boundary, cfg.enumeration_bound);
    const auto d2 = state_distribution(d.g2, d.boundary, cfg.enumeration_bound);
    doc["n"] = d.n();
    doc["order"] = partitions_to_json(order);
    doc["g1"] = distribution_to_json(d1, order);
    doc["g2"] = distribution_to_json(d2, order);
    doc["joint_reliability"] = to_wire(joint_reliability(d1, d2));
  } else {
    if (cfg.boundary.empty()) throw UsageError("distribution on a single graph needs --boundary");
    const auto order = CoherentOrder(cfg.boundary.size(), cfg.order).states();
    doc["n"] = cfg.boundary.size();
    doc["order"] = partitions_to_json(order);
    doc["graph"] = distribution_to_json(state_distribution(in.graph, cfg.boundary, cfg.enumeration_bound), order);
  }
  return doc;
}

Json cmd_rcm(const RunConfig& cfg) {
  const Input in = load_input(cfg);
  const auto z = partition_function(in.graph, cfg.enumeration_bound);
  Json doc;
  doc["Z"] = cluster_polynomial_to_json(z);
  doc["dZdq_at_0"] = to_wire(dq_at_zero(z));
  if (in.decomposition && in.graph.terminal_count() == in.graph.node_count()) {
    doc["factorized_dZdq_at_0"] = to_wire(factorized_dq(*in.decomposition, factor_options(cfg)));
  }
  return doc;
}

// Every route that applies to the document must give the same value.
Json verify_document(const Json& input, const RunConfig& cfg, std::vector<std::string>& problems) {
  Json report;
  auto expect_equal = [&](const std::string& what, const Rational& got, const Rational& want) {
    if (got != want) problems.push_back(what + " = " + to_wire(got) + ", expected " + to_wire(want));
  };

  std::optional<CutDecomposition> d;
  StochasticGraph g;
  if (is_decomposition(input)) {
    d = decomposition_from_json(input);
    g = union_graph(*d);
  } else {
    g = graph_from_json(input);
  }

  const Rational brute = reliability_bruteforce(g, cfg.enumeration_bound);
  report["reliability"] = to_wire(brute);
  expect_equal("factoring", reliability_factoring(g), brute);

  const bool all_terminal = g.terminal_count() == g.node_count();
  if (all_terminal && is_connected(g)) {
    expect_equal("dZ/dq at 0", dq_at_zero(partition_function(g, cfg.enumeration_bound)), brute);
  }

  if (d) {
    report["n"] = d->n();
    const auto canonical = factorized_reliability(*d, FactorOptions{OrderVariant::Canonical, cfg.jobs});
    const auto reversed = factorized_reliability(*d, FactorOptions{OrderVariant::ReversedLevels, cfg.jobs});
    expect_equal("factorized (canonical order)", canonical.reliability, brute);
    expect_equal("factorized (reversed levels)", reversed.reliability, brute);

    const auto d1 = state_distribution(d->g1, d->boundary, cfg.enumeration_bound);
    const auto d2 = state_distribution(d->g2, d->boundary, cfg.enumeration_bound);
    expect_equal("joint", joint_reliability(d1, d2), brute);
    expect_equal("side-1 mass", d1.total(), Rational(1));
    expect_equal("side-2 mass", d2.total(), Rational(1));

    if (canonical.warnings.empty()) {
      for (std::size_t i = 0; i < canonical.states.size(); ++i) {
        const auto& a = canonical.states[i];
        Rational via_states1 = 0, via_states2 = 0;
        for (const auto& [b, p] : d1.probs)
          if (is_connected_pair(a, b)) via_states1 += p;
        for (const auto& [b, p] : d2.probs)
          if (is_connected_pair(a, b)) via_states2 += p;
        expect_equal("g1 conditioned on " + a.to_string(), canonical.side1[i], via_states1);
        expect_equal("g2 conditioned on " + a.to_string(), canonical.side2[i], via_states2);
      }
    }
    if (d->n() == 2) expect_equal("two-node closed form", n2_closed_form(*d), brute);
    if (all_terminal && canonical.warnings.empty() && is_connected(d->g1) && is_connected(d->g2)) {
      expect_equal("factorized dZ/dq", factorized_dq(*d, FactorOptions{cfg.order, cfg.jobs}), brute);
    }
  }
  return report;
}

Json cmd_verify(const RunConfig& cfg, std::ostream& err) {
  namespace fs = std::filesystem;
  if (cfg.input.empty()) throw UsageError("--input is required");
  std::vector<fs::path> files;
  if (fs::is_directory(cfg.input)) {
    for (const auto& entry : fs::directory_iterator(cfg.input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(cfg.input);
  }

  Json doc;
  doc["fixtures"] = Json::array();
  std::size_t failed = 0;
  for (const auto& file : files) {
    std::vector<std::string> problems;
    Json entry = verify_document(read_json_file(file), cfg, problems);
    Json row;
    row["file"] = file.filename().string();
    row["status"] = problems.empty() ? "pass" : "fail";
    row.update(entry);
    if (!problems.empty()) {
      row["problems"] = problems;
      ++failed;
      for (const auto& p : problems) err << "mismatch in " << file.filename().string() << ": " << p << "\n";
    }
    doc["fixtures"].push_back(std::move(row));
  }
  doc["passed"] = files.size() - failed;
  doc["failed"] = failed;
  if (failed) {
    throw VerificationFailure(std::to_string(failed) + " fixture(s) disagree across routes");
  }
  return doc;
}

void render_text(const Json& value, const std::string& prefix, std::ostream& out) {
  if (value.is_object()) {
    for (auto it = value.begin(); it != value.end(); ++it) {
      render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  out << prefix << ": ";
  if (value.is_string()) out << value.get<std::string>();
  else out << value.dump();
  out << "\n";
}

void emit(const Json& doc, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output == OutputFormat::Text) render_text(doc, "", out);
  else out << doc.dump(2) << "\n";
}

}  // namespace

std::size_t default_bound() {
  if (const char* env = std::getenv("RELFACT_BOUND")) {
    try {
      const long long v = std::stoll(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultEnumerationBound;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.enumeration_bound = default_bound();
  std::string jobs = "1";
  std::string order = "canonical";
  std::string output = "json";

  CLI::App app{"Exact K-terminal reliability by boundary-cut factorization", "relfact"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"reliability", "Exact reliability of a graph or decomposition by a chosen route"},
      {"factor", "Factorized reliability of a decomposition with per-state side reliabilities"},
      {"conmatrix", "Connectivity matrix, inverse, determinant and invariant factors for n"},
      {"polynomial", "K-pathset counts by number of operative edges"},
      {"distribution", "Boundary connectivity-state distributions"},
      {"rcm", "Random cluster model weights and the q-linear coefficient"},
      {"verify", "Cross-check every route on a directory of fixtures"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&cfg, name = name] { cfg.subcommand = name; });
    sub->add_option("--input,-i", cfg.input, "Graph/decomposition JSON (directory for verify)");
    sub->add_option("--route", cfg.route, "bruteforce|factoring|factorized|joint|n2")
        ->check(CLI::IsMember({"bruteforce", "factoring", "factorized", "joint", "n2"}));
    sub->add_option("--n", cfg.n, "Boundary size for conmatrix");
    sub->add_option("--order", order, "canonical|reversed-levels")
        ->check(CLI::IsMember({"canonical", "reversed-levels"}));
    sub->add_option("--jobs", jobs, "Worker count or 'auto'");
    sub->add_option("--bound", cfg.enumeration_bound, "Largest edge count for enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--boundary", cfg.boundary, "Boundary nodes for distribution on a single graph")
        ->delimiter(',');
    sub->add_flag("--verify", cfg.verify, "Check the factorized value against brute force");
    sub->add_flag("--timing", cfg.timing, "Add timing_ms to the report");
    sub->add_option("--output", output, "json|text")->check(CLI::IsMember({"json", "text"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }

  cfg.order = order == "reversed-levels" ? OrderVariant::ReversedLevels : OrderVariant::Canonical;
  cfg.output = output == "text" ? OutputFormat::Text : OutputFormat::Json;
  if (jobs == "auto") {
    cfg.jobs = 0;
  } else {
    try {
      const long long v = std::stoll(jobs);
      if (v < 1) throw std::invalid_argument("jobs");
      cfg.jobs = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      err << "error: --jobs must be a positive integer or 'auto'\n";
      return kMalformedInput;
    }
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Json doc;
    if (cfg.subcommand == "reliability") doc = cmd_reliability(cfg, err);
    else if (cfg.subcommand == "factor") doc = cmd_factor(cfg, err);
    else if (cfg.subcommand == "conmatrix") doc = cmd_conmatrix(cfg);
    else if (cfg.subcommand == "polynomial") doc = cmd_polynomial(cfg);
    else if (cfg.subcommand == "distribution") doc = cmd_distribution(cfg);
    else if (cfg.subcommand == "rcm") doc = cmd_rcm(cfg);
    else doc = cmd_verify(cfg, err);
    if (cfg.timing) {
      doc["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    emit(doc, cfg, out);
    return kOk;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationMismatch;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const GraphError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DecompositionError& e) {
    err << "invalid decomposition: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PartitionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const EnumerationBoundError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace relfact::cli
