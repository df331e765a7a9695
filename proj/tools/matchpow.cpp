// Copyright 2026 The matchpow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// matchpow: command line front end.
//
// Exit codes: 0 success (property holds, all trials agree), 1 property
// violated, 2 usage, input or resource error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchpow/classifier.hpp"
#include "matchpow/errors.hpp"
#include "matchpow/harness.hpp"
#include "matchpow/io.hpp"
#include "matchpow/matching_power.hpp"
#include "matchpow/polymatroid.hpp"
#include "matchpow/resolution.hpp"

namespace fs = std::filesystem;
using namespace matchpow;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kError = 2;

void emit(const OrderedJson& doc) { std::cout << doc.dump() << "\n"; }

Field parse_field(const std::string& s) {
  if (s == "gf2") return Field::kGF2;
  if (s == "q") return Field::kRationals;
  throw InvalidArgument("unknown field '" + s + "' (use gf2 or q)");
}

struct LoadedGraph {
  WeightedOrientedGraph graph;
  std::vector<std::string> normalized;
};

/// Reads a graph document and resets source weights to 1, reporting which
/// vertices changed.
LoadedGraph load_graph(const std::string& path) {
  const WeightedOrientedGraph raw = graph_from_json(read_json_file(path));
  std::vector<Vertex> adjusted;
  LoadedGraph out{normalize_sources(raw, &adjusted), {}};
  for (Vertex v : adjusted) out.normalized.push_back(raw.name(v));
  if (!out.normalized.empty()) {
    std::cerr << "note: source weights reset to 1 for:";
    for (const auto& n : out.normalized) std::cerr << " " << n;
    std::cerr << "\n";
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t)
      .count();
}

std::size_t worker_option(std::size_t flag) {
  return flag ? flag : default_worker_count();
}

// ---------------------------------------------------------------------------
// Subcommands

struct ClassifyArgs {
  std::string graph;
  std::string certificate_out;
  std::string certificate_in;
  bool verify = false;
};

int run_classify(const ClassifyArgs& a) {
  const LoadedGraph loaded = load_graph(a.graph);
  const auto& g = loaded.graph;
  if (!a.certificate_in.empty()) {
    const auto cert = certificate_from_json(read_json_file(a.certificate_in), g);
    const bool ok = verify_certificate(g, cert);
    emit({{"certificate", a.certificate_in}, {"valid", ok}});
    return ok ? kOk : kViolated;
  }
  const ClassificationCertificate cert = classify_last_power(g);
  OrderedJson cert_doc = certificate_to_json(cert, g);
  OrderedJson doc;
  doc["verdict"] = cert.verdict;
  doc["nu"] = cert.root.matching_number;
  doc["normalized_sources"] = loaded.normalized;
  if (a.verify) {
    if (!verify_certificate(g, cert)) {
      throw ContractViolation("classifier produced a certificate that does "
                              "not verify");
    }
    doc["verified"] = true;
  }
  doc["certificate"] = cert_doc;
  if (!a.certificate_out.empty()) write_json_file(a.certificate_out, cert_doc);
  emit(doc);
  return cert.verdict ? kOk : kViolated;
}

struct PowerArgs {
  std::string graph;
  std::optional<std::size_t> k;
  std::string ideal_out;
};

int run_power(const PowerArgs& a) {
  const LoadedGraph loaded = load_graph(a.graph);
  const auto& g = loaded.graph;
  const std::size_t nu = matching_number(g.underlying());
  const std::size_t k = a.k.value_or(nu);
  const MonomialIdeal power = matching_power(edge_ideal(g), k);
  OrderedJson doc;
  doc["k"] = k;
  doc["nu"] = nu;
  doc["ideal"] = ideal_to_json(power);
  std::vector<std::string> text;
  for (const Monomial& u : power.generators()) {
    text.push_back(to_string(u, g.names()));
  }
  doc["generators"] = text;
  if (!a.ideal_out.empty()) write_json_file(a.ideal_out, ideal_to_json(power));
  emit(doc);
  return kOk;
}

struct BettiArgs {
  std::string ideal;
  std::string field = "gf2";
  std::size_t max_generators = kDefaultGeneratorCap;
  bool multigraded = false;
};

int run_betti(const BettiArgs& a) {
  const MonomialIdeal ideal = ideal_from_json(read_json_file(a.ideal));
  const BettiTable table =
      betti_numbers(ideal, parse_field(a.field), a.max_generators);
  OrderedJson doc = betti_to_json(table);
  if (!a.multigraded) doc.erase("entries");
  emit(doc);
  return kOk;
}

struct CheckArgs {
  std::string property;
  std::string ideal;
  std::string field = "gf2";
  std::size_t max_generators = kDefaultGeneratorCap;
};

int run_check(const CheckArgs& a) {
  const MonomialIdeal ideal = ideal_from_json(read_json_file(a.ideal));
  OrderedJson doc;
  doc["property"] = a.property;
  bool holds = false;
  if (a.property == "poly") {
    const PolymatroidResult r = is_polymatroidal(ideal);
    holds = r.polymatroidal;
    doc["equigenerated"] = r.equigenerated;
    if (r.failure) doc["witness"] = exchange_failure_to_json(*r.failure);
  } else {
    if (ideal.is_zero()) throw InvalidArgument("check: the zero ideal");
    if (!is_equigenerated(ideal)) {
      doc["equigenerated"] = false;
    } else {
      const BettiTable table =
          betti_numbers(ideal, parse_field(a.field), a.max_generators);
      holds = a.property == "linear" ? has_linear_resolution(table)
                                     : is_linearly_related(table);
      doc["equigenerated"] = true;
      doc["field"] = a.field;
    }
  }
  doc["holds"] = holds;
  emit(doc);
  return holds ? kOk : kViolated;
}

struct VerifyArgs {
  std::size_t trials = 500;
  std::size_t max_n = 9;
  std::uint64_t seed = 42;
  bool exhaustive = false;
  Exponent max_weight = 3;
  std::size_t pairs = 50;
  std::string field = "q";
  bool dual_field = false;
  bool all = false;
  std::string dump_dir;
  std::size_t workers = 0;
};

void dump_instance(const std::string& dir, const std::string& stem,
                   const OrderedJson& doc) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  write_json_file((fs::path(dir) / (stem + ".json")).string(), doc);
}

int run_verify_last_power(const VerifyArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t graphs = 0, failures = 0;
  if (a.exhaustive) {
    if (a.max_n > kMaxEnumerationVertices) {
      throw InvalidArgument("verify thm11 --exhaustive: --max-n is at most 7");
    }
    const std::size_t shards = 64;
    struct Part {
      std::size_t graphs = 0;
      std::vector<WeightedOrientedGraph> failures;
    };
    const auto parts = parallel_map<Part>(
        shards, worker_option(a.workers), [&](std::size_t shard) {
          Part part;
          enumerate_simple_graphs(
              a.max_n,
              [&](const WeightedOrientedGraph& g) {
                if (g.arcs().empty()) return;
                ++part.graphs;
                const std::size_t nu = matching_number(g.underlying());
                if (!is_polymatroidal(matching_power(edge_ideal(g), nu))
                         .polymatroidal) {
                  part.failures.push_back(g);
                }
              },
              shard, shards);
          return part;
        });
    for (const auto& part : parts) {
      graphs += part.graphs;
      for (const auto& g : part.failures) {
        OrderedJson doc{{"graph", graph_to_json(g)}, {"polymatroidal", false}};
        emit(doc);
        dump_instance(a.dump_dir, "thm11_" + std::to_string(failures), doc);
        ++failures;
      }
    }
  } else {
    const auto trials = parallel_map<LastPowerTrial>(
        a.trials, worker_option(a.workers), [&](std::size_t i) {
          return run_last_power_trial(trial_seed(a.seed, i), i, a.max_n);
        });
    for (std::size_t i = 0; i < trials.size(); ++i) {
      OrderedJson doc = last_power_trial_to_json(trials[i]);
      doc["index"] = i;
      emit(doc);
      ++graphs;
      if (!trials[i].polymatroidal) {
        dump_instance(a.dump_dir, "thm11_" + std::to_string(i), doc);
        ++failures;
      }
    }
  }
  emit({{"summary", true},
        {"graphs", graphs},
        {"failures", failures},
        {"seconds", seconds_since(start)}});
  return failures == 0 ? kOk : kViolated;
}

int run_verify_forests(const VerifyArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  OracleOptions options;
  options.field = parse_field(a.field);
  options.dual_field = a.dual_field;
  if (a.exhaustive) {
    const CorpusSummary s =
        run_forest_corpus(a.max_n, a.max_weight, options,
                          worker_option(a.workers));
    for (std::size_t i = 0; i < s.disagreements.size(); ++i) {
      const OrderedJson doc = report_to_json(s.disagreements[i]);
      emit(doc);
      dump_instance(a.dump_dir, "thm34_" + std::to_string(i), doc);
    }
    OrderedJson summary = corpus_summary_to_json(s);
    summary["seconds"] = seconds_since(start);
    emit(summary);
    return s.disagreements.empty() ? kOk : kViolated;
  }
  const auto reports = parallel_map<TrialReport>(
      a.trials, worker_option(a.workers), [&](std::size_t i) {
        const std::uint64_t seed = trial_seed(a.seed, i);
        TrialReport r = cross_validate(
            random_weighted_oriented_forest(a.max_n, a.max_weight, seed),
            options);
        r.index = i;
        r.seed = seed;
        return r;
      });
  std::size_t disagreements = 0, accepted = 0, skipped = 0;
  for (const auto& r : reports) {
    const OrderedJson doc = report_to_json(r);
    emit(doc);
    accepted += r.classifier;
    skipped += r.betti_skipped || r.exchange_skipped;
    if (!r.agreement) {
      dump_instance(a.dump_dir, "thm34_" + std::to_string(r.index), doc);
      ++disagreements;
    }
  }
  emit({{"summary", true},
        {"trials", reports.size()},
        {"disagreements", disagreements},
        {"accepted", accepted},
        {"oracle_skipped", skipped},
        {"seconds", seconds_since(start)}});
  return disagreements == 0 ? kOk : kViolated;
}

int run_verify_induced(const VerifyArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const Field field = parse_field(a.field);
  const auto trials = parallel_map<InducedSubgraphTrial>(
      a.pairs, worker_option(a.workers), [&](std::size_t i) {
        return run_induced_subgraph_trial(trial_seed(a.seed, i), field);
      });
  std::size_t failures = 0;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    OrderedJson doc = induced_trial_to_json(trials[i]);
    doc["index"] = i;
    emit(doc);
    if (!trials[i].betti_monotone || !trials[i].regularity_monotone) {
      dump_instance(a.dump_dir, "lemma22_" + std::to_string(i), doc);
      ++failures;
    }
  }
  emit({{"summary", true},
        {"pairs", trials.size()},
        {"failures", failures},
        {"seconds", seconds_since(start)}});
  return failures == 0 ? kOk : kViolated;
}

struct EnumerateArgs {
  std::size_t nu = 2;
  std::size_t budget = 20;
  std::string out;
  std::uint64_t seed = 0;
  Exponent max_weight = 2;
};

int run_enumerate(const EnumerateArgs& a) {
  ConstructorStats stats;
  const auto forests =
      construct_linear_forests(a.nu, a.budget, a.seed, a.max_weight, &stats);
  if (!a.out.empty()) fs::create_directories(a.out);
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < forests.size(); ++i) {
    TrialReport r = cross_validate(forests[i]);
    r.index = i;
    const bool ok = r.agreement && r.classifier;
    disagreements += !ok;
    if (!a.out.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "forest_%04zu.json", i);
      write_json_file((fs::path(a.out) / name).string(),
                      graph_to_json(forests[i]));
    }
    emit(report_to_json(r));
  }
  emit({{"summary", true},
        {"emitted", forests.size()},
        {"candidates", stats.attempts},
        {"rejected", stats.rejected},
        {"disagreements", disagreements}});
  return disagreements == 0 ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Matching powers of edge ideals of weighted oriented graphs: "
      "classification, Betti numbers and verification runs."};
  app.set_config("--config", "", "Read options from a TOML or INI file");
  app.require_subcommand(1);
  int status = kOk;

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify",
                               "Decide whether the last matching power of a "
                               "weighted oriented forest is polymatroidal");
  c->add_option("graph", classify.graph, "Graph document")->required();
  c->add_option("--certificate", classify.certificate_out,
                "Write the certificate here");
  c->add_option("--check", classify.certificate_in,
                "Verify this certificate instead of classifying");
  c->add_flag("--verify", classify.verify, "Replay the produced certificate");
  c->callback([&] { status = run_classify(classify); });

  PowerArgs power;
  auto* p = app.add_subcommand("power", "Compute the matching power I(D)^[k]");
  p->add_option("graph", power.graph, "Graph document")->required();
  p->add_option("--k", power.k, "Power (default: the matching number)");
  p->add_option("--ideal-out", power.ideal_out, "Write the ideal here");
  p->callback([&] { status = run_power(power); });

  BettiArgs betti;
  auto* b = app.add_subcommand("betti", "Graded Betti numbers of an ideal");
  b->add_option("ideal", betti.ideal, "Ideal document")->required();
  b->add_option("--field", betti.field, "gf2 or q")->capture_default_str();
  b->add_option("--max-generators", betti.max_generators,
                "Generator cap")->capture_default_str();
  b->add_flag("--multigraded", betti.multigraded,
              "Include the multigraded entries");
  b->callback([&] { status = run_betti(betti); });

  CheckArgs check;
  auto* k = app.add_subcommand("check", "Test an ideal for a property");
  k->add_option("property", check.property, "poly, linear or linrel")
      ->required()
      ->check(CLI::IsMember({"poly", "linear", "linrel"}));
  k->add_option("ideal", check.ideal, "Ideal document")->required();
  k->add_option("--field", check.field, "gf2 or q")->capture_default_str();
  k->add_option("--max-generators", check.max_generators, "Generator cap")
      ->capture_default_str();
  k->callback([&] { status = run_check(check); });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification experiment");
  v->require_subcommand(1);
  v->add_option("--workers", verify.workers,
                "Worker threads (default: MATCHPOW_WORKERS or all cores)");
  v->add_option("--dump-dir", verify.dump_dir,
                "Write every failing instance here");
  auto* v11 = v->add_subcommand(
      "thm11", "Last matching power of a graph's edge ideal is polymatroidal");
  v11->add_option("--trials", verify.trials)->capture_default_str();
  v11->add_option("--max-n", verify.max_n)->capture_default_str();
  v11->add_option("--seed", verify.seed)->capture_default_str();
  v11->add_flag("--exhaustive", verify.exhaustive,
                "All graphs on --max-n labeled vertices");
  v11->callback([&] { status = run_verify_last_power(verify); });
  auto* v34 = v->add_subcommand(
      "thm34", "Classifier agrees with the exchange and Betti oracles");
  v34->add_flag("--exhaustive", verify.exhaustive,
                "All labeled forests up to --max-n");
  v34->add_option("--max-n", verify.max_n, "Vertex bound (default 6 "
                  "exhaustive, 10 random)");
  v34->add_option("--max-weight", verify.max_weight)->capture_default_str();
  v34->add_option("--trials", verify.trials)->capture_default_str();
  v34->add_option("--seed", verify.seed)->capture_default_str();
  v34->add_option("--field", verify.field, "gf2 or q")->capture_default_str();
  v34->add_flag("--dual-field", verify.dual_field,
                "Also compare GF(2) and rational Betti tables");
  v34->callback([&] {
    if (v34->count("--max-n") == 0) verify.max_n = verify.exhaustive ? 6 : 10;
    status = run_verify_forests(verify);
  });
  auto* v22 = v->add_subcommand(
      "lemma22", "Betti numbers and regularity grow from induced subgraphs");
  v22->add_option("--pairs", verify.pairs)->capture_default_str();
  v22->add_option("--seed", verify.seed)->capture_default_str();
  v22->add_option("--field", verify.field, "gf2 or q")->capture_default_str();
  v22->callback([&] { status = run_verify_induced(verify); });

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand(
      "enumerate", "Construct forests whose last matching power is "
                   "polymatroidal");
  e->add_option("--nu", enumerate.nu, "Matching number")->required();
  e->add_option("--budget", enumerate.budget)->capture_default_str();
  e->add_option("--out", enumerate.out, "Directory for graph documents");
  e->add_option("--seed", enumerate.seed)->capture_default_str();
  e->add_option("--max-weight", enumerate.max_weight)->capture_default_str();
  e->callback([&] { status = run_enumerate(enumerate); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kOk : kError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kError;
  }
  return status;
}
