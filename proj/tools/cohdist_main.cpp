// cohdist: analyze bipartite coherence distribution, sweep the two-site
// Ising ground state, search pure-state decompositions, and export the
// built-in generator states.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohdist/correlations.hpp"
#include "cohdist/distribution.hpp"
#include "cohdist/ensemble_search.hpp"
#include "cohdist/errors.hpp"
#include "cohdist/io.hpp"

namespace {

using nlohmann::ordered_json;

enum class LogBase { Two, E };

// Every entropy-based quantity is a linear combination of von Neumann
// entropies, so switching to natural logarithms is an exact unit
// conversion on output. L1 values are base-free.
double entropy_units(double bits, LogBase base) {
  return base == LogBase::E ? bits * std::numbers::ln2 : bits;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

struct GlobalFlags {
  LogBase log_base = LogBase::Two;
  std::string json_path;
  std::uint64_t seed = 0;
};

ordered_json report_json(const cohdist::DistributionReport& r, LogBase base) {
  const bool ent = r.measure == cohdist::MeasureKind::RelativeEntropy;
  const auto u = [&](double v) { return ent ? entropy_units(v, base) : v; };
  ordered_json j;
  j["c_total"] = u(r.c_total);
  j["c_a"] = u(r.c_a);
  j["acc_a"] = u(r.acc_a);
  j["c_b"] = u(r.c_b);
  j["acc_b"] = u(r.acc_b);
  j["remaining"] = u(r.remaining);
  j["residual"] = u(r.residual);
  return j;
}

void print_report_row(const std::string& label, const cohdist::DistributionReport& r,
                      LogBase base) {
  const bool ent = r.measure == cohdist::MeasureKind::RelativeEntropy;
  const auto u = [&](double v) { return ent ? entropy_units(v, base) : v; };
  std::printf("%-4s %14s %14s %14s %14s %14s %14s %12.3e\n", label.c_str(),
              fmt(u(r.c_total)).c_str(), fmt(u(r.c_a)).c_str(), fmt(u(r.acc_a)).c_str(),
              fmt(u(r.c_b)).c_str(), fmt(u(r.acc_b)).c_str(), fmt(u(r.remaining)).c_str(),
              u(r.residual));
}

int run_analyze(const std::string& path, const std::string& measure, const GlobalFlags& flags) {
  const cohdist::ParsedState parsed = cohdist::parse_state(path);
  const auto* bip = std::get_if<cohdist::BipartiteState>(&parsed);
  if (bip == nullptr) {
    throw cohdist::ValidationError("analyze requires a bipartite state (dims [dimA, dimB])");
  }

  const bool want_l1 = measure == "l1" || measure == "both";
  const bool want_rel = measure == "rel" || measure == "both";

  std::optional<cohdist::DistributionReport> l1;
  std::optional<cohdist::DistributionReport> rel;
  if (want_l1) l1 = cohdist::distribution_report(*bip, cohdist::MeasureKind::L1);
  if (want_rel) rel = cohdist::distribution_report(*bip, cohdist::MeasureKind::RelativeEntropy);
  const cohdist::DiscordReport dis = cohdist::discord_report(*bip);
  const double neg = cohdist::negativity(*bip);
  const double mi = dis.mutual_info;

  std::printf("bipartite state %zux%zu (dim %zu)\n\n", bip->dim_a(), bip->dim_b(),
              bip->state().dim());
  std::printf("%-4s %14s %14s %14s %14s %14s %14s %12s\n", "", "c_total", "c_a", "acc_a", "c_b",
              "acc_b", "remaining", "residual");
  if (l1) print_report_row("l1", *l1, flags.log_base);
  if (rel) print_report_row("rel", *rel, flags.log_base);

  const auto u = [&](double v) { return entropy_units(v, flags.log_base); };
  std::printf("\nmutual information  %s\n", fmt(u(mi)).c_str());
  std::printf("discord  D-> %s   D<- %s   D<-> %s\n", fmt(u(dis.discord_right)).c_str(),
              fmt(u(dis.discord_left)).c_str(), fmt(u(dis.discord_both)).c_str());
  std::printf("classical correlation  I_AB~ %s   I_~A~B %s\n", fmt(u(dis.classical_left)).c_str(),
              fmt(u(dis.classical_both)).c_str());
  std::printf("negativity  %s\n", fmt(neg).c_str());

  if (!flags.json_path.empty()) {
    ordered_json j;
    j["dims"] = {bip->dim_a(), bip->dim_b()};
    j["log_base"] = flags.log_base == LogBase::Two ? "2" : "e";
    ordered_json measures;
    if (l1) measures["l1"] = report_json(*l1, flags.log_base);
    if (rel) measures["rel"] = report_json(*rel, flags.log_base);
    j["measures"] = std::move(measures);
    j["discord"] = {{"mutual_info", u(dis.mutual_info)},
                    {"discord_right", u(dis.discord_right)},
                    {"discord_left", u(dis.discord_left)},
                    {"discord_both", u(dis.discord_both)},
                    {"classical_left", u(dis.classical_left)},
                    {"classical_both", u(dis.classical_both)}};
    j["extras"] = {{"negativity", neg}};
    std::ofstream out(flags.json_path);
    if (!out) throw cohdist::ParseError("cannot write " + flags.json_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_sweep(const cohdist::SweepParams& params, const std::string& out_path) {
  const std::vector<cohdist::SweepRow> rows = cohdist::ising_sweep(params);
  std::ofstream out(out_path);
  if (!out) throw cohdist::ParseError("cannot write " + out_path);
  cohdist::write_sweep_csv(out, rows);
  std::printf("wrote %zu rows to %s\n", rows.size(), out_path.c_str());
  return 0;
}

int run_assist(const std::string& path, const std::string& measure, std::size_t restarts,
               std::size_t max_iters, const std::string& out_path, const GlobalFlags& flags) {
  const cohdist::ParsedState parsed = cohdist::parse_state(path);
  const cohdist::DensityMatrix& rho = cohdist::joint_state(parsed);
  const cohdist::MeasureKind kind =
      measure == "l1" ? cohdist::MeasureKind::L1 : cohdist::MeasureKind::RelativeEntropy;

  const cohdist::SearchResult result =
      cohdist::max_accessible_coherence(rho, kind, restarts, max_iters, flags.seed);

  const bool ent = kind == cohdist::MeasureKind::RelativeEntropy;
  const auto u = [&](double v) { return ent ? entropy_units(v, flags.log_base) : v; };
  std::printf("best_value    %.12g\n", u(result.best_value));
  if (std::isinf(result.upper_bound)) {
    std::printf("upper_bound   inf\n");
  } else {
    std::printf("upper_bound   %.12g\n", u(result.upper_bound));
  }
  std::printf("converged     %s\n", result.converged ? "true" : "false");
  std::printf("restarts_used %zu\n", result.restarts_used);

  ordered_json j;
  j["measure"] = measure;
  j["seed"] = flags.seed;
  j["best_value"] = u(result.best_value);
  if (std::isinf(result.upper_bound)) {
    j["upper_bound"] = "inf";
  } else {
    j["upper_bound"] = u(result.upper_bound);
  }
  j["converged"] = result.converged;
  j["restarts_used"] = result.restarts_used;
  ordered_json members = ordered_json::array();
  for (const auto& [p, state] : result.best_ensemble.members()) {
    ordered_json member;
    member["p"] = p;
    member["state"] = cohdist::state_to_json(state);
    members.push_back(std::move(member));
  }
  j["ensemble"] = std::move(members);

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw cohdist::ParseError("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
  if (!flags.json_path.empty()) {
    std::ofstream out(flags.json_path);
    if (!out) throw cohdist::ParseError("cannot write " + flags.json_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_gen(const std::string& name, double j_coupling, double lambda, double epsilon,
            const std::string& coeffs_path, const std::string& out_path) {
  std::optional<cohdist::BipartiteState> state;
  if (name == "intro-example") {
    state = cohdist::intro_example_state();
  } else if (name == "bell") {
    state = cohdist::bell_state();
  } else if (name == "product-plus") {
    state = cohdist::product_plus_state();
  } else if (name == "ising-ground") {
    state = cohdist::ising_ground_state(j_coupling, lambda, epsilon);
  } else if (name == "schmidt") {
    if (coeffs_path.empty()) {
      throw cohdist::InvalidParameterError("gen schmidt requires --coeffs <file>");
    }
    state = cohdist::schmidt_correlated(cohdist::parse_matrix_file(coeffs_path));
  } else {
    throw cohdist::UnknownGeneratorError("unknown generator \"" + name +
                                         "\" (expected intro-example, bell, schmidt, "
                                         "ising-ground, or product-plus)");
  }

  cohdist::write_state_file(out_path, cohdist::state_to_json(*state));
  std::printf("wrote %s state to %s\n", name.c_str(), out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite coherence distribution toolkit"};
  app.require_subcommand(1);

  GlobalFlags flags;
  std::string log_base = "2";
  app.add_option("--log-base", log_base, "logarithm base for entropic quantities")
      ->check(CLI::IsMember({"2", "e"}))
      ->capture_default_str();
  app.add_option("--json", flags.json_path, "write a JSON report to this path");
  app.add_option("--seed", flags.seed, "seed for randomized commands")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "coherence distribution of a bipartite state");
  std::string analyze_path;
  std::string measure = "both";
  analyze->add_option("state", analyze_path, "state JSON file")->required();
  analyze->add_option("--measure", measure, "coherence measure")
      ->check(CLI::IsMember({"l1", "rel", "both"}))
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep-ising", "distribution along the Ising ground-state sweep");
  cohdist::SweepParams params;
  std::string sweep_out;
  sweep->add_option("--jmin", params.jmin, "lowest J/lambda")->capture_default_str();
  sweep->add_option("--jmax", params.jmax, "highest J/lambda")->capture_default_str();
  sweep->add_option("--steps", params.steps, "grid points")->capture_default_str();
  sweep->add_option("--epsilon", params.epsilon, "symmetry-breaking term")->capture_default_str();
  sweep->add_option("--lambda", params.lambda, "coupling lambda")->capture_default_str();
  sweep->add_option("--out", sweep_out, "CSV output path")->required();

  auto* assist = app.add_subcommand("assist", "search pure-state decompositions for accessible coherence");
  std::string assist_path;
  std::string assist_measure = "rel";
  std::size_t restarts = 32;
  std::size_t max_iters = 500;
  std::string assist_out;
  assist->add_option("state", assist_path, "state JSON file")->required();
  assist->add_option("--measure", assist_measure, "coherence measure")
      ->check(CLI::IsMember({"l1", "rel"}))
      ->capture_default_str();
  assist->add_option("--restarts", restarts, "random restarts")->capture_default_str();
  assist->add_option("--max-iters", max_iters, "sweep limit per restart")->capture_default_str();
  assist->add_option("--out", assist_out, "write the best ensemble as JSON");

  auto* gen = app.add_subcommand("gen", "export a generator state");
  std::string gen_name;
  std::string gen_out;
  std::string coeffs_path;
  double j_coupling = 0.0, lambda = 1.0, epsilon = 1e-3;
  gen->add_option("name", gen_name, "intro-example | bell | schmidt | ising-ground | product-plus")
      ->required();
  gen->add_option("--J", j_coupling, "Ising field J")->capture_default_str();
  gen->add_option("--lambda", lambda, "Ising coupling lambda")->capture_default_str();
  gen->add_option("--epsilon", epsilon, "Ising symmetry-breaking term")->capture_default_str();
  gen->add_option("--coeffs", coeffs_path, "coefficient matrix file (schmidt)");
  gen->add_option("--out", gen_out, "state output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  flags.log_base = log_base == "e" ? LogBase::E : LogBase::Two;

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_path, measure, flags);
    if (app.got_subcommand(sweep)) return run_sweep(params, sweep_out);
    if (app.got_subcommand(assist))
      return run_assist(assist_path, assist_measure, restarts, max_iters, assist_out, flags);
    if (app.got_subcommand(gen))
      return run_gen(gen_name, j_coupling, lambda, epsilon, coeffs_path, gen_out);
  } catch (const cohdist::PartitionViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const cohdist::InvalidRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cohdist::InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cohdist::UnknownGeneratorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cohdist::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
