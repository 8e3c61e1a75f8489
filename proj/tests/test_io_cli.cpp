#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "cohdist/errors.hpp"
#include "cohdist/io.hpp"
#include "cohdist/random.hpp"
#include "cli_runner.hpp"
#include "helpers.hpp"

using namespace cohdist;
using testutil::approx;
using testutil::CliRunner;
using testutil::contains;
using testutil::slurp;

TEST_CASE("state files round-trip") {
  for (const BipartiteState& s :
       {intro_example_state(), bell_state(), ising_ground_state(3.0, 1.0, 1e-3)}) {
    const nlohmann::ordered_json j = state_to_json(s);
    const ParsedState back = parse_state_json(nlohmann::json::parse(j.dump()));
    const auto* bip = std::get_if<BipartiteState>(&back);
    REQUIRE(bip != nullptr);
    CHECK(bip->dim_a() == s.dim_a());
    CHECK(max_abs_diff(bip->mat(), s.mat()) < 1e-12);
  }
}

TEST_CASE("single-system state files parse to a density matrix") {
  std::mt19937_64 rng(601);
  const DensityMatrix rho = random_density_matrix(3, rng);
  const ParsedState back = parse_state_json(nlohmann::json::parse(state_to_json(rho).dump()));
  const auto* plain = std::get_if<DensityMatrix>(&back);
  REQUIRE(plain != nullptr);
  CHECK(max_abs_diff(plain->mat(), rho.mat()) < 1e-12);
}

TEST_CASE("parse failures carry the violated invariant") {
  const auto bad_trace = nlohmann::json::parse(R"({
    "dims": [2],
    "matrix": [[[0.5, 0], [0, 0]], [[0, 0], [0.4, 0]]]
  })");
  CHECK_THROWS_WITH_AS(parse_state_json(bad_trace), doctest::Contains("trace deviation 0.1"),
                       ValidationError);

  CHECK_THROWS_AS(parse_state_json(nlohmann::json::parse("{}")), ParseError);
  CHECK_THROWS_AS(parse_state_json(nlohmann::json::parse(R"({"dims":[2,2],"matrix":[[[1,0]]]})")),
                  ParseError);
}

TEST_CASE("sweep range validation") {
  SweepParams bad;
  bad.jmin = 2.0;
  bad.jmax = 1.0;
  CHECK_THROWS_AS(ising_sweep(bad), InvalidRangeError);

  SweepParams few;
  few.steps = 1;
  CHECK_THROWS_AS(ising_sweep(few), InvalidRangeError);
}

TEST_CASE("sweep csv header is stable") {
  CHECK(sweep_csv_header() ==
        "j_over_lambda,l1_total,l1_a,l1_b,l1_acc_a,l1_acc_b,l1_rem,l1_residual,"
        "rel_total,rel_a,rel_b,rel_acc_a,rel_acc_b,rel_rem,rel_residual");
}

TEST_CASE("cli: gen then analyze matches the in-memory report") {
  CliRunner cli;
  const auto state_path = cli.path("intro.json");
  auto gen = cli.run("gen intro-example --out \"" + state_path.string() + "\"");
  REQUIRE(gen.exit_code == 0);

  // parsed file reproduces the generator exactly
  const ParsedState parsed = parse_state(state_path);
  const auto* bip = std::get_if<BipartiteState>(&parsed);
  REQUIRE(bip != nullptr);
  CHECK(max_abs_diff(bip->mat(), intro_example_state().mat()) == 0.0);

  const auto report_path = cli.path("report.json");
  auto analyze = cli.run("--json \"" + report_path.string() + "\" analyze \"" +
                         state_path.string() + "\" --measure both");
  REQUIRE(analyze.exit_code == 0);

  const auto j = nlohmann::json::parse(slurp(report_path));
  const DistributionReport expect_l1 = distribution_report(*bip, MeasureKind::L1);
  CHECK(j["measures"]["l1"]["c_total"].get<double>() == expect_l1.c_total);
  CHECK(j["measures"]["l1"]["acc_a"].get<double>() == expect_l1.acc_a);
  CHECK(approx(j["measures"]["l1"]["c_total"].get<double>(), 1.0, 1e-9));
  CHECK(approx(j["measures"]["l1"]["acc_a"].get<double>(), 1.0, 1e-9));
  CHECK(approx(j["measures"]["l1"]["c_a"].get<double>(), 0.0, 1e-9));
  CHECK(approx(j["measures"]["rel"]["c_total"].get<double>(), 1.0, 1e-9));
  CHECK(approx(j["measures"]["rel"]["remaining"].get<double>(), 0.0, 1e-9));
}

TEST_CASE("cli: bell extras include negativity") {
  CliRunner cli;
  const auto state_path = cli.path("bell.json");
  REQUIRE(cli.run("gen bell --out \"" + state_path.string() + "\"").exit_code == 0);

  const auto report_path = cli.path("bell_report.json");
  REQUIRE(cli.run("--json \"" + report_path.string() + "\" analyze \"" + state_path.string() +
                  "\"").exit_code == 0);
  const auto j = nlohmann::json::parse(slurp(report_path));
  CHECK(approx(j["extras"]["negativity"].get<double>(), 1.0, 1e-9));
  CHECK(approx(j["measures"]["l1"]["remaining"].get<double>(), 1.0, 1e-9));
  CHECK(approx(j["measures"]["rel"]["remaining"].get<double>(), 1.0, 1e-9));
}

TEST_CASE("cli: schmidt generator reads a coefficient file") {
  CliRunner cli;
  const auto coeff_path = cli.path("coeffs.json");
  {
    std::ofstream out(coeff_path);
    out << R"({"matrix": [[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]})";
  }
  const auto state_path = cli.path("schmidt.json");
  REQUIRE(cli.run("gen schmidt --coeffs \"" + coeff_path.string() + "\" --out \"" +
                  state_path.string() + "\"").exit_code == 0);
  const ParsedState parsed = parse_state(state_path);
  CHECK(max_abs_diff(std::get<BipartiteState>(parsed).mat(), bell_state().mat()) < 1e-12);
}

TEST_CASE("cli: exit codes") {
  CliRunner cli;

  // 1: validation failure
  const auto bad_path = cli.path("bad.json");
  {
    std::ofstream out(bad_path);
    out << R"({"dims":[2,1],"matrix":[[[0.5,0],[0,0]],[[0,0],[0.4,0]]]})";
  }
  CHECK(cli.run("analyze \"" + bad_path.string() + "\"").exit_code == 1);

  // 1: missing file
  CHECK(cli.run("analyze \"" + cli.path("nope.json").string() + "\"").exit_code == 1);

  // 2: unknown generator and invalid arguments
  CHECK(cli.run("gen warp-core --out \"" + cli.path("x.json").string() + "\"").exit_code == 2);
  CHECK(cli.run("sweep-ising --jmin 5 --jmax 1 --out \"" + cli.path("s.csv").string() + "\"")
            .exit_code == 2);
  CHECK(cli.run("gen ising-ground --lambda 0 --out \"" + cli.path("y.json").string() + "\"")
            .exit_code == 2);
  CHECK(cli.run("frobnicate").exit_code == 2);

  // analyze of a single-system state is a validation error
  const auto single_path = cli.path("single.json");
  {
    std::ofstream out(single_path);
    out << R"({"dims":[2],"matrix":[[[1,0],[0,0]],[[0,0],[0,0]]]})";
  }
  CHECK(cli.run("analyze \"" + single_path.string() + "\"").exit_code == 1);
}

TEST_CASE("cli: sweep output is deterministic with a golden header") {
  CliRunner cli;
  const auto csv1 = cli.path("sweep1.csv");
  const auto csv2 = cli.path("sweep2.csv");
  const std::string args = "sweep-ising --jmin 0 --jmax 2 --steps 9 --epsilon 1e-3 --out ";
  REQUIRE(cli.run(args + "\"" + csv1.string() + "\"").exit_code == 0);
  REQUIRE(cli.run(args + "\"" + csv2.string() + "\"").exit_code == 0);

  const std::string body1 = slurp(csv1);
  CHECK(body1 == slurp(csv2));
  CHECK(body1.substr(0, body1.find('\n')) == sweep_csv_header());
}

TEST_CASE("cli: assist is deterministic for a fixed seed") {
  CliRunner cli;
  const auto state_path = cli.path("mixed.json");
  {
    std::ofstream out(state_path);
    out << R"({"dims":[2],"matrix":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})";
  }
  const auto ens1 = cli.path("ens1.json");
  const auto ens2 = cli.path("ens2.json");
  const std::string base = "--seed 42 assist \"" + state_path.string() +
                           "\" --measure rel --restarts 4 --out ";
  const auto r1 = cli.run(base + "\"" + ens1.string() + "\"");
  const auto r2 = cli.run(base + "\"" + ens2.string() + "\"");
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(slurp(ens1) == slurp(ens2));

  const auto j = nlohmann::json::parse(slurp(ens1));
  CHECK(j["best_value"].get<double>() >= 1.0 - 1e-6);
  CHECK(j["restarts_used"].get<int>() == 4);

  // pure state: zero without consuming restarts
  const auto pure_path = cli.path("pure.json");
  {
    std::ofstream out(pure_path);
    out << R"({"dims":[2],"matrix":[[[1,0],[0,0]],[[0,0],[0,0]]]})";
  }
  const auto ens3 = cli.path("ens3.json");
  const auto r3 = cli.run("assist \"" + pure_path.string() + "\" --out \"" + ens3.string() + "\"");
  REQUIRE(r3.exit_code == 0);
  const auto jp = nlohmann::json::parse(slurp(ens3));
  CHECK(jp["best_value"].get<double>() == 0.0);
  CHECK(jp["restarts_used"].get<int>() == 0);
}

TEST_CASE("cli: product-plus generator") {
  CliRunner cli;
  const auto state_path = cli.path("pp.json");
  REQUIRE(cli.run("gen product-plus --out \"" + state_path.string() + "\"").exit_code == 0);

  const auto report_path = cli.path("pp_report.json");
  REQUIRE(cli.run("--json \"" + report_path.string() + "\" analyze \"" + state_path.string() +
                  "\"").exit_code == 0);
  const auto j = nlohmann::json::parse(slurp(report_path));
  CHECK(approx(j["measures"]["l1"]["c_total"].get<double>(), 3.0, 1e-9));
  CHECK(approx(j["measures"]["l1"]["c_a"].get<double>(), 1.0, 1e-9));
  CHECK(approx(j["measures"]["l1"]["remaining"].get<double>(), 1.0, 1e-9));
  CHECK(approx(j["measures"]["l1"]["acc_a"].get<double>(), 0.0, 1e-9));
  CHECK(approx(j["measures"]["rel"]["c_a"].get<double>(), 1.0, 1e-9));
  CHECK(approx(j["measures"]["rel"]["remaining"].get<double>(), 0.0, 1e-9));
  CHECK(approx(j["extras"]["negativity"].get<double>(), 0.0, 1e-9));
}

TEST_CASE("cli: natural-log output rescales entropic quantities") {
  CliRunner cli;
  const auto state_path = cli.path("intro2.json");
  REQUIRE(cli.run("gen intro-example --out \"" + state_path.string() + "\"").exit_code == 0);

  const auto bits_path = cli.path("bits.json");
  const auto nats_path = cli.path("nats.json");
  REQUIRE(cli.run("--json \"" + bits_path.string() + "\" analyze \"" + state_path.string() +
                  "\"").exit_code == 0);
  REQUIRE(cli.run("--log-base e --json \"" + nats_path.string() + "\" analyze \"" +
                  state_path.string() + "\"").exit_code == 0);

  const auto bits = nlohmann::json::parse(slurp(bits_path));
  const auto nats = nlohmann::json::parse(slurp(nats_path));
  const double ln2 = std::log(2.0);
  CHECK(approx(nats["measures"]["rel"]["c_total"].get<double>(),
               bits["measures"]["rel"]["c_total"].get<double>() * ln2, 1e-12));
  // l1 values are base-free
  CHECK(nats["measures"]["l1"]["c_total"].get<double>() ==
        bits["measures"]["l1"]["c_total"].get<double>());
}
