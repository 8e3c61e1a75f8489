#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cohdist/distribution.hpp"
#include "cohdist/states.hpp"

namespace cohdist {

// State files are JSON: {"dims": [dA, dB] or [d], "matrix": [[[re, im], ...], ...]}.
// Entries are decimal floats that round-trip double precision exactly.

using ParsedState = std::variant<DensityMatrix, BipartiteState>;

ParsedState parse_state(const std::filesystem::path& path);
ParsedState parse_state_json(const nlohmann::json& j);

nlohmann::ordered_json state_to_json(const DensityMatrix& rho);
nlohmann::ordered_json state_to_json(const BipartiteState& rho);

void write_state_file(const std::filesystem::path& path, const nlohmann::ordered_json& j);

// Read a coefficient grid ({"matrix": ...}, dims optional) for the
// Schmidt-correlated generator.
ComplexMatrix parse_matrix_file(const std::filesystem::path& path);

// The joint density matrix of whichever state was parsed.
const DensityMatrix& joint_state(const ParsedState& s);

struct SweepParams {
  double jmin = 0.0;
  double jmax = 10.0;
  int steps = 101;
  double epsilon = 1e-3;
  double lambda = 1.0;
};

struct SweepRow {
  double j_over_lambda;
  DistributionReport l1;
  DistributionReport rel;
};

// Distribution ledgers for the two-site Ising ground state on a uniform
// J/lambda grid. Throws InvalidRangeError unless jmin <= jmax and steps >= 2.
std::vector<SweepRow> ising_sweep(const SweepParams& params);

// Fixed column set; guarded by a golden-header test.
std::string sweep_csv_header();
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// %.12g formatting used for all CSV values.
std::string format_sig12(double v);

}  // namespace cohdist
