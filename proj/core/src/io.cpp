#include "cohdist/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "cohdist/errors.hpp"

namespace cohdist {

namespace {

ComplexMatrix matrix_from_json(const nlohmann::json& jm) {
  if (!jm.is_array() || jm.empty()) throw ParseError("\"matrix\" must be a nonempty array of rows");
  const std::size_t n = jm.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = jm[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("matrix row " + std::to_string(i) + " does not have " + std::to_string(n) +
                       " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = row[j];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not an [re, im] pair");
      }
      m(i, j) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.dim(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace

ParsedState parse_state_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    throw ParseError("state file must be an object with \"dims\" and \"matrix\"");
  }
  const auto& jd = j["dims"];
  if (!jd.is_array() || jd.empty() || jd.size() > 2) {
    throw ParseError("\"dims\" must be [d] or [dimA, dimB]");
  }
  std::vector<std::size_t> dims;
  for (const auto& e : jd) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() == 0) {
      throw ParseError("\"dims\" entries must be positive integers");
    }
    dims.push_back(e.get<std::size_t>());
  }

  const ComplexMatrix m = matrix_from_json(j["matrix"]);
  std::size_t expected = 1;
  for (std::size_t d : dims) expected *= d;
  if (expected != m.dim()) {
    throw ParseError("dims product " + std::to_string(expected) + " does not match matrix dimension " +
                     std::to_string(m.dim()));
  }

  DensityMatrix rho(m);  // ValidationError on invariant failure
  if (dims.size() == 2) return BipartiteState(std::move(rho), dims[0], dims[1]);
  return rho;
}

ParsedState parse_state(const std::filesystem::path& path) {
  return parse_state_json(load_json(path));
}

nlohmann::ordered_json state_to_json(const DensityMatrix& rho) {
  nlohmann::ordered_json j;
  j["dims"] = {rho.dim()};
  j["matrix"] = matrix_to_json(rho.mat());
  return j;
}

nlohmann::ordered_json state_to_json(const BipartiteState& rho) {
  nlohmann::ordered_json j;
  j["dims"] = {rho.dim_a(), rho.dim_b()};
  j["matrix"] = matrix_to_json(rho.mat());
  return j;
}

void write_state_file(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

ComplexMatrix parse_matrix_file(const std::filesystem::path& path) {
  const nlohmann::json j = load_json(path);
  if (!j.is_object() || !j.contains("matrix")) {
    throw ParseError("coefficient file must be an object with \"matrix\"");
  }
  return matrix_from_json(j["matrix"]);
}

const DensityMatrix& joint_state(const ParsedState& s) {
  if (const auto* rho = std::get_if<DensityMatrix>(&s)) return *rho;
  return std::get<BipartiteState>(s).state();
}

std::vector<SweepRow> ising_sweep(const SweepParams& params) {
  if (!(params.jmin <= params.jmax)) {
    throw InvalidRangeError("sweep requires jmin <= jmax");
  }
  if (params.steps < 2) throw InvalidRangeError("sweep requires steps >= 2");

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(params.steps));
  for (int i = 0; i < params.steps; ++i) {
    const double jol = params.jmin + (params.jmax - params.jmin) * i / (params.steps - 1);
    const BipartiteState ground =
        ising_ground_state(jol * params.lambda, params.lambda, params.epsilon);
    rows.push_back(SweepRow{jol, distribution_report(ground, MeasureKind::L1),
                            distribution_report(ground, MeasureKind::RelativeEntropy)});
  }
  return rows;
}

std::string sweep_csv_header() {
  return "j_over_lambda,l1_total,l1_a,l1_b,l1_acc_a,l1_acc_b,l1_rem,l1_residual,"
         "rel_total,rel_a,rel_b,rel_acc_a,rel_acc_b,rel_rem,rel_residual";
}

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << sweep_csv_header() << "\n";
  for (const auto& r : rows) {
    const DistributionReport& a = r.l1;
    const DistributionReport& b = r.rel;
    out << format_sig12(r.j_over_lambda);
    for (const double v : {a.c_total, a.c_a, a.c_b, a.acc_a, a.acc_b, a.remaining, a.residual,
                           b.c_total, b.c_a, b.c_b, b.acc_a, b.acc_b, b.remaining, b.residual}) {
      out << ',' << format_sig12(v);
    }
    out << "\n";
  }
}

}  // namespace cohdist
