// Copyright 2026 The qburgers Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qburgers/block_encoding.hpp"
#include "qburgers/burgers.hpp"
#include "qburgers/decomposition.hpp"
#include "qburgers/embedding.hpp"
#include "qburgers/vqls.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace qburgers;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;

struct RunConfig {
  int nx = 4;
  int nt = 4;
  int alpha = 2;
  double dt = 0.25;
  double domain_length = 2.0 * std::numbers::pi;
  double nu = 1.0;
  double sigma = 0.5;
  double mu = std::numbers::pi;
  int layers = 3;
  std::uint64_t seed = 1;
  double tolerance = 1e-3;
  int max_iter = 40000;

  GridConfig grid() const {
    return GridConfig::from_domain(nx, nt, domain_length, dt, nu, alpha);
  }
};

void assign(RunConfig& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "nx") cfg.nx = std::stoi(value);
    else if (key == "nt") cfg.nt = std::stoi(value);
    else if (key == "alpha") cfg.alpha = std::stoi(value);
    else if (key == "dt") cfg.dt = std::stod(value);
    else if (key == "domain_length") cfg.domain_length = std::stod(value);
    else if (key == "nu") cfg.nu = std::stod(value);
    else if (key == "sigma") cfg.sigma = std::stod(value);
    else if (key == "mu") cfg.mu = std::stod(value);
    else if (key == "layers") cfg.layers = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "tolerance") cfg.tolerance = std::stod(value);
    else if (key == "max_iter") cfg.max_iter = std::stoi(value);
    else throw std::invalid_argument("unknown config key: " + key);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for config key " + key + ": " + value);
  }
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides,
                      std::optional<std::uint64_t> seed_flag) {
  RunConfig cfg;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
          throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                      ": expected key = value");
        }
        continue;
      }
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      assign(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
  }
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--set expects key=value, got: " + kv);
    }
    assign(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (seed_flag) cfg.seed = *seed_flag;
  return cfg;
}

std::uint64_t fnv1a64_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t hash = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream oss;
  oss << std::hex << v;
  return oss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::int64_t nnz(const SparseMatrix& m) { return m.nonZeros(); }

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

int cmd_build(const RunConfig& cfg, const fs::path& out_dir, bool dump) {
  const GridConfig grid = cfg.grid();
  const DenseVector u0 = initial_state(grid, cfg.sigma, cfg.mu);
  const DenseVector y0 = carleman_initial_vector(grid, u0);
  const CarlemanSystem plain = build_time_system(build_carleman_A(grid), grid, y0);
  const EmbeddedSystem sys = build_embedded_system(grid, y0);

  ordered_json doc;
  doc["schema_version"] = 1;
  doc["config"] = grid_to_json(grid);
  doc["carleman"] = {{"dim", plain.L.rows()}, {"nnz", nnz(plain.L)}};
  doc["embedded"] = {{"dim", sys.L_e.rows()},
                     {"nnz", nnz(sys.L_e)},
                     {"qubit_count", sys.qubit_count}};
  write_text(out_dir / "build.json", doc.dump(2) + "\n");

  if (dump) {
    if (sys.L_e.rows() > 4096) {
      std::cerr << "warning: dimension above dump cap, skipping dense dump\n";
    } else {
      std::ostringstream oss;
      oss << sys.L_e.rows() << " " << sys.L_e.cols() << " " << nnz(sys.L_e) << "\n";
      for (int k = 0; k < sys.L_e.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(sys.L_e, k); it; ++it) {
          oss << it.row() << " " << it.col() << " " << it.value().real() << " "
              << it.value().imag() << "\n";
        }
      }
      write_text(out_dir / "L_e.coo", oss.str());
    }
  }

  std::cout << "embedded dim=" << sys.L_e.rows() << " nnz(L_e)=" << nnz(sys.L_e)
            << " qubits=" << sys.qubit_count << "\n"
            << "carleman dim=" << plain.L.rows() << " nnz(L)=" << nnz(plain.L) << "\n"
            << "wrote " << (out_dir / "build.json").string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

int cmd_decompose(const RunConfig& cfg, const fs::path& out_dir, bool verify) {
  const GridConfig grid = cfg.grid();
  const std::vector<DecompositionTerm> terms = decompose_full(grid);
  const TermCountBreakdown counts = term_count_breakdown(grid);

  ordered_json doc = terms_to_json(grid, terms);
  doc["counts"] = {{"enumerated", terms.size()},
                   {"formula", term_count(grid)},
                   {"l1", counts.l1},
                   {"l2a", counts.l2a},
                   {"l2b", counts.l2b}};

  std::cout << "enumerated=" << terms.size() << " formula=" << term_count(grid)
            << " (L1=" << counts.l1 << " L2a=" << counts.l2a << " L2b=" << counts.l2b
            << ")\n";
  if (grid.nx == 4 && grid.nt == 4 && grid.alpha == 2) {
    // a count of 73 has been reported for this configuration; enumeration and
    // the closed form both give 49, so the discrepancy is surfaced, not matched
    doc["counts"]["reported_elsewhere"] = 73;
    std::cout << "note: a reported count of 73 exists for this configuration; "
                 "enumeration gives 49\n";
  }

  const DenseVector u0 = initial_state(grid, cfg.sigma, cfg.mu);
  const EmbeddedSystem sys = build_embedded_system(grid, carleman_initial_vector(grid, u0));

  if (sys.L_e.rows() <= 1024) {
    const auto pauli = pauli_decompose(sys.L_e);
    doc["counts"]["pauli"] = pauli.size();
    std::cout << "pauli strings=" << pauli.size() << "\n";
  }

  int exit_code = kExitOk;
  if (verify) {
    const double err = max_abs_diff(reconstruct(terms), sys.L_e);
    doc["verify"] = {{"max_abs_err", err}, {"tolerance", 1e-12}};
    std::cout << "reconstruction max_abs_err=" << err << "\n";
    if (!(err <= 1e-12)) {
      std::cerr << "verification failed: reconstruction error above 1e-12\n";
      exit_code = kExitVerifyFailure;
    }
  }

  write_text(out_dir / "terms.json", doc.dump(2) + "\n");
  std::cout << "wrote " << (out_dir / "terms.json").string() << "\n";
  return exit_code;
}

// ---------------------------------------------------------------------------
// encode
// ---------------------------------------------------------------------------

int cmd_encode(const RunConfig& cfg, const fs::path& out_dir,
               std::optional<std::int64_t> term_id) {
  const GridConfig grid = cfg.grid();
  const std::vector<DecompositionTerm> terms = decompose_full(grid);
  if (term_id && (*term_id < 0 || *term_id >= static_cast<std::int64_t>(terms.size()))) {
    throw std::invalid_argument("--term id out of range (have " +
                                std::to_string(terms.size()) + " terms)");
  }

  ordered_json doc;
  doc["schema_version"] = 1;
  doc["config"] = grid_to_json(grid);
  ordered_json encodings = ordered_json::array();

  const bool can_verify = grid.embedded_qubits() + 1 <= 12;
  if (!can_verify) {
    std::cerr << "warning: register too wide for dense verification, skipping checks\n";
  }

  int failures = 0;
  for (std::size_t id = 0; id < terms.size(); ++id) {
    if (term_id && static_cast<std::int64_t>(id) != *term_id) continue;
    const BlockEncoding enc = block_encode(terms[id]);
    ordered_json entry = encoding_to_json(id, terms[id], enc);
    if (can_verify) {
      const VerifyReport rep = verify_encoding(enc, terms[id]);
      entry["verified"] = rep.ok;
      if (!rep.ok) {
        ++failures;
        entry["detail"] = rep.detail;
      }
    }
    encodings.push_back(std::move(entry));
  }
  doc["encodings"] = std::move(encodings);
  write_text(out_dir / "circuits.json", doc.dump(2) + "\n");

  std::cout << "encoded " << doc["encodings"].size() << " terms";
  if (can_verify) std::cout << ", verification failures: " << failures;
  std::cout << "\nwrote " << (out_dir / "circuits.json").string() << "\n";
  return failures == 0 ? kExitOk : kExitVerifyFailure;
}

// ---------------------------------------------------------------------------
// resources
// ---------------------------------------------------------------------------

struct SweepFit {
  double coefficient = 0.0;
  double relative_residual = 0.0;
  double loglog_exponent = 0.0;
};

SweepFit fit_quadratic_in_logs(const std::vector<double>& xs, const std::vector<double>& ys) {
  // least squares of y ~ c * x where x is the model value (e.g. alpha*s^2)
  SweepFit fit;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += xs[i] * ys[i];
    den += xs[i] * xs[i];
  }
  fit.coefficient = den > 0.0 ? num / den : 0.0;
  double rss = 0.0, yss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - fit.coefficient * xs[i];
    rss += r * r;
    yss += ys[i] * ys[i];
  }
  fit.relative_residual = yss > 0.0 ? std::sqrt(rss / yss) : 0.0;
  return fit;
}

int cmd_resources(const RunConfig& cfg, const fs::path& out_dir, const std::string& sweep) {
  const GridConfig grid = cfg.grid();
  const ResourceTable table = resource_table(grid);
  write_text(out_dir / "resources.csv", resource_table_csv(table));
  ordered_json doc = resource_table_json(grid, table);

  std::cout << "terms: L1=" << table.l1.count << " L2a=" << table.l2a.count
            << " L2b=" << table.l2b.count << " qubits=" << table.qubit_count << "\n";

  if (!sweep.empty()) {
    const auto eq = sweep.find('=');
    if (eq == std::string::npos || sweep.substr(0, eq) != "nx") {
      throw std::invalid_argument("--sweep expects nx=v1,v2,... got: " + sweep);
    }
    std::vector<int> values;
    std::stringstream ss(sweep.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));

    ordered_json rows = ordered_json::array();
    std::vector<double> cliff_model, cliff_val, t_model, t_val;
    std::cout << "sweep assumes nt = nx (the cost model's convention)\n";
    for (int nx : values) {
      GridConfig swept = grid;
      swept.nx = nx;
      swept.nt = nx;
      swept.dx = cfg.domain_length / (nx - 1);
      swept.validate();
      const ResourceTable t = resource_table(swept);
      const double s = swept.s();
      rows.push_back({{"nx", nx},
                      {"qubits", t.qubit_count},
                      {"l2b_clifford_max", t.l2b.clifford_max},
                      {"l2b_t_max", t.l2b.t_max}});
      cliff_model.push_back(swept.alpha * s * s);
      cliff_val.push_back(static_cast<double>(t.l2b.clifford_max));
      t_model.push_back(s * s);
      t_val.push_back(static_cast<double>(t.l2b.t_max));
      std::cout << "nx=" << nx << " qubits=" << t.qubit_count
                << " worst L2b clifford=" << t.l2b.clifford_max
                << " worst L2b t=" << t.l2b.t_max << "\n";
    }
    const SweepFit cf = fit_quadratic_in_logs(cliff_model, cliff_val);
    const SweepFit tf = fit_quadratic_in_logs(t_model, t_val);
    doc["sweep"] = {{"rows", rows},
                    {"clifford_fit",
                     {{"model", "c * alpha * log2(nx)^2"},
                      {"coefficient", cf.coefficient},
                      {"relative_residual", cf.relative_residual}}},
                    {"t_fit",
                     {{"model", "c * log2(nx)^2"},
                      {"coefficient", tf.coefficient},
                      {"relative_residual", tf.relative_residual}}}};
    std::cout << "clifford fit: c=" << cf.coefficient
              << " rel_residual=" << cf.relative_residual << "\n"
              << "t fit: c=" << tf.coefficient << " rel_residual=" << tf.relative_residual
              << "\n";
  }

  write_text(out_dir / "resources.json", doc.dump(2) + "\n");
  std::cout << "wrote " << (out_dir / "resources.csv").string() << " and resources.json\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve / compare
// ---------------------------------------------------------------------------

std::string trajectory_csv(const GridConfig& grid, const Trajectory& classical,
                           const Trajectory* vqls) {
  std::ostringstream oss;
  oss << "time,x_index,u_classical,u_vqls\n";
  for (std::size_t t = 0; t < classical.u.size(); ++t) {
    for (int j = 0; j < grid.nx; ++j) {
      oss << (static_cast<double>(t) * grid.dt) << ',' << j << ','
          << classical.u[t](j).real() << ',';
      if (vqls) {
        oss << vqls->u[t](j).real();
      }
      oss << '\n';
    }
  }
  return oss.str();
}

int cmd_solve(const RunConfig& cfg, const fs::path& out_dir, bool classical_only) {
  const GridConfig grid = cfg.grid();
  const DenseVector u0 = initial_state(grid, cfg.sigma, cfg.mu);
  const EmbeddedSystem sys = build_embedded_system(grid, carleman_initial_vector(grid, u0));
  const DenseVector solution = classical_solve(sys.L_e, sys.B_e);
  const Trajectory classical = extract_solution(solution, grid);

  ordered_json manifest;
  manifest["schema_version"] = 1;
  manifest["config"] = grid_to_json(grid);
  manifest["config"]["sigma"] = cfg.sigma;
  manifest["config"]["mu"] = cfg.mu;
  manifest["max_pad_abs"] = classical.max_pad_abs;

  if (classical_only) {
    write_text(out_dir / "trajectory.csv", trajectory_csv(grid, classical, nullptr));
  } else {
    const std::vector<DecompositionTerm> terms = decompose_full(grid);
    const CostWorkspace ws = make_cost_workspace(terms, prepare_b(sys.B_e));
    AnsatzConfig ansatz;
    ansatz.qubits = sys.qubit_count;
    ansatz.layers = cfg.layers;
    OptimizerConfig opt;
    opt.seed = cfg.seed;
    opt.tolerance = cfg.tolerance;
    opt.max_iterations = cfg.max_iter;
    const VqlsResult res = optimize(ws, ansatz, opt);
    const ComparisonReport rep = compare_solutions(res.state, solution, grid);

    manifest["vqls"] = {{"seed", cfg.seed},
                        {"layers", cfg.layers},
                        {"parameters", ansatz.param_count()},
                        {"iterations", res.iterations},
                        {"converged", res.converged},
                        {"final_cost", res.final_cost},
                        {"fidelity", rep.fidelity},
                        {"per_step_rel_l2", rep.per_step_rel_l2},
                        {"max_pointwise_dev", rep.max_pointwise_dev}};
    write_text(out_dir / "trajectory.csv", trajectory_csv(grid, classical, &rep.vqls));
    std::cout << "vqls: cost=" << res.final_cost << " fidelity=" << rep.fidelity
              << " iterations=" << res.iterations << "\n";
  }

  manifest["artifacts"] = {
      {"trajectory.csv", hex64(fnv1a64_file(out_dir / "trajectory.csv"))}};
  write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << (out_dir / "trajectory.csv").string() << " and manifest.json\n";
  return kExitOk;
}

struct TrajectoryFile {
  std::map<std::pair<double, int>, double> values;
};

TrajectoryFile read_trajectory(const fs::path& path, int column) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open trajectory file: " + path.string());
  TrajectoryFile out;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) <= column || cells[column].empty()) continue;
    out.values[{std::stod(cells[0]), std::stoi(cells[1])}] = std::stod(cells[column]);
  }
  return out;
}

int cmd_compare(const fs::path& a, const fs::path& b, int col_a, int col_b) {
  const TrajectoryFile fa = read_trajectory(a, col_a);
  const TrajectoryFile fb = read_trajectory(b, col_b);

  std::map<double, std::pair<double, double>> per_step;  // time -> (err2, ref2)
  double max_dev = 0.0;
  for (const auto& [key, va] : fa.values) {
    const auto it = fb.values.find(key);
    if (it == fb.values.end()) continue;
    const double d = va - it->second;
    max_dev = std::max(max_dev, std::abs(d));
    per_step[key.first].first += d * d;
    per_step[key.first].second += va * va;
  }
  if (per_step.empty()) {
    std::cerr << "no overlapping samples between the two files\n";
    return kExitConfigError;
  }
  for (const auto& [time, sums] : per_step) {
    const double rel = sums.second > 0 ? std::sqrt(sums.first / sums.second)
                                       : std::sqrt(sums.first);
    std::cout << "t=" << time << " rel_l2=" << rel << "\n";
  }
  std::cout << "max_pointwise_dev=" << max_dev << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Carleman-linearized Burgers decomposition pipeline"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed_flag;

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--set", overrides, "override a config key (key=value)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed_flag, "override the run seed");

  auto* build = app.add_subcommand("build", "assemble the linear systems");
  bool dump = false;
  build->add_flag("--dump", dump, "write the embedded matrix in triplet form");

  auto* decompose = app.add_subcommand("decompose", "emit the term list");
  bool verify = false;
  decompose->add_flag("--verify", verify, "check the reconstruction exactly");

  auto* encode = app.add_subcommand("encode", "emit block-encoding circuits");
  std::int64_t term_id = -1;
  encode->add_option("--term", term_id, "encode a single term by id");

  auto* resources = app.add_subcommand("resources", "emit gate-count tables");
  std::string sweep;
  resources->add_option("--sweep", sweep, "sweep spec, e.g. nx=4,8,16,32,64");

  auto* solve = app.add_subcommand("solve", "classical solve plus VQLS");
  bool classical_only = false;
  solve->add_flag("--classical-only", classical_only, "skip the variational solve");

  auto* compare = app.add_subcommand("compare", "compare two trajectory files");
  std::string file_a, file_b;
  int col_a = 2, col_b = 3;
  compare->add_option("file_a", file_a, "first trajectory CSV")->required();
  compare->add_option("file_b", file_b, "second trajectory CSV")->required();
  compare->add_option("--col-a", col_a, "value column in the first file (default u_classical)");
  compare->add_option("--col-b", col_b, "value column in the second file (default u_vqls)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfigError;
  }

  try {
    const fs::path out(out_dir);
    if (compare->parsed()) return cmd_compare(file_a, file_b, col_a, col_b);

    const RunConfig cfg = load_config(config_path, overrides, seed_flag);
    cfg.grid();  // validate eagerly for a clean config-error exit
    if (build->parsed()) return cmd_build(cfg, out, dump);
    if (decompose->parsed()) return cmd_decompose(cfg, out, verify);
    if (encode->parsed()) {
      return cmd_encode(cfg, out,
                        term_id >= 0 ? std::optional<std::int64_t>(term_id) : std::nullopt);
    }
    if (resources->parsed()) return cmd_resources(cfg, out, sweep);
    if (solve->parsed()) return cmd_solve(cfg, out, classical_only);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}
