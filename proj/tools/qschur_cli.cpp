// Command-line front door: parse problem files, run the solvers and
// checkers, emit one JSON report per run on stdout (human summary on stderr).
// Exit codes: 0 pass, 2 input error, 3 verification failure, 4 internal.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "qschur/json_io.hpp"
#include "qschur/parallel.hpp"
#include "qschur/rng.hpp"

namespace {

using qschur::json;

struct Report {
  std::string command;
  std::string input_digest;
  json outputs = json::object();
  std::map<std::string, double> diagnostics;
  std::map<std::string, double> tolerances;

  bool pass() const {
    for (const auto& [name, value] : diagnostics) {
      const auto it = tolerances.find(name);
      if (it != tolerances.end() && !(value <= it->second)) return false;
    }
    return true;
  }

  json dump() const {
    json diag = json::object();
    for (const auto& [name, value] : diagnostics) diag[name] = value;
    json tols = json::object();
    for (const auto& [name, value] : tolerances) tols[name] = value;
    return json{{"command", command},
                {"input_digest", input_digest},
                {"outputs", outputs},
                {"diagnostics", std::move(diag)},
                {"tolerances", std::move(tols)},
                {"status", pass() ? "pass" : "fail"}};
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qschur::InputError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& bytes) {
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw qschur::InputError("input is not valid JSON");
  return j;
}

int emit(const Report& report) {
  std::cout << report.dump().dump(2) << "\n";
  std::cerr << report.command << ": " << (report.pass() ? "pass" : "FAIL") << " ("
            << report.diagnostics.size() << " residuals checked)\n";
  return report.pass() ? 0 : 3;
}

int run_interp(const std::string& path, int degree, bool degree_set, double tol, bool tol_set,
               std::uint64_t seed, const std::string& out_path) {
  const std::string bytes = read_file(path);
  const json spec = parse_json(bytes);
  if (!degree_set && spec.contains("degree")) degree = spec["degree"].get<int>();
  if (!tol_set && spec.contains("tol")) tol = spec["tol"].get<double>();
  const qschur::InterpProblem prob = qschur::interp_problem_from_json(spec);
  const qschur::InterpSolution sol = qschur::solve(prob, degree, seed);

  Report report;
  report.command = "interp";
  report.input_digest = qschur::digest_hex(bytes);
  report.outputs = qschur::to_json(sol);
  report.diagnostics = {{"stein_residual", sol.diagnostics.stein_residual},
                        {"isometry_residual", sol.diagnostics.isometry_residual},
                        {"unitary_residual", sol.diagnostics.unitary_residual},
                        {"max_node_residual", sol.diagnostics.max_node_residual},
                        {"bschur_residual", sol.diagnostics.bschur_residual}};
  report.tolerances = {{"stein_residual", 1e-10},
                       {"isometry_residual", 1e-10},
                       {"unitary_residual", 1e-10},
                       {"max_node_residual", sol.diagnostics.node_tail_bound + tol},
                       {"bschur_residual", tol}};
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qschur::InputError("cannot open output file: " + out_path);
    out << qschur::to_json(sol).dump(2) << "\n";
  }
  return emit(report);
}

int run_blaschke(const std::string& path, int degree, bool degree_set, double tol,
                 std::uint64_t seed) {
  const std::string bytes = read_file(path);
  const json spec = parse_json(bytes);
  if (!degree_set && spec.contains("degree")) degree = spec["degree"].get<int>();
  const qschur::ZeroSet zeros = qschur::zeroset_from_json(spec);
  const qschur::BlaschkeProduct product =
      qschur::product_build(zeros.points, zeros.spheres, degree, zeros.origin_mult);

  std::vector<qschur::Quaternion> nodes;
  for (const auto& p : zeros.points) nodes.push_back(p.a);
  if (zeros.origin_mult > 0) nodes.push_back(qschur::Quaternion(0));
  qschur::Rng rng(seed);
  for (const auto& s : zeros.spheres)
    for (int k = 0; k < 10; ++k) nodes.push_back(s.sphere.point(rng.imag_unit()));
  double radius = 0;
  for (const auto& q : nodes) radius = std::max(radius, q.norm());
  double max_residual = 0;
  for (const auto& v : qschur::eval_batch(product.series, nodes))
    max_residual = std::max(max_residual, v.norm());

  Report report;
  report.command = "blaschke";
  report.input_digest = qschur::digest_hex(bytes);
  report.outputs["B"] = qschur::to_json(product.series);
  json placements = json::array();
  for (const auto& a : product.placements) placements.push_back(qschur::to_json(a));
  report.outputs["placements"] = std::move(placements);
  report.diagnostics = {{"max_zero_residual", max_residual}};
  report.tolerances = {{"max_zero_residual", qschur::tail_bound(product.series, radius) + tol}};
  return emit(report);
}

int run_check(const std::string& path, const std::string& kind, int degree, bool degree_set,
              double tol) {
  const std::string bytes = read_file(path);
  const json spec = parse_json(bytes);
  if (!degree_set && spec.contains("degree")) degree = spec["degree"].get<int>();

  Report report;
  report.command = "check";
  report.input_digest = qschur::digest_hex(bytes);

  if (kind == "schur") {
    const qschur::UnitaryColligation col = qschur::colligation_from_json(spec);
    const qschur::RelationCheck rc = qschur::check_relation(col);
    report.diagnostics["relation_residual"] =
        std::min(rc.residual_j1_inside, rc.residual_j2_inside);
    report.tolerances["relation_residual"] = 1e-10;
    report.outputs["relation_orientation"] = rc.orientation;
    if (rc.orientation != 0) {
      const qschur::AgReport ag = qschur::check_ag_identity(col, degree);
      report.diagnostics["ag_residual"] = ag.residual;
      report.tolerances["ag_residual"] = tol;
    }
    report.outputs["observability_index"] = qschur::observability_index(col.c, col.a);
    report.outputs["observable"] =
        qschur::observability_index(col.c, col.a) == static_cast<int>(col.a.rows());
    report.outputs["s"] = qschur::to_json(qschur::eval_schur(col, degree));
  } else if (kind == "cara") {
    const qschur::CaraColligation col = qschur::cara_colligation_from_json(spec);
    const qschur::MatSeries phi = qschur::eval_cara(col, degree);
    const qschur::CaraKernelReport ck = qschur::check_cara_kernel(col, degree, tol);
    report.diagnostics["kernel_residual"] =
        std::min(ck.residual_plain, ck.residual_trailing_j);
    report.tolerances["kernel_residual"] = tol;
    report.outputs["kernel_residual_plain"] = ck.residual_plain;
    report.outputs["kernel_residual_trailing_j"] = ck.residual_trailing_j;
    report.outputs["matching_variant"] = ck.matching_variant;
    report.outputs["observability_index"] = qschur::observability_index(col.c, col.v);
    report.outputs["phi"] = qschur::to_json(phi);
  } else {
    throw qschur::InputError("--kind must be schur or cara");
  }
  return emit(report);
}

int run_negsq(const std::string& path, int trials, std::uint64_t seed, double radius, int samples,
              int degree, bool degree_set) {
  const std::string bytes = read_file(path);
  const json spec = parse_json(bytes);
  if (!degree_set && spec.contains("degree")) degree = spec["degree"].get<int>();
  const std::string kind = spec.contains("kind") ? spec["kind"].get<std::string>() : "";

  qschur::KernelSeries kernel(0, 1);
  if (kind == "hardy") {
    const double scale = spec.contains("scale") ? spec["scale"].get<double>() : 1.0;
    kernel = qschur::hardy_kernel_series(degree, 1, scale);
  } else if (kind == "schur") {
    qschur::MatSeries theta = [&] {
      if (spec.contains("theta_series")) {
        const json& js = spec["theta_series"];
        if (js.contains("coeffs") && !js["coeffs"].empty() && js["coeffs"][0].is_array()) {
          const qschur::LSeries scalar = qschur::lseries_from_json(js);
          std::vector<qschur::QMatrix> c;
          for (int n = 0; n <= scalar.degree(); ++n)
            c.push_back(qschur::QMatrix::scalar(scalar.coeff(n)));
          return qschur::MatSeries(std::move(c));
        }
        return qschur::matseries_from_json(js);
      }
      if (spec.contains("theta_zeros")) {
        const qschur::ZeroSet z = qschur::zeroset_from_json(spec["theta_zeros"]);
        const qschur::LSeries b =
            qschur::product_build(z.points, z.spheres, degree, z.origin_mult).series;
        std::vector<qschur::QMatrix> c;
        for (int n = 0; n <= b.degree(); ++n) c.push_back(qschur::QMatrix::scalar(b.coeff(n)));
        return qschur::MatSeries(std::move(c));
      }
      throw qschur::InputError("schur spec needs theta_series or theta_zeros");
    }();
    const std::size_t rows = theta.coeff(0).rows();
    const std::size_t cols = theta.coeff(0).cols();
    const qschur::QMatrix j1 = spec.contains("J1") ? qschur::qmatrix_from_json(spec["J1"])
                                                   : qschur::QMatrix::identity(cols);
    const qschur::QMatrix j2 = spec.contains("J2") ? qschur::qmatrix_from_json(spec["J2"])
                                                   : qschur::QMatrix::identity(rows);
    kernel = qschur::schur_kernel(theta, j1, j2);
  } else if (kind == "cara") {
    if (!spec.contains("phi_series")) throw qschur::InputError("cara spec needs phi_series");
    const json& js = spec["phi_series"];
    qschur::MatSeries phi = [&] {
      if (js.contains("coeffs") && !js["coeffs"].empty() && js["coeffs"][0].is_array()) {
        const qschur::LSeries scalar = qschur::lseries_from_json(js);
        std::vector<qschur::QMatrix> c;
        for (int n = 0; n <= scalar.degree(); ++n)
          c.push_back(qschur::QMatrix::scalar(scalar.coeff(n)));
        return qschur::MatSeries(std::move(c));
      }
      return qschur::matseries_from_json(js);
    }();
    const qschur::QMatrix j = spec.contains("J") ? qschur::qmatrix_from_json(spec["J"])
                                                 : qschur::QMatrix::identity(phi.coeff(0).rows());
    kernel = qschur::cara_kernel(phi, j);
  } else {
    throw qschur::InputError("kernel spec \"kind\" must be hardy, schur, or cara");
  }

  const qschur::NegSquaresReport ns =
      qschur::kernel_neg_squares(kernel, trials, seed, samples, radius);

  Report report;
  report.command = "negsq";
  report.input_digest = qschur::digest_hex(bytes);
  report.outputs["kappa_observed"] = ns.count;
  report.outputs["witness_trial"] = ns.witness_trial;
  report.outputs["stable_trials"] = ns.stable_trials;
  report.outputs["trials"] = trials;
  json witness_points = json::array();
  for (const auto& p : ns.witness.points) witness_points.push_back(qschur::to_json(p));
  report.outputs["witness_points"] = std::move(witness_points);
  return emit(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur analysis of slice-regular functions on the quaternionic unit ball"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string kind = "schur";
  int degree = qschur::kDefaultDegree;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  double radius = 0.7;
  int trials = 20;
  int samples = 50;
  int threads = -1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input JSON file")->required();
    cmd->add_option("--degree", degree, "truncation degree");
    cmd->add_option("--tol", tol, "verification tolerance");
    cmd->add_option("--seed", seed, "sampling seed");
    cmd->add_option("--threads", threads, "0 forces the serial path");
  };

  CLI::App* interp = app.add_subcommand("interp", "solve a vanishing-interpolation problem");
  add_common(interp);
  interp->add_option("--out", out_path, "also write the solution JSON here");

  CLI::App* blaschke = app.add_subcommand("blaschke", "build a Blaschke product from a zero set");
  add_common(blaschke);

  CLI::App* check = app.add_subcommand("check", "verify a realization against its kernel identity");
  add_common(check);
  check->add_option("--kind", kind, "schur or cara");

  CLI::App* negsq = app.add_subcommand("negsq", "sampled negative-squares count of a kernel");
  add_common(negsq);
  negsq->add_option("--trials", trials, "number of Gram samples");
  negsq->add_option("--samples", samples, "points per Gram sample");
  negsq->add_option("--radius", radius, "sampling radius");

  CLI11_PARSE(app, argc, argv);

  if (threads == 0) qschur::par::set_enabled(false);

  try {
    if (interp->parsed())
      return run_interp(input, degree, interp->count("--degree") > 0, tol,
                        interp->count("--tol") > 0, seed, out_path);
    if (blaschke->parsed())
      return run_blaschke(input, degree, blaschke->count("--degree") > 0, tol, seed);
    if (check->parsed())
      return run_check(input, kind, degree, check->count("--degree") > 0, tol);
    if (negsq->parsed())
      return run_negsq(input, trials, seed, radius, samples, degree, negsq->count("--degree") > 0);
  } catch (const qschur::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const qschur::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
