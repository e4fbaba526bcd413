// jostcli: forward/inverse spectral maps for Jacobi matrices from the
// command line. Exit codes: 0 success, 1 I/O or parse failure, 2 validation
// failure (with a machine-readable diagnostic report).

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jost/errors.hpp"
#include "jost/forward_map.hpp"
#include "jost/io.hpp"
#include "jost/rate_estimates.hpp"
#include "jost/spectral_data.hpp"
#include "jost/stripping.hpp"

namespace {

using jost::Complex;

struct JobSpec {
  std::string command;
  std::string input_path;
  std::string output_path;
  int theta_points = 512;
  int strip_steps = 40;
  double r0 = 0.25;
  double radius = 3.0;  // working annulus outer radius
  jost::ToleranceConfig tol;
};

int fail_validation(const JobSpec& job, const std::string& tag,
                    const std::string& message) {
  std::ostringstream rep;
  rep << "status error\n";
  rep << "diagnostic " << tag << " " << message << "\n";
  std::cout << rep.str();
  if (!job.output_path.empty()) jost::io::write_file(job.output_path, rep.str());
  return 2;
}

jost::SpectralData load_spectral(const JobSpec& job) {
  jost::io::ParsedInput in = jost::io::parse_input_file(job.input_path);
  if (std::holds_alternative<jost::SpectralData>(in))
    return std::get<jost::SpectralData>(in);
  if (std::holds_alternative<jost::JacobiParams>(in))
    return jost::spectral_data_from_jacobi(std::get<jost::JacobiParams>(in),
                                           job.tol);
  throw jost::io::ParseError(job.input_path + ": expected jacobi or spectral input");
}

jost::JacobiParams load_jacobi(const JobSpec& job) {
  jost::io::ParsedInput in = jost::io::parse_input_file(job.input_path);
  if (!std::holds_alternative<jost::JacobiParams>(in))
    throw jost::io::ParseError(job.input_path + ": expected jacobi input");
  return std::get<jost::JacobiParams>(in);
}

jost::StripOptions strip_options(const JobSpec& job) {
  jost::StripOptions opt;
  opt.theta_points = job.theta_points;
  opt.r0 = job.r0;
  opt.detect_radius = job.radius;
  opt.tol = job.tol;
  return opt;
}

void require_output(const JobSpec& job) {
  if (job.output_path.empty())
    throw jost::io::ParseError("--output is required for this command");
}

int run_forward(const JobSpec& job) {
  require_output(job);
  const jost::JacobiParams J = load_jacobi(job);
  const jost::SpectralData data = jost::spectral_data_from_jacobi(J, job.tol);

  std::ostringstream out;
  jost::io::write_spectral(out, data);
  jost::io::write_file(job.output_path, out.str());

  const jost::SampledMeasure m = jost::measure_from_jost(data, job.theta_points);
  std::vector<std::vector<double>> rows;
  for (std::size_t j = 0; j < m.thetas.size(); ++j)
    rows.push_back({m.thetas[j], m.density[j]});
  std::ostringstream csv;
  jost::io::write_csv(csv, {"theta", "f"}, rows);
  jost::io::write_file(job.output_path + ".measure.csv", csv.str());

  std::cout << "status ok\n";
  std::cout << "jost_degree " << data.u.degree() << "\n";
  std::cout << "bound_states " << data.states.size() << "\n";
  return 0;
}

int run_invert(const JobSpec& job) {
  require_output(job);
  jost::SpectralData data = load_spectral(job);
  jost::normalize_mass(data, job.theta_points);

  // Canonicity gate: reject data whose weights cannot come from parameters
  // decaying at the declared rate (the stripping monitor would flag them
  // anyway, but here the report carries the precise per-state deviations).
  const double r_work =
      std::isfinite(data.u.radius()) ? std::min(job.radius, data.u.radius())
                                     : job.radius;
  const std::vector<jost::CanonicityReport> reports =
      jost::canonicity_check(data, r_work, job.tol);
  for (const jost::CanonicityReport& rep : reports) {
    if (!rep.is_canonical)
      return fail_validation(job, "eq-1.20-canonical",
                             "weight at z=" + jost::io::format_double(rep.z) +
                                 " is not canonical (deviation " +
                                 jost::io::format_double(rep.deviation) + ")");
  }

  const jost::RecoveryResult rec = jost::recover_jacobi(
      data, static_cast<std::size_t>(job.strip_steps), strip_options(job));
  if (rec.analyticity_loss)
    return fail_validation(job, "analyticity-loss",
                           "stripping lost analyticity at step " +
                               std::to_string(rec.loss_step));

  std::ostringstream out;
  jost::io::write_jacobi(out, jost::JacobiParams(rec.a, rec.b));
  jost::io::write_file(job.output_path, out.str());

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < rec.log.size(); ++i)
    rows.push_back({static_cast<double>(i + 1), rec.log[i].a, rec.log[i].b,
                    rec.log[i].seminorm_after});
  std::ostringstream csv;
  jost::io::write_csv(csv, {"n", "a", "b", "seminorm"}, rows);
  jost::io::write_file(job.output_path + ".steps.csv", csv.str());

  std::cout << "status ok\n";
  std::cout << "steps " << rec.a.size() << "\n";
  std::cout << "terminated_at " << rec.terminated_at << "\n";
  return 0;
}

int run_weights(const JobSpec& job) {
  require_output(job);
  jost::SpectralData data = load_spectral(job);
  jost::normalize_mass(data, job.theta_points);

  std::vector<std::vector<double>> rows;
  for (const jost::BoundState& st : data.states) {
    const double canon = jost::canonical_weight(data.u, st.z, job.tol);
    const double canon_w = jost::weight_from_residue(st.z, canon);
    const double dev = std::abs(st.residue - canon);
    rows.push_back({st.z, st.weight, st.residue, canon, canon_w, dev,
                    dev <= job.tol.residue_tol ? 1.0 : 0.0});
  }
  std::ostringstream csv;
  jost::io::write_csv(csv,
                      {"z", "w", "residue", "canonical_residue",
                       "canonical_weight", "deviation", "is_canonical"},
                      rows);
  jost::io::write_file(job.output_path, csv.str());
  std::cout << "status ok\nstates " << rows.size() << "\n";
  return 0;
}

int run_decay(const JobSpec& job) {
  const jost::JacobiParams J = load_jacobi(job);
  const double rate = jost::decay_rate_estimate(J);
  const jost::TaylorSeries u = jost::jost_function(J);
  std::vector<double> coeffs = u.coeffs();
  if (coeffs.size() < 8) coeffs.resize(8, 0.0);
  const double jost_radius = jost::radius_estimate(coeffs);

  std::ostringstream rep;
  rep << "status ok\n";
  rep << "decay_rate " << jost::io::format_double(rate) << "\n";
  rep << "jost_radius_estimate " << jost::io::format_double(jost_radius) << "\n";
  std::cout << rep.str();
  if (!job.output_path.empty()) jost::io::write_file(job.output_path, rep.str());
  return 0;
}

int run_opuc_check(const JobSpec& job) {
  jost::io::ParsedInput in = jost::io::parse_input_file(job.input_path);
  if (!std::holds_alternative<jost::io::OpucInput>(in))
    throw jost::io::ParseError(job.input_path + ": expected opuc input");
  const jost::opuc::VerblunskySeq alphas =
      std::get<jost::io::OpucInput>(in).alphas;
  const std::size_t n = alphas.size();

  // Schur round trip.
  const jost::opuc::SchurEvaluator f0 = jost::opuc::schur_from_alphas(alphas);
  const jost::opuc::VerblunskySeq back =
      jost::opuc::schur_inverse(f0, n == 0 ? 0 : n - 1);
  double rt = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    rt = std::max(rt, std::abs(back.at(k) - alphas.at(k)));

  // Szego function of the Bernstein-Szego measure of the (finite) sequence.
  const jost::opuc::SzegoPair pair = jost::opuc::szego_recursion(alphas, n);
  double rho2 = 1.0;
  for (std::size_t k = 0; k < n; ++k) rho2 *= 1.0 - std::norm(alphas.at(k));
  auto weight = [&](double th) {
    Complex v(0.0, 0.0);
    const Complex z(std::cos(th), std::sin(th));
    for (std::size_t k = pair.phi_star.size(); k-- > 0;)
      v = v * z + pair.phi_star[k];
    return rho2 / std::norm(v);
  };
  const Complex d0 =
      jost::opuc::szego_function(weight, Complex(0.0, 0.0), job.theta_points);
  const double szego_identity = std::abs(std::norm(d0) - rho2);

  // Telescoping product against the direct Szego function at a test point.
  const Complex zt(0.3, 0.2);
  Complex prod(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    prod *= jost::opuc::relative_szego(
        alphas.at(k), jost::opuc::schur_from_alphas(alphas, static_cast<int>(k)),
        jost::opuc::schur_from_alphas(alphas, static_cast<int>(k) + 1), zt);
  }
  const Complex direct =
      jost::opuc::szego_function(weight, zt, job.theta_points);
  const double telescoping = std::abs(prod - direct);

  std::ostringstream rep;
  rep << "status ok\n";
  rep << "schur_roundtrip_error " << jost::io::format_double(rt) << "\n";
  rep << "szego_identity_error " << jost::io::format_double(szego_identity)
      << "\n";
  rep << "telescoping_error " << jost::io::format_double(telescoping) << "\n";
  std::cout << rep.str();
  if (!job.output_path.empty()) jost::io::write_file(job.output_path, rep.str());
  return 0;
}

int run_roundtrip(const JobSpec& job) {
  const jost::JacobiParams J = load_jacobi(job);
  const jost::SpectralData data = jost::spectral_data_from_jacobi(J, job.tol);
  const std::size_t steps = static_cast<std::size_t>(job.strip_steps);
  const jost::RecoveryResult rec =
      jost::recover_jacobi(data, steps, strip_options(job));
  if (rec.analyticity_loss)
    return fail_validation(job, "analyticity-loss",
                           "stripping lost analyticity at step " +
                               std::to_string(rec.loss_step));

  double err_support = 0.0;
  double err_tail = 0.0;
  for (std::size_t i = 0; i < rec.a.size(); ++i) {
    const std::size_t n = i + 1;
    const double da = std::abs(rec.a[i] - J.a(n));
    const double db = std::abs(rec.b[i] - J.b(n));
    if (n <= J.support())
      err_support = std::max({err_support, da, db});
    else
      err_tail = std::max({err_tail, da, db});
  }

  std::ostringstream rep;
  const bool ok = err_support <= job.tol.roundtrip_tol;
  rep << "status " << (ok ? "ok" : "error") << "\n";
  rep << "max_param_error " << jost::io::format_double(err_support) << "\n";
  rep << "max_tail_error " << jost::io::format_double(err_tail) << "\n";
  rep << "terminated_at " << rec.terminated_at << "\n";
  if (!ok)
    rep << "diagnostic roundtrip-tolerance recovery exceeded "
        << jost::io::format_double(job.tol.roundtrip_tol) << "\n";
  std::cout << rep.str();
  if (!job.output_path.empty()) jost::io::write_file(job.output_path, rep.str());
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jost function forward/inverse maps for Jacobi matrices"};
  app.require_subcommand(1);

  JobSpec job;
  const std::vector<std::string> commands = {"forward",    "invert",
                                             "weights",    "decay",
                                             "opuc-check", "roundtrip"};
  for (const std::string& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", job.input_path)->required();
    sub->add_option("--output", job.output_path);
    sub->add_option("--theta-points", job.theta_points);
    sub->add_option("--strip-steps", job.strip_steps);
    sub->add_option("--r0", job.r0);
    sub->add_option("--radius", job.radius);
    sub->add_option("--tol-root", job.tol.root_tol);
    sub->add_option("--tol-residue", job.tol.residue_tol);
    sub->add_option("--tol-roundtrip", job.tol.roundtrip_tol);
    sub->callback([&job, name]() { job.command = name; });
  }

  CLI11_PARSE(app, argc, argv);
  job.tol.quad_points = job.theta_points;

  try {
    if (job.command == "forward") return run_forward(job);
    if (job.command == "invert") return run_invert(job);
    if (job.command == "weights") return run_weights(job);
    if (job.command == "decay") return run_decay(job);
    if (job.command == "opuc-check") return run_opuc_check(job);
    if (job.command == "roundtrip") return run_roundtrip(job);
    std::cerr << "unknown command\n";
    return 1;
  } catch (const jost::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const jost::ValidationError& e) {
    return fail_validation(job, e.tag(), e.what());
  } catch (const jost::Error& e) {
    return fail_validation(job, e.tag(), e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
