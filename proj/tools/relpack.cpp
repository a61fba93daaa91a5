// relpack: verify the ball packing, export circle images, evaluate points.
//
// Exit codes: 0 pass, 1 some check failed, 2 bad flags or parameters.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "relpack/errors.hpp"
#include "relpack/figure.hpp"
#include "relpack/harness.hpp"
#include "relpack/params.hpp"
#include "relpack/sigma.hpp"
#include "relpack/toric_chart.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Common {
  int n = 2;
  double r = 0.8;
  std::optional<double> epsilon;
  std::string out;
};

void add_common(CLI::App& cmd, Common& c) {
  cmd.add_option("--n", c.n, "number of disc factors")->capture_default_str();
  cmd.add_option("--r", c.r, "ball radius")->capture_default_str();
  cmd.add_option("--epsilon", c.epsilon, "band slack (default: largest admissible)");
  cmd.add_option("--out", c.out, "output file (default: stdout)");
}

// RELPACK_THREADS caps the OpenMP team size. Returns false if malformed.
bool apply_thread_cap() {
  const char* env = std::getenv("RELPACK_THREADS");
  if (env == nullptr || *env == '\0') return true;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 1) return false;
  omp_set_num_threads(static_cast<int>(std::min<long>(cap, omp_get_max_threads())));
  return true;
}

// Runs body with an output stream; stdout unless a path is given.
template <class Body>
int with_output(const std::string& path, Body body) {
  if (path.empty()) return body(std::cout);
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kUsage;
  }
  return body(file);
}

int cmd_verify(const Common& c, std::size_t samples, std::uint64_t seed,
               const relpack::Tolerances& tol) {
  const relpack::PackingParams params = relpack::make_params(c.n, c.r, c.epsilon);
  relpack::HarnessConfig config;
  config.seed = seed;
  config.uniform = samples;
  config.boundary = std::max<std::size_t>(1, samples / 10);
  config.tol = tol;
  const relpack::VerificationReport report = relpack::run_all(params, config);

  const int written = with_output(c.out, [&](std::ostream& os) {
    os << relpack::to_json(report).dump(1) << '\n';
    return kPass;
  });
  if (written != kPass) return written;
  if (!c.out.empty()) {
    for (const auto& check : report.checks) {
      std::cout << (check.passed ? "PASS " : "FAIL ") << check.name
                << "  worst_margin " << check.worst_margin << '\n';
    }
  }
  return report.overall ? kPass : kCheckFailed;
}

int cmd_figure(const Common& c, int circles, int points) {
  const relpack::PackingParams params = relpack::make_params(c.n, c.r, c.epsilon);
  const relpack::SigmaMap map(params);
  const auto rows = relpack::figure_rows(map, circles, points);
  return with_output(c.out, [&](std::ostream& os) {
    relpack::write_csv(os, rows);
    return kPass;
  });
}

int cmd_embed(const Common& c, const std::vector<double>& point) {
  const relpack::PackingParams params = relpack::make_params(c.n, c.r, c.epsilon);
  if (point.size() != 2 * static_cast<std::size_t>(c.n)) {
    std::cerr << "error: --point needs " << 2 * c.n << " coordinates for n = "
              << c.n << '\n';
    return kUsage;
  }
  const relpack::SigmaMap map(params);
  const relpack::ProductPoint image = relpack::phi(point, map);
  const relpack::ComplexChartPoint z = relpack::chart_j(image);
  const double distance = relpack::clifford_distance(z, params);

  return with_output(c.out, [&](std::ostream& os) {
    os << std::fixed << std::setprecision(15);
    os << "phi = (";
    for (std::size_t i = 0; i < image.size(); ++i) {
      os << (i ? ", " : "") << image[i];
    }
    os << ")\nz = ";
    for (std::size_t k = 0; k < z.size(); ++k) {
      os << (k ? ", " : "") << '(' << z[k].real() << ", " << z[k].imag() << ')';
    }
    os << "\nclifford_distance = " << std::scientific << std::setprecision(6)
       << distance << '\n';
    return kPass;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative ball packing of (CP^n, Clifford torus): verification and export"};
  app.require_subcommand(1);

  Common verify_opts;
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  relpack::Tolerances tol;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite, write a JSON report");
  add_common(*verify, verify_opts);
  verify->add_option("--samples", samples, "uniform ball samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--tol-det", tol.determinant, "|det J - 1| tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol-exact", tol.exact, "band slack, midline and Lagrangian tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol-roundtrip", tol.roundtrip)->check(CLI::PositiveNumber);
  verify->add_option("--tol-area", tol.curve_area, "relative curve area tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol-chart", tol.chart, "chart pullback defect tolerance")
      ->check(CLI::PositiveNumber);

  Common figure_opts;
  int circles = 8;
  int points = 512;
  CLI::App* figure = app.add_subcommand("figure", "export circle images as CSV");
  add_common(*figure, figure_opts);
  figure->add_option("--circles", circles)->check(CLI::PositiveNumber)->capture_default_str();
  figure->add_option("--points-per-curve", points)
      ->check(CLI::Range(3, 1 << 24))
      ->capture_default_str();

  Common embed_opts;
  std::vector<double> point;
  CLI::App* embed = app.add_subcommand("embed", "evaluate the embedding at one point");
  add_common(*embed, embed_opts);
  embed->add_option("--point", point, "q1,p1,...,qn,pn")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }
  if (!apply_thread_cap()) {
    std::cerr << "error: RELPACK_THREADS must be a positive integer\n";
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_opts, samples, seed, tol);
    if (*figure) return cmd_figure(figure_opts, circles, points);
    return cmd_embed(embed_opts, point);
  } catch (const relpack::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
