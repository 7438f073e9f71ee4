// Command line front end: phase sweeps, correlation tables, partition
// functions, spectral scans, infinite-volume limits, and the verification
// suite.  Emits CSV or JSON with deterministic formatting; every --out file
// is paired with a .manifest.json run record.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hexpoly/kasteleyn.hpp"
#include "hexpoly/limits.hpp"
#include "hexpoly/oracle.hpp"
#include "hexpoly/spectral.hpp"
#include "hexpoly/verify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using ordered_json = nlohmann::ordered_json;
using hexpoly::PolygonParams;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// JSON has no literal for non-finite numbers; emit them as strings.
ordered_json jnum(double v) {
  if (std::isfinite(v)) return v;
  return fmt17(v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct SweepSpec {
  double lo = 0.0, hi = 0.0;
  int steps = 1;
};

SweepSpec parse_sweep(const std::string& text) {
  SweepSpec s;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &s.lo, &s.hi, &s.steps) != 3 ||
      s.steps < 1)
    throw CLI::ValidationError("--sweep expects lo:hi:steps with steps >= 1");
  return s;
}

std::vector<double> sweep_values(const SweepSpec& s) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(s.steps));
  for (int i = 0; i < s.steps; ++i)
    v.push_back(s.steps == 1 ? s.lo
                             : s.lo + (s.hi - s.lo) * i / (s.steps - 1));
  return v;
}

// Output destination plus the paired manifest.
class Sink {
 public:
  explicit Sink(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_);
      if (!file_) throw std::runtime_error("cannot open output file " + path_);
    }
  }
  std::ostream& os() { return path_.empty() ? std::cout : file_; }
  void finish(const std::string& command, const ordered_json& parameters,
              const ordered_json& tolerances, double wall_s) {
    os().flush();
    if (path_.empty()) return;
    ordered_json m;
    m["command"] = command;
    m["tool"] = "hexpoly";
    m["version"] = kVersion;
    m["parameters"] = parameters;
    m["tolerances"] = tolerances;
    m["wall_time_s"] = wall_s;
    std::ofstream mf(path_ + ".manifest.json");
    if (!mf) throw std::runtime_error("cannot open manifest file");
    mf << m.dump(2) << "\n";
  }

 private:
  std::string path_;
  std::ofstream file_;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void emit_rows(std::ostream& os, const std::string& format,
               const std::vector<std::string>& header,
               const std::vector<std::vector<ordered_json>>& rows) {
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const ordered_json& cell = row[i];
      if (cell.is_number_float())
        os << fmt17(cell.get<double>());
      else if (cell.is_string())
        os << csv_escape(cell.get<std::string>());
      else
        os << cell.dump();
      os << (i + 1 < row.size() ? "," : "\n");
    }
  }
}

ordered_json params_json(const PolygonParams& prm) {
  ordered_json p;
  p["alpha"] = prm.alpha;
  p["beta"] = prm.beta;
  p["gamma"] = prm.gamma;
  return p;
}

int cmd_phase(const PolygonParams& point, const std::string& sweep, double tol,
              const std::string& format, const std::string& out) {
  Timer timer;
  std::vector<PolygonParams> points;
  if (!sweep.empty()) {
    std::vector<double> vals = sweep_values(parse_sweep(sweep));
    for (double a : vals)
      for (double b : vals)
        for (double g : vals) points.push_back(PolygonParams{a, b, g});
  } else {
    points.push_back(point);
  }

  std::vector<std::string> header{"alpha", "beta", "gamma", "U",      "V",
                                  "S",     "T",    "gamma1", "gamma2", "phase"};
  std::vector<std::vector<ordered_json>> rows;
  rows.reserve(points.size());
  for (const PolygonParams& prm : points) {
    hexpoly::PhaseVerdict v = hexpoly::classify(prm, tol);
    rows.push_back({jnum(prm.alpha), jnum(prm.beta), jnum(prm.gamma),
                    jnum(v.indicators.U), jnum(v.indicators.V),
                    jnum(v.indicators.S), jnum(v.indicators.T),
                    jnum(v.boundaries.gamma1), jnum(v.boundaries.gamma2),
                    std::string(hexpoly::phase_name(v.phase))});
  }

  Sink sink(out);
  emit_rows(sink.os(), format, header, rows);
  ordered_json p = params_json(point);
  if (!sweep.empty()) p["sweep"] = sweep;
  p["format"] = format;
  sink.finish("phase", p, ordered_json{{"classify_tol", tol}}, timer.seconds());
  return 0;
}

int cmd_corr(int n, const PolygonParams& prm, std::optional<int> sep,
             std::optional<int> max_sep, const std::string& format,
             const std::string& out) {
  Timer timer;
  std::vector<int> seps;
  if (sep) {
    seps.push_back(*sep);
  } else {
    int hi = max_sep ? std::min(*max_sep, n - 1) : n - 1;
    for (int s = 1; s <= hi; ++s) seps.push_back(s);
  }

  std::vector<std::string> header{"n",      "sep",     "M",       "M2",
                                  "pf_k11", "pf_k1m1", "pf_km11", "pf_km1m1"};
  std::vector<std::vector<ordered_json>> rows;
  for (int s : seps) {
    hexpoly::CorrelationResult r = hexpoly::correlation_M(n, s, prm);
    rows.push_back({n, s, jnum(r.value), jnum(r.value_squared),
                    jnum(r.sector_numerator[0].to_double()),
                    jnum(r.sector_numerator[1].to_double()),
                    jnum(r.sector_numerator[2].to_double()),
                    jnum(r.sector_numerator[3].to_double())});
  }

  Sink sink(out);
  emit_rows(sink.os(), format, header, rows);
  ordered_json p = params_json(prm);
  p["n"] = n;
  if (sep) p["sep"] = *sep;
  if (max_sep) p["max_sep"] = *max_sep;
  p["format"] = format;
  sink.finish("corr", p, ordered_json{{"critical_proximity_rel", 1e-13}},
              timer.seconds());
  return 0;
}

int cmd_zn(int n, const PolygonParams& point, const std::string& sweep,
           const std::string& format, const std::string& out) {
  Timer timer;
  std::vector<PolygonParams> points;
  if (!sweep.empty()) {
    std::vector<double> vals = sweep_values(parse_sweep(sweep));
    for (double a : vals)
      for (double b : vals)
        for (double g : vals) points.push_back(PolygonParams{a, b, g});
  } else {
    points.push_back(point);
  }

  std::vector<std::string> header{"n",      "alpha",   "beta",    "gamma",
                                  "Z",      "log2_abs_Z", "pf_k11", "pf_k1m1",
                                  "pf_km11", "pf_km1m1"};
  std::vector<std::vector<ordered_json>> rows;
  for (const PolygonParams& prm : points) {
    hexpoly::PartitionResult r = hexpoly::partition_Z(n, prm);
    rows.push_back({n, jnum(prm.alpha), jnum(prm.beta), jnum(prm.gamma),
                    jnum(r.value), jnum(r.scaled.log2_abs()),
                    jnum(r.sector_pfaffians[0].to_double()),
                    jnum(r.sector_pfaffians[1].to_double()),
                    jnum(r.sector_pfaffians[2].to_double()),
                    jnum(r.sector_pfaffians[3].to_double())});
  }

  Sink sink(out);
  emit_rows(sink.os(), format, header, rows);
  ordered_json p = params_json(point);
  p["n"] = n;
  if (!sweep.empty()) p["sweep"] = sweep;
  p["format"] = format;
  sink.finish("zn", p, ordered_json::object(), timer.seconds());
  return 0;
}

int cmd_spectral(const PolygonParams& prm, int grid, const std::string& format,
                 const std::string& out) {
  Timer timer;
  hexpoly::LaurentPoly2 poly = hexpoly::char_poly_from_polygon(prm);
  hexpoly::TorusMin mn = hexpoly::torus_min(poly, grid);

  std::vector<std::string> header{"alpha", "beta", "gamma",  "c00",   "cw",
                                  "cz",    "czw",  "P11",    "P1m1",  "Pm11",
                                  "Pm1m1", "min_P", "theta1", "theta2"};
  std::vector<std::vector<ordered_json>> rows{
      {jnum(prm.alpha), jnum(prm.beta), jnum(prm.gamma), jnum(poly.c00),
       jnum(poly.cw), jnum(poly.cz), jnum(poly.czw),
       jnum(poly.eval(1, 1).real()), jnum(poly.eval(1, -1).real()),
       jnum(poly.eval(-1, 1).real()), jnum(poly.eval(-1, -1).real()),
       jnum(mn.value), jnum(mn.theta1), jnum(mn.theta2)}};

  Sink sink(out);
  emit_rows(sink.os(), format, header, rows);
  ordered_json p = params_json(prm);
  p["grid"] = grid;
  p["format"] = format;
  sink.finish("spectral", p, ordered_json::object(), timer.seconds());
  return 0;
}

int cmd_limit(const PolygonParams& prm, int max_sep, int grid,
              const std::string& format, const std::string& out) {
  Timer timer;
  hexpoly::LambdaEstimate est = hexpoly::lambda_estimate(prm, max_sep, grid);

  Sink sink(out);
  if (format == "json") {
    ordered_json obj;
    obj["lambda"] = jnum(est.lambda);
    obj["converged"] = est.converged;
    obj["phase"] = hexpoly::phase_name(est.phase);
    obj["table"] = ordered_json::array();
    for (const hexpoly::DecayRow& row : est.table) {
      ordered_json r;
      r["sep"] = row.sep;
      r["m2"] = jnum(row.m2);
      r["delta_rel"] = jnum(row.delta_rel);
      obj["table"].push_back(std::move(r));
    }
    sink.os() << obj.dump(2) << "\n";
  } else {
    std::vector<std::string> header{"sep", "m2", "delta_rel"};
    std::vector<std::vector<ordered_json>> rows;
    for (const hexpoly::DecayRow& row : est.table)
      rows.push_back({row.sep, jnum(row.m2), jnum(row.delta_rel)});
    emit_rows(sink.os(), format, header, rows);
    std::cerr << "lambda=" << fmt17(est.lambda)
              << " converged=" << (est.converged ? 1 : 0)
              << " phase=" << hexpoly::phase_name(est.phase) << "\n";
  }

  ordered_json p = params_json(prm);
  p["max_sep"] = max_sep;
  p["grid"] = grid;
  p["format"] = format;
  sink.finish("limit", p,
              ordered_json{{"supercritical_delta_rel", 1e-6},
                           {"subcritical_abs", 1e-8}},
              timer.seconds());
  return 0;
}

int cmd_verify(const std::string& level, const std::string& format,
               const std::string& out) {
  Timer timer;
  hexpoly::VerifyReport report = hexpoly::run_verification(
      level == "full", [](const hexpoly::CheckResult& check) {
        std::cerr << hexpoly::format_check_line(check) << "\n";
      });

  std::vector<std::string> header{"name", "passed", "seconds", "detail"};
  std::vector<std::vector<ordered_json>> rows;
  for (const hexpoly::CheckResult& c : report.checks)
    rows.push_back({c.name, c.passed ? 1 : 0, jnum(c.seconds), c.detail});

  Sink sink(out);
  emit_rows(sink.os(), format, header, rows);
  ordered_json p;
  p["level"] = level;
  p["format"] = format;
  sink.finish("verify", p, ordered_json::object(), timer.seconds());
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations for the hexagonal polygon model: partition "
      "functions, order parameters, phase diagram, spectral curve, and "
      "infinite-volume limits.  HEXPOLY_THREADS caps parallelism."};
  app.set_version_flag("--version", std::string("hexpoly ") + kVersion);
  app.require_subcommand(1);

  PolygonParams prm{1.0, 1.0, 1.0};
  std::string sweep, format = "csv", out, level = "fast";
  double tol = 1e-9;
  int n = 2, grid = 0, max_sep_limit = 12;
  std::optional<int> sep_opt, max_sep_opt;

  auto add_point = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", prm.alpha, "Weight of a-type (horizontal) edges");
    cmd->add_option("--beta", prm.beta, "Weight of b-type (north-west) edges");
    cmd->add_option("--gamma", prm.gamma, "Weight of c-type (north-east) edges");
  };
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out,
                    "Output file; a .manifest.json run record is written "
                    "next to it");
  };

  CLI::App* phase = app.add_subcommand(
      "phase", "Classify parameter points against the critical surfaces");
  add_point(phase);
  phase->add_option("--sweep", sweep, "lo:hi:steps applied to all three axes");
  phase->add_option("--tol", tol, "Relative tolerance of the critical test");
  add_io(phase);

  CLI::App* corr = app.add_subcommand(
      "corr", "Finite-volume order parameter M_n at given separations");
  corr->add_option("--n", n, "Torus size")->check(CLI::Range(2, 64));
  add_point(corr);
  corr->add_option("--sep", sep_opt, "Single separation (default: sweep)");
  corr->add_option("--max-sep", max_sep_opt, "Largest separation of the sweep");
  add_io(corr);

  CLI::App* zn = app.add_subcommand(
      "zn", "Partition function via the four-sector Pfaffian combination");
  zn->add_option("--n", n, "Torus size")->check(CLI::Range(1, 64));
  add_point(zn);
  zn->add_option("--sweep", sweep, "lo:hi:steps applied to all three axes");
  add_io(zn);

  CLI::App* spectral = app.add_subcommand(
      "spectral", "Spectral curve coefficients, corner values, torus minimum");
  add_point(spectral);
  spectral->add_option("--grid", grid, "Torus scan resolution (default 512)");
  add_io(spectral);

  CLI::App* limit = app.add_subcommand(
      "limit", "Infinite-volume order parameter decay/plateau scan");
  add_point(limit);
  limit->add_option("--max-sep", max_sep_limit, "Largest separation")
      ->check(CLI::Range(1, 64));
  limit->add_option("--grid", grid, "Quadrature resolution (default 256)");
  add_io(limit);

  CLI::App* verify = app.add_subcommand(
      "verify", "Oracle-backed verification suite; nonzero exit on failure");
  verify->add_option("--level", level, "fast skips the slowest sweeps")
      ->check(CLI::IsMember({"fast", "full"}));
  add_io(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (phase->parsed()) return cmd_phase(prm, sweep, tol, format, out);
    if (corr->parsed())
      return cmd_corr(n, prm, sep_opt, max_sep_opt, format, out);
    if (zn->parsed()) return cmd_zn(n, prm, sweep, format, out);
    if (spectral->parsed())
      return cmd_spectral(prm, grid > 0 ? grid : 512, format, out);
    if (limit->parsed())
      return cmd_limit(prm, max_sep_limit, grid > 0 ? grid : 256, format, out);
    if (verify->parsed()) return cmd_verify(level, format, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
