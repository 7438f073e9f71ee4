#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hexpoly/kasteleyn.hpp"
#include "hexpoly/limits.hpp"
#include "hexpoly/oracle.hpp"
#include "hexpoly/spectral.hpp"

namespace py = pybind11;
using namespace hexpoly;

namespace {

const char* zero_factor_name(ZeroFactor z) {
  switch (z) {
    case ZeroFactor::None: return "none";
    case ZeroFactor::U: return "U";
    case ZeroFactor::V: return "V";
    case ZeroFactor::S: return "S";
    case ZeroFactor::T: return "T";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_hexpoly, m) {
  m.doc() =
      "Exact computations for the hexagonal polygon model: partition "
      "functions, order parameters, phase diagram, and infinite-volume limits";
  m.attr("__version__") = "1.0.0";

  m.def(
      "partition_function",
      [](int n, double alpha, double beta, double gamma) {
        PartitionResult r = partition_Z(n, PolygonParams{alpha, beta, gamma});
        py::dict d;
        d["value"] = r.value;
        d["log2_abs"] = r.scaled.log2_abs();
        py::list pf;
        for (const ScaledValue& s : r.sector_pfaffians) pf.append(s.to_double());
        d["sector_pfaffians"] = pf;
        return d;
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
      "Partition function on the n x n torus via the four-sector Pfaffian "
      "combination.");

  m.def(
      "brute_partition_function",
      [](int n, double alpha, double beta, double gamma) {
        TorusHexLattice lat = build_hex_torus(n);
        return brute_Z(lat, PolygonParams{alpha, beta, gamma});
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
      "Enumeration oracle (n <= 4).");

  m.def(
      "correlation",
      [](int n, int sep, double alpha, double beta, double gamma) {
        CorrelationResult r =
            correlation_M(n, sep, PolygonParams{alpha, beta, gamma});
        py::dict d;
        d["value"] = r.value;
        d["value_squared"] = r.value_squared;
        d["separation"] = r.separation;
        d["critical_proximity"] = r.critical_proximity;
        return d;
      },
      py::arg("n"), py::arg("sep"), py::arg("alpha"), py::arg("beta"),
      py::arg("gamma"),
      "Two-edge order parameter M_n between north-west edges at the given "
      "separation.");

  m.def(
      "classify",
      [](double alpha, double beta, double gamma, double tol) {
        PhaseVerdict v = classify(PolygonParams{alpha, beta, gamma}, tol);
        py::dict d;
        d["phase"] = phase_name(v.phase);
        d["zero_factor"] = zero_factor_name(v.zero_factor);
        d["U"] = v.indicators.U;
        d["V"] = v.indicators.V;
        d["S"] = v.indicators.S;
        d["T"] = v.indicators.T;
        d["gamma1"] = v.boundaries.gamma1;
        d["gamma2"] = v.boundaries.gamma2;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
      py::arg("tol") = 1e-9, "Phase of the parameter point.");

  m.def(
      "uvst",
      [](double alpha, double beta, double gamma) {
        CriticalityIndicators i = uvst(PolygonParams{alpha, beta, gamma});
        return py::make_tuple(i.U, i.V, i.S, i.T);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
      "Criticality indicators (U, V, S, T).");

  m.def(
      "phase_boundaries",
      [](double alpha, double beta) {
        PhaseBoundaries b = phase_boundaries(alpha, beta);
        return py::make_tuple(b.gamma1, b.gamma2);
      },
      py::arg("alpha"), py::arg("beta"),
      "Critical gamma thresholds (gamma1, gamma2); gamma2 is inf when alpha "
      "== beta.");

  m.def(
      "spectral_curve",
      [](double alpha, double beta, double gamma) {
        LaurentPoly2 p = char_poly_from_polygon(PolygonParams{alpha, beta, gamma});
        py::dict d;
        d["c00"] = p.c00;
        d["cw"] = p.cw;
        d["cz"] = p.cz;
        d["czw"] = p.czw;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
      "Coefficients of the dimer characteristic polynomial.");

  m.def(
      "torus_min",
      [](double alpha, double beta, double gamma, int grid) {
        TorusMin t = torus_min(
            char_poly_from_polygon(PolygonParams{alpha, beta, gamma}), grid);
        py::dict d;
        d["value"] = t.value;
        d["theta1"] = t.theta1;
        d["theta2"] = t.theta2;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
      py::arg("grid") = 512,
      "Minimum of the characteristic polynomial over a torus grid.");

  m.def(
      "m_inf_squared",
      [](int sep, double alpha, double beta, double gamma, int grid) {
        return m_inf_squared(sep, PolygonParams{alpha, beta, gamma}, grid);
      },
      py::arg("sep"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
      py::arg("grid") = 256,
      "Squared infinite-volume order parameter at the given separation.");

  m.def(
      "lambda_estimate",
      [](double alpha, double beta, double gamma, int max_sep, int grid) {
        LambdaEstimate est =
            lambda_estimate(PolygonParams{alpha, beta, gamma}, max_sep, grid);
        py::dict d;
        d["lambda"] = est.lambda;
        d["converged"] = est.converged;
        d["phase"] = phase_name(est.phase);
        py::list table;
        for (const DecayRow& row : est.table) {
          py::dict r;
          r["sep"] = row.sep;
          r["m2"] = row.m2;
          r["delta_rel"] = row.delta_rel;
          table.append(r);
        }
        d["table"] = table;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
      py::arg("max_sep") = 12, py::arg("grid") = 256,
      "Long-range order estimate from the separation scan.");

  m.def(
      "fourier_kinv",
      [](double alpha, double beta, double gamma, int dp, int dq, int row_label,
         int col_label, int grid) {
        return fourier_kinv(PolygonParams{alpha, beta, gamma}, dp, dq,
                            row_label, col_label, grid);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("dp"),
      py::arg("dq"), py::arg("row_label"), py::arg("col_label"),
      py::arg("grid") = 256,
      "Infinite-volume inverse entry between augmented vertex labels 0..11 at "
      "domain offset (dp, dq).");
}
