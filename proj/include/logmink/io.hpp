#pragma once

#include <string>

#include "logmink/flow.hpp"
#include "logmink/geometry.hpp"
#include "logmink/measure.hpp"
#include "logmink/solver.hpp"

namespace logmink {

// JSON text <-> domain types.  Numbers are serialized with shortest
// round-trip precision (>= 15 significant digits), so a write/read cycle
// reproduces every value bit-exactly.

// Measure file: {"dimension": 2, "pairs": [{"theta": r, "mass": r}, ...]}.
// Angles must lie in [0, pi); negative masses are rejected, zero masses are
// dropped, duplicate angles merge by summing.
EvenMeasure parse_measure(const std::string& text);
EvenMeasure load_measure(const std::string& path);
std::string measure_to_json(const EvenMeasure& nu);
void save_measure(const EvenMeasure& nu, const std::string& path);

// Polygon file: {"dimension": 2, "pairs": [{"theta": r, "support": r}, ...],
// "vertices": [[x, y], ...]}.  The body is rebuilt from the support vector;
// "vertices" is written for human consumption and, when present on input,
// checked against the rebuilt body.
SymmetricPolygon parse_polygon(const std::string& text);
SymmetricPolygon load_polygon(const std::string& path);
std::string polygon_to_json(const SymmetricPolygon& P);
void save_polygon(const SymmetricPolygon& P, const std::string& path);

// Solve report: functional metadata, the residual/objective summary, the
// per-pair table (theta, nu_mass, V_mass, surface_density, support), the
// gamma trace, and the solved body embedded under "body".
std::string solve_result_to_json(const SolveResult& result);
void save_solve_result(const SolveResult& result, const std::string& path);

// Frame time series, one row per frame: t, scale, F_value.
std::string frames_to_csv(const FlowSolution& flow);
void save_frames_csv(const FlowSolution& flow, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace logmink
