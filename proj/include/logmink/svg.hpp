#pragma once

#include <string>
#include <vector>

#include "logmink/flow.hpp"
#include "logmink/geometry.hpp"
#include "logmink/solver.hpp"

namespace logmink {

// Hand-rolled SVG figures with a viewBox centered at the origin and
// deterministic byte output for a fixed input.

// Plain outline of the body.
std::string polygon_svg(const SymmetricPolygon& P);

// Outline of the solved body plus, at every outward normal (both members of
// each pair), side-by-side bar glyphs comparing the prescribed mass nu_i
// against the achieved variational mass V_i.
std::string solve_svg(const SolveResult& result);

// Superimposed outlines of the flow frames, each labeled by its time; the
// outermost outline is the profile at t = 0.
std::string flow_svg(const std::vector<FlowFrame>& frames);

void emit_svg(const SymmetricPolygon& P, const std::string& path);
void emit_svg(const SolveResult& result, const std::string& path);
void emit_svg(const std::vector<FlowFrame>& frames, const std::string& path);

}  // namespace logmink
