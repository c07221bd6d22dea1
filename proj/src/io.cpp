#include "logmink/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "logmink/errors.hpp"

namespace logmink {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string(what) + ": malformed JSON: " + e.what());
    }
}

void require_dimension_2(const Json& j, const char* what) {
    if (!j.is_object())
        throw ValidationError(std::string(what) + ": top level must be a JSON object");
    if (!j.contains("dimension") || !j["dimension"].is_number() || j["dimension"] != 2)
        throw ValidationError(std::string(what) + ": \"dimension\" must be 2");
    if (!j.contains("pairs") || !j["pairs"].is_array() || j["pairs"].empty())
        throw ValidationError(std::string(what) + ": \"pairs\" must be a nonempty array");
}

double entry_number(const Json& e, const char* key, std::size_t index, const char* what) {
    if (!e.is_object() || !e.contains(key) || !e[key].is_number())
        throw ValidationError(std::string(what) + ": pairs[" + std::to_string(index) +
                              "] needs a numeric \"" + key + "\"");
    const double v = e[key].get<double>();
    if (!std::isfinite(v))
        throw ValidationError(std::string(what) + ": pairs[" + std::to_string(index) + "].\"" +
                              key + "\" is not finite");
    return v;
}

double checked_theta(const Json& e, std::size_t index, const char* what) {
    const double theta = entry_number(e, "theta", index, what);
    if (theta < 0.0 || theta >= kPi)
        throw ValidationError(std::string(what) + ": pairs[" + std::to_string(index) +
                              "].theta = " + std::to_string(theta) + " lies outside [0, pi)");
    return theta;
}

}  // namespace

EvenMeasure parse_measure(const std::string& text) {
    const Json j = parse_json(text, "measure");
    require_dimension_2(j, "measure");

    std::vector<double> thetas;
    std::vector<double> masses;
    std::size_t index = 0;
    for (const Json& e : j["pairs"]) {
        const double theta = checked_theta(e, index, "measure");
        const double mass = entry_number(e, "mass", index, "measure");
        if (mass < 0.0)
            throw ValidationError("measure: pairs[" + std::to_string(index) +
                                  "].mass = " + std::to_string(mass) + " is negative");
        thetas.push_back(theta);
        masses.push_back(mass);
        ++index;
    }
    EvenMeasure nu = make_even_measure(thetas, masses);
    if (nu.pairs.size() < 2)
        throw ValidationError("measure: fewer than 2 distinct direction pairs");
    return nu;
}

EvenMeasure load_measure(const std::string& path) {
    return parse_measure(read_text_file(path));
}

std::string measure_to_json(const EvenMeasure& nu) {
    Json j;
    j["dimension"] = 2;
    Json pairs = Json::array();
    for (std::size_t i = 0; i < nu.pairs.size(); ++i)
        pairs.push_back({{"theta", nu.pairs[i].theta}, {"mass", nu.mass[i]}});
    j["pairs"] = std::move(pairs);
    return j.dump(2) + "\n";
}

void save_measure(const EvenMeasure& nu, const std::string& path) {
    write_text_file(path, measure_to_json(nu));
}

SymmetricPolygon parse_polygon(const std::string& text) {
    const Json j = parse_json(text, "polygon");
    require_dimension_2(j, "polygon");

    std::vector<DirectionPair> pairs;
    std::vector<double> support;
    std::size_t index = 0;
    for (const Json& e : j["pairs"]) {
        const double theta = checked_theta(e, index, "polygon");
        const double q = entry_number(e, "support", index, "polygon");
        if (!(q > 0.0))
            throw ValidationError("polygon: pairs[" + std::to_string(index) +
                                  "].support = " + std::to_string(q) + " is not positive");
        pairs.push_back({theta});
        support.push_back(q);
        ++index;
    }

    SymmetricPolygon P = wulff_shape(pairs, support);

    if (j.contains("vertices")) {
        const Json& verts = j["vertices"];
        if (!verts.is_array() || verts.size() != P.vertices.size())
            throw ValidationError("polygon: \"vertices\" does not match the body rebuilt "
                                  "from the support values");
        double scale = 0.0;
        for (const Vec2& v : P.vertices) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
        for (std::size_t i = 0; i < P.vertices.size(); ++i) {
            const Json& v = verts[i];
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw ValidationError("polygon: vertices[" + std::to_string(i) +
                                      "] must be a pair of numbers");
            const double dx = v[0].get<double>() - P.vertices[i].x;
            const double dy = v[1].get<double>() - P.vertices[i].y;
            if (std::hypot(dx, dy) > 1e-9 * std::max(scale, 1.0))
                throw ValidationError("polygon: vertices[" + std::to_string(i) +
                                      "] disagrees with the body rebuilt from the support "
                                      "values");
        }
    }
    return P;
}

SymmetricPolygon load_polygon(const std::string& path) {
    return parse_polygon(read_text_file(path));
}

namespace {

Json polygon_to_json_object(const SymmetricPolygon& P) {
    Json j;
    j["dimension"] = 2;
    Json pairs = Json::array();
    for (std::size_t i = 0; i < P.pairs.size(); ++i)
        pairs.push_back({{"theta", P.pairs[i].theta}, {"support", P.support[i]}});
    j["pairs"] = std::move(pairs);
    Json verts = Json::array();
    for (const Vec2& v : P.vertices) verts.push_back({v.x, v.y});
    j["vertices"] = std::move(verts);
    return j;
}

const char* status_name(SolveStatus status) {
    switch (status) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::Stalled: return "stalled";
        case SolveStatus::IterationLimit: return "iteration-limit";
    }
    return "unknown";
}

}  // namespace

std::string polygon_to_json(const SymmetricPolygon& P) {
    return polygon_to_json_object(P).dump(2) + "\n";
}

void save_polygon(const SymmetricPolygon& P, const std::string& path) {
    write_text_file(path, polygon_to_json(P));
}

std::string solve_result_to_json(const SolveResult& result) {
    double nu_total = 0.0;
    for (double m : result.nu_mass) nu_total += m;

    Json j;
    j["functional"] = functional_name(result.functional.kind);
    j["alpha"] = result.functional.alpha;
    j["nu_total"] = nu_total;
    j["F_value"] = result.f_value;
    j["iterations"] = result.iterations;
    j["residual_linf"] = result.residual_linf;
    j["objective_phi"] = result.objective;
    j["status"] = status_name(result.status);
    if (!result.message.empty()) j["message"] = result.message;

    Json table = Json::array();
    for (std::size_t i = 0; i < result.body.pairs.size(); ++i)
        table.push_back({{"theta", result.body.pairs[i].theta},
                         {"nu_mass", result.nu_mass[i]},
                         {"V_mass", result.variational[i]},
                         {"surface_density", result.density[i]},
                         {"support", result.body.support[i]}});
    j["table"] = std::move(table);
    j["gamma_trace"] = result.gamma_trace;
    j["body"] = polygon_to_json_object(result.body);
    return j.dump(2) + "\n";
}

void save_solve_result(const SolveResult& result, const std::string& path) {
    write_text_file(path, solve_result_to_json(result));
}

std::string frames_to_csv(const FlowSolution& flow) {
    std::string out = "t,scale,F_value\n";
    char row[128];
    for (const FlowFrame& f : flow.frames) {
        const double value = std::pow(f.scale, flow.spec.functional.alpha) * flow.profile.f_value;
        std::snprintf(row, sizeof(row), "%.17g,%.17g,%.17g\n", f.t, f.scale, value);
        out += row;
    }
    return out;
}

void save_frames_csv(const FlowSolution& flow, const std::string& path) {
    write_text_file(path, frames_to_csv(flow));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failure on " + path);
}

}  // namespace logmink
