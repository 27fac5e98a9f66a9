#include "steerkit/io.hpp"

#include <fstream>
#include <set>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const char* what) {
    if (!j.is_object()) throw validation_error(std::string(what) + ": expected a JSON object");
    for (const auto& item : j.items()) {
        if (!required.count(item.key()) && !optional.count(item.key()))
            throw validation_error(std::string(what) + ": unknown field '" + item.key() + "'");
    }
    for (const auto& key : required)
        if (!j.contains(key))
            throw validation_error(std::string(what) + ": missing field '" + key + "'");
}

double as_number(const json& j, const char* what) {
    if (!j.is_number()) throw validation_error(std::string(what) + ": expected a number");
    return j.get<double>();
}

Complex as_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw validation_error(std::string(what) + ": complex entries are [re, im] pairs");
    return {as_number(j[0], what), as_number(j[1], what)};
}

ComplexMatrix as_square_matrix(const json& j, int dim, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim * dim)
        throw validation_error(std::string(what) + ": expected a flat row-major list of " +
                               std::to_string(dim * dim) + " complex entries");
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = as_complex(j[r * dim + c], what);
    return m;
}

std::vector<double> as_weights(const json& j, std::size_t count) {
    if (!j.is_array() || j.size() != count)
        throw validation_error("measurement set: weights must list one value per measurement");
    std::vector<double> w;
    w.reserve(count);
    for (const auto& item : j) w.push_back(as_number(item, "weights"));
    return w;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error("invalid JSON in " + path + ": " + e.what());
    }
}

json vector_to_json(BlochVector v) { return json::array({v.x, v.y, v.z}); }

json matrix_to_json(const ComplexMatrix& m) {
    json out = json::array();
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    return out;
}

}  // namespace

MeasurementAssembly parse_measurement_json(const json& j) {
    if (j.is_object() && j.contains("axes")) {
        require_keys(j, {"axes"}, {"weights"}, "measurement set");
        const auto& axes = j["axes"];
        if (!axes.is_array() || axes.empty())
            throw validation_error("measurement set: axes must be a nonempty array");
        std::vector<ProjectiveMeasurement> ms;
        ms.reserve(axes.size());
        for (const auto& axis : axes) {
            if (!axis.is_array() || axis.size() != 3)
                throw validation_error("measurement set: each axis is [x, y, z]");
            ms.push_back(qubit_measurement(normalized({as_number(axis[0], "axes"),
                                                       as_number(axis[1], "axes"),
                                                       as_number(axis[2], "axes")})));
        }
        if (j.contains("weights"))
            return MeasurementAssembly(std::move(ms), as_weights(j["weights"], axes.size()));
        return MeasurementAssembly::equal_weights(std::move(ms));
    }

    require_keys(j, {"dim", "weights", "measurements"}, {}, "measurement set");
    if (!j["dim"].is_number_integer()) throw validation_error("measurement set: dim must be an integer");
    const int dim = j["dim"].get<int>();
    if (dim < 2) throw validation_error("measurement set: dim must be at least 2");
    const auto& ms_json = j["measurements"];
    if (!ms_json.is_array() || ms_json.empty())
        throw validation_error("measurement set: measurements must be a nonempty array");

    std::vector<ProjectiveMeasurement> ms;
    ms.reserve(ms_json.size());
    for (const auto& m_json : ms_json) {
        if (!m_json.is_array() || static_cast<int>(m_json.size()) != dim)
            throw validation_error("measurement set: each measurement lists d projectors");
        std::vector<ComplexMatrix> projectors;
        projectors.reserve(dim);
        for (const auto& p_json : m_json) projectors.push_back(as_square_matrix(p_json, dim, "projector"));
        ms.push_back(ProjectiveMeasurement(std::move(projectors)));
    }
    return MeasurementAssembly(std::move(ms), as_weights(j["weights"], ms_json.size()));
}

MeasurementAssembly load_measurement_file(const std::string& path) {
    return parse_measurement_json(read_json_file(path));
}

BipartiteState parse_state_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw validation_error("state: expected an object with a 'kind' field");
    const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "isotropic") {
        require_keys(j, {"kind", "d", "eta"}, {}, "state");
        if (!j["d"].is_number_integer()) throw validation_error("state: d must be an integer");
        return isotropic_state(j["d"].get<int>(), as_number(j["eta"], "eta"));
    }
    if (kind == "pure") {
        require_keys(j, {"kind", "gamma"}, {}, "state");
        return pure_state(as_number(j["gamma"], "gamma"));
    }
    if (kind == "matrix") {
        require_keys(j, {"kind", "d", "entries"}, {}, "state");
        if (!j["d"].is_number_integer()) throw validation_error("state: d must be an integer");
        const int d = j["d"].get<int>();
        if (d < 2) throw validation_error("state: d must be at least 2");
        ComplexMatrix m = as_square_matrix(j["entries"], d * d, "state entries");
        return BipartiteState(DensityOperator(std::move(m)), d, d);
    }
    throw validation_error("state: unknown kind '" + kind + "'");
}

BipartiteState load_state_file(const std::string& path) { return parse_state_json(read_json_file(path)); }

json measurement_to_json(const MeasurementAssembly& assembly) {
    json measurements = json::array();
    for (int mu = 0; mu < assembly.size(); ++mu) {
        json projectors = json::array();
        for (int a = 0; a < assembly.dim(); ++a)
            projectors.push_back(matrix_to_json(assembly.measurement(mu).projector(a)));
        measurements.push_back(std::move(projectors));
    }
    return json{{"dim", assembly.dim()}, {"weights", assembly.weights()}, {"measurements", measurements}};
}

json threshold_report_to_json(const ThresholdReport& report) {
    json maximizer = json::array();
    for (int a : report.maximizer.assignments) maximizer.push_back(a + 1);
    return json{{"f_nst", report.f_nst}, {"g_nst", report.g_nst}, {"maximizer", maximizer}};
}

json verdict_to_json(const SteeringVerdict& verdict) {
    return json{{"f_avg", verdict.f_avg}, {"f_nst", verdict.f_nst},   {"g_avg", verdict.g_avg},
                {"g_nst", verdict.g_nst}, {"ratio", verdict.ratio}, {"steerable", verdict.steerable}};
}

std::string criterion_kind_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::R2: return "r2";
        case CriterionKind::R3: return "r3";
        default: return "rinf";
    }
}

json adapted_to_json(const AdaptedCriterion& criterion) {
    json axes = json::array();
    for (const auto& v : criterion.optimal_axes) axes.push_back(vector_to_json(v));
    json alice = json::array();
    for (const auto& v : criterion.optimal_alice_axes) alice.push_back(vector_to_json(v));
    return json{{"kind", criterion_kind_name(criterion.kind)},
                {"value", criterion.value},
                {"optimal_weights", criterion.optimal_weights},
                {"optimal_axes", axes},
                {"optimal_alice_axes", alice},
                {"steerable", criterion.steerable}};
}

}  // namespace steerkit
