#include <json.hpp>
#include <ostream>

#include "dicke/errors.hpp"
#include "dicke/numeric.hpp"
#include "dicke/sweep.hpp"

namespace dicke::sweep {

namespace {

using Json = nlohmann::json;

void append_fields(std::string& line, const SweepRecord& r, const FormatOptions& fmt,
                   bool json) {
    struct Field {
        const char* key;
        double value;
    };
    const Field leading[] = {{"omega0", r.params.omega0}, {"Omega", r.params.Omega},
                             {"g1", r.params.g1},         {"g2", r.params.g2},
                             {"lambda", r.params.lambda}, {"beta", r.beta}};
    const Field trailing[] = {{"b0", r.b0}, {"omega_delta", r.omega_delta}, {"f_diff", r.f_diff}};

    bool first = true;
    auto emit = [&](const char* key, const std::string& value) {
        if (!first) line += ',';
        first = false;
        if (json) {
            line += '"';
            line += key;
            line += "\":";
        }
        line += value;
    };
    for (const auto& f : leading) emit(f.key, format_number(f.value, fmt));
    const std::string phase(meanfield::to_string(r.phase));
    emit("phase", json ? '"' + phase + '"' : phase);
    for (const auto& f : trailing) emit(f.key, format_number(f.value, fmt));
}

Axis parse_axis(const Json& node, const char* name) {
    if (!node.is_object()) throw DomainError(name, "must be an object");
    Axis axis;
    bool have_name = false, have_min = false, have_max = false, have_count = false;
    for (const auto& [key, value] : node.items()) {
        const std::string field = std::string(name) + "." + key;
        if (key == "name") {
            if (!value.is_string()) throw DomainError(field, "must be a string");
            const auto p = parameter_from_string(value.get<std::string>());
            if (!p) throw DomainError(field, "unknown parameter '" + value.get<std::string>() + "'");
            axis.parameter = *p;
            have_name = true;
        } else if (key == "min" || key == "max") {
            if (!value.is_number()) throw DomainError(field, "must be a number");
            (key == "min" ? axis.min : axis.max) = value.get<double>();
            (key == "min" ? have_min : have_max) = true;
        } else if (key == "count") {
            if (!value.is_number_integer()) throw DomainError(field, "must be an integer");
            axis.count = value.get<int>();
            have_count = true;
        } else if (key == "scale") {
            const auto s = value.is_string() ? value.get<std::string>() : std::string{};
            if (s == "linear") {
                axis.scale = AxisScale::Linear;
            } else if (s == "log") {
                axis.scale = AxisScale::Log;
            } else {
                throw DomainError(field, "must be \"linear\" or \"log\"");
            }
        } else {
            throw DomainError(field, "unknown key");
        }
    }
    if (!have_name) throw DomainError(std::string(name) + ".name", "missing");
    if (!have_min) throw DomainError(std::string(name) + ".min", "missing");
    if (!have_max) throw DomainError(std::string(name) + ".max", "missing");
    if (!have_count) throw DomainError(std::string(name) + ".count", "missing");
    return axis;
}

}  // namespace

std::string format_number(double value, const FormatOptions& fmt) {
    return format_double(fmt.digits ? round_significant(value, *fmt.digits) : value);
}

std::string_view csv_header() noexcept {
    return "omega0,Omega,g1,g2,lambda,beta,phase,b0,omega_delta,f_diff";
}

std::string csv_row(const SweepRecord& record, const FormatOptions& fmt) {
    std::string line;
    append_fields(line, record, fmt, false);
    return line;
}

std::string json_object(const SweepRecord& record, const FormatOptions& fmt) {
    std::string line = "{";
    append_fields(line, record, fmt, true);
    line += '}';
    return line;
}

void write_csv(std::ostream& out, std::span<const SweepRecord> records, const FormatOptions& fmt) {
    out << csv_header() << '\n';
    for (const auto& r : records) out << csv_row(r, fmt) << '\n';
}

void write_jsonl(std::ostream& out, std::span<const SweepRecord> records,
                 const FormatOptions& fmt) {
    for (const auto& r : records) out << json_object(r, fmt) << '\n';
}

void write_boundary_csv(std::ostream& out, std::span<const BoundaryPoint> points,
                        const FormatOptions& fmt) {
    out << "lambda,T_c\n";
    for (const auto& p : points) {
        out << format_number(p.lambda, fmt) << ',';
        if (p.T_c) out << format_number(*p.T_c, fmt);
        out << '\n';
    }
}

void write_oracle_csv(std::ostream& out, std::span<const OracleRow> rows,
                      const FormatOptions& fmt) {
    out << "N,n_max,f_diff_N,boson_occupation_N,f_diff_mf,b0_sq_mf\n";
    for (const auto& r : rows) {
        out << (r.atoms ? std::to_string(*r.atoms) : std::string("inf")) << ','
            << r.n_max << ',' << format_number(r.f_diff_N, fmt) << ','
            << format_number(r.occupation_N, fmt) << ',' << format_number(r.f_diff_mf, fmt) << ','
            << format_number(r.b0_sq_mf, fmt) << '\n';
    }
}

GridSpec parse_grid_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DomainError("grid", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw DomainError("grid", "expected a JSON object");

    GridSpec spec;
    bool have_axis1 = false;
    for (const auto& [key, value] : doc.items()) {
        if (key == "axis1") {
            spec.axis1 = parse_axis(value, "axis1");
            have_axis1 = true;
        } else if (key == "axis2") {
            spec.axis2 = parse_axis(value, "axis2");
        } else if (key == "fixed") {
            spec.fixed = parse_params_json(value.dump());
        } else {
            throw DomainError(key, "unknown key in grid spec");
        }
    }
    if (!have_axis1) throw DomainError("axis1", "missing");
    validate_axes(spec);
    return spec;
}

}  // namespace dicke::sweep
