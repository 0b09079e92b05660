#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dicke/exact.hpp"
#include "dicke/meanfield.hpp"
#include "dicke/model.hpp"

namespace dicke::sweep {

using meanfield::PhaseLabel;

// One point of a phase diagram.
struct SweepRecord {
    ModelParams params;
    double beta = 0.0;
    PhaseLabel phase = PhaseLabel::Normal;
    double b0 = 0.0;
    double omega_delta = 0.0;
    double f_diff = 0.0;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// Throws DomainError when b0 > 0 disagrees with the phase or a field is not finite.
void check_record(const SweepRecord& record);

// Mean-field evaluation of a single point.
SweepRecord evaluate_point(const ModelParams& params, const Thermo& thermo);

// "g" drives g1 and g2 together.
enum class Parameter { omega0, Omega, g1, g2, lambda, beta, g };
enum class AxisScale { Linear, Log };

std::string_view to_string(Parameter p) noexcept;
std::optional<Parameter> parameter_from_string(std::string_view name) noexcept;

struct Axis {
    Parameter parameter = Parameter::g1;
    double min = 0.0;
    double max = 1.0;
    int count = 1;
    AxisScale scale = AxisScale::Linear;

    // count == 1 yields {min}; otherwise both endpoints are included.
    std::vector<double> values() const;
};

struct GridSpec {
    Axis axis1;
    std::optional<Axis> axis2;
    ParamSet fixed;  // everything the axes do not set, including beta

    std::size_t size() const noexcept;
};

inline constexpr std::size_t kMaxGridPoints = 10'000'000;

// Axes only: bounds, counts, overlap, size.
void validate_axes(const GridSpec& spec);
// Axes plus every model and thermal parameter supplied.
void validate(const GridSpec& spec);

// Row-major (axis1 outer). Output order and content do not depend on `jobs`.
std::vector<SweepRecord> run_grid(const GridSpec& spec, int jobs = 1);

struct BoundaryPoint {
    double lambda = 0.0;
    std::optional<double> T_c;  // empty when no finite transition
};

// T_c(lambda) from the closed form; params.lambda is ignored.
std::vector<BoundaryPoint> phase_boundary(const ModelParams& params, double lambda_min,
                                          double lambda_max, int count);

struct OracleRow {
    std::optional<int> atoms;  // empty marks the mean-field (N = inf) row
    double f_diff_N = 0.0;
    double occupation_N = 0.0;  // <b^dag b> / N
    double f_diff_mf = 0.0;
    double b0_sq_mf = 0.0;
    int n_max = 0;  // accepted cutoff, 0 for the mean-field row
};

// One exact row per entry of `atoms` (cutoff grown adaptively from trunc.n_max)
// followed by the mean-field row.
std::vector<OracleRow> oracle_table(const ModelParams& params, const Thermo& thermo,
                                    std::span<const int> atoms,
                                    const exact::TruncationConfig& trunc, int jobs = 1);

// --- serialization -------------------------------------------------------

struct FormatOptions {
    std::optional<int> digits;  // significant digits; full round-trip when empty
};

std::string format_number(double value, const FormatOptions& fmt = {});

// omega0,Omega,g1,g2,lambda,beta,phase,b0,omega_delta,f_diff
std::string_view csv_header() noexcept;
std::string csv_row(const SweepRecord& record, const FormatOptions& fmt = {});
std::string json_object(const SweepRecord& record, const FormatOptions& fmt = {});

void write_csv(std::ostream& out, std::span<const SweepRecord> records,
               const FormatOptions& fmt = {});
void write_jsonl(std::ostream& out, std::span<const SweepRecord> records,
                 const FormatOptions& fmt = {});

void write_boundary_csv(std::ostream& out, std::span<const BoundaryPoint> points,
                        const FormatOptions& fmt = {});
void write_oracle_csv(std::ostream& out, std::span<const OracleRow> rows,
                      const FormatOptions& fmt = {});

// {"axis1": {"name": "g", "min": 0, "max": 1, "count": 11, "scale": "linear"},
//  "axis2": {...}, "fixed": {"omega0": 1, ...}}
// axis2 is optional. Unknown keys are rejected. `fixed` may be incomplete;
// run_grid checks that every parameter is set.
GridSpec parse_grid_json(std::string_view text);

}  // namespace dicke::sweep
