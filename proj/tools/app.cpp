#include "app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include "dicke/dicke.hpp"

namespace dicke::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    ParamSet flags;
    std::string config_path;
    bool dump_config = false;
    std::string out_path;
    std::optional<int> digits;
    std::string format = "json";
    std::string grid_path;
    std::vector<int> atoms;
    std::optional<int> n_max;
    double tol = 1e-8;
    int jobs = 1;
    double lambda_min = 0.0;
    double lambda_max = 1.0;
    int count = 11;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Minimal ordered JSON object writer so that --digits applies uniformly.
class JsonLine {
public:
    explicit JsonLine(const sweep::FormatOptions& fmt) : fmt_(fmt) {}

    JsonLine& number(const char* key, double v) {
        return raw(key, std::isfinite(v) ? sweep::format_number(v, fmt_) : "null");
    }
    JsonLine& integer(const char* key, long long v) { return raw(key, std::to_string(v)); }
    JsonLine& text(const char* key, std::string_view v) {
        return raw(key, "\"" + std::string(v) + "\"");
    }
    JsonLine& boolean(const char* key, bool v) { return raw(key, v ? "true" : "false"); }
    JsonLine& params(const ModelParams& p) {
        return number("omega0", p.omega0)
            .number("Omega", p.Omega)
            .number("g1", p.g1)
            .number("g2", p.g2)
            .number("lambda", p.lambda);
    }

    std::string str() const { return "{" + body_ + "}\n"; }

private:
    JsonLine& raw(const char* key, const std::string& value) {
        if (!body_.empty()) body_ += ',';
        body_ += '"';
        body_ += key;
        body_ += "\":";
        body_ += value;
        return *this;
    }

    sweep::FormatOptions fmt_;
    std::string body_;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
        fmt_.digits = opt.digits;
    }

    ParamSet params() const {
        ParamSet base;
        if (!opt_.config_path.empty()) base = parse_params_json(read_file(opt_.config_path));
        return base.merged_with(opt_.flags);
    }

    // Returns true if --dump-config handled the invocation.
    bool dump() {
        if (!opt_.dump_config) return false;
        emit(dump_params_json(params()) + "\n");
        return true;
    }

    int tc() {
        if (dump()) return kOk;
        const auto p = params().require_model();
        const double ratio = meanfield::transition_ratio(p);
        JsonLine line(fmt_);
        line.params(p).number("ratio", ratio);
        if (const auto beta_c = meanfield::critical_inverse_temperature(p)) {
            line.text("result", "transition").number("beta_c", *beta_c).number("T_c", 1.0 / *beta_c);
        } else {
            line.text("result", "no_transition");
        }
        if (p.g1 > 0.0 && p.omega0 * (p.Omega + p.lambda) > 0.0) {
            const double gc =
                meanfield::critical_coupling_zero_T({p.omega0, p.Omega, p.lambda, p.g2 / p.g1});
            line.number("g1_c_zero_T", gc);
        }
        emit(line.str());
        return kOk;
    }

    int gap() {
        if (dump()) return kOk;
        const auto set = params();
        const auto p = set.require_model();
        const auto t = set.require_thermo();
        const auto sol = meanfield::solve_gap(p, t);
        const auto fe = meanfield::free_energy_diff(p, t, sol);
        const sweep::SweepRecord rec{p, t.beta, sol.phase, sol.b0, sol.omega_delta, fe.f_diff};
        if (opt_.format == "csv") return emit_csv(rec);
        JsonLine line = record_json(rec);
        line.number("delta", sol.delta)
            .number("r0", sol.r0)
            .boolean("r0_rescaled", sol.r0_rescaled)
            .boolean("extrapolated", sol.extrapolated)
            .number("max_residual", meanfield::stationary_residuals(p, t, sol).max_abs());
        emit(line.str());
        return kOk;
    }

    int free_energy() {
        if (dump()) return kOk;
        const auto set = params();
        const auto p = set.require_model();
        const auto t = set.require_thermo();
        const auto sol = meanfield::solve_gap(p, t);
        const auto fe = meanfield::free_energy_diff(p, t, sol);
        const sweep::SweepRecord rec{p, t.beta, sol.phase, sol.b0, sol.omega_delta, fe.f_diff};
        if (opt_.format == "csv") return emit_csv(rec);
        emit(record_json(rec).number("f0", fe.f0).str());
        return kOk;
    }

    int sweep() {
        if (dump()) return kOk;
        if (opt_.grid_path.empty()) throw DomainError("grid", "sweep requires --grid <file>");
        auto spec = sweep::parse_grid_json(read_file(opt_.grid_path));
        // Flags and --config fill or override the grid's fixed values.
        spec.fixed = spec.fixed.merged_with(params());
        const auto records = sweep::run_grid(spec, opt_.jobs);
        std::ostringstream buf;
        if (opt_.format == "json") {
            sweep::write_jsonl(buf, records, fmt_);
        } else {
            sweep::write_csv(buf, records, fmt_);
        }
        emit(buf.str());
        return kOk;
    }

    int oracle() {
        if (dump()) return kOk;
        const auto set = params();
        const auto p = set.require_model();
        const auto t = set.require_thermo();
        if (opt_.atoms.empty()) throw DomainError("N", "oracle requires --N");
        const exact::TruncationConfig trunc{opt_.n_max.value_or(exact::seed_cutoff(p, t)), opt_.tol};
        const auto rows = sweep::oracle_table(p, t, opt_.atoms, trunc, opt_.jobs);
        std::ostringstream buf;
        sweep::write_oracle_csv(buf, rows, fmt_);
        emit(buf.str());
        return kOk;
    }

    int fermion_check() {
        if (dump()) return kOk;
        const auto set = params();
        const auto p = set.require_model();
        const auto t = set.require_thermo();
        if (opt_.atoms.size() != 1) throw DomainError("N", "fermion-check takes a single --N");
        const exact::TruncationConfig trunc{opt_.n_max.value_or(12), opt_.tol};
        const auto check = exact::fermionic_identity_check(p, opt_.atoms.front(), t, trunc);
        const bool pass = check.discrepancy < 1e-10;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s %.1e\n", pass ? "PASS" : "FAIL", check.discrepancy);
        emit(buf);
        return pass ? kOk : kNumerical;
    }

    int boundary() {
        if (dump()) return kOk;
        auto set = params();
        if (!set.lambda) set.lambda = opt_.lambda_min;
        const auto p = set.require_model();
        const auto points = sweep::phase_boundary(p, opt_.lambda_min, opt_.lambda_max, opt_.count);
        std::ostringstream buf;
        sweep::write_boundary_csv(buf, points, fmt_);
        emit(buf.str());
        return kOk;
    }

private:
    JsonLine record_json(const sweep::SweepRecord& r) const {
        JsonLine line(fmt_);
        line.params(r.params)
            .number("beta", r.beta)
            .text("phase", meanfield::to_string(r.phase))
            .number("b0", r.b0)
            .number("omega_delta", r.omega_delta)
            .number("f_diff", r.f_diff);
        return line;
    }

    int emit_csv(const sweep::SweepRecord& rec) {
        std::ostringstream buf;
        sweep::write_csv(buf, std::span(&rec, 1), fmt_);
        emit(buf.str());
        return kOk;
    }

    void emit(const std::string& text) {
        if (opt_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(opt_.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("cannot write " + opt_.out_path);
        file << text;
        if (!file) throw IoError("write failed for " + opt_.out_path);
    }

    const Options& opt_;
    std::ostream& out_;
    sweep::FormatOptions fmt_;
};

void add_param_flags(CLI::App* sub, Options& opt, bool with_beta) {
    sub->add_option("--omega0", opt.flags.omega0, "Boson frequency");
    sub->add_option("--Omega", opt.flags.Omega, "Atomic splitting");
    sub->add_option("--g1", opt.flags.g1, "Rotating coupling");
    sub->add_option("--g2", opt.flags.g2, "Counter-rotating coupling");
    sub->add_option("--lambda", opt.flags.lambda, "Dipole-dipole coupling");
    if (with_beta) sub->add_option("--beta", opt.flags.beta, "Inverse temperature");
    sub->add_option("--config", opt.config_path, "JSON parameter file; flags override it");
    sub->add_flag("--dump-config", opt.dump_config, "Print the merged parameters as JSON and exit");
    sub->add_option("--out", opt.out_path, "Output file (default: stdout)");
    sub->add_option("--digits", opt.digits, "Round numeric output to k significant digits")
        ->check(CLI::Range(1, 17));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Thermodynamics of the Dicke model with dipole-dipole interaction", "dicke"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O failure.");

    auto* tc = app.add_subcommand("tc", "Critical inverse temperature beta_c and T_c");
    add_param_flags(tc, opt, false);

    auto* gap = app.add_subcommand("gap", "Solve the mean-field gap equation");
    add_param_flags(gap, opt, true);
    gap->add_option("--format", opt.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* fe = app.add_subcommand("free-energy", "Mean-field free energy per atom, F - F0");
    add_param_flags(fe, opt, true);
    fe->add_option("--format", opt.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* sw = app.add_subcommand("sweep", "Phase-diagram grid scan");
    add_param_flags(sw, opt, true);
    sw->add_option("--grid", opt.grid_path, "Grid specification (JSON)")->required();
    sw->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 1024));
    sw->add_option("--format", opt.format, "csv|json (JSON lines)")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* oracle = app.add_subcommand("oracle", "Finite-N exact diagonalization vs mean field");
    add_param_flags(oracle, opt, true);
    oracle->add_option("--N", opt.atoms, "Atom counts, e.g. 2,4,6,8")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->check(CLI::Range(1, 12));
    oracle->add_option("--n-max", opt.n_max, "Initial boson cutoff")->check(CLI::Range(1, 100000));
    oracle->add_option("--tol", opt.tol, "Free-energy tolerance for cutoff growth")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 1024));

    auto* fc = app.add_subcommand("fermion-check", "Verify the fermionic trace identity");
    add_param_flags(fc, opt, true);
    fc->add_option("--N", opt.atoms, "Atom count (1 or 2)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->check(CLI::Range(1, 2));
    fc->add_option("--n-max", opt.n_max, "Boson cutoff")->check(CLI::Range(1, 100000));

    auto* bd = app.add_subcommand("boundary", "Critical temperature along a lambda range");
    add_param_flags(bd, opt, false);
    bd->add_option("--lambda-min", opt.lambda_min, "First lambda");
    bd->add_option("--lambda-max", opt.lambda_max, "Last lambda");
    bd->add_option("--count", opt.count, "Number of points")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidation;
    }
    // sweep defaults to CSV unless --format was given.
    if (sw->parsed() && sw->count("--format") == 0) opt.format = "csv";

    Runner runner(opt, out);
    try {
        if (tc->parsed()) return runner.tc();
        if (gap->parsed()) return runner.gap();
        if (fe->parsed()) return runner.free_energy();
        if (sw->parsed()) return runner.sweep();
        if (oracle->parsed()) return runner.oracle();
        if (fc->parsed()) return runner.fermion_check();
        if (bd->parsed()) return runner.boundary();
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kNumerical;
    }
    return kValidation;
}

}  // namespace dicke::cli
