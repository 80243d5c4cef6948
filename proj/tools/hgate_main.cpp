// hgate: closed-form geometric-phase gate engine for a driven spin-3/2
// quadrupole system, with an independent time-stepping oracle.
//
// Subcommands: gate, sweep, verify, errata. Exit codes: 0 success,
// 1 verification failure, 2 usage or validation error.

#include "hgate/checks.hpp"
#include "hgate/errata.hpp"
#include "hgate/holonomy.hpp"
#include "hgate/linalg.hpp"
#include "hgate/propagate.hpp"
#include "hgate/sweep.hpp"
#include "hgate/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>

namespace {

using hgate::format_double;

struct ParamFlags {
    double omega0 = 1.0;
    double omega1 = 0.0;
    double theta = 0.0;
    double theta_deg = 0.0;
    bool theta_deg_set = false;

    hgate::ModelParams resolve() const
    {
        hgate::ModelParams p{omega0, omega1, theta};
        if (theta_deg_set) p.theta = theta_deg * M_PI / 180.0;
        return p;
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& f)
{
    cmd->add_option("--omega0", f.omega0, "quadrupole frequency (rad/time), > 0");
    cmd->add_option("--omega1", f.omega1, "field rotation frequency (rad/time), >= 0");
    auto* th = cmd->add_option("--theta", f.theta, "tilt angle in radians, [0, pi/2)");
    cmd->add_option_function<double>(
           "--theta-deg",
           [&f](double v) {
               f.theta_deg = v;
               f.theta_deg_set = true;
           },
           "tilt angle in degrees (converted to radians)")
        ->excludes(th);
}

// all output goes through one sink so --out FILE mirrors stdout exactly
struct Sink {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;

    void open(const std::string& path)
    {
        if (path.empty()) return;
        file = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file) throw hgate::DomainError("cannot open output file '" + path + "'");
        os = file.get();
    }
    std::ostream& out() { return *os; }
};

nlohmann::json mat_to_json(const hgate::Mat4& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 4; ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

void print_mat(std::ostream& os, const hgate::Mat4& m, const char* label)
{
    os << label << ":\n";
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "  (%+.12f %+.12fi)", m(r, c).real(), m(r, c).imag());
            os << buf;
        }
        os << "\n";
    }
}

int cmd_gate(const ParamFlags& flags, double t, bool factors, bool json_out, Sink& sink)
{
    const hgate::ModelParams p = flags.resolve();
    p.validate();
    const hgate::SpinOps& ops = hgate::spin_ops();
    const hgate::DiagChain chain = hgate::diagonalize(p, ops);
    const hgate::GateResult g = hgate::gate(p, t, ops, chain);
    const hgate::ConnectionForm conn = hgate::connection_derived(chain, ops);

    if (json_out) {
        nlohmann::json j;
        j["schema"] = hgate::kSchemaGate;
        j["params"] = {{"omega0", p.omega0}, {"omega1", p.omega1}, {"theta", p.theta}};
        j["t"] = t;
        j["u_gate"] = mat_to_json(g.u_gate);
        if (factors) {
            j["u_geometric"] = mat_to_json(g.u_geometric);
            j["u_dynamic"] = mat_to_json(g.u_dynamic);
            j["h_d"] = chain.h_d;
            j["connection"] = mat_to_json(conn.a_full);
        }
        sink.out() << j.dump() << "\n";
        return 0;
    }

    auto& os = sink.out();
    os << "params: omega0=" << format_double(p.omega0) << " omega1=" << format_double(p.omega1)
       << " theta=" << format_double(p.theta) << " t=" << format_double(t) << "\n";
    print_mat(os, g.u_gate, "u_gate (lab-frame propagator)");
    if (factors) {
        print_mat(os, g.u_geometric, "u_geometric = exp(-i omega1 t A)");
        print_mat(os, g.u_dynamic, "u_dynamic = exp(-i h_d t)");
        os << "h_d diagonal:";
        for (double v : chain.h_d) os << " " << format_double(v);
        os << "\n";
        print_mat(os, conn.a_full, "A (derived connection)");
    }
    return 0;
}

int cmd_sweep(hgate::SweepSpec& spec, bool json_out, Sink& sink)
{
    auto& os = sink.out();
    if (!json_out) os << hgate::csv_preamble();
    hgate::run_sweep(spec, [&](std::size_t, const hgate::RunRecord& r) {
        os << (json_out ? hgate::json_row(r) : hgate::csv_row(r));
    });
    return 0;
}

int cmd_verify(const hgate::CheckOptions& opt, Sink& sink)
{
    auto& os = sink.out();
    os << "hgate verify (seed " << opt.seed << ")\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-42s %-12s %-12s %s\n", "check", "worst", "tol", "status");
    os << buf;

    const std::vector<hgate::CheckResult> results = hgate::run_all_checks(opt);
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::snprintf(buf, sizeof(buf), "%-42s %-12.3e %s%-11.3e %s%s%s\n", r.name.c_str(), r.worst,
                      r.require_at_least ? ">" : " ", r.tol, r.pass ? "PASS" : "FAIL",
                      r.detail.empty() ? "" : "  # ", r.detail.c_str());
        os << buf;
        if (!r.pass) ++failed;
    }
    os << "summary: " << (results.size() - failed) << "/" << results.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_errata(Sink& sink)
{
    sink.out() << hgate::errata_report();
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"closed-form geometric-phase gate engine for a driven spin-3/2 quadrupole system"};
    app.set_config("--config", "", "configuration file with key = value lines; flags win on conflict");
    app.require_subcommand(1);

    // gate
    auto* gate_cmd = app.add_subcommand("gate", "evaluate the closed-form propagator at one parameter point");
    ParamFlags gate_flags;
    double gate_t = 0.0;
    bool gate_factors = false, gate_json = false;
    std::string gate_out;
    add_param_flags(gate_cmd, gate_flags);
    gate_cmd->add_option("--t", gate_t, "evolution time, >= 0")->required();
    gate_cmd->add_flag("--factors", gate_factors, "also print the geometric/dynamical factors, h_d and A");
    gate_cmd->add_flag("--json", gate_json, "machine-readable output; complex entries as [re, im]");
    gate_cmd->add_option("--out", gate_out, "write output to FILE instead of stdout");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter grid; CSV (default) or JSON lines");
    ParamFlags sweep_flags;
    hgate::SweepSpec spec;
    bool sweep_json = false;
    std::string sweep_out;
    std::vector<std::string> axis_args;
    add_param_flags(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--t", spec.t, "fixed evolution time when t is not swept");
    sweep_cmd->add_option("--axis", axis_args,
                          "axis spec name:start:stop:count[:log], name in {omega0, omega1, theta, t}; "
                          "repeatable, declared order is row order");
    sweep_cmd->add_flag("--verify", spec.verify, "integrate every point and record the gate fidelity");
    sweep_cmd->add_option("--step-scale", spec.step_scale, "integrator step control for --verify");
    sweep_cmd->add_option("--threads", spec.threads, "worker threads (default: hardware)");
    sweep_cmd->add_flag("--timing", spec.timing, "record per-row wall time (breaks byte-identical reruns)");
    sweep_cmd->add_option("--grid-cap", spec.grid_cap, "largest allowed grid size");
    sweep_cmd->add_flag("--json", sweep_json, "JSON-lines output instead of CSV");
    sweep_cmd->add_option("--out", sweep_out, "write output to FILE instead of stdout");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the full property suite; exit 1 on any failure");
    hgate::CheckOptions check_opt;
    std::string verify_out;
    verify_cmd->add_option("--seed", check_opt.seed, "seed for the randomized checks");
    verify_cmd->add_option("--tol", check_opt.tol_override, "override every upper-bound tolerance");
    verify_cmd->add_option("--step-scale", check_opt.step_scale, "integrator step control");
    verify_cmd->add_flag("--quick", check_opt.quick, "reduced sample counts");
    verify_cmd->add_option("--out", verify_out, "write output to FILE instead of stdout");

    // errata
    auto* errata_cmd = app.add_subcommand("errata", "reconciliation report: transcription discrepancies and "
                                                    "literal-vs-derived connection deltas");
    std::string errata_out;
    errata_cmd->add_option("--out", errata_out, "write output to FILE instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Sink sink;
        if (gate_cmd->parsed()) {
            sink.open(gate_out);
            return cmd_gate(gate_flags, gate_t, gate_factors, gate_json, sink);
        }
        if (sweep_cmd->parsed()) {
            for (const auto& a : axis_args) {
                hgate::SweepAxis ax;
                std::string rest = a;
                auto take = [&rest](bool last) {
                    const auto pos = rest.find(':');
                    if (pos == std::string::npos) {
                        if (!last) throw hgate::DomainError("bad --axis spec; expected name:start:stop:count[:log]");
                        std::string v = rest;
                        rest.clear();
                        return v;
                    }
                    std::string v = rest.substr(0, pos);
                    rest = rest.substr(pos + 1);
                    return v;
                };
                ax.name = take(false);
                ax.start = std::stod(take(false));
                ax.stop = std::stod(take(false));
                ax.count = std::stoi(take(true));
                if (!rest.empty()) {
                    if (rest != "log" && rest != "linear")
                        throw hgate::DomainError("bad --axis spacing '" + rest + "'; expected linear or log");
                    ax.log_spacing = rest == "log";
                }
                spec.axes.push_back(ax);
            }
            spec.fixed = sweep_flags.resolve();
            sink.open(sweep_out);
            return cmd_sweep(spec, sweep_json, sink);
        }
        if (verify_cmd->parsed()) {
            sink.open(verify_out);
            return cmd_verify(check_opt, sink);
        }
        if (errata_cmd->parsed()) {
            sink.open(errata_out);
            return cmd_errata(sink);
        }
    } catch (const std::invalid_argument&) {
        std::cerr << "error: malformed numeric value in --axis\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
