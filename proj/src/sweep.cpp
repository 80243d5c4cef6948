#include "hgate/sweep.hpp"

#include "hgate/linalg.hpp"
#include "hgate/propagate.hpp"
#include "hgate/version.hpp"

#include <json.hpp>

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace hgate {

namespace {

const char* kAxisNames[] = {"omega0", "omega1", "theta", "t"};

bool known_axis(const std::string& name)
{
    for (const char* n : kAxisNames)
        if (name == n) return true;
    return false;
}

double axis_value(const SweepAxis& ax, int i)
{
    if (ax.count == 1) return ax.start;
    const double f = static_cast<double>(i) / static_cast<double>(ax.count - 1);
    if (ax.log_spacing) return ax.start * std::pow(ax.stop / ax.start, f);
    return ax.start + f * (ax.stop - ax.start);
}

void apply_axis(ModelParams& p, double& t, const std::string& name, double v)
{
    if (name == "omega0") p.omega0 = v;
    else if (name == "omega1") p.omega1 = v;
    else if (name == "theta") p.theta = v;
    else t = v;
}

} // namespace

void SweepSpec::validate() const
{
    for (const auto& ax : axes) {
        if (!known_axis(ax.name))
            throw DomainError("unknown sweep axis '" + ax.name + "' (expected omega0, omega1, theta or t)");
        if (ax.count < 1) throw DomainError("axis '" + ax.name + "' needs count >= 1");
        if (ax.log_spacing && (ax.start <= 0.0 || ax.stop <= 0.0))
            throw DomainError("axis '" + ax.name + "': log spacing requires a positive range");
        for (const auto& other : axes)
            if (&other != &ax && other.name == ax.name)
                throw DomainError("axis '" + ax.name + "' declared twice");
    }
    if (grid_size() > grid_cap)
        throw DomainError("sweep grid has " + std::to_string(grid_size()) +
                          " points, over the cap of " + std::to_string(grid_cap));
}

std::size_t SweepSpec::grid_size() const
{
    std::size_t n = 1;
    for (const auto& ax : axes) n *= static_cast<std::size_t>(ax.count);
    return n;
}

RunRecord evaluate_point(const ModelParams& p, double t, bool verify, double step_scale, bool timing)
{
    const auto t0 = std::chrono::steady_clock::now();

    const SpinOps& ops = spin_ops();
    const DiagChain chain = diagonalize(p, ops);
    const ConnectionForm conn = connection_derived(chain, ops);
    const GateResult g = gate(p, t, ops, chain);

    RunRecord r;
    r.params = p;
    r.t = t;
    r.h_d = chain.h_d;
    r.a32 = conn.a32;
    r.a12 = conn.a12;
    r.a_tr = conn.a_tr;
    r.a_tr_norm = offblock_norm(conn.a_full);
    r.mixing = characterize_gate(g);

    if (verify) {
        IntegratorConfig cfg;
        cfg.step_scale = step_scale;
        r.fidelity = integrate_lab(p, t, cfg).fidelity_vs(g.u_gate);
        r.fidelity_ok = r.fidelity >= 1.0 - 1e-6;
    }
    if (timing) {
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    return r;
}

void run_sweep(const SweepSpec& spec, const std::function<void(std::size_t, const RunRecord&)>& emit)
{
    spec.validate();
    spec.fixed.validate();

    const std::size_t n = spec.grid_size();
    auto point_at = [&](std::size_t index, ModelParams& p, double& t) {
        p = spec.fixed;
        t = spec.t;
        std::size_t rest = index;
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            const auto& ax = spec.axes[a];
            const int i = static_cast<int>(rest % static_cast<std::size_t>(ax.count));
            rest /= static_cast<std::size_t>(ax.count);
            apply_axis(p, t, ax.name, axis_value(ax, i));
        }
    };

    unsigned nthreads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    constexpr std::size_t kBlock = 256;

    for (std::size_t base = 0; base < n; base += kBlock) {
        const std::size_t m = std::min(kBlock, n - base);
        std::vector<RunRecord> buf(m);
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;

        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < m;) {
                try {
                    ModelParams p;
                    double t = 0.0;
                    point_at(base + i, p, t);
                    buf[i] = evaluate_point(p, t, spec.verify, spec.step_scale, spec.timing);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };

        if (nthreads <= 1 || m == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < std::min<std::size_t>(nthreads, m); ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);
        for (std::size_t i = 0; i < m; ++i) emit(base + i, buf[i]);
    }
}

std::string format_double(double v)
{
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_preamble()
{
    std::string s = "# schema ";
    s += kSchemaSweep;
    s += "\nomega0,omega1,theta,t"
         ",hd_0,hd_1,hd_2,hd_3"
         ",a32_i,a32_s3,a32_s1,a12_i,a12_s3,a12_s1"
         ",atr_i,atr_s3,atr_s1,atr_e,atr_norm"
         ",part_0,part_1,part_2,part_3,transfer_norm,transfer_norm_energy"
         ",fidelity,fidelity_ok,wall_ms\n";
    return s;
}

std::string csv_row(const RunRecord& r)
{
    std::string s;
    auto cell = [&](double v) {
        s += format_double(v);
        s += ',';
    };
    cell(r.params.omega0);
    cell(r.params.omega1);
    cell(r.params.theta);
    cell(r.t);
    for (double v : r.h_d) cell(v);
    cell(r.a32.a); cell(r.a32.b); cell(r.a32.c);
    cell(r.a12.a); cell(r.a12.b); cell(r.a12.c);
    cell(r.a_tr.a); cell(r.a_tr.b); cell(r.a_tr.c); cell(r.a_tr.e);
    cell(r.a_tr_norm);
    for (int p : r.mixing.participation) { s += std::to_string(p); s += ','; }
    cell(r.mixing.transfer_norm);
    cell(r.mixing.transfer_norm_energy);
    if (r.fidelity >= 0.0) {
        cell(r.fidelity);
        s += r.fidelity_ok ? "1," : "0,";
    } else {
        s += ",,";
    }
    if (r.wall_ms > 0.0) s += format_double(r.wall_ms);
    s += '\n';
    return s;
}

std::string json_row(const RunRecord& r)
{
    nlohmann::json j;
    j["schema"] = kSchemaSweep;
    j["omega0"] = r.params.omega0;
    j["omega1"] = r.params.omega1;
    j["theta"] = r.params.theta;
    j["t"] = r.t;
    j["h_d"] = r.h_d;
    j["a32"] = {{"i", r.a32.a}, {"s3", r.a32.b}, {"s1", r.a32.c}};
    j["a12"] = {{"i", r.a12.a}, {"s3", r.a12.b}, {"s1", r.a12.c}};
    j["atr"] = {{"i", r.a_tr.a}, {"s3", r.a_tr.b}, {"s1", r.a_tr.c}, {"e", r.a_tr.e}, {"norm", r.a_tr_norm}};
    j["participation"] = r.mixing.participation;
    j["transfer_norm"] = r.mixing.transfer_norm;
    j["transfer_norm_energy"] = r.mixing.transfer_norm_energy;
    if (r.fidelity >= 0.0) {
        j["fidelity"] = r.fidelity;
        j["fidelity_ok"] = r.fidelity_ok;
    }
    if (r.wall_ms > 0.0) j["wall_ms"] = r.wall_ms;
    return j.dump() + "\n";
}

} // namespace hgate
