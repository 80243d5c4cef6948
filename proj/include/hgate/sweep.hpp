#pragma once

#include "hgate/holonomy.hpp"
#include "hgate/spin.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hgate {

/// One sweep dimension over omega0, omega1, theta or t.
struct SweepAxis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    bool log_spacing = false;
};

/// Row order is lexicographic over the axes as declared (first axis slowest).
struct SweepSpec {
    std::vector<SweepAxis> axes;
    ModelParams fixed;
    double t = 0.0;
    bool verify = false;             // integrate every point and record fidelity
    double step_scale = 0.01;
    std::size_t grid_cap = 1'000'000;
    int threads = 0;                 // 0: hardware concurrency
    bool timing = false;             // wall_ms column; off by default so reruns are byte-identical

    void validate() const;
    std::size_t grid_size() const;
};

struct RunRecord {
    ModelParams params;
    double t = 0.0;
    std::array<double, 4> h_d{};
    BlockCoeffs a32, a12, a_tr;
    double a_tr_norm = 0.0;          // Frobenius mass of the derived-A cross blocks
    double fidelity = -1.0;          // vs the integrator; -1 when not requested
    bool fidelity_ok = true;
    MixingReport mixing;
    double wall_ms = 0.0;
};

RunRecord evaluate_point(const ModelParams& p, double t, bool verify, double step_scale, bool timing);

/// Evaluates the grid with a worker pool and hands rows to `emit` on the
/// calling thread, strictly in declared order regardless of completion order.
void run_sweep(const SweepSpec& spec, const std::function<void(std::size_t, const RunRecord&)>& emit);

/// Shortest round-trip decimal form; the determinism contract for CSV.
std::string format_double(double v);

std::string csv_preamble();          // schema comment + header row
std::string csv_row(const RunRecord& r);
std::string json_row(const RunRecord& r);

} // namespace hgate
