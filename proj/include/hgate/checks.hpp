#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hgate {

/// Outcome of one named invariant check. `worst` is the worst residual (or
/// measured value) observed; for most checks pass means worst <= tol, for
/// checks flagged require_at_least it means worst >= tol.
struct CheckResult {
    std::string name;
    double worst = 0.0;
    double tol = 0.0;
    bool require_at_least = false;
    bool pass = false;
    std::string detail;
};

struct CheckOptions {
    std::uint64_t seed = 42;
    double tol_override = 0.0;   // > 0 replaces the tolerance of every upper-bound check
    double step_scale = 0.01;    // integrator step control for the oracle checks
    bool quick = false;          // reduced sample counts (used by the unit tests)
};

// Grouped by the acceptance criterion they back.
std::vector<CheckResult> checks_algebra(const CheckOptions& opt);           // spin operator algebra
std::vector<CheckResult> checks_linalg(const CheckOptions& opt);            // eig/expm/kernel properties
std::vector<CheckResult> checks_spin_model(const CheckOptions& opt);        // Hamiltonian constructions
std::vector<CheckResult> checks_diagonalization(const CheckOptions& opt);   // chain + exact diagonalizer
std::vector<CheckResult> checks_connection(const CheckOptions& opt);        // gauge potential properties
std::vector<CheckResult> checks_oracle(const CheckOptions& opt);            // closed form vs integrator
std::vector<CheckResult> checks_composition(const CheckOptions& opt);       // sub-step composition laws
std::vector<CheckResult> checks_adiabatic(const CheckOptions& opt);         // slow/fast drive contrast
std::vector<CheckResult> checks_mixing(const CheckOptions& opt);            // superposition generation
std::vector<CheckResult> checks_integrator_order(const CheckOptions& opt);  // empirical convergence order
std::vector<CheckResult> checks_report_determinism(const CheckOptions& opt);

/// Every group above, in that order.
std::vector<CheckResult> run_all_checks(const CheckOptions& opt);

/// Deterministic uniform generator used by all randomized checks; identical
/// sequences on every platform for a given seed.
class CheckRng {
public:
    explicit CheckRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64();
    double uniform(double lo, double hi);
    double log_uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

} // namespace hgate
