#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftre/arch.hpp"
#include "ftre/gb_codes.hpp"

namespace ftre {

struct ResourceEstimate {
    double logical_qubits = 0;
    double logical_cycles = 0;    // measurement steps incl. T injections
    double t_count = 0;
    double physical_qubits = 0;
    double shot_runtime_s = 0;    // d_t * t_c * cycles, engine-adjusted
    double expected_shots = 1;
    double total_runtime_s = 0;
    double shot_success = 1;
};

/*
 * Hubbard-model ground-state energy estimation via plaquette Trotterisation,
 * without Hamming-weight phasing: 2L^2 + 2 logical qubits, with the target
 * precision taken relative to the total lattice energy (0.5% of E0 L^2).
 */
struct FHParams {
    std::size_t lattice_side = 16;  // L, even
    double coupling = 4.0;          // u: 4 or 8
    double energy_per_site = 1.02;  // hartrees; 1.02 at u=4, 0.74 at u=8
    double trotter_bound = 0.0;     // W; required unless cycles_override is set
    double budget_split = 0.0;      // x in (0,1); 0 means optimise over a grid
    double cycles_override = 0.0;   // direct total for the cycle count
};

// Total logical cycles (T injections plus logical measurements).
double fh_cycles(const FHParams& params);
// T count alone (smaller per-rotation constant, no synthesis retries).
double fh_t_count(const FHParams& params);

// Per-shot estimate at a given regime; L even. The 1e-3 regime runs on the
// d=24 code, the 1e-4 regime on the d=10 code.
ResourceEstimate fh_estimate(std::size_t lattice_side, Regime regime, double t_c,
                             const FHParams* workload = nullptr);

/*
 * Factoring cost model: residue-number-system modular exponentiation with
 * rho working registers sharing pipelined input registers, compiled onto
 * processing units plus one memory.
 */
struct RSAParams {
    int s = 1;            // lattice trade-off parameter, 1..16
    int f = 24;           // accumulator truncation, 24..59
    int ell = 18;         // prime bit length, 18..25
    int w3 = 2;           // loop 3 window, 2..6
    int w4 = 2;           // loop 4 window, 2..6
    std::int64_t rho = 1; // parallel working registers, 1..|P|

    std::int64_t m = 0;   // input register size; 0 = derive from s
    int n_bits = 2048;
};

struct RSADerived {
    std::int64_t m = 0;
    int len_m = 0;
    int w1 = 0;
    std::int64_t primes = 0;     // |P|
    std::int64_t kappa = 0;      // working-register logical qubits
    bool feasible = false;
    std::string infeasible_reason;
};

struct SubroutineRow {
    std::string name;
    std::uint64_t t_count = 0;
    std::uint64_t logical_cycles = 0;
};

struct SubroutineCosts {
    std::vector<SubroutineRow> rows;
    std::uint64_t t_per_prime = 0;        // sum of the T-count column
    std::uint64_t cycles_per_prime = 0;   // sum of the logical-cycles column
    std::uint64_t unload_cycles = 0;      // one lookup+addition pass over the input
};

// Default input-register size for a given s (overridable via RSAParams::m).
std::int64_t rsa_default_m(int n_bits, int s);

RSADerived rsa_derive(const RSAParams& params, const CodeSpec& code);
SubroutineCosts rsa_subroutine_costs(const RSAParams& params, const CodeSpec& code);
std::int64_t rsa_kappa(int f, int ell, int len_m);

struct RSAQubits {
    std::int64_t working = 0;      // rho units with engines
    std::int64_t memory = 0;       // storage blocks and ports
    std::int64_t total = 0;
    std::int64_t logical = 0;      // N
    std::int64_t blocks_per_unit = 0;
};

RSAQubits rsa_qubits(const RSAParams& params, const CodeSpec& code,
                     const MagicEngineSpec& engine);

struct RSAEstimate {
    RSAParams params;
    RSADerived derived;
    ResourceEstimate resources;
    bool feasible = false;
    std::string infeasible_reason;
};

// Full per-shot and expected-total cost at one parameter point. A null fit
// uses the built-in logical-measurement constants.
RSAEstimate rsa_cycles_and_shots(const RSAParams& params, const CodeSpec& code,
                                 const MagicEngineSpec& engine, const HardwareProfile& hw,
                                 FitBound bound = FitBound::Central,
                                 const ErrorFit* fit = nullptr);

enum class RSAObjective { MinQubitsUnderRuntimeCap, MinRuntimeUnderQubitCap };

enum class RhoSweep {
    Ladder,    // powers of two plus |P|; deterministic and budget-monotone
    Refined,   // ladder plus a local integer scan around the best point
    Full       // ladder search, then full rho enumeration for the best combo
};

struct RSAOptimizerOptions {
    RSAObjective objective = RSAObjective::MinQubitsUnderRuntimeCap;
    double runtime_cap_s = 0;        // MinQubits objective
    double qubit_cap = 0;            // MinRuntime objective
    RhoSweep sweep = RhoSweep::Ladder;
    FitBound bound = FitBound::Central;
    const ErrorFit* fit = nullptr;   // null = built-in logical-measurement fit
    int workers = 0;                 // 0 = hardware concurrency
};

struct RSAOptResult {
    bool feasible = false;
    RSAEstimate best;
};

// Exhaustive grid search over (s, f, ell, w3, w4) in the supported ranges and
// a rho sweep. Regime fixes the code: 1e-3 runs on d=24, 1e-4 on d=16.
RSAOptResult rsa_optimize(Regime regime, const HardwareProfile& hw,
                          const RSAOptimizerOptions& options);

const CodeSpec& rsa_code_for(Regime regime);
const CodeSpec& fh_code_for(Regime regime);

struct HeatmapCell {
    double t_c = 0;
    double qubit_budget = 0;
    bool feasible = false;
    double runtime_s = 0;
    RSAEstimate best;
};

// One optimisation per (t_c, budget) grid cell at fixed p.
std::vector<HeatmapCell> heatmap(Regime regime, const std::vector<double>& t_c_grid,
                                 const std::vector<double>& qubit_grid, int workers = 0);

} // namespace ftre
