#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ftre/gb_codes.hpp"

namespace ftre {

/*
 * Hardware assumptions: physical error rate and code cycle time. The
 * reaction time is fixed at ten code cycles, which keeps the architecture
 * measurement-rate limited rather than reaction limited whenever the logical
 * cycle spans at least ten code cycles.
 */
struct HardwareProfile {
    double p = 1e-3;
    double t_c = 1e-6;

    double t_r() const { return 10.0 * t_c; }
    double logical_cycle_time(int dt) const { return dt * t_c; }
};

// True when a code with d_t code cycles per logical cycle is not reaction
// limited under the fixed t_r = 10 t_c rule.
bool reaction_compatible(int dt);

// Sub-threshold logical failure ansatz constants with 95% confidence bounds.
struct ErrorFit {
    std::string experiment;
    double a, b, c;
    double a_lo, a_hi, b_lo, b_hi, c_lo, c_hi;
};

enum class FitBound { Central, Lower, Upper };

const ErrorFit& memory_fit();
const ErrorFit& logical_measurement_fit();

// (A/k) (p/B)^(d/2 + C): failure rate per logical observable per logical
// cycle. Rejects p >= B (above threshold the ansatz is meaningless).
// FitBound::Upper/Lower evaluate at the confidence-interval endpoints that
// maximise/minimise the rate.
double logical_error_rate(const ErrorFit& fit, double p, std::size_t k, int d,
                          FitBound bound = FitBound::Central);

enum class Regime { P1e3, P1e4 };
double regime_p(Regime r);
Regime regime_from_p(double p);
std::string regime_name(Regime r);

/*
 * Magic engine built from a GB code block plus sixteen gadgets, fifteen
 * bridged ancilla-code pairs feeding noisy T states, and (in the 1e-3 regime)
 * cultivation ancillas. Supplies one distilled T state per logical cycle with
 * reject probability p_r and output infidelity p_t.
 */
struct MagicEngineSpec {
    Regime regime;
    std::size_t n_cb, n_g, n_a;
    int d_a;
    std::size_t n_alpha;
    int x_rounds;        // post-selection measurement rounds; documentation only
    double p_r;
    double p_t;
    double p_in;

    std::size_t n_me() const { return n_cb + 16 * n_g + 60 * (n_a + d_a - 1) + n_alpha; }
};

MagicEngineSpec magic_engine_spec(Regime regime);

// Cycle availability factor when two thirds of logical cycles consume a T
// state and rejected states stall the unit: 2/3 * (1-p_r)^-1 + 1/3.
double engine_availability_factor(double p_r);

/*
 * Memory rearrangement plan: nu rounds, each cyclically shifting every code
 * block one position. Blocks return to their start after nu rounds and no
 * block moves more than one position per round.
 */
struct MemoryShiftSchedule {
    std::size_t nu = 0;
    // Position of block b after `round` + 1 shifts.
    std::size_t position_after(std::size_t round, std::size_t block) const;
    std::size_t rounds() const { return nu; }
};

MemoryShiftSchedule memory_shift_schedule(std::size_t nu);

// One round of physical SWAPs: data qubit j of block i with ancilla qubit j
// of block i+1 mod nu, then the local data/ancilla swap inside each block.
struct SwapOp {
    std::size_t block_a, qubit_a;   // data side
    std::size_t block_b, qubit_b;   // ancilla side
    bool local;                     // second phase, within one block
};
std::vector<SwapOp> cyclic_shift_swaps(std::size_t nu, std::size_t block_size);

struct UnitCost {
    std::size_t physical = 0;
    std::size_t logical = 0;
};

// beta bridged processing blocks: beta * n_pb physical, beta * k logical.
UnitCost unit_cost(const CodeSpec& code, std::size_t beta);

struct MemorySpec {
    const CodeSpec* code = nullptr;
    std::size_t nu = 0;     // storage code blocks
    std::size_t rho = 0;    // ports
    std::size_t window() const { return code->k / 2; }
};

// 2 nu n data+ancilla qubits plus one gadget and bridge per port.
std::size_t memory_cost(const MemorySpec& spec);

} // namespace ftre
