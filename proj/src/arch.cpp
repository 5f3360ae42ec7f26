#include "ftre/arch.hpp"

#include <cmath>
#include <stdexcept>

namespace ftre {

bool reaction_compatible(int dt) {
    return dt >= 10;
}

const ErrorFit& memory_fit() {
    static const ErrorFit fit{"memory", 5.9, 0.0179, 0.50,
                              5.9 - 1.4, 5.9 + 1.8,
                              0.0179 - 0.0006, 0.0179 + 0.0006,
                              0.50 - 0.09, 0.50 + 0.09};
    return fit;
}

const ErrorFit& logical_measurement_fit() {
    static const ErrorFit fit{"logical-measurement", 6.2, 0.0158, 0.47,
                              6.2 - 1.4, 6.2 + 1.9,
                              0.0158 - 0.0007, 0.0158 + 0.0007,
                              0.47 - 0.09, 0.47 + 0.09};
    return fit;
}

double logical_error_rate(const ErrorFit& fit, double p, std::size_t k, int d, FitBound bound) {
    double a = fit.a, b = fit.b, c = fit.c;
    if (bound == FitBound::Upper) {         // endpoints that maximise the rate
        a = fit.a_hi;
        b = fit.b_lo;
        c = fit.c_lo;
    } else if (bound == FitBound::Lower) {
        a = fit.a_lo;
        b = fit.b_hi;
        c = fit.c_hi;
    }
    if (k == 0)
        throw std::invalid_argument("k must be positive");
    if (p <= 0.0)
        throw std::invalid_argument("p must be positive");
    if (p >= b)
        throw std::invalid_argument("ansatz is only valid below threshold (p < B)");
    return (a / static_cast<double>(k)) * std::pow(p / b, d / 2.0 + c);
}

double regime_p(Regime r) {
    return r == Regime::P1e3 ? 1e-3 : 1e-4;
}

Regime regime_from_p(double p) {
    if (p == 1e-3)
        return Regime::P1e3;
    if (p == 1e-4)
        return Regime::P1e4;
    throw std::invalid_argument("no component catalogue for this physical error rate");
}

std::string regime_name(Regime r) {
    return r == Regime::P1e3 ? "1e-3" : "1e-4";
}

MagicEngineSpec magic_engine_spec(Regime regime) {
    // Output infidelity follows the cubic distillation law at p_in = 1e-4 and
    // is held at the 1e-11 working target in both regimes.
    if (regime == Regime::P1e4) {
        // d_e = 10 host block; colour-code injection ancillas.
        return MagicEngineSpec{regime, 252, 31, 19, 5, 0, 7, 15.0 * 1e-4, 1e-11, 1e-4};
    }
    // d_e = 24 host block; cultivated surface-code ancillas dominate rejects.
    return MagicEngineSpec{regime, 1020, 99, 81, 9, 750, 13, 0.06, 1e-11, 1e-4};
}

double engine_availability_factor(double p_r) {
    if (p_r < 0.0 || p_r >= 1.0)
        throw std::invalid_argument("reject rate must lie in [0, 1)");
    return (2.0 / 3.0) / (1.0 - p_r) + 1.0 / 3.0;
}

std::size_t MemoryShiftSchedule::position_after(std::size_t round, std::size_t block) const {
    if (round >= nu || block >= nu)
        throw std::out_of_range("round or block out of range");
    return (block + round + 1) % nu;
}

MemoryShiftSchedule memory_shift_schedule(std::size_t nu) {
    if (nu < 1)
        throw std::invalid_argument("need at least one memory block");
    return MemoryShiftSchedule{nu};
}

std::vector<SwapOp> cyclic_shift_swaps(std::size_t nu, std::size_t block_size) {
    std::vector<SwapOp> ops;
    ops.reserve(2 * nu * block_size);
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = 0; j < block_size; ++j)
            ops.push_back({i, j, (i + 1) % nu, j, false});
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = 0; j < block_size; ++j)
            ops.push_back({i, j, i, j, true});
    return ops;
}

UnitCost unit_cost(const CodeSpec& code, std::size_t beta) {
    if (beta < 1)
        throw std::invalid_argument("a processing unit needs at least one block");
    return UnitCost{beta * code.n_pb(), beta * code.k};
}

std::size_t memory_cost(const MemorySpec& spec) {
    if (!spec.code || spec.nu < 1)
        throw std::invalid_argument("memory spec needs a code and at least one block");
    if (spec.code->k % spec.window() != 0)
        throw std::invalid_argument("window size must divide the block logical count");
    return 2 * spec.nu * spec.code->n + spec.rho * spec.code->port_qubits();
}

} // namespace ftre
