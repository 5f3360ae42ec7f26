#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <set>

#include "ftre/arch.hpp"

using namespace ftre;

namespace {

// One-significant-figure rounding, for comparison against published tables.
double round_1sf(double v) {
    double mag = std::pow(10.0, std::floor(std::log10(v)));
    return std::round(v / mag) * mag;
}

} // namespace

TEST_CASE("hardware profile ties reaction time to the code cycle") {
    HardwareProfile hw{1e-3, 1e-6};
    CHECK(hw.t_r() == doctest::Approx(1e-5));
    CHECK(hw.logical_cycle_time(26) == doctest::Approx(26e-6));

    // d_t below ten code cycles is reaction limited: true for the two
    // smallest codes, false from the d=10 member onward.
    CHECK_FALSE(reaction_compatible(family_code(4).dt()));
    CHECK_FALSE(reaction_compatible(family_code(5).dt()));
    for (int m = 6; m <= 8; ++m)
        CHECK(reaction_compatible(family_code(m).dt()));
}

TEST_CASE("fit constants carry the published central values") {
    CHECK(memory_fit().a == doctest::Approx(5.9));
    CHECK(memory_fit().b == doctest::Approx(0.0179));
    CHECK(memory_fit().c == doctest::Approx(0.50));
    CHECK(logical_measurement_fit().a == doctest::Approx(6.2));
    CHECK(logical_measurement_fit().b == doctest::Approx(0.0158));
    CHECK(logical_measurement_fit().c == doctest::Approx(0.47));
}

TEST_CASE("the ansatz reproduces the published per-qubit error rates") {
    // Rows: p = 1e-3 then 1e-4; columns d = 4, 6, 10, 16, 24 with the
    // catalogue k for each code. Values quoted to one significant figure.
    struct Row {
        double p;
        int m;
        double expected;
    };
    const Row rows[] = {
        {1e-3, 4, 8e-4}, {1e-3, 5, 4e-5}, {1e-3, 6, 1e-7}, {1e-3, 7, 3e-11}, {1e-3, 8, 4e-16},
        {1e-4, 4, 3e-6}, {1e-4, 5, 1e-8}, {1e-4, 6, 5e-13}, {1e-4, 7, 1e-19}, {1e-4, 8, 1e-28},
    };
    for (const Row& r : rows) {
        const CodeSpec& code = family_code(r.m);
        double rate = logical_error_rate(logical_measurement_fit(), r.p, code.k, code.d);
        CHECK(round_1sf(rate) == doctest::Approx(r.expected).epsilon(1e-9));
    }
}

TEST_CASE("ansatz scaling and validity") {
    const ErrorFit& fit = logical_measurement_fit();
    double base = logical_error_rate(fit, 1e-3, 8, 16);
    CHECK(logical_error_rate(fit, 1e-3, 16, 16) == doctest::Approx(base / 2));
    CHECK(logical_error_rate(fit, 1e-3, 8, 18) < base);
    CHECK(logical_error_rate(fit, 2e-3, 8, 16) > base);
    CHECK_THROWS_AS(logical_error_rate(fit, 0.02, 8, 16), std::invalid_argument);

    // Interval endpoints bracket the central value.
    double lo = logical_error_rate(fit, 1e-3, 8, 16, FitBound::Lower);
    double hi = logical_error_rate(fit, 1e-3, 8, 16, FitBound::Upper);
    CHECK(lo < base);
    CHECK(hi > base);
}

TEST_CASE("magic engine totals recompute from components") {
    MagicEngineSpec low = magic_engine_spec(Regime::P1e4);
    CHECK(low.n_me() == 2128);
    CHECK(low.n_me() == 252 + 16 * 31 + 60 * (19 + 5 - 1) + 0);
    CHECK(low.p_r == doctest::Approx(0.0015));

    MagicEngineSpec high = magic_engine_spec(Regime::P1e3);
    CHECK(high.n_me() == 8694);
    CHECK(high.n_me() == 1020 + 16 * 99 + 60 * (81 + 9 - 1) + 750);
    CHECK(high.p_r == doctest::Approx(0.06));

    CHECK(low.p_t == doctest::Approx(1e-11));
    CHECK(high.p_t == doctest::Approx(1e-11));
}

TEST_CASE("engine availability factor") {
    CHECK(engine_availability_factor(0.0) == doctest::Approx(1.0));
    CHECK(engine_availability_factor(0.06) == doctest::Approx(2.0 / 3.0 / 0.94 + 1.0 / 3.0));
    CHECK_THROWS_AS(engine_availability_factor(1.0), std::invalid_argument);
}

TEST_CASE("memory shift schedule cycles every block through every position") {
    MemoryShiftSchedule one = memory_shift_schedule(1);
    CHECK(one.rounds() == 1);
    CHECK(one.position_after(0, 0) == 0);

    MemoryShiftSchedule s = memory_shift_schedule(3);
    CHECK(s.position_after(0, 0) == 1);           // one round moves block 0 forward
    for (std::size_t b = 0; b < 3; ++b)
        CHECK(s.position_after(2, b) == b);       // three rounds come back around
    for (std::size_t b = 0; b < 3; ++b) {
        std::set<std::size_t> visited{b};
        for (std::size_t r = 0; r < 3; ++r) {
            std::size_t before = r == 0 ? b : s.position_after(r - 1, b);
            std::size_t after = s.position_after(r, b);
            CHECK((after + 3 - before) % 3 <= 1);  // at most one position per round
            visited.insert(after);
        }
        CHECK(visited.size() == 3);                // every position reached
    }
}

TEST_CASE("cyclic shift swap pattern touches every qubit once per phase") {
    auto ops = cyclic_shift_swaps(3, 4);
    CHECK(ops.size() == 2 * 3 * 4);
    std::size_t cross = 0, local = 0;
    for (const auto& op : ops) {
        if (op.local) {
            ++local;
            CHECK(op.block_a == op.block_b);
        } else {
            ++cross;
            CHECK(op.block_b == (op.block_a + 1) % 3);
        }
    }
    CHECK(cross == 12);
    CHECK(local == 12);
}

TEST_CASE("unit cost") {
    UnitCost c = unit_cost(family_code(8), 9);
    CHECK(c.physical == 14580);
    CHECK(c.logical == 144);
    UnitCost one = unit_cost(family_code(7), 1);
    CHECK(one.physical == 860);
    CHECK(one.logical == 14);
    CHECK_THROWS_AS(unit_cost(family_code(8), 0), std::invalid_argument);
}

TEST_CASE("memory cost matches the per-port accounting") {
    const CodeSpec& d16 = family_code(7);
    CHECK(d16.port_qubits() == 88);
    CHECK(memory_cost(MemorySpec{&d16, 1, 1}) == 596);       // 508 + 88
    CHECK(memory_cost(MemorySpec{&d16, 1, 0}) == 508);

    const CodeSpec& d24 = family_code(8);
    CHECK(d24.port_qubits() == 150);
    CHECK(memory_cost(MemorySpec{&d24, 2, 3}) == 2490);      // 1020*2 + 150*3
}
