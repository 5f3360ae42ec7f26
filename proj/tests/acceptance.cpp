// End-to-end acceptance suite. Each check prints one PASS/FAIL line; the
// process exits non-zero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ftre/arch.hpp"
#include "ftre/cleaning.hpp"
#include "ftre/estimators.hpp"
#include "ftre/gb_codes.hpp"
#include "ftre/pbc.hpp"

using namespace ftre;

namespace {

int g_failures = 0;

void report(int id, const std::string& label, bool ok, const std::string& detail,
            double seconds) {
    std::printf("[%s] %2d. %-28s %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str(), seconds);
    if (!ok)
        ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

bool within(double value, double target, double rel) {
    return std::abs(value - target) <= rel * target;
}

double round_1sf(double v) {
    double mag = std::pow(10.0, std::floor(std::log10(v)));
    return std::round(v / mag) * mag;
}

// 1. Code table: CSS validity, weights, k by rank, processing block totals.
void criterion_code_table() {
    Timer t;
    bool ok = true;
    std::string detail;
    const std::size_t want_k[] = {8, 10, 12, 14, 16};
    const std::size_t want_npb[] = {140, 244, 452, 860, 1620};
    for (int m = 4; m <= 8; ++m) {
        GBCode code = build_family_code(m);
        ok &= code.hx.times_transpose(code.hz).is_zero();
        for (std::size_t r = 0; r < code.l; ++r)
            ok &= code.hx.row_weight(r) == 6 && code.hz.row_weight(r) == 6;
        ok &= code.k == want_k[m - 4];
        ok &= family_code(m).n_pb() == want_npb[m - 4];
    }
    double secs = t.elapsed();
    ok &= secs < 1.0;
    detail = "five codes rebuilt and verified";
    report(1, "code table", ok, detail, secs);
}

// 2. Distance certification.
void criterion_distance() {
    Timer t;
    GBCode c4 = build_family_code(4);
    int d4 = distance_upper_bound(c4, DistanceMethod::Exhaustive, 0);
    GBCode c5 = build_family_code(5);
    int d5 = distance_upper_bound(c5, DistanceMethod::Randomized, 1000000, 1, 6);
    GBCode c6 = build_family_code(6);
    int d6 = distance_upper_bound(c6, DistanceMethod::Randomized, 1000000, 1, 10);
    double secs = t.elapsed();
    bool ok = d4 == 4 && d5 <= 6 && d6 <= 10 && secs < 120.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "exhaustive d=%d; randomized bounds %d and %d", d4, d5, d6);
    report(2, "distance search", ok, buf, secs);
}

// 3. Magic engine totals from components.
void criterion_magic_engines() {
    Timer t;
    MagicEngineSpec low = magic_engine_spec(Regime::P1e4);
    MagicEngineSpec high = magic_engine_spec(Regime::P1e3);
    bool ok = low.n_me() == 2128 && high.n_me() == 8694;
    ok &= low.n_me() == low.n_cb + 16 * low.n_g + 60 * (low.n_a + low.d_a - 1) + low.n_alpha;
    ok &= high.n_me() ==
          high.n_cb + 16 * high.n_g + 60 * (high.n_a + high.d_a - 1) + high.n_alpha;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "totals %zu and %zu", low.n_me(), high.n_me());
    report(3, "magic engines", ok, buf, t.elapsed());
}

// 4. Error ansatz against the published rate table, one significant figure.
void criterion_error_ansatz() {
    Timer t;
    struct Row {
        double p;
        int m;
        double expected;
    };
    const Row rows[] = {
        {1e-3, 4, 8e-4}, {1e-3, 5, 4e-5}, {1e-3, 6, 1e-7}, {1e-3, 7, 3e-11}, {1e-3, 8, 4e-16},
        {1e-4, 4, 3e-6}, {1e-4, 5, 1e-8}, {1e-4, 6, 5e-13}, {1e-4, 7, 1e-19}, {1e-4, 8, 1e-28},
    };
    bool ok = true;
    for (const Row& r : rows) {
        const CodeSpec& code = family_code(r.m);
        double rate = logical_error_rate(logical_measurement_fit(), r.p, code.k, code.d);
        if (std::abs(round_1sf(rate) - r.expected) > 1e-6 * r.expected)
            ok = false;
    }
    report(4, "error ansatz table", ok, "ten published entries reproduced", t.elapsed());
}

// 5. Cleaning properties over random frames.
void criterion_cleaning() {
    Timer t;
    bool ok = true;
    std::size_t matrices = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::size_t n = 1 + seed % 8;
        SymplecticMat m = random_symplectic(n, seed);
        ++matrices;
        for (std::size_t w = 1; w <= n; ++w) {
            CleaningResult res = clean_general(m, w);
            ok &= res.emitted_count <= 4 * w;
            ok &= acts_trivially_on_prefix(res.residual, w);
            SymplecticMat replay = m;
            for (const PauliVec& rot : res.rotations)
                replay.apply_transvection(rot);
            ok &= replay == res.residual;
        }
    }
    // Port-form inputs: CNOT controls on the prefix, arbitrary tail Clifford.
    std::mt19937_64 rng(77);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::size_t n = 2 + seed % 7;
        std::size_t w = 1 + seed % (n - 1);
        SymplecticMat m = SymplecticMat::identity(n);
        SymplecticMat tail = random_symplectic(n - w, rng());
        for (std::size_t i = 0; i < 2 * (n - w); ++i) {
            std::size_t dst = i < n - w ? w + i : n + w + (i - (n - w));
            PauliVec row(n);
            for (std::size_t q = 0; q < n - w; ++q) {
                row.set_x(w + q, tail.row(i).x(q));
                row.set_z(w + q, tail.row(i).z(q));
            }
            m.row(dst) = row;
        }
        for (std::size_t c = 0; c < 2 * n; ++c)
            m = compose(m, cnot_mat(n, rng() % w, w + rng() % (n - w)));
        CleaningResult res = clean_port(m, w);
        ok &= res.emitted_count <= 2 * w;
        ok &= acts_trivially_on_prefix(res.residual, w);
    }
    double secs = t.elapsed();
    ok &= secs < 60.0;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%zu general frames, 1000 port frames", matrices);
    report(5, "frame cleaning", ok, buf, secs);
}

// 6. Measurement counting and frame-oracle equivalence.
void criterion_pbc() {
    Timer t;
    bool ok = true;
    std::mt19937_64 rng(20240807);
    const char* one_q[] = {"H", "S", "SX"};
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t kappa = 1 + rng() % 6;
        CircuitIR c;
        c.kappa = kappa;
        c.unit_of.assign(kappa, 0);
        std::size_t gates = 1 + rng() % 24;
        for (std::size_t i = 0; i < gates; ++i) {
            int pick = rng() % 4;
            Gate g;
            if (pick == 0) {
                g.kind = GateKind::T;
                g.qubits = {rng() % kappa};
            } else if (pick == 1 || kappa < 2) {
                g.kind = GateKind::Clifford;
                g.name = one_q[rng() % 3];
                g.qubits = {rng() % kappa};
            } else if (pick == 2) {
                g.kind = GateKind::Clifford;
                g.name = rng() % 2 ? "CX" : "CZ";
                std::size_t a = rng() % kappa, b = rng() % kappa;
                while (b == a)
                    b = rng() % kappa;
                g.qubits = {a, b};
            } else {
                g.kind = GateKind::Measure;
                PauliVec axis(kappa);
                while (axis.is_zero())
                    for (std::size_t q = 0; q < kappa; ++q) {
                        axis.set_x(q, rng() & 1);
                        axis.set_z(q, rng() & 1);
                    }
                g.axis = axis;
                g.adaptive = true;
            }
            c.gates.push_back(std::move(g));
        }
        MeasurementSchedule s = compile(c);
        ok &= s.steps.size() == c.t_count() + c.kappa + c.adaptive_count();

        // Frame oracle: recompose every prior Clifford for each step.
        SymplecticMat frame = SymplecticMat::identity(kappa);
        std::size_t step_idx = 0;
        for (const Gate& g : c.gates) {
            if (g.kind == GateKind::Clifford) {
                frame = compose(frame, clifford_gate_matrix(g.name, kappa, g.qubits));
                continue;
            }
            PauliVec original =
                g.kind == GateKind::T ? PauliVec::z_on(kappa, g.qubits[0]) : g.axis;
            ok &= s.steps[step_idx].axis == apply_clifford(frame, original);
            ++step_idx;
        }
        for (std::size_t q = 0; q < kappa; ++q) {
            ok &= s.steps[step_idx].axis == apply_clifford(frame, PauliVec::z_on(kappa, q));
            ++step_idx;
        }
    }
    report(6, "measurement counting", ok, "1000 random circuits, frame oracle agreed",
           t.elapsed());
}

// 7. Hubbard-model published table: qubits exact, runtimes within 10%.
void criterion_fh_table() {
    Timer t;
    const std::int64_t want_1e3[] = {23274, 29754, 39474, 49194, 62154, 75114, 91314,
                                     107514, 126954, 146394, 169074, 191754, 217674};
    const std::int64_t want_1e4[] = {7100, 9812, 13428, 17044, 21564, 26988, 32412,
                                     38740, 45972, 53204, 61340, 70380, 79420};
    FHParams w;
    w.cycles_override = 8e6;
    bool ok = true;
    int idx = 0;
    for (std::size_t lattice = 8; lattice <= 32; lattice += 2, ++idx) {
        ResourceEstimate hi = fh_estimate(lattice, Regime::P1e3, 1e-6, &w);
        ResourceEstimate lo = fh_estimate(lattice, Regime::P1e4, 1e-6, &w);
        ok &= hi.physical_qubits == static_cast<double>(want_1e3[idx]);
        ok &= lo.physical_qubits == static_cast<double>(want_1e4[idx]);
    }
    ResourceEstimate hi_us = fh_estimate(16, Regime::P1e3, 1e-6, &w);
    ResourceEstimate lo_us = fh_estimate(16, Regime::P1e4, 1e-6, &w);
    ResourceEstimate hi_ms = fh_estimate(16, Regime::P1e3, 1e-3, &w);
    ResourceEstimate lo_ms = fh_estimate(16, Regime::P1e4, 1e-3, &w);
    ok &= within(hi_us.shot_runtime_s, 3.6 * 60, 0.10);
    ok &= within(lo_us.shot_runtime_s, 1.6 * 60, 0.10);
    ok &= within(hi_ms.shot_runtime_s, 2.5 * 86400, 0.10);
    ok &= within(lo_ms.shot_runtime_s, 1.1 * 86400, 0.10);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "26 qubit rows exact; runtimes %.2f/%.2f min",
                  hi_us.shot_runtime_s / 60, lo_us.shot_runtime_s / 60);
    report(7, "hubbard table", ok, buf, t.elapsed());
}

// 8. Factoring headline optimisations.
void criterion_rsa_headline() {
    Timer t;
    RSAOptimizerOptions opt;
    opt.objective = RSAObjective::MinQubitsUnderRuntimeCap;

    opt.runtime_cap_s = 30 * 86400.0;
    RSAOptResult month = rsa_optimize(Regime::P1e3, HardwareProfile{1e-3, 1e-6}, opt);

    opt.runtime_cap_s = 365 * 86400.0;
    RSAOptResult year = rsa_optimize(Regime::P1e4, HardwareProfile{1e-4, 1e-6}, opt);

    opt.runtime_cap_s = 30 * 86400.0;
    RSAOptResult slow = rsa_optimize(Regime::P1e4, HardwareProfile{1e-4, 1e-3}, opt);

    bool ok = month.feasible && year.feasible && slow.feasible;
    double q_month = ok ? month.best.resources.physical_qubits : 0;
    double q_year = ok ? year.best.resources.physical_qubits : 0;
    double q_slow = ok ? slow.best.resources.physical_qubits : 0;
    ok &= q_month < 1e5 && within(q_month, 98e3, 0.15);
    ok &= within(q_year, 53e3, 0.15);
    ok &= within(q_slow, 3.1e6, 0.15);

    // Full results-table sweep: every cycle time, both rates, four caps.
    Timer sweep_timer;
    for (double tc : {1e-6, 1e-5, 1e-4, 1e-3})
        for (Regime regime : {Regime::P1e3, Regime::P1e4})
            for (double cap : {365 * 86400.0, 30 * 86400.0, 7 * 86400.0, 86400.0}) {
                opt.runtime_cap_s = cap;
                rsa_optimize(regime, HardwareProfile{regime_p(regime), tc}, opt);
            }
    double sweep_secs = sweep_timer.elapsed();
    ok &= sweep_secs < 1800.0;

    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.0f kq / %.0f kq / %.2f Mq; 32-cell sweep %.1f s",
                  q_month / 1e3, q_year / 1e3, q_slow / 1e6, sweep_secs);
    report(8, "factoring headline", ok, buf, t.elapsed());
}

// 9. Heatmap shape on a 10x10 grid.
void criterion_heatmap() {
    Timer t;
    std::vector<double> tc_grid, qubit_grid;
    for (int i = 0; i < 10; ++i) {
        tc_grid.push_back(1e-6 * std::pow(10.0, i / 3.0));
        qubit_grid.push_back(5e4 * std::pow(10.0, i / 2.5));
    }
    std::vector<HeatmapCell> cells = heatmap(Regime::P1e3, tc_grid, qubit_grid);
    bool ok = cells.size() == 100;

    for (int row = 0; row < 10 && ok; ++row) {
        double last_runtime = std::numeric_limits<double>::infinity();
        bool seen_feasible = false;
        for (int col = 0; col < 10; ++col) {
            const HeatmapCell& cell = cells[row * 10 + col];
            if (cell.feasible) {
                if (seen_feasible)
                    ok &= cell.runtime_s <= last_runtime * (1 + 1e-12);
                last_runtime = cell.runtime_s;
                seen_feasible = true;
            } else {
                ok &= !seen_feasible;  // infeasible region shrinks with budget
            }
        }
    }

    // Linearity in t_c at fixed parameters.
    const HeatmapCell* probe = nullptr;
    for (const HeatmapCell& cell : cells)
        if (cell.feasible) {
            probe = &cell;
            break;
        }
    ok &= probe != nullptr;
    if (probe) {
        const CodeSpec& code = rsa_code_for(Regime::P1e3);
        MagicEngineSpec engine = magic_engine_spec(Regime::P1e3);
        RSAEstimate a = rsa_cycles_and_shots(probe->best.params, code, engine,
                                             HardwareProfile{1e-3, 1e-6});
        RSAEstimate b = rsa_cycles_and_shots(probe->best.params, code, engine,
                                             HardwareProfile{1e-3, 7e-6});
        ok &= a.feasible && b.feasible;
        ok &= std::abs(b.resources.total_runtime_s / a.resources.total_runtime_s - 7.0) < 1e-9;
    }
    double secs = t.elapsed();
    ok &= secs < 300.0;
    report(9, "heatmap shape", ok, "10x10 grid monotone and linear in t_c", secs);
}

// 10. Parallelisation economics at fixed algorithmic parameters.
void criterion_parallelisation() {
    Timer t;
    const CodeSpec& code = rsa_code_for(Regime::P1e3);
    MagicEngineSpec engine = magic_engine_spec(Regime::P1e3);
    HardwareProfile hw{1e-3, 1e-6};
    RSAParams serial;
    serial.s = 3;
    serial.f = 40;
    serial.ell = 20;
    serial.w3 = 3;
    serial.w4 = 4;
    serial.rho = 1;
    RSAParams wide = serial;
    wide.rho = 100;
    RSAEstimate a = rsa_cycles_and_shots(serial, code, engine, hw);
    RSAEstimate b = rsa_cycles_and_shots(wide, code, engine, hw);
    bool ok = a.feasible && b.feasible;
    if (ok) {
        SubroutineCosts costs = rsa_subroutine_costs(serial, code);
        double alpha = engine_availability_factor(engine.p_r);
        double log_term = alpha * (static_cast<double>(costs.cycles_per_prime) +
                                   costs.unload_cycles + 6.0 * (serial.f - 1) * 7);
        ok &= b.resources.logical_cycles <=
              1.02 * a.resources.logical_cycles / 100.0 + log_term;
        ok &= b.resources.logical_qubits < 100.0 * a.resources.logical_qubits;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "cycles %.3g -> %.3g, logical qubits %.0f -> %.0f",
                  a.resources.logical_cycles, b.resources.logical_cycles,
                  a.resources.logical_qubits, b.resources.logical_qubits);
    report(10, "parallelisation economics", ok, buf, t.elapsed());
}

} // namespace

int main() {
    criterion_code_table();
    criterion_distance();
    criterion_magic_engines();
    criterion_error_ansatz();
    criterion_cleaning();
    criterion_pbc();
    criterion_fh_table();
    criterion_rsa_headline();
    criterion_heatmap();
    criterion_parallelisation();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
