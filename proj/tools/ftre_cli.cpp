// ftre: resource estimation for QLDPC-based fault-tolerant architectures.
//
// Subcommands: codes, clean, compile, estimate-fh, estimate-rsa, heatmap.
// Outputs are deterministic: stable key order, floats at six significant
// digits, identical bytes for identical inputs.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ftre/arch.hpp"
#include "ftre/cleaning.hpp"
#include "ftre/estimators.hpp"
#include "ftre/gb_codes.hpp"
#include "ftre/io_util.hpp"
#include "ftre/pbc.hpp"

using json = nlohmann::ordered_json;
using namespace ftre;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInfeasible = 2;

double num(double v) {
    return sig6(v);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

// Durations accept a plain number of seconds or a unit suffix:
// s, min, h, d, w, mo (30 d), y (365 d).
double parse_duration(const std::string& text) {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    std::string unit = text.substr(pos);
    if (unit.empty() || unit == "s")
        return v;
    if (unit == "min")
        return v * 60;
    if (unit == "h")
        return v * 3600;
    if (unit == "d")
        return v * 86400;
    if (unit == "w")
        return v * 7 * 86400;
    if (unit == "mo")
        return v * 30 * 86400;
    if (unit == "y")
        return v * 365 * 86400;
    throw std::invalid_argument("unknown duration unit '" + unit + "'");
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stod(item));
    if (out.empty())
        throw std::invalid_argument("empty grid");
    return out;
}

Regime parse_regime(const std::string& text) {
    if (text == "1e-3" || text == "1e-03" || text == "0.001")
        return Regime::P1e3;
    if (text == "1e-4" || text == "1e-04" || text == "0.0001")
        return Regime::P1e4;
    throw std::invalid_argument("regime must be 1e-3 or 1e-4");
}

FitBound parse_bound(const std::string& text) {
    if (text == "central")
        return FitBound::Central;
    if (text == "lo")
        return FitBound::Lower;
    if (text == "hi")
        return FitBound::Upper;
    throw std::invalid_argument("fit bound must be central, lo or hi");
}

RhoSweep parse_sweep(const std::string& text) {
    if (text == "ladder")
        return RhoSweep::Ladder;
    if (text == "refined")
        return RhoSweep::Refined;
    if (text == "full")
        return RhoSweep::Full;
    throw std::invalid_argument("sweep must be ladder, refined or full");
}

// Defaults shared across subcommands; a JSON config file may override them
// and explicit flags override the config.
struct RunConfig {
    std::string regime = "1e-3";
    double tc = 1e-6;
    std::uint64_t seed = 1;
    int workers = 0;
    std::string fit_bounds = "central";
    double trotter_w = 0;
    double budget_split = 0;
    double t_override = 0;
    long long m_override = 0;
    double fit_a = 0, fit_b = 0, fit_c = 0;  // 0 means built-in constant

    // Logical-measurement ansatz with any config overrides applied. When a
    // constant is overridden its confidence interval collapses to the value.
    ErrorFit effective_fit() const {
        ErrorFit fit = logical_measurement_fit();
        if (fit_a > 0) {
            fit.a = fit.a_lo = fit.a_hi = fit_a;
        }
        if (fit_b > 0) {
            fit.b = fit.b_lo = fit.b_hi = fit_b;
        }
        if (fit_c > 0) {
            fit.c = fit.c_lo = fit.c_hi = fit_c;
        }
        return fit;
    }
};

void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    json j = json::parse(in);
    for (const auto& [key, value] : j.items()) {
        if (key == "regime")
            cfg.regime = value.get<std::string>();
        else if (key == "tc")
            cfg.tc = value.get<double>();
        else if (key == "seed")
            cfg.seed = value.get<std::uint64_t>();
        else if (key == "workers")
            cfg.workers = value.get<int>();
        else if (key == "fit_bounds")
            cfg.fit_bounds = value.get<std::string>();
        else if (key == "W")
            cfg.trotter_w = value.get<double>();
        else if (key == "x")
            cfg.budget_split = value.get<double>();
        else if (key == "t_override")
            cfg.t_override = value.get<double>();
        else if (key == "m")
            cfg.m_override = value.get<long long>();
        else if (key == "fit_a")
            cfg.fit_a = value.get<double>();
        else if (key == "fit_b")
            cfg.fit_b = value.get<double>();
        else if (key == "fit_c")
            cfg.fit_c = value.get<double>();
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

json estimate_json(const ResourceEstimate& e) {
    json j;
    j["logical_qubits"] = num(e.logical_qubits);
    j["logical_cycles"] = num(e.logical_cycles);
    j["t_count"] = num(e.t_count);
    j["physical_qubits"] = num(e.physical_qubits);
    j["shot_runtime_s"] = num(e.shot_runtime_s);
    j["shot_runtime"] = humanize_seconds(e.shot_runtime_s);
    j["expected_shots"] = num(e.expected_shots);
    j["total_runtime_s"] = num(e.total_runtime_s);
    j["total_runtime"] = humanize_seconds(e.total_runtime_s);
    j["shot_success"] = num(e.shot_success);
    return j;
}

json rsa_point_json(const RSAEstimate& est) {
    json j;
    j["params"] = {{"s", est.params.s},     {"f", est.params.f},   {"ell", est.params.ell},
                   {"w3", est.params.w3},   {"w4", est.params.w4}, {"rho", est.params.rho},
                   {"m", est.derived.m},    {"len_m", est.derived.len_m},
                   {"w1", est.derived.w1},  {"primes", est.derived.primes},
                   {"kappa", est.derived.kappa}};
    j["estimate"] = estimate_json(est.resources);
    return j;
}

int cmd_codes(const std::string& distance_mode, std::uint64_t budget, bool with_ler,
              std::uint64_t seed, const std::string& output) {
    std::ostringstream csv;
    csv << "m,n,k,d_claimed,d_verified_or_bound,n_cb,n_g,n_b,n_pb";
    if (with_ler)
        csv << ",p_l_1e-3,p_l_1e-4";
    csv << "\n";
    for (int m = 4; m <= 8; ++m) {
        GBCode code = build_family_code(m);
        const CodeSpec& spec = family_code(m);
        int d_col = spec.d;
        if (distance_mode == "fast") {
            if (m == 4)
                d_col = distance_upper_bound(code, DistanceMethod::Exhaustive, 0);
            else
                d_col = distance_upper_bound(code, DistanceMethod::Randomized, budget, seed,
                                             spec.d);
        }
        csv << m << "," << code.n << "," << code.k << "," << spec.d << "," << d_col << ","
            << spec.costs.n_cb << "," << spec.costs.n_g << "," << spec.costs.n_b << ","
            << spec.n_pb();
        if (with_ler) {
            csv << "," << format_sig6(logical_error_rate(logical_measurement_fit(), 1e-3,
                                                         spec.k, spec.d))
                << "," << format_sig6(logical_error_rate(logical_measurement_fit(), 1e-4,
                                                         spec.k, spec.d));
        }
        csv << "\n";
    }
    write_output(output, csv.str());
    return kExitOk;
}

int cmd_clean(const std::string& matrix_path, std::size_t w, bool port, std::size_t n_check,
              const std::string& output) {
    std::ifstream in(matrix_path);
    if (!in)
        throw std::runtime_error("cannot open matrix file: " + matrix_path);
    SymplecticMat m = parse_matrix(in);
    if (n_check && m.qubits() != n_check)
        throw std::invalid_argument("--n says " + std::to_string(n_check) +
                                    " qubits but the matrix has " +
                                    std::to_string(m.qubits()));
    CleaningResult res = port ? clean_port(m, w) : clean_general(m, w);

    json j;
    j["n"] = m.qubits();
    j["w"] = w;
    j["mode"] = port ? "port" : "general";
    j["bound"] = (port ? 2 : 4) * w;
    j["emitted_count"] = res.emitted_count;
    json rot = json::array();
    for (const PauliVec& r : res.rotations)
        rot.push_back(r.str());
    j["rotations"] = rot;
    json rows = json::array();
    for (std::size_t i = 0; i < 2 * m.qubits(); ++i) {
        std::string row;
        for (std::size_t c = 0; c < 2 * m.qubits(); ++c)
            row.push_back(res.residual.entry(i, c) ? '1' : '0');
        rows.push_back(row);
    }
    j["residual"] = rows;
    j["residual_trivial_on_prefix"] = acts_trivially_on_prefix(res.residual, w);
    write_output(output, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_compile(const std::string& circuit_path, double p_r, const std::string& output) {
    std::ifstream in(circuit_path);
    if (!in)
        throw std::runtime_error("cannot open circuit file: " + circuit_path);
    CircuitIR circuit = parse_circuit(in);
    MeasurementSchedule s = compile(circuit);

    json j;
    j["kappa"] = circuit.kappa;
    j["tau"] = circuit.t_count();
    j["adaptive_measurements"] = circuit.adaptive_count();
    json steps = json::array();
    for (const Step& st : s.steps) {
        const char* kind = st.kind == StepKind::TInjection  ? "t-injection"
                           : st.kind == StepKind::Cleaning  ? "cleaning"
                           : st.kind == StepKind::Final     ? "final"
                                                            : "algorithmic";
        steps.push_back({{"cycle", st.cycle}, {"kind", kind}, {"axis", st.axis.str()},
                         {"units", st.units}});
    }
    j["steps"] = steps;
    json per_unit = json::object();
    for (const auto& [unit, cycles] : s.per_unit_cycles)
        per_unit[std::to_string(unit)] = cycles;
    j["per_unit_cycles"] = per_unit;
    j["makespan"] = s.makespan;
    j["expected_cycles"] = num(expected_cycles(s, p_r));
    j["reject_rate"] = num(p_r);
    write_output(output, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_estimate_fh(std::size_t lattice, const RunConfig& cfg, bool table,
                    double coupling, double e0_flag, const std::string& output) {
    double e0 = e0_flag > 0 ? e0_flag : (coupling == 8.0 ? 0.74 : 1.02);
    FHParams workload;
    workload.coupling = coupling;
    workload.energy_per_site = e0;
    workload.trotter_bound = cfg.trotter_w;
    workload.budget_split = cfg.budget_split;
    workload.cycles_override = cfg.t_override;
    if (workload.cycles_override <= 0 && workload.trotter_bound <= 0)
        throw std::invalid_argument("estimate-fh needs --t-override or --W");

    if (table) {
        std::ostringstream csv;
        csv << "L,physical_qubits_1e-3,physical_qubits_1e-4,shot_runtime_1e-3_s,"
               "shot_runtime_1e-3,shot_runtime_1e-4_s,shot_runtime_1e-4\n";
        for (std::size_t side = 8; side <= 32; side += 2) {
            ResourceEstimate hi = fh_estimate(side, Regime::P1e3, cfg.tc, &workload);
            ResourceEstimate lo = fh_estimate(side, Regime::P1e4, cfg.tc, &workload);
            csv << side << "," << format_sig6(hi.physical_qubits) << ","
                << format_sig6(lo.physical_qubits) << "," << format_sig6(hi.shot_runtime_s)
                << "," << humanize_seconds(hi.shot_runtime_s) << ","
                << format_sig6(lo.shot_runtime_s) << ","
                << humanize_seconds(lo.shot_runtime_s) << "\n";
        }
        write_output(output, csv.str());
        return kExitOk;
    }

    Regime regime = parse_regime(cfg.regime);
    ResourceEstimate est = fh_estimate(lattice, regime, cfg.tc, &workload);
    const CodeSpec& code = fh_code_for(regime);
    json j;
    j["command"] = "estimate-fh";
    j["inputs"] = {{"L", lattice},       {"regime", regime_name(regime)},
                   {"t_c", num(cfg.tc)}, {"u", num(coupling)},
                   {"e0", num(e0)},      {"t_override", num(cfg.t_override)},
                   {"W", num(cfg.trotter_w)}};
    j["code"] = {{"family_m", code.m}, {"d", code.d}, {"d_t", code.dt()}, {"k", code.k}};
    j["estimate"] = estimate_json(est);
    write_output(output, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_rsa_results_table(const RunConfig& cfg, const std::string& sweep,
                          const std::string& output) {
    // Minimum qubits across the standard grid of cycle times, error rates and
    // runtime caps.
    const double tcs[] = {1e-6, 1e-5, 1e-4, 1e-3};
    const std::pair<const char*, double> caps[] = {
        {"1y", 365 * 86400.0}, {"1mo", 30 * 86400.0}, {"1w", 7 * 86400.0}, {"1d", 86400.0}};
    ErrorFit fit = cfg.effective_fit();
    std::ostringstream csv;
    csv << "t_c_s,p,runtime_cap,min_physical_qubits,runtime_s,s,f,ell,w3,w4,rho,m\n";
    for (double tc : tcs) {
        for (Regime regime : {Regime::P1e3, Regime::P1e4}) {
            for (const auto& [cap_name, cap_s] : caps) {
                RSAOptimizerOptions opt;
                opt.objective = RSAObjective::MinQubitsUnderRuntimeCap;
                opt.runtime_cap_s = cap_s;
                opt.sweep = parse_sweep(sweep);
                opt.bound = parse_bound(cfg.fit_bounds);
                opt.fit = &fit;
                opt.workers = cfg.workers;
                RSAOptResult r = rsa_optimize(regime, HardwareProfile{regime_p(regime), tc},
                                              opt);
                csv << format_sig6(tc) << "," << regime_name(regime) << "," << cap_name
                    << ",";
                if (!r.feasible) {
                    csv << "infeasible,,,,,,,,\n";
                    continue;
                }
                const RSAEstimate& b = r.best;
                csv << format_sig6(b.resources.physical_qubits) << ","
                    << format_sig6(b.resources.total_runtime_s) << "," << b.params.s << ","
                    << b.params.f << "," << b.params.ell << "," << b.params.w3 << ","
                    << b.params.w4 << "," << b.params.rho << "," << b.derived.m << "\n";
            }
        }
    }
    write_output(output, csv.str());
    return kExitOk;
}

int cmd_estimate_rsa(const RunConfig& cfg, const std::string& objective,
                     const std::string& runtime_cap, double qubit_cap,
                     const std::string& sweep, int s, int f, int ell, int w3, int w4,
                     long long rho, bool strict, const std::string& output) {
    Regime regime = parse_regime(cfg.regime);
    HardwareProfile hw{regime_p(regime), cfg.tc};
    FitBound bound = parse_bound(cfg.fit_bounds);
    const CodeSpec& code = rsa_code_for(regime);
    MagicEngineSpec engine = magic_engine_spec(regime);
    ErrorFit fit = cfg.effective_fit();

    json j;
    j["command"] = "estimate-rsa";
    j["inputs"] = {{"regime", regime_name(regime)}, {"t_c", num(cfg.tc)},
                   {"fit_bounds", cfg.fit_bounds}};
    j["code"] = {{"family_m", code.m}, {"d", code.d}, {"d_t", code.dt()}, {"k", code.k}};

    bool feasible = false;
    if (s > 0) {
        // Direct evaluation at one parameter point.
        RSAParams params;
        params.s = s;
        params.f = f;
        params.ell = ell;
        params.w3 = w3;
        params.w4 = w4;
        params.rho = rho;
        params.m = cfg.m_override;
        RSAEstimate est = rsa_cycles_and_shots(params, code, engine, hw, bound, &fit);
        feasible = est.feasible;
        j["inputs"]["mode"] = "direct";
        if (est.feasible) {
            j["result"] = rsa_point_json(est);
        } else {
            j["infeasible_reason"] = est.infeasible_reason;
        }
    } else {
        RSAOptimizerOptions opt;
        opt.sweep = parse_sweep(sweep);
        opt.bound = bound;
        opt.fit = &fit;
        opt.workers = cfg.workers;
        if (objective == "min-qubits") {
            opt.objective = RSAObjective::MinQubitsUnderRuntimeCap;
            if (runtime_cap.empty())
                throw std::invalid_argument("min-qubits needs --runtime-cap");
            opt.runtime_cap_s = parse_duration(runtime_cap);
            j["inputs"]["objective"] = "min-qubits";
            j["inputs"]["runtime_cap_s"] = num(opt.runtime_cap_s);
        } else if (objective == "min-runtime") {
            opt.objective = RSAObjective::MinRuntimeUnderQubitCap;
            if (qubit_cap <= 0)
                throw std::invalid_argument("min-runtime needs --qubit-cap");
            opt.qubit_cap = qubit_cap;
            j["inputs"]["objective"] = "min-runtime";
            j["inputs"]["qubit_cap"] = num(qubit_cap);
        } else {
            throw std::invalid_argument("objective must be min-qubits or min-runtime");
        }
        j["inputs"]["sweep"] = sweep;
        RSAOptResult r = rsa_optimize(regime, hw, opt);
        feasible = r.feasible;
        if (r.feasible) {
            j["result"] = rsa_point_json(r.best);
        } else {
            j["infeasible_reason"] = "no parameter point satisfies the cap";
        }
    }
    j["feasible"] = feasible;
    write_output(output, j.dump(2) + "\n");
    return feasible || !strict ? kExitOk : kExitInfeasible;
}

int cmd_heatmap(const RunConfig& cfg, const std::string& tc_grid_text,
                const std::string& qubit_grid_text, bool strict, const std::string& output) {
    Regime regime = parse_regime(cfg.regime);
    std::vector<double> tc_grid = parse_grid(tc_grid_text);
    std::vector<double> qubit_grid = parse_grid(qubit_grid_text);
    std::vector<HeatmapCell> cells = heatmap(regime, tc_grid, qubit_grid, cfg.workers);

    std::ostringstream csv;
    csv << "t_c_s,qubit_budget,feasible,runtime_s,runtime,s,f,ell,w3,w4,rho,m,"
           "physical_qubits,expected_shots\n";
    bool any_feasible = false;
    for (const HeatmapCell& cell : cells) {
        csv << format_sig6(cell.t_c) << "," << format_sig6(cell.qubit_budget) << ",";
        if (!cell.feasible) {
            csv << "infeasible,,,,,,,,,,\n";
            continue;
        }
        any_feasible = true;
        const RSAEstimate& b = cell.best;
        csv << "yes," << format_sig6(cell.runtime_s) << ","
            << humanize_seconds(cell.runtime_s) << "," << b.params.s << "," << b.params.f
            << "," << b.params.ell << "," << b.params.w3 << "," << b.params.w4 << ","
            << b.params.rho << "," << b.derived.m << ","
            << format_sig6(b.resources.physical_qubits) << ","
            << format_sig6(b.resources.expected_shots) << "\n";
    }
    write_output(output, csv.str());
    return any_feasible || !strict ? kExitOk : kExitInfeasible;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resource estimation for a QLDPC-based fault-tolerant architecture"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string output;
    bool strict = false;
    app.add_option("--config", config_path, "JSON config file with defaults");
    app.add_option("-o,--output", output, "Write output to this file instead of stdout");
    app.add_flag("--strict", strict, "Exit with status 2 on infeasible results");

    // codes
    auto* codes = app.add_subcommand("codes", "Print the verified code parameter table");
    std::string distance_mode = "none";
    std::uint64_t budget = 20000;
    bool with_ler = false;
    codes->add_option("--distance", distance_mode,
                      "none (catalogue values) or fast (verify where cheap)")
        ->check(CLI::IsMember({"none", "fast"}));
    codes->add_option("--budget", budget, "Randomized distance search iterations");
    codes->add_flag("--ler", with_ler, "Append per-qubit logical error rate columns");

    // clean
    auto* clean = app.add_subcommand("clean", "Clean a Clifford frame off a qubit prefix");
    std::string matrix_path;
    std::size_t clean_w = 1, clean_n = 0;
    bool clean_port_mode = false;
    clean->add_option("--matrix", matrix_path, "Symplectic matrix file (rows of 0/1)")
        ->required();
    clean->add_option("--w", clean_w, "Number of leading qubits to clean")->required();
    clean->add_option("--n", clean_n, "Expected qubit count (cross-checked)");
    clean->add_flag("--port", clean_port_mode, "Use the 2w port-form procedure");

    // compile
    auto* compile_cmd = app.add_subcommand("compile", "Compile a circuit to a measurement schedule");
    std::string circuit_path;
    double compile_pr = 0.0;
    compile_cmd->add_option("--circuit", circuit_path, "Circuit file (one gate per line)")
        ->required();
    compile_cmd->add_option("--pr", compile_pr, "Magic-state reject rate for expected cycles");

    // estimate-fh
    auto* fh = app.add_subcommand("estimate-fh", "Hubbard-model ground-state estimation cost");
    std::size_t lattice = 16;
    bool fh_table = false;
    double coupling = 4.0, e0_flag = 0.0;
    fh->add_option("--L", lattice, "Even lattice side");
    fh->add_flag("--table", fh_table, "Emit the full L = 8..32 sweep as CSV");
    fh->add_option("--u", coupling, "Coupling strength (4 or 8)");
    fh->add_option("--e0", e0_flag, "Energy per site in hartrees (overrides --u default)");
    std::string fh_regime, fh_tc, fh_toverride, fh_w, fh_x;
    fh->add_option("--regime", fh_regime, "Physical error rate: 1e-3 or 1e-4");
    fh->add_option("--tc", fh_tc, "Code cycle time in seconds");
    fh->add_option("--t-override", fh_toverride, "Logical cycle count to use directly");
    fh->add_option("--W", fh_w, "Trotter error bound");
    fh->add_option("--x", fh_x, "Error budget split in (0,1); omit to optimise");

    // estimate-rsa
    auto* rsa = app.add_subcommand("estimate-rsa", "Factoring cost: optimise or evaluate");
    std::string objective = "min-qubits", runtime_cap, sweep = "ladder";
    bool rsa_table = false;
    double qubit_cap = 0;
    int rsa_s = 0, rsa_f = 24, rsa_ell = 18, rsa_w3 = 2, rsa_w4 = 2;
    long long rsa_rho = 1;
    std::string rsa_regime, rsa_tc, rsa_m;
    rsa->add_flag("--results-table", rsa_table,
                  "Emit the minimum-qubit table over cycle times, rates and caps");
    rsa->add_option("--objective", objective, "min-qubits or min-runtime");
    rsa->add_option("--runtime-cap", runtime_cap, "Total runtime cap (e.g. 30d, 1y, 3600)");
    rsa->add_option("--qubit-cap", qubit_cap, "Physical qubit budget");
    rsa->add_option("--sweep", sweep, "rho sweep: ladder, refined or full");
    rsa->add_option("--s", rsa_s, "Evaluate directly at this s (enables direct mode)");
    rsa->add_option("--f", rsa_f, "Accumulator truncation");
    rsa->add_option("--l", rsa_ell, "Prime bit length");
    rsa->add_option("--w3", rsa_w3, "Loop 3 window");
    rsa->add_option("--w4", rsa_w4, "Loop 4 window");
    rsa->add_option("--rho", rsa_rho, "Parallel working registers");
    rsa->add_option("--m", rsa_m, "Input register size override");
    rsa->add_option("--regime", rsa_regime, "Physical error rate: 1e-3 or 1e-4");
    rsa->add_option("--tc", rsa_tc, "Code cycle time in seconds");

    // heatmap
    auto* hm = app.add_subcommand("heatmap", "Optimal runtime over a qubit/cycle-time grid");
    std::string tc_grid = "1e-6,1e-5,1e-4,1e-3";
    std::string qubit_grid;
    std::string hm_regime, hm_tc;
    hm->add_option("--tc-grid", tc_grid, "Comma-separated code cycle times");
    hm->add_option("--qubit-grid", qubit_grid, "Comma-separated qubit budgets")->required();
    hm->add_option("--regime", hm_regime, "Physical error rate: 1e-3 or 1e-4");

    // Shared tuning flags mapped into the config.
    std::string seed_text, workers_text, bounds_text;
    app.add_option("--seed", seed_text, "Seed for randomized routines");
    app.add_option("--workers", workers_text, "Worker threads (or env FTRE_WORKERS)");
    app.add_option("--fit-bounds", bounds_text, "central, lo or hi ansatz constants");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty())
            load_config(config_path, cfg);
        if (!seed_text.empty())
            cfg.seed = std::stoull(seed_text);
        if (!workers_text.empty())
            cfg.workers = std::stoi(workers_text);
        if (!bounds_text.empty())
            cfg.fit_bounds = bounds_text;

        if (codes->parsed())
            return cmd_codes(distance_mode, budget, with_ler, cfg.seed, output);
        if (clean->parsed())
            return cmd_clean(matrix_path, clean_w, clean_port_mode, clean_n, output);
        if (compile_cmd->parsed())
            return cmd_compile(circuit_path, compile_pr, output);
        if (fh->parsed()) {
            if (!fh_regime.empty())
                cfg.regime = fh_regime;
            if (!fh_tc.empty())
                cfg.tc = std::stod(fh_tc);
            if (!fh_toverride.empty())
                cfg.t_override = std::stod(fh_toverride);
            if (!fh_w.empty())
                cfg.trotter_w = std::stod(fh_w);
            if (!fh_x.empty())
                cfg.budget_split = std::stod(fh_x);
            return cmd_estimate_fh(lattice, cfg, fh_table, coupling, e0_flag, output);
        }
        if (rsa->parsed()) {
            if (!rsa_regime.empty())
                cfg.regime = rsa_regime;
            if (!rsa_tc.empty())
                cfg.tc = std::stod(rsa_tc);
            if (!rsa_m.empty())
                cfg.m_override = std::stoll(rsa_m);
            if (rsa_table)
                return cmd_rsa_results_table(cfg, sweep, output);
            return cmd_estimate_rsa(cfg, objective, runtime_cap, qubit_cap, sweep, rsa_s,
                                    rsa_f, rsa_ell, rsa_w3, rsa_w4, rsa_rho, strict, output);
        }
        if (hm->parsed()) {
            if (!hm_regime.empty())
                cfg.regime = hm_regime;
            return cmd_heatmap(cfg, tc_grid, qubit_grid, strict, output);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
