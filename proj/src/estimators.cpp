#include "ftre/estimators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace ftre {

namespace {

double ceil_div(std::int64_t a, std::int64_t b) {
    return static_cast<double>((a + b - 1) / b);
}

std::int64_t ceil_div_i(std::int64_t a, std::int64_t b) {
    return (a + b - 1) / b;
}

int ceil_log2(std::int64_t v) {
    if (v <= 1)
        return 0;
    return std::bit_width(static_cast<std::uint64_t>(v - 1));
}

} // namespace

const CodeSpec& fh_code_for(Regime regime) {
    return regime == Regime::P1e3 ? family_code(8) : family_code(6);
}

const CodeSpec& rsa_code_for(Regime regime) {
    return regime == Regime::P1e3 ? family_code(8) : family_code(7);
}

namespace {

// Trotter-step count times per-step measurement cost. The per-rotation
// constant is 9.2 for the T count alone and 11.2 when the two expected
// repeat-until-success attempts per rotation are included.
double fh_total(const FHParams& p, double per_rotation_constant) {
    if (p.cycles_override > 0)
        return p.cycles_override;
    if (p.lattice_side == 0 || p.lattice_side % 2 != 0)
        throw std::invalid_argument("lattice side must be even and positive");
    if (p.trotter_bound <= 0)
        throw std::invalid_argument("Trotter error bound W must be positive");

    double l2 = static_cast<double>(p.lattice_side) * static_cast<double>(p.lattice_side);
    double epsilon = 0.005 * p.energy_per_site * l2;   // relative to total lattice energy
    double n_t = 12.0 * l2;
    double n_r = 4.0 * l2;

    auto eval = [&](double x) {
        double steps = 6.203 * std::sqrt(p.trotter_bound /
                                         std::pow(epsilon * (1.0 - x), 3.0));
        double log_arg = n_r * std::sqrt(3.0 * p.trotter_bound) /
                         (x * std::sqrt(1.0 - x) * std::pow(epsilon, 1.5));
        double per_rot = 1.15 * std::log2(log_arg) + per_rotation_constant;
        if (per_rot <= 0)  // synthesis cost cannot vanish; split is unusable
            return std::numeric_limits<double>::infinity();
        return steps * (n_r * per_rot + n_t);
    };

    if (p.budget_split > 0) {
        if (p.budget_split >= 1.0)
            throw std::invalid_argument("budget split x must lie in (0, 1)");
        double v = eval(p.budget_split);
        if (!std::isfinite(v))
            throw std::invalid_argument("no valid cycle count at this budget split");
        return v;
    }
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i < 200; ++i)
        best = std::min(best, eval(i / 200.0));
    if (!std::isfinite(best))
        throw std::invalid_argument("Trotter bound too small for the synthesis model");
    return best;
}

} // namespace

double fh_cycles(const FHParams& params) {
    return fh_total(params, 11.2);
}

double fh_t_count(const FHParams& params) {
    return fh_total(params, 9.2);
}

ResourceEstimate fh_estimate(std::size_t lattice_side, Regime regime, double t_c,
                             const FHParams* workload) {
    if (lattice_side == 0 || lattice_side % 2 != 0)
        throw std::invalid_argument("lattice side must be even and positive");
    const CodeSpec& code = fh_code_for(regime);
    MagicEngineSpec engine = magic_engine_spec(regime);

    FHParams params;
    if (workload)
        params = *workload;
    params.lattice_side = lattice_side;

    double n_logical = 2.0 * lattice_side * lattice_side + 2.0;
    std::int64_t blocks = ceil_div_i(static_cast<std::int64_t>(n_logical),
                                     static_cast<std::int64_t>(code.k));
    double physical = static_cast<double>(blocks) * code.n_pb() + engine.n_me();

    double cycles = fh_cycles(params);
    // With an externally supplied cycle count the T count is only bounded by it.
    double t_count = params.cycles_override > 0 ? params.cycles_override : fh_t_count(params);

    ResourceEstimate est;
    est.logical_qubits = n_logical;
    est.logical_cycles = cycles;
    est.t_count = t_count;
    est.physical_qubits = physical;
    est.shot_runtime_s = code.dt() * t_c * cycles * engine_availability_factor(engine.p_r);
    est.expected_shots = 1;
    est.total_runtime_s = est.shot_runtime_s;
    est.shot_success = 1;
    return est;
}

std::int64_t rsa_default_m(int n_bits, int s) {
    return (n_bits + 1) / 2 + (n_bits + 2 * s - 1) / (2 * s);
}

std::int64_t rsa_kappa(int f, int ell, int len_m) {
    return f + 2 * ell + len_m + 2 * std::max<std::int64_t>(f, ell + len_m) + 1;
}

RSADerived rsa_derive(const RSAParams& params, const CodeSpec& code) {
    RSADerived d;
    d.m = params.m > 0 ? params.m : rsa_default_m(params.n_bits, params.s);
    d.len_m = static_cast<int>(std::floor(std::log2(static_cast<double>(d.m)))) + 1;
    d.w1 = static_cast<int>(code.k / 2);
    d.primes = ceil_div_i(static_cast<std::int64_t>(params.n_bits) * d.m,
                          static_cast<std::int64_t>(params.ell) * d.w1);
    d.kappa = rsa_kappa(params.f, params.ell, d.len_m);

    auto reject = [&](const std::string& why) {
        d.feasible = false;
        d.infeasible_reason = why;
        return d;
    };
    if (params.s < 1 || params.s > 16)
        return reject("s outside 1..16");
    if (params.f < 24 || params.f > 59)
        return reject("f outside 24..59");
    if (params.ell < 18 || params.ell > 25)
        return reject("prime bit length outside 18..25");
    if (params.w3 < 2 || params.w3 > 6)
        return reject("w3 outside 2..6");
    if (params.w4 < 2 || params.w4 > 6)
        return reject("w4 outside 2..6");
    if (params.ell < d.w1)
        return reject("prime bit length below the loop 1 window");
    if (params.rho < 1 || params.rho > d.primes)
        return reject("rho outside 1..|P|");
    // Enough distinct primes of this bit length must exist.
    double available = std::ldexp(1.0, params.ell - 1) / (params.ell * std::log(2.0));
    if (available < static_cast<double>(d.primes))
        return reject("not enough primes of this bit length for the residue system");
    d.feasible = true;
    return d;
}

namespace {

struct CostTotals {
    std::uint64_t tau1 = 0;
    std::uint64_t sigma = 0;
    std::uint64_t upsilon = 0;
};

// Allocation-free totals for the optimizer hot path; rsa_subroutine_costs
// rebuilds the named rows from the same arithmetic.
template <typename RowSink>
CostTotals cost_rows(const RSAParams& params, const RSADerived& d, RowSink&& sink) {
    using u64 = std::uint64_t;
    u64 mw = static_cast<u64>(ceil_div_i(d.m, d.w1));
    u64 q3 = static_cast<u64>(ceil_div_i(params.ell, params.w3));
    u64 q4 = static_cast<u64>(ceil_div_i(params.ell, params.w4));
    u64 ell = params.ell, f = params.f, lm = d.len_m;
    u64 w1 = d.w1, w3 = params.w3, w4 = params.w4;
    u64 pw1 = u64(1) << w1;
    u64 g3 = (u64(1) << ((w3 + 1) / 2)) + (u64(1) << (w3 / 2)) - w3 - 2;
    u64 g4 = (u64(1) << ((w4 + 1) / 2)) + (u64(1) << (w4 / 2)) - w4 - 2;

    CostTotals totals;
    auto add = [&](const char* name, u64 t, u64 lc) {
        totals.tau1 += t;
        totals.sigma += lc;
        sink(name, t, lc);
    };
    add("lookup-loop1", 4 * mw * (pw1 - w1 - 1), mw * (6 * (pw1 - w1 - 1) + 2 * w1));
    add("addition-loop1", 4 * mw * (ell + lm - 1), 6 * mw * (ell + lm - 1));
    add("addition-loop2", 8 * lm * (2 * ell + lm - 1), 12 * lm * (2 * ell + lm - 1));
    u64 i3 = 4 * q3 * q3 - 8 * q3 + 1;
    u64 e3 = (u64(1) << (2 * w3)) - 2 * w3 - 1;
    add("lookup-loop3", 4 * i3 * e3, 6 * i3 * e3);
    add("addition-loop3", 28 * (q3 * q3 - 2 * q3) * (ell - 1), 42 * (ell - 1) * (q3 * q3 - 2 * q3));
    u64 e4 = (u64(1) << w4) - w4 - 1;
    add("lookup-loop4", 6 * q4 * e4, 9 * q4 * e4);
    add("addition-loop4", 10 * (f - 1) * q4, 15 * (f - 1) * q4);
    add("phaseup-loop4", 4 * q4 * g4, 6 * q4 * g4);
    add("phaseup-loop3.2", 6 * (q3 * q3 - 2 * q3) * g3, 9 * (q3 * q3 - 2 * q3) * g3);
    u64 p31 = (u64(1) << (w3 + 1)) - 2 * w3 - 2;
    add("phaseup-loop3.1", 4 * p31, 6 * p31);

    // Uncompute pass over the input register: one loop 1 lookup and addition.
    totals.upsilon = mw * (6 * (pw1 - w1 + ell + lm - 2) + 2 * w1);
    return totals;
}

CostTotals cost_totals(const RSAParams& params, const RSADerived& d) {
    return cost_rows(params, d, [](const char*, std::uint64_t, std::uint64_t) {});
}

} // namespace

SubroutineCosts rsa_subroutine_costs(const RSAParams& params, const CodeSpec& code) {
    if (params.w3 < 2 || params.w4 < 2 || params.ell < 1 || params.f < 1)
        throw std::invalid_argument("window sizes and register lengths must be positive");
    RSADerived d = rsa_derive(params, code);
    SubroutineCosts c;
    CostTotals totals = cost_rows(params, d,
                                  [&](const char* name, std::uint64_t t, std::uint64_t lc) {
                                      c.rows.push_back({name, t, lc});
                                  });
    c.t_per_prime = totals.tau1;
    c.cycles_per_prime = totals.sigma;
    c.unload_cycles = totals.upsilon;
    return c;
}

RSAQubits rsa_qubits(const RSAParams& params, const CodeSpec& code,
                     const MagicEngineSpec& engine) {
    RSADerived d = rsa_derive(params, code);
    RSAQubits q;
    q.blocks_per_unit = ceil_div_i(d.kappa, static_cast<std::int64_t>(code.k));
    std::int64_t mw = ceil_div_i(d.m, d.w1);
    std::int64_t memories = ceil_div_i(params.rho, mw);
    std::int64_t nu = ceil_div_i(d.m, static_cast<std::int64_t>(code.k));
    q.working = params.rho * (q.blocks_per_unit * static_cast<std::int64_t>(code.n_pb()) +
                              static_cast<std::int64_t>(engine.n_me()));
    q.memory = 2 * static_cast<std::int64_t>(code.n) * memories * nu +
               params.rho * static_cast<std::int64_t>(code.port_qubits());
    q.total = q.working + q.memory;
    q.logical = memories * d.m + params.rho * d.kappa;
    return q;
}

RSAEstimate rsa_cycles_and_shots(const RSAParams& params, const CodeSpec& code,
                                 const MagicEngineSpec& engine, const HardwareProfile& hw,
                                 FitBound bound, const ErrorFit* fit) {
    RSAEstimate out;
    out.params = params;
    out.derived = rsa_derive(params, code);
    if (!out.derived.feasible) {
        out.infeasible_reason = out.derived.infeasible_reason;
        return out;
    }
    SubroutineCosts costs = rsa_subroutine_costs(params, code);
    RSAQubits qubits = rsa_qubits(params, code, engine);

    double sigma_cycles = static_cast<double>(costs.cycles_per_prime);
    double tau1 = static_cast<double>(costs.t_per_prime);
    double upsilon = static_cast<double>(costs.unload_cycles);
    double reduction = 6.0 * (params.f - 1) * ceil_log2(params.rho);

    double t_prime = ceil_div(out.derived.primes, params.rho) * sigma_cycles +
                     upsilon + reduction;
    double availability = engine_availability_factor(engine.p_r);
    double cycles = availability * t_prime;
    double t_count = static_cast<double>(out.derived.primes) * tau1 +
                     (2.0 / 3.0) * upsilon + 4.0 * (params.f - 1) * ceil_log2(params.rho);

    double p_l = logical_error_rate(fit ? *fit : logical_measurement_fit(), hw.p, code.k,
                                    code.d, bound);
    double n_logical = static_cast<double>(qubits.logical);
    double p_s = std::exp(n_logical * cycles * std::log1p(-p_l) +
                          t_count * std::log1p(-engine.p_t));

    double trunc = 1.0 - 2.0 * params.n_bits *
                             std::sqrt((params.s + 2.0) /
                                       (std::ldexp(1.0, params.f + 1) * params.s * out.derived.w1));
    double denom = 0.99 * p_s * trunc;
    if (denom <= 0) {
        out.infeasible_reason = "shot-count denominator is not positive";
        return out;
    }
    double shots = (params.s + 1.0) / denom;
    double shot_runtime = code.dt() * hw.t_c * cycles;

    out.feasible = true;
    out.resources.logical_qubits = n_logical;
    out.resources.logical_cycles = cycles;
    out.resources.t_count = t_count;
    out.resources.physical_qubits = static_cast<double>(qubits.total);
    out.resources.shot_runtime_s = shot_runtime;
    out.resources.expected_shots = shots;
    out.resources.total_runtime_s = shots * shot_runtime;
    out.resources.shot_success = p_s;
    return out;
}

namespace {

/*
 * Everything about one (s, f, ell, w3, w4) grid point that does not depend
 * on rho, reduced to the few numbers the rho sweep needs.
 */
struct ComboCtx {
    RSAParams params;
    std::int64_t primes = 0;
    std::int64_t m = 0, kappa = 0, mw = 0, nu = 0;
    double sigma_cycles = 0, tau1 = 0, upsilon = 0;
    double unit_phys = 0, block_phys = 0, port = 0;
    double trunc = 0;
    double log1m_pl = 0, log1m_pt = 0;
    double availability = 0, dt_tc = 0;
    bool ok = false;
};

ComboCtx make_ctx(const RSAParams& base, const CodeSpec& code, const MagicEngineSpec& engine,
                  const HardwareProfile& hw, double p_l) {
    ComboCtx ctx;
    ctx.params = base;
    RSADerived d = rsa_derive(base, code);
    if (!d.feasible)
        return ctx;
    CostTotals totals = cost_totals(base, d);
    ctx.primes = d.primes;
    ctx.m = d.m;
    ctx.kappa = d.kappa;
    ctx.mw = ceil_div_i(d.m, d.w1);
    ctx.nu = ceil_div_i(d.m, static_cast<std::int64_t>(code.k));
    ctx.sigma_cycles = static_cast<double>(totals.sigma);
    ctx.tau1 = static_cast<double>(totals.tau1);
    ctx.upsilon = static_cast<double>(totals.upsilon);
    std::int64_t blocks = ceil_div_i(d.kappa, static_cast<std::int64_t>(code.k));
    ctx.unit_phys = static_cast<double>(blocks) * code.n_pb() + engine.n_me();
    ctx.block_phys = 2.0 * code.n;
    ctx.port = static_cast<double>(code.port_qubits());
    ctx.trunc = 1.0 - 2.0 * base.n_bits *
                          std::sqrt((base.s + 2.0) /
                                    (std::ldexp(1.0, base.f + 1) * base.s * d.w1));
    ctx.log1m_pl = std::log1p(-p_l);
    ctx.log1m_pt = std::log1p(-engine.p_t);
    ctx.availability = engine_availability_factor(engine.p_r);
    ctx.dt_tc = code.dt() * hw.t_c;
    ctx.ok = ctx.trunc > 0;
    return ctx;
}

struct PointEval {
    double qubits = 0;
    double runtime = 0;
};

PointEval eval_rho(const ComboCtx& ctx, std::int64_t rho) {
    PointEval e;
    int cl2 = ceil_log2(rho);
    double t_prime = ceil_div(ctx.primes, rho) * ctx.sigma_cycles + ctx.upsilon +
                     6.0 * (ctx.params.f - 1) * cl2;
    double cycles = ctx.availability * t_prime;
    double t_count = static_cast<double>(ctx.primes) * ctx.tau1 + (2.0 / 3.0) * ctx.upsilon +
                     4.0 * (ctx.params.f - 1) * cl2;
    std::int64_t memories = ceil_div_i(rho, ctx.mw);
    double n_logical = static_cast<double>(memories) * ctx.m + static_cast<double>(rho) * ctx.kappa;
    double p_s = std::exp(n_logical * cycles * ctx.log1m_pl + t_count * ctx.log1m_pt);
    double denom = 0.99 * p_s * ctx.trunc;
    e.qubits = static_cast<double>(rho) * ctx.unit_phys +
               ctx.block_phys * memories * ctx.nu + static_cast<double>(rho) * ctx.port;
    e.runtime = denom > 0 ? (ctx.params.s + 1.0) / denom * ctx.dt_tc * cycles
                          : std::numeric_limits<double>::infinity();
    return e;
}

struct Candidate {
    bool valid = false;
    double objective = 0;   // qubits or runtime depending on mode
    RSAParams params;       // with rho filled in

    bool better_than(const Candidate& o) const {
        if (!o.valid)
            return valid;
        if (!valid)
            return false;
        if (objective != o.objective)
            return objective < o.objective;
        auto key = [](const RSAParams& p) {
            return std::tuple(p.s, p.f, p.ell, p.w3, p.w4, p.rho);
        };
        return key(params) < key(o.params);
    }
};

std::vector<std::int64_t> rho_ladder(std::int64_t primes) {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 1; r < primes; r *= 2)
        out.push_back(r);
    out.push_back(primes);
    return out;
}

// Smallest-qubit point meeting the runtime cap; qubit cost grows with rho, so
// the smallest feasible rho wins within one combo.
void search_min_qubits(const ComboCtx& ctx, double cap_s, RhoSweep sweep, Candidate& best) {
    std::vector<std::int64_t> ladder = rho_ladder(ctx.primes);
    std::int64_t found = -1, prev = 0;
    for (std::int64_t rho : ladder) {
        PointEval e = eval_rho(ctx, rho);
        if (e.runtime <= cap_s) {
            found = rho;
            break;
        }
        prev = rho;
    }
    if (found < 0)
        return;
    if (sweep != RhoSweep::Ladder) {
        for (std::int64_t rho = prev + 1; rho < found; ++rho) {
            if (eval_rho(ctx, rho).runtime <= cap_s) {
                found = rho;
                break;
            }
        }
    }
    PointEval e = eval_rho(ctx, found);
    Candidate cand{true, e.qubits, ctx.params};
    cand.params.rho = found;
    cand.params.m = ctx.m;
    if (cand.better_than(best))
        best = cand;
}

// Fastest point within the qubit budget.
void search_min_runtime(const ComboCtx& ctx, double budget, RhoSweep sweep, Candidate& best) {
    std::vector<std::int64_t> candidates = rho_ladder(ctx.primes);
    if (sweep != RhoSweep::Ladder) {
        // Largest rho the budget admits (qubits are monotone in rho).
        std::int64_t lo = 1, hi = ctx.primes;
        if (eval_rho(ctx, 1).qubits <= budget) {
            while (lo < hi) {
                std::int64_t mid = lo + (hi - lo + 1) / 2;
                if (eval_rho(ctx, mid).qubits <= budget)
                    lo = mid;
                else
                    hi = mid - 1;
            }
            candidates.push_back(lo);
        }
    }
    Candidate local;
    for (std::int64_t rho : candidates) {
        PointEval e = eval_rho(ctx, rho);
        if (e.qubits > budget || std::isinf(e.runtime))
            continue;
        Candidate cand{true, e.runtime, ctx.params};
        cand.params.rho = rho;
        cand.params.m = ctx.m;
        if (cand.better_than(local))
            local = cand;
    }
    if (local.valid && sweep != RhoSweep::Ladder) {
        std::int64_t centre = local.params.rho;
        std::int64_t lo = std::max<std::int64_t>(1, centre / 2);
        std::int64_t hi = std::min<std::int64_t>(ctx.primes, centre * 2);
        std::int64_t step = std::max<std::int64_t>(1, (hi - lo) / 4096);
        for (std::int64_t rho = lo; rho <= hi; rho += step) {
            PointEval e = eval_rho(ctx, rho);
            if (e.qubits > budget || std::isinf(e.runtime))
                continue;
            Candidate cand{true, e.runtime, ctx.params};
            cand.params.rho = rho;
            cand.params.m = ctx.m;
            if (cand.better_than(local))
                local = cand;
        }
    }
    if (local.valid && local.better_than(best))
        best = local;
}

int resolve_workers(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("FTRE_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

} // namespace

RSAOptResult rsa_optimize(Regime regime, const HardwareProfile& hw,
                          const RSAOptimizerOptions& options) {
    const CodeSpec& code = rsa_code_for(regime);
    MagicEngineSpec engine = magic_engine_spec(regime);
    double p_l = logical_error_rate(options.fit ? *options.fit : logical_measurement_fit(),
                                    hw.p, code.k, code.d, options.bound);

    struct Task {
        int s, f;
    };
    std::vector<Task> tasks;
    for (int s = 1; s <= 16; ++s)
        for (int f = 24; f <= 59; ++f)
            tasks.push_back({s, f});

    auto run_task = [&](const Task& task, Candidate& best) {
        for (int ell = 18; ell <= 25; ++ell) {
            for (int w3 = 2; w3 <= 6; ++w3) {
                for (int w4 = 2; w4 <= 6; ++w4) {
                    RSAParams base;
                    base.s = task.s;
                    base.f = task.f;
                    base.ell = ell;
                    base.w3 = w3;
                    base.w4 = w4;
                    base.rho = 1;
                    ComboCtx ctx = make_ctx(base, code, engine, hw, p_l);
                    if (!ctx.ok)
                        continue;
                    if (options.objective == RSAObjective::MinQubitsUnderRuntimeCap)
                        search_min_qubits(ctx, options.runtime_cap_s, options.sweep, best);
                    else
                        search_min_runtime(ctx, options.qubit_cap, options.sweep, best);
                }
            }
        }
    };

    int workers = std::min<int>(resolve_workers(options.workers),
                                static_cast<int>(tasks.size()));
    std::vector<Candidate> bests(std::max(workers, 1));
    if (workers <= 1) {
        for (const Task& t : tasks)
            run_task(t, bests[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < tasks.size(); i += workers)
                    run_task(tasks[i], bests[w]);
            });
        }
        for (auto& th : pool)
            th.join();
    }
    Candidate best;
    for (const Candidate& c : bests)
        if (c.better_than(best))
            best = c;

    RSAOptResult result;
    if (!best.valid)
        return result;

    if (options.sweep == RhoSweep::Full) {
        // Verification pass: exhaustive rho scan for the winning combo.
        RSAParams base = best.params;
        ComboCtx ctx = make_ctx(base, code, engine, hw, p_l);
        for (std::int64_t rho = 1; rho <= ctx.primes; ++rho) {
            PointEval e = eval_rho(ctx, rho);
            bool admissible = options.objective == RSAObjective::MinQubitsUnderRuntimeCap
                                  ? e.runtime <= options.runtime_cap_s
                                  : e.qubits <= options.qubit_cap;
            if (!admissible)
                continue;
            double objective = options.objective == RSAObjective::MinQubitsUnderRuntimeCap
                                   ? e.qubits
                                   : e.runtime;
            Candidate cand{true, objective, base};
            cand.params.rho = rho;
            if (cand.better_than(best))
                best = cand;
        }
    }

    result.feasible = true;
    result.best = rsa_cycles_and_shots(best.params, code, engine, hw, options.bound,
                                       options.fit);
    return result;
}

std::vector<HeatmapCell> heatmap(Regime regime, const std::vector<double>& t_c_grid,
                                 const std::vector<double>& qubit_grid, int workers) {
    std::vector<HeatmapCell> cells;
    for (double t_c : t_c_grid) {
        for (double budget : qubit_grid) {
            HardwareProfile hw{regime_p(regime), t_c};
            RSAOptimizerOptions opt;
            opt.objective = RSAObjective::MinRuntimeUnderQubitCap;
            opt.qubit_cap = budget;
            opt.sweep = RhoSweep::Ladder;
            opt.workers = workers;
            RSAOptResult r = rsa_optimize(regime, hw, opt);
            HeatmapCell cell;
            cell.t_c = t_c;
            cell.qubit_budget = budget;
            cell.feasible = r.feasible;
            cell.runtime_s = r.feasible ? r.best.resources.total_runtime_s : 0;
            cell.best = r.best;
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

} // namespace ftre
