#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ftre/arch.hpp"
#include "ftre/cleaning.hpp"
#include "ftre/estimators.hpp"
#include "ftre/gb_codes.hpp"
#include "ftre/io_util.hpp"
#include "ftre/pbc.hpp"

namespace py = pybind11;
using namespace ftre;

namespace {

Regime regime_from_name(const std::string& name) {
    if (name == "1e-3")
        return Regime::P1e3;
    if (name == "1e-4")
        return Regime::P1e4;
    throw std::invalid_argument("regime must be '1e-3' or '1e-4'");
}

py::dict estimate_dict(const ResourceEstimate& e) {
    py::dict d;
    d["logical_qubits"] = e.logical_qubits;
    d["logical_cycles"] = e.logical_cycles;
    d["t_count"] = e.t_count;
    d["physical_qubits"] = e.physical_qubits;
    d["shot_runtime_s"] = e.shot_runtime_s;
    d["expected_shots"] = e.expected_shots;
    d["total_runtime_s"] = e.total_runtime_s;
    d["shot_success"] = e.shot_success;
    return d;
}

py::dict rsa_dict(const RSAEstimate& est) {
    py::dict d;
    py::dict params;
    params["s"] = est.params.s;
    params["f"] = est.params.f;
    params["ell"] = est.params.ell;
    params["w3"] = est.params.w3;
    params["w4"] = est.params.w4;
    params["rho"] = est.params.rho;
    params["m"] = est.derived.m;
    params["w1"] = est.derived.w1;
    params["primes"] = est.derived.primes;
    params["kappa"] = est.derived.kappa;
    d["params"] = params;
    d["feasible"] = est.feasible;
    if (est.feasible)
        d["estimate"] = estimate_dict(est.resources);
    else
        d["infeasible_reason"] = est.infeasible_reason;
    return d;
}

RSAParams params_from_args(int s, int f, int ell, int w3, int w4, long long rho, long long m) {
    RSAParams p;
    p.s = s;
    p.f = f;
    p.ell = ell;
    p.w3 = w3;
    p.w4 = w4;
    p.rho = rho;
    p.m = m;
    return p;
}

} // namespace

PYBIND11_MODULE(ftre, m) {
    m.doc() = "Cost models for a QLDPC-based fault-tolerant architecture";

    py::class_<PauliVec>(m, "PauliVec")
        .def(py::init([](const std::string& s) { return PauliVec::from_pauli_string(s); }))
        .def_property_readonly("n", &PauliVec::qubits)
        .def("weight", &PauliVec::weight)
        .def("__str__", &PauliVec::str)
        .def("__eq__", [](const PauliVec& a, const PauliVec& b) { return a == b; });

    py::class_<SymplecticMat>(m, "SymplecticMat")
        .def_static("identity", &SymplecticMat::identity)
        .def_property_readonly("n", &SymplecticMat::qubits)
        .def("__str__", [](const SymplecticMat& mat) { return matrix_to_text(mat); });

    m.def("symplectic_product", &symplectic_product, py::arg("u"), py::arg("v"));
    m.def("transvection", &transvection, py::arg("u"), py::arg("v"));
    m.def("apply_clifford", &apply_clifford, py::arg("matrix"), py::arg("v"));
    m.def("compose", &compose, py::arg("first"), py::arg("second"));
    m.def("is_symplectic", &is_symplectic);
    m.def("random_symplectic",
          [](std::size_t n, std::uint64_t seed) { return random_symplectic(n, seed); },
          py::arg("n"), py::arg("seed") = 1);
    m.def("hadamard_mat", &hadamard_mat);
    m.def("cnot_mat", &cnot_mat);

    m.def("clean_general",
          [](const SymplecticMat& mat, std::size_t w) {
              CleaningResult r = clean_general(mat, w);
              std::vector<std::string> rotations;
              for (const PauliVec& p : r.rotations)
                  rotations.push_back(p.str());
              py::dict d;
              d["rotations"] = rotations;
              d["emitted_count"] = r.emitted_count;
              d["residual_trivial_on_prefix"] = acts_trivially_on_prefix(r.residual, w);
              return d;
          },
          py::arg("matrix"), py::arg("w"));
    m.def("clean_port",
          [](const SymplecticMat& mat, std::size_t w) {
              CleaningResult r = clean_port(mat, w);
              std::vector<std::string> rotations;
              for (const PauliVec& p : r.rotations)
                  rotations.push_back(p.str());
              py::dict d;
              d["rotations"] = rotations;
              d["emitted_count"] = r.emitted_count;
              d["residual_trivial_on_prefix"] = acts_trivially_on_prefix(r.residual, w);
              return d;
          },
          py::arg("matrix"), py::arg("w"));

    m.def("build_code",
          [](int family_m) {
              GBCode code = build_family_code(family_m);
              py::dict d;
              d["m"] = family_m;
              d["n"] = code.n;
              d["k"] = code.k;
              d["d"] = code.d_claimed;
              d["d_t"] = code.dt();
              d["n_pb"] = family_code(family_m).n_pb();
              return d;
          },
          py::arg("m"));
    m.def("distance_upper_bound",
          [](int family_m, const std::string& method, std::uint64_t budget,
             std::uint64_t seed, int stop_at) {
              GBCode code = build_family_code(family_m);
              DistanceMethod dm = method == "exhaustive" ? DistanceMethod::Exhaustive
                                                         : DistanceMethod::Randomized;
              return distance_upper_bound(code, dm, budget, seed, stop_at);
          },
          py::arg("m"), py::arg("method") = "randomized", py::arg("budget") = 10000,
          py::arg("seed") = 1, py::arg("stop_at_weight") = 0);

    m.def("logical_error_rate",
          [](double p, std::size_t k, int d, const std::string& experiment) {
              const ErrorFit& fit = experiment == "memory" ? memory_fit()
                                                           : logical_measurement_fit();
              return logical_error_rate(fit, p, k, d);
          },
          py::arg("p"), py::arg("k"), py::arg("d"),
          py::arg("experiment") = "logical-measurement");
    m.def("magic_engine_qubits",
          [](const std::string& regime) { return magic_engine_spec(regime_from_name(regime)).n_me(); },
          py::arg("regime"));

    m.def("compile_circuit",
          [](const std::string& text, double p_r) {
              std::istringstream in(text);
              CircuitIR circuit = parse_circuit(in);
              MeasurementSchedule s = compile(circuit);
              py::dict d;
              d["kappa"] = circuit.kappa;
              d["tau"] = circuit.t_count();
              d["adaptive"] = circuit.adaptive_count();
              d["steps"] = s.steps.size();
              d["makespan"] = s.makespan;
              d["expected_cycles"] = expected_cycles(s, p_r);
              return d;
          },
          py::arg("text"), py::arg("p_r") = 0.0);

    m.def("fh_estimate",
          [](std::size_t lattice, const std::string& regime, double t_c, double t_override,
             double trotter_w) {
              FHParams workload;
              workload.cycles_override = t_override;
              workload.trotter_bound = trotter_w;
              ResourceEstimate e =
                  fh_estimate(lattice, regime_from_name(regime), t_c, &workload);
              return estimate_dict(e);
          },
          py::arg("lattice_side"), py::arg("regime"), py::arg("t_c") = 1e-6,
          py::arg("t_override") = 8e6, py::arg("trotter_bound") = 0.0);

    m.def("rsa_evaluate",
          [](const std::string& regime_name_, double t_c, int s, int f, int ell, int w3,
             int w4, long long rho, long long m_override) {
              Regime regime = regime_from_name(regime_name_);
              HardwareProfile hw{regime_p(regime), t_c};
              RSAEstimate est = rsa_cycles_and_shots(
                  params_from_args(s, f, ell, w3, w4, rho, m_override),
                  rsa_code_for(regime), magic_engine_spec(regime), hw);
              return rsa_dict(est);
          },
          py::arg("regime"), py::arg("t_c"), py::arg("s"), py::arg("f"), py::arg("ell"),
          py::arg("w3"), py::arg("w4"), py::arg("rho") = 1, py::arg("m") = 0);

    m.def("rsa_optimize",
          [](const std::string& regime_name_, double t_c, const std::string& objective,
             double runtime_cap_s, double qubit_cap, const std::string& sweep) {
              Regime regime = regime_from_name(regime_name_);
              HardwareProfile hw{regime_p(regime), t_c};
              RSAOptimizerOptions opt;
              opt.sweep = sweep == "refined"  ? RhoSweep::Refined
                          : sweep == "full"   ? RhoSweep::Full
                                              : RhoSweep::Ladder;
              if (objective == "min-qubits") {
                  opt.objective = RSAObjective::MinQubitsUnderRuntimeCap;
                  opt.runtime_cap_s = runtime_cap_s;
              } else {
                  opt.objective = RSAObjective::MinRuntimeUnderQubitCap;
                  opt.qubit_cap = qubit_cap;
              }
              RSAOptResult r = rsa_optimize(regime, hw, opt);
              py::dict d;
              d["feasible"] = r.feasible;
              if (r.feasible)
                  d["best"] = rsa_dict(r.best);
              return d;
          },
          py::arg("regime"), py::arg("t_c"), py::arg("objective") = "min-qubits",
          py::arg("runtime_cap_s") = 0.0, py::arg("qubit_cap") = 0.0,
          py::arg("sweep") = "ladder");
}
