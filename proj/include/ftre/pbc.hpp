#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ftre/cleaning.hpp"
#include "ftre/gf2.hpp"

namespace ftre {

enum class GateKind { Clifford, T, Measure };

struct Gate {
    GateKind kind = GateKind::Clifford;
    std::string name;                 // Clifford gates only
    std::vector<std::size_t> qubits;  // Clifford / T target
    PauliVec axis;                    // Measure only, over all kappa qubits
    bool adaptive = false;            // Measure only
};

/*
 * Circuit to compile: kappa logical qubits spread over processing units.
 * An empty adjacency list means all units are mutually adjacent; otherwise
 * only listed pairs may be joined.
 */
struct CircuitIR {
    std::size_t kappa = 0;
    std::vector<Gate> gates;
    std::vector<int> unit_of;                       // per qubit
    std::vector<std::pair<int, int>> adjacency;

    std::size_t t_count() const;
    std::size_t adaptive_count() const;
    void validate() const;
};

enum class StepKind { TInjection, Algorithmic, Cleaning, Final };

struct Step {
    PauliVec axis;               // over all kappa qubits, frame-conjugated
    std::vector<int> units;      // units occupied for this logical cycle
    StepKind kind = StepKind::Algorithmic;
    std::size_t cycle = 0;       // greedy earliest-legal placement
};

struct MeasurementSchedule {
    std::vector<Step> steps;
    std::map<int, std::size_t> per_unit_cycles;  // busy logical cycles per unit
    std::size_t makespan = 0;
};

/*
 * Streaming compiler state: per joined group of units it tracks the Clifford
 * frame as a symplectic matrix over the group's qubits. Entangling gates
 * across groups join them; separation cleans the frame off one unit's qubits
 * and splits it back out.
 */
class Compiler {
  public:
    explicit Compiler(const CircuitIR& circuit);
    Compiler(std::size_t kappa, std::vector<int> unit_of,
             std::vector<std::pair<int, int>> adjacency = {});

    void apply(const Gate& g);
    void apply_clifford_gate(const std::string& name, const std::vector<std::size_t>& qubits);
    void apply_t(std::size_t qubit);
    void apply_measure(const PauliVec& axis, bool adaptive);

    // Explicit join; entangling gates also join implicitly. Non-adjacent
    // units are rejected.
    void join_units(int unit_a, int unit_b);

    // Clean the group frame off this unit's qubits and split it out of its
    // group. Port cleaning (2w bound) requires the frame to have port form
    // with respect to the unit's qubits. Returns the number of cleaning
    // steps emitted; a lone unit is a warned no-op.
    std::size_t separate_unit(int unit, bool port = false);

    // Append the kappa final single-qubit Z measurements.
    void finalize();

    MeasurementSchedule schedule() const;
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Frame of the group containing `unit`, over that group's qubit order.
    const SymplecticMat& group_frame(int unit) const;
    std::vector<std::size_t> group_qubits(int unit) const;
    bool same_group(int unit_a, int unit_b) const;

  private:
    struct Group {
        std::vector<std::size_t> qubits;   // global indices, in frame order
        std::vector<int> units;
        SymplecticMat frame;
    };

    std::size_t kappa_ = 0;
    std::vector<int> unit_of_;
    std::vector<std::pair<int, int>> adjacency_;
    std::vector<Group> groups_;
    std::vector<std::size_t> group_of_unit_;       // unit id -> group index
    std::vector<Step> steps_;
    std::map<int, std::size_t> next_free_;         // unit -> next free cycle
    std::vector<std::string> warnings_;
    bool finalized_ = false;

    std::size_t group_index(int unit) const;
    std::size_t merge_groups(std::size_t ga, std::size_t gb);
    bool units_adjacent(const Group& a, const Group& b) const;
    void place_step(Step step);
    PauliVec conjugate_global(const PauliVec& axis) const;
    void apply_local_clifford(const SymplecticMat& gate_mat, std::size_t group);
};

MeasurementSchedule compile(const CircuitIR& circuit);

// T-injection steps weigh (1-p_r)^-1, everything else 1; returns the largest
// per-unit weighted total (units in parallel, joined steps serialize).
double expected_cycles(const MeasurementSchedule& schedule, double p_r);

// Named Clifford gate matrix over n qubits.
SymplecticMat clifford_gate_matrix(const std::string& name, std::size_t n,
                                   const std::vector<std::size_t>& qubits);

/*
 * Line format: optional "QUBITS k", "UNIT id q...", "ADJ a b" headers, then
 * one gate per line: "CLIFFORD <name> <qubits...>", "T <qubit>" or
 * "MEASURE <pauli-string> [adaptive]". '#' starts a comment.
 */
CircuitIR parse_circuit(std::istream& in);

} // namespace ftre
