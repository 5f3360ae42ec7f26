#include "ftre/pbc.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ftre {

std::size_t CircuitIR::t_count() const {
    std::size_t t = 0;
    for (const auto& g : gates)
        t += g.kind == GateKind::T;
    return t;
}

std::size_t CircuitIR::adaptive_count() const {
    std::size_t o = 0;
    for (const auto& g : gates)
        o += g.kind == GateKind::Measure && g.adaptive;
    return o;
}

void CircuitIR::validate() const {
    if (unit_of.size() != kappa)
        throw std::invalid_argument("every qubit needs a unit assignment");
    for (const auto& g : gates) {
        for (std::size_t q : g.qubits)
            if (q >= kappa)
                throw std::invalid_argument("gate references qubit beyond kappa");
        if (g.kind == GateKind::T && g.qubits.size() != 1)
            throw std::invalid_argument("T gates act on exactly one qubit");
        if (g.kind == GateKind::Clifford && g.qubits.empty())
            throw std::invalid_argument("Clifford gates need at least one qubit");
        if (g.kind == GateKind::Measure && g.axis.qubits() != kappa)
            throw std::invalid_argument("measurement axis width must equal kappa");
    }
}

Compiler::Compiler(const CircuitIR& circuit)
    : Compiler(circuit.kappa, circuit.unit_of, circuit.adjacency) {}

Compiler::Compiler(std::size_t kappa, std::vector<int> unit_of,
                   std::vector<std::pair<int, int>> adjacency)
    : kappa_(kappa), unit_of_(std::move(unit_of)), adjacency_(std::move(adjacency)) {
    if (unit_of_.size() != kappa_)
        throw std::invalid_argument("every qubit needs a unit assignment");
    int max_unit = -1;
    for (int u : unit_of_) {
        if (u < 0)
            throw std::invalid_argument("unit ids must be non-negative");
        max_unit = std::max(max_unit, u);
    }
    group_of_unit_.assign(max_unit + 1, SIZE_MAX);
    for (int u = 0; u <= max_unit; ++u) {
        Group g;
        for (std::size_t q = 0; q < kappa_; ++q)
            if (unit_of_[q] == u)
                g.qubits.push_back(q);
        if (g.qubits.empty())
            continue;
        g.units = {u};
        g.frame = SymplecticMat::identity(g.qubits.size());
        group_of_unit_[u] = groups_.size();
        groups_.push_back(std::move(g));
    }
}

std::size_t Compiler::group_index(int unit) const {
    if (unit < 0 || static_cast<std::size_t>(unit) >= group_of_unit_.size() ||
        group_of_unit_[unit] == SIZE_MAX)
        throw std::invalid_argument("unknown unit " + std::to_string(unit));
    return group_of_unit_[unit];
}

bool Compiler::units_adjacent(const Group& a, const Group& b) const {
    if (adjacency_.empty())
        return true;
    for (int ua : a.units)
        for (int ub : b.units)
            for (const auto& [x, y] : adjacency_)
                if ((x == ua && y == ub) || (x == ub && y == ua))
                    return true;
    return false;
}

std::size_t Compiler::merge_groups(std::size_t ga, std::size_t gb) {
    if (ga == gb)
        return ga;
    Group& a = groups_[ga];
    Group& b = groups_[gb];
    if (!units_adjacent(a, b))
        throw std::invalid_argument("cannot join non-adjacent units");

    Group merged;
    merged.qubits = a.qubits;
    merged.qubits.insert(merged.qubits.end(), b.qubits.begin(), b.qubits.end());
    merged.units = a.units;
    merged.units.insert(merged.units.end(), b.units.begin(), b.units.end());

    // Block-diagonal embedding of the two frames.
    std::size_t na = a.qubits.size(), nb = b.qubits.size(), n = na + nb;
    std::vector<PauliVec> rows(2 * n, PauliVec(n));
    auto embed = [&](const SymplecticMat& f, std::size_t nf, std::size_t off) {
        for (std::size_t i = 0; i < 2 * nf; ++i) {
            PauliVec& dst = rows[(i < nf ? i : n + i - nf) + off];
            for (std::size_t q = 0; q < nf; ++q) {
                if (f.row(i).x(q))
                    dst.set_x(q + off, true);
                if (f.row(i).z(q))
                    dst.set_z(q + off, true);
            }
        }
    };
    embed(a.frame, na, 0);
    embed(b.frame, nb, na);
    merged.frame = SymplecticMat::from_rows(std::move(rows));

    std::size_t keep = std::min(ga, gb);
    std::size_t drop = std::max(ga, gb);
    groups_[keep] = std::move(merged);
    groups_.erase(groups_.begin() + drop);
    for (auto& gi : group_of_unit_) {
        if (gi == drop)
            gi = keep;
        else if (gi != SIZE_MAX && gi > drop)
            --gi;
    }
    return keep;
}

void Compiler::place_step(Step step) {
    std::size_t cycle = 0;
    for (int u : step.units) {
        auto it = next_free_.find(u);
        if (it != next_free_.end())
            cycle = std::max(cycle, it->second);
    }
    step.cycle = cycle;
    for (int u : step.units)
        next_free_[u] = cycle + 1;
    steps_.push_back(std::move(step));
}

PauliVec Compiler::conjugate_global(const PauliVec& axis) const {
    PauliVec out(kappa_);
    for (const Group& g : groups_) {
        PauliVec local(g.qubits.size());
        bool touched = false;
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            std::size_t q = g.qubits[i];
            if (axis.x(q)) {
                local.set_x(i, true);
                touched = true;
            }
            if (axis.z(q)) {
                local.set_z(i, true);
                touched = true;
            }
        }
        if (!touched)
            continue;
        PauliVec conj = apply_clifford(g.frame, local);
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            out.set_x(g.qubits[i], conj.x(i));
            out.set_z(g.qubits[i], conj.z(i));
        }
    }
    return out;
}

void Compiler::apply_local_clifford(const SymplecticMat& gate_mat, std::size_t group) {
    groups_[group].frame = compose(groups_[group].frame, gate_mat);
}

void Compiler::apply_clifford_gate(const std::string& name,
                                   const std::vector<std::size_t>& qubits) {
    for (std::size_t q : qubits)
        if (q >= kappa_)
            throw std::invalid_argument("gate qubit out of range");
    if (qubits.empty())
        throw std::invalid_argument("Clifford gate needs at least one qubit");

    std::size_t g = group_index(unit_of_[qubits[0]]);
    for (std::size_t i = 1; i < qubits.size(); ++i)
        g = merge_groups(g, group_index(unit_of_[qubits[i]]));

    const Group& grp = groups_[g];
    std::vector<std::size_t> local(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        auto it = std::find(grp.qubits.begin(), grp.qubits.end(), qubits[i]);
        local[i] = static_cast<std::size_t>(it - grp.qubits.begin());
    }
    apply_local_clifford(clifford_gate_matrix(name, grp.qubits.size(), local), g);
}

void Compiler::apply_t(std::size_t qubit) {
    if (qubit >= kappa_)
        throw std::invalid_argument("T qubit out of range");
    std::size_t g = group_index(unit_of_[qubit]);
    PauliVec axis = conjugate_global(PauliVec::z_on(kappa_, qubit));
    place_step({axis, groups_[g].units, StepKind::TInjection, 0});
}

void Compiler::apply_measure(const PauliVec& axis, bool adaptive) {
    (void)adaptive;  // adaptivity is a count and a reaction-time constraint only
    if (axis.qubits() != kappa_)
        throw std::invalid_argument("measurement axis width must equal kappa");
    if (axis.is_zero())
        throw std::invalid_argument("measurement axis is empty");
    std::set<int> units;
    for (std::size_t q = 0; q < kappa_; ++q)
        if (axis.x(q) || axis.z(q))
            for (int u : groups_[group_index(unit_of_[q])].units)
                units.insert(u);
    place_step({conjugate_global(axis), {units.begin(), units.end()},
                StepKind::Algorithmic, 0});
}

void Compiler::apply(const Gate& g) {
    switch (g.kind) {
        case GateKind::Clifford: apply_clifford_gate(g.name, g.qubits); break;
        case GateKind::T: apply_t(g.qubits.at(0)); break;
        case GateKind::Measure: apply_measure(g.axis, g.adaptive); break;
    }
}

void Compiler::join_units(int unit_a, int unit_b) {
    merge_groups(group_index(unit_a), group_index(unit_b));
}

std::size_t Compiler::separate_unit(int unit, bool port) {
    std::size_t gi = group_index(unit);
    Group& grp = groups_[gi];
    if (grp.units.size() < 2) {
        warnings_.push_back("separate_unit: unit " + std::to_string(unit) +
                            " is not joined; nothing to do");
        return 0;
    }

    // Reorder the group's qubits so the unit being separated comes first.
    std::size_t n = grp.qubits.size();
    std::vector<std::size_t> mine, rest;
    for (std::size_t i = 0; i < n; ++i)
        (unit_of_[grp.qubits[i]] == unit ? mine : rest).push_back(i);
    std::size_t w = mine.size();
    std::vector<std::size_t> perm(n);  // old local -> new local
    for (std::size_t i = 0; i < w; ++i)
        perm[mine[i]] = i;
    for (std::size_t i = 0; i < rest.size(); ++i)
        perm[rest[i]] = w + i;

    SymplecticMat p = permutation_mat(perm);
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[perm[i]] = i;
    SymplecticMat pinv = permutation_mat(inv);
    SymplecticMat reordered = compose(compose(pinv, grp.frame), p);

    CleaningResult cleaned = port ? clean_port(reordered, w) : clean_general(reordered, w);

    // Emit the cleaning rotations as steps over the whole joined group.
    std::vector<std::size_t> new_to_global(n);
    for (std::size_t i = 0; i < n; ++i)
        new_to_global[perm[i]] = grp.qubits[i];
    std::vector<int> all_units = grp.units;
    for (const PauliVec& rot : cleaned.rotations) {
        PauliVec axis(kappa_);
        for (std::size_t i = 0; i < n; ++i) {
            axis.set_x(new_to_global[i], rot.x(i));
            axis.set_z(new_to_global[i], rot.z(i));
        }
        place_step({axis, all_units, StepKind::Cleaning, 0});
    }

    // Split: the separated unit restarts with an identity frame; the rest
    // keeps the residual restricted to its qubits.
    Group solo;
    solo.units = {unit};
    for (std::size_t i = 0; i < w; ++i)
        solo.qubits.push_back(new_to_global[i]);
    solo.frame = SymplecticMat::identity(w);

    Group remainder;
    for (int u : grp.units)
        if (u != unit)
            remainder.units.push_back(u);
    std::size_t nr = n - w;
    for (std::size_t i = 0; i < nr; ++i)
        remainder.qubits.push_back(new_to_global[w + i]);
    std::vector<PauliVec> rows(2 * nr, PauliVec(nr));
    for (std::size_t i = 0; i < 2 * nr; ++i) {
        std::size_t src = i < nr ? w + i : n + w + (i - nr);
        for (std::size_t j = 0; j < nr; ++j) {
            rows[i].set_x(j, cleaned.residual.row(src).x(w + j));
            rows[i].set_z(j, cleaned.residual.row(src).z(w + j));
        }
    }
    remainder.frame = SymplecticMat::from_rows(std::move(rows));

    groups_[gi] = std::move(remainder);
    groups_.push_back(std::move(solo));
    for (int u : groups_[gi].units)
        group_of_unit_[u] = gi;
    group_of_unit_[unit] = groups_.size() - 1;
    return cleaned.rotations.size();
}

void Compiler::finalize() {
    if (finalized_)
        throw std::logic_error("finalize called twice");
    for (std::size_t q = 0; q < kappa_; ++q) {
        std::size_t g = group_index(unit_of_[q]);
        PauliVec axis = conjugate_global(PauliVec::z_on(kappa_, q));
        place_step({axis, groups_[g].units, StepKind::Final, 0});
    }
    finalized_ = true;
}

MeasurementSchedule Compiler::schedule() const {
    MeasurementSchedule s;
    s.steps = steps_;
    for (const Step& st : s.steps) {
        s.makespan = std::max(s.makespan, st.cycle + 1);
        for (int u : st.units)
            ++s.per_unit_cycles[u];
    }
    return s;
}

const SymplecticMat& Compiler::group_frame(int unit) const {
    return groups_[group_index(unit)].frame;
}

std::vector<std::size_t> Compiler::group_qubits(int unit) const {
    return groups_[group_index(unit)].qubits;
}

bool Compiler::same_group(int unit_a, int unit_b) const {
    return group_index(unit_a) == group_index(unit_b);
}

MeasurementSchedule compile(const CircuitIR& circuit) {
    circuit.validate();
    Compiler c(circuit);
    for (const Gate& g : circuit.gates)
        c.apply(g);
    c.finalize();
    return c.schedule();
}

double expected_cycles(const MeasurementSchedule& schedule, double p_r) {
    if (p_r < 0.0 || p_r >= 1.0)
        throw std::invalid_argument("reject rate must lie in [0, 1)");
    double alpha = 1.0 / (1.0 - p_r);
    std::map<int, double> totals;
    for (const Step& st : schedule.steps) {
        double w = st.kind == StepKind::TInjection ? alpha : 1.0;
        for (int u : st.units)
            totals[u] += w;
    }
    double best = 0.0;
    for (const auto& [u, t] : totals)
        best = std::max(best, t);
    return best;
}

SymplecticMat clifford_gate_matrix(const std::string& name, std::size_t n,
                                   const std::vector<std::size_t>& qubits) {
    auto need = [&](std::size_t count) {
        if (qubits.size() != count)
            throw std::invalid_argument("gate " + name + " expects " +
                                        std::to_string(count) + " qubit(s)");
    };
    std::string up;
    for (char c : name)
        up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));

    if (up == "I" || up == "X" || up == "Y" || up == "Z") {
        need(1);
        return SymplecticMat::identity(n);   // Paulis act trivially mod phase
    }
    if (up == "H") {
        need(1);
        return hadamard_mat(n, qubits[0]);
    }
    if (up == "S" || up == "SDG") {
        need(1);
        return phase_mat(n, qubits[0]);
    }
    if (up == "SX" || up == "SXDG") {
        need(1);
        return sqrtx_mat(n, qubits[0]);
    }
    if (up == "CX" || up == "CNOT") {
        need(2);
        return cnot_mat(n, qubits[0], qubits[1]);
    }
    if (up == "CZ") {
        need(2);
        return cz_mat(n, qubits[0], qubits[1]);
    }
    if (up == "SWAP") {
        need(2);
        return swap_mat(n, qubits[0], qubits[1]);
    }
    throw std::invalid_argument("unknown Clifford gate '" + name + "'");
}

CircuitIR parse_circuit(std::istream& in) {
    CircuitIR circuit;
    std::vector<std::string> gate_lines;
    std::map<std::size_t, int> explicit_units;
    std::size_t declared_kappa = 0;
    std::size_t max_qubit_seen = 0;
    bool any_qubit = false;

    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("circuit line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        std::string op;
        if (!(ss >> op))
            continue;
        std::vector<std::string> args;
        std::string tok;
        while (ss >> tok)
            args.push_back(tok);

        auto as_index = [&](const std::string& s) {
            try {
                long long v = std::stoll(s);
                if (v < 0)
                    fail("negative index");
                return static_cast<std::size_t>(v);
            } catch (const std::invalid_argument&) {
                fail("expected an integer, got '" + s + "'");
            } catch (const std::out_of_range&) {
                fail("index out of range");
            }
            return std::size_t(0);
        };

        if (op == "QUBITS") {
            if (args.size() != 1)
                fail("QUBITS takes one argument");
            declared_kappa = as_index(args[0]);
        } else if (op == "UNIT") {
            if (args.size() < 2)
                fail("UNIT takes a unit id and at least one qubit");
            int uid = static_cast<int>(as_index(args[0]));
            for (std::size_t i = 1; i < args.size(); ++i) {
                std::size_t q = as_index(args[i]);
                explicit_units[q] = uid;
                max_qubit_seen = std::max(max_qubit_seen, q);
                any_qubit = true;
            }
        } else if (op == "ADJ") {
            if (args.size() != 2)
                fail("ADJ takes two unit ids");
            circuit.adjacency.emplace_back(static_cast<int>(as_index(args[0])),
                                           static_cast<int>(as_index(args[1])));
        } else if (op == "CLIFFORD") {
            if (args.size() < 2)
                fail("CLIFFORD takes a gate name and qubits");
            Gate g;
            g.kind = GateKind::Clifford;
            g.name = args[0];
            for (std::size_t i = 1; i < args.size(); ++i) {
                g.qubits.push_back(as_index(args[i]));
                max_qubit_seen = std::max(max_qubit_seen, g.qubits.back());
                any_qubit = true;
            }
            circuit.gates.push_back(std::move(g));
        } else if (op == "T") {
            if (args.size() != 1)
                fail("T takes one qubit");
            Gate g;
            g.kind = GateKind::T;
            g.qubits.push_back(as_index(args[0]));
            max_qubit_seen = std::max(max_qubit_seen, g.qubits.back());
            any_qubit = true;
            circuit.gates.push_back(std::move(g));
        } else if (op == "MEASURE") {
            if (args.empty() || args.size() > 2)
                fail("MEASURE takes a Pauli string and an optional 'adaptive'");
            Gate g;
            g.kind = GateKind::Measure;
            g.name = args[0];  // resolved to an axis after kappa is known
            if (args.size() == 2) {
                if (args[1] != "adaptive")
                    fail("unknown MEASURE modifier '" + args[1] + "'");
                g.adaptive = true;
            }
            max_qubit_seen = std::max(max_qubit_seen, args[0].size() - 1);
            any_qubit = true;
            circuit.gates.push_back(std::move(g));
        } else {
            fail("unknown directive '" + op + "'");
        }
    }

    circuit.kappa = declared_kappa ? declared_kappa : (any_qubit ? max_qubit_seen + 1 : 0);
    if (circuit.kappa == 0)
        throw std::invalid_argument("circuit declares no qubits");
    circuit.unit_of.assign(circuit.kappa, 0);
    for (const auto& [q, uid] : explicit_units) {
        if (q >= circuit.kappa)
            throw std::invalid_argument("UNIT assigns qubit beyond QUBITS count");
        circuit.unit_of[q] = uid;
    }
    if (!explicit_units.empty())
        for (std::size_t q = 0; q < circuit.kappa; ++q)
            if (!explicit_units.count(q))
                throw std::invalid_argument("qubit " + std::to_string(q) +
                                            " has no unit assignment");
    for (auto& g : circuit.gates) {
        if (g.kind != GateKind::Measure)
            continue;
        if (g.name.size() > circuit.kappa)
            throw std::invalid_argument("measurement string longer than qubit count");
        std::string padded = g.name + std::string(circuit.kappa - g.name.size(), 'I');
        g.axis = PauliVec::from_pauli_string(padded);
        g.name.clear();
    }
    circuit.validate();
    return circuit;
}

} // namespace ftre
